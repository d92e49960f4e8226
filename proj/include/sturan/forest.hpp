#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sturan/graph.hpp"

namespace sturan {

/// Multiset of path orders a_1 >= a_2 >= ... >= a_k >= 2 describing the linear
/// forest P_{a_1} u ... u P_{a_k}.
class LinearForestSpec {
 public:
  /// Sorts descending; throws ParameterError if empty or any part < 2.
  explicit LinearForestSpec(std::vector<int> parts);

  /// Parses "5,3,3" (any order, whitespace tolerated).
  static LinearForestSpec parse(std::string_view text);
  /// k copies of P_3.
  static LinearForestSpec k_p3(int k);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int k() const noexcept { return static_cast<int>(parts_.size()); }
  int total_order() const noexcept;
  /// sum floor(a_i/2) - 1
  int h() const noexcept;
  bool all_odd() const noexcept;
  bool all_three() const noexcept;
  bool has_even_part() const noexcept { return !all_odd(); }

  std::string to_string() const;

  friend bool operator==(const LinearForestSpec&, const LinearForestSpec&) = default;

 private:
  std::vector<int> parts_;
};

/// Vertex sequences realising each path of a LinearForestSpec, in spec order.
struct ForestEmbedding {
  std::vector<std::vector<int>> paths;
};

struct ForestSearchOptions {
  unsigned long long node_budget = 1'000'000'000ULL;
};

/// True iff g contains vertex-disjoint paths of the given orders (not
/// necessarily induced). Throws SearchBudgetExceeded instead of guessing.
bool contains_linear_forest(const Graph& g, const LinearForestSpec& f, ForestSearchOptions opts = {});
bool contains_linear_forest(const GraphBuilder& g, const LinearForestSpec& f, ForestSearchOptions opts = {});

std::optional<ForestEmbedding> embed_linear_forest(const Graph& g, const LinearForestSpec& f,
                                                   ForestSearchOptions opts = {});

/// Embeddings restricted to those whose paths use the edge uv. If g - uv is
/// F-free this decides whether g is F-free, which is what local search needs
/// after adding a single edge. uv must be an edge of g.
std::optional<ForestEmbedding> embed_linear_forest_through_edge(const Graph& g, const LinearForestSpec& f, int u,
                                                                int v, ForestSearchOptions opts = {});
bool contains_linear_forest_through_edge(const GraphBuilder& g, const LinearForestSpec& f, int u, int v,
                                         ForestSearchOptions opts = {});

/// Paths have the right orders, are pairwise disjoint and follow edges of g.
bool validate_embedding(const Graph& g, const LinearForestSpec& f, const ForestEmbedding& e);

}  // namespace sturan
