#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sturan/forest.hpp"
#include "sturan/graph.hpp"

namespace sturan {

/// Largest order accepted by the isomorph-free generators.
inline constexpr int kEnumerationMaxOrder = 10;

enum class Objective { Edges, SpectralRadius };
enum class GraphClass { All, Bipartite, Connected };

std::string to_string(Objective o);
std::string to_string(GraphClass c);
/// Accepts "edges", "rho"/"spectral-radius"; "all", "bipartite", "connected".
Objective parse_objective(const std::string& s);
GraphClass parse_graph_class(const std::string& s);

using GraphPredicate = std::function<bool(const Graph&)>;
using GraphVisitor = std::function<void(const Graph&)>;

struct EnumerateOptions {
  /// Closed under taking induced subgraphs; applied at every level so whole
  /// branches are cut (F-freeness, bipartiteness).
  GraphPredicate hereditary;
  /// Applied to the final level only.
  GraphPredicate filter;
  /// Worker threads; 0 means hardware concurrency.
  int threads = 0;
};

/// Streams one representative (canonically labeled) per isomorphism class of
/// order-n graphs passing the filters, in a deterministic order. Generation is
/// by canonical augmentation: a child G + v is kept iff v has minimum degree
/// and lies in the orbit of the last minimum-degree vertex in canonical order.
/// Throws SizeCapError for n > kEnumerationMaxOrder.
void enumerate_graphs(int n, const GraphVisitor& visit, const EnumerateOptions& opts);

std::vector<Graph> enumerate_graphs(int n, GraphPredicate filter = {});
std::vector<Graph> enumerate_bipartite(int n, GraphPredicate filter = {});

/// Hereditary predicate "contains no copy of f".
GraphPredicate forest_free(const LinearForestSpec& f);
/// Hereditary filter for the class (bipartite) and final filter (connected).
EnumerateOptions class_options(GraphClass c);

struct ExtremalReport {
  int n = 0;
  LinearForestSpec spec{std::vector<int>{2}};
  Objective objective = Objective::Edges;
  GraphClass graph_class = GraphClass::All;
  double optimum = 0.0;
  /// graph6 of every optimizer up to isomorphism. For the spectral objective
  /// these are the graphs within 1e-9 of the optimum having the most edges.
  std::vector<std::string> witnesses;
  std::uint64_t visited = 0;
  bool exhaustive = true;
};

inline constexpr double kSpectralTieTolerance = 1e-9;

/// Exact optimum over all F-free isomorphism classes of order n in the class.
ExtremalReport exhaustive_extremal(int n, const LinearForestSpec& spec, Objective objective, GraphClass graph_class,
                                   int threads = 0);

/// Objective value of a graph (edge count or spectral radius).
double objective_value(const Graph& g, Objective objective);

}  // namespace sturan
