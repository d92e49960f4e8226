#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sturan {

/// Largest supported order. Eigensolvers become impractical beyond this.
inline constexpr int kMaxOrder = 4096;

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

inline constexpr int words_for(int n) { return (n + kWordBits - 1) / kWordBits; }

class GraphBuilder;

/// Simple undirected graph on vertices 0..n-1 with one bitset row per vertex.
///
/// Values are immutable once built; GraphBuilder is the only way to produce a
/// non-trivial Graph. Every constructed graph satisfies adjacency symmetry and
/// has no loops (checked in GraphBuilder::build).
class Graph {
 public:
  Graph() = default;

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_; }
  int words_per_row() const noexcept { return words_; }

  bool adjacent(int u, int v) const noexcept {
    return (bits_[static_cast<std::size_t>(u) * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  std::span<const Word> row(int v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }
  const Word* data() const noexcept { return bits_.data(); }

  int degree(int v) const noexcept {
    int d = 0;
    for (Word w : row(v)) d += std::popcount(w);
    return d;
  }
  int min_degree() const noexcept;
  int max_degree() const noexcept;

  std::vector<int> neighbors(int v) const;
  std::vector<int> degrees() const;
  /// Edges (u,v) with u < v, ordered by u then v.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  int n_ = 0;
  int words_ = 0;
  std::size_t edges_ = 0;
  std::vector<Word> bits_;
};

/// Mutable adjacency used by constructors, enumeration and search.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_; }

  bool has_edge(int u, int v) const noexcept {
    return (bits_[static_cast<std::size_t>(u) * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  /// Adds uv; returns false if it was already present. Throws on loops.
  bool add_edge(int u, int v);
  bool remove_edge(int u, int v);
  void add_clique(std::span<const int> vertices);

  int degree(int v) const noexcept;
  std::span<const Word> row(int v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }

  Graph build() const;

 private:
  void check_vertex(int v) const;
  int n_;
  int words_;
  std::size_t edges_ = 0;
  std::vector<Word> bits_;
};

Graph empty_graph(int n);
Graph complete_graph(int n);

/// Disjoint union: vertices of g first, then those of h shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
/// Join: disjoint union plus every edge between the two vertex sets.
Graph join(const Graph& g, const Graph& h);
/// k disjoint copies of g, copy i occupying vertices [i*n, (i+1)*n).
Graph k_copies(int k, const Graph& g);

/// Relabels vertex v as perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
Graph complement(const Graph& g);

/// Connected components, each sorted ascending, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct Bipartition {
  std::vector<int> side_a;
  std::vector<int> side_b;
};

/// 2-coloring by BFS; the lowest-index vertex of every component goes to
/// side A. Empty if g has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

/// Complete bipartite graph (at least one edge) plus isolated vertices, or an
/// edgeless graph.
bool is_complete_bipartite_plus_isolated(const Graph& g);

/// Throws std::logic_error if the symmetry/no-loop invariants are broken.
void check_invariants(const Graph& g);

}  // namespace sturan
