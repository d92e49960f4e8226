#include "sturan/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "sturan/error.hpp"

namespace sturan {

int Graph::min_degree() const noexcept {
  int best = n_ == 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    Word bits = r[w];
    while (bits) {
      out.push_back(w * kWordBits + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_);
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

GraphBuilder::GraphBuilder(int n) : n_(n), words_(words_for(n)) {
  if (n < 0) throw ParameterError("graph order must be nonnegative (got " + std::to_string(n) + ")");
  if (n > kMaxOrder)
    throw SizeCapError("graph order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxOrder));
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

GraphBuilder::GraphBuilder(const Graph& g)
    : n_(g.n_), words_(g.words_), edges_(g.edges_), bits_(g.bits_) {}

void GraphBuilder::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw ParameterError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
}

bool GraphBuilder::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ParameterError("loops are not allowed (vertex " + std::to_string(u) + ")");
  if (has_edge(u, v)) return false;
  bits_[static_cast<std::size_t>(u) * words_ + v / kWordBits] |= Word{1} << (v % kWordBits);
  bits_[static_cast<std::size_t>(v) * words_ + u / kWordBits] |= Word{1} << (u % kWordBits);
  ++edges_;
  return true;
}

bool GraphBuilder::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !has_edge(u, v)) return false;
  bits_[static_cast<std::size_t>(u) * words_ + v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  bits_[static_cast<std::size_t>(v) * words_ + u / kWordBits] &= ~(Word{1} << (u % kWordBits));
  --edges_;
  return true;
}

void GraphBuilder::add_clique(std::span<const int> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) add_edge(vertices[i], vertices[j]);
}

int GraphBuilder::degree(int v) const noexcept {
  int d = 0;
  for (Word w : row(v)) d += std::popcount(w);
  return d;
}

Graph GraphBuilder::build() const {
  Graph g;
  g.n_ = n_;
  g.words_ = words_;
  g.edges_ = edges_;
  g.bits_ = bits_;
#ifndef NDEBUG
  check_invariants(g);
#endif
  return g;
}

void check_invariants(const Graph& g) {
  std::size_t total = 0;
  for (int u = 0; u < g.order(); ++u) {
    if (g.adjacent(u, u)) throw std::logic_error("loop at vertex " + std::to_string(u));
    for (int v : g.neighbors(u)) {
      if (v >= g.order()) throw std::logic_error("stray bit beyond order in row " + std::to_string(u));
      if (!g.adjacent(v, u))
        throw std::logic_error("asymmetric adjacency " + std::to_string(u) + "-" + std::to_string(v));
      ++total;
    }
  }
  if (total % 2 != 0 || total / 2 != g.edge_count()) throw std::logic_error("edge count mismatch");
}

Graph empty_graph(int n) { return GraphBuilder(n).build(); }

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

namespace {

void copy_edges(GraphBuilder& b, const Graph& g, int offset) {
  for (auto [u, v] : g.edges()) b.add_edge(u + offset, v + offset);
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) {
  GraphBuilder b(g.order() + h.order());
  copy_edges(b, g, 0);
  copy_edges(b, h, g.order());
  return b.build();
}

Graph join(const Graph& g, const Graph& h) {
  GraphBuilder b(g.order() + h.order());
  copy_edges(b, g, 0);
  copy_edges(b, h, g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) b.add_edge(u, g.order() + v);
  return b.build();
}

Graph k_copies(int k, const Graph& g) {
  if (k < 1) throw ParameterError("k_copies requires k >= 1 (got " + std::to_string(k) + ")");
  GraphBuilder b(k * g.order());
  for (int i = 0; i < k; ++i) copy_edges(b, g, i * g.order());
  return b.build();
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw ParameterError("relabel: permutation size mismatch");
  std::vector<char> hit(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || p >= g.order() || hit[p]) throw ParameterError("relabel: not a permutation");
    hit[p] = 1;
  }
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return b.build();
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int m = static_cast<int>(vertices.size());
  GraphBuilder b(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(vertices[i], vertices[j])) b.add_edge(i, j);
  return b.build();
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return b.build();
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.order(), 0);
  std::vector<int> stack;
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  std::deque<int> queue;
  for (int s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (int v = 0; v < g.order(); ++v) (color[v] == 0 ? parts.side_a : parts.side_b).push_back(v);
  return parts;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

bool is_complete_bipartite_plus_isolated(const Graph& g) {
  if (g.edge_count() == 0) return true;
  std::vector<int> active;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) active.push_back(v);
  Graph core = induced_subgraph(g, active);
  if (!is_connected(core)) return false;
  auto parts = bipartition(core);
  if (!parts) return false;
  return core.edge_count() == parts->side_a.size() * parts->side_b.size();
}

}  // namespace sturan
