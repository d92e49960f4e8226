#include "sturan/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <thread>

#include "sturan/canonical.hpp"
#include "sturan/error.hpp"
#include "sturan/graph6.hpp"
#include "sturan/spectral.hpp"

namespace sturan {

std::string to_string(Objective o) { return o == Objective::Edges ? "edges" : "rho"; }

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::All: return "all";
    case GraphClass::Bipartite: return "bipartite";
    case GraphClass::Connected: return "connected";
  }
  return "all";
}

Objective parse_objective(const std::string& s) {
  if (s == "edges") return Objective::Edges;
  if (s == "rho" || s == "spectral-radius") return Objective::SpectralRadius;
  throw ParameterError("unknown objective '" + s + "' (expected edges or rho)");
}

GraphClass parse_graph_class(const std::string& s) {
  if (s == "all") return GraphClass::All;
  if (s == "bipartite") return GraphClass::Bipartite;
  if (s == "connected") return GraphClass::Connected;
  throw ParameterError("unknown graph class '" + s + "' (expected all, bipartite or connected)");
}

namespace {

struct Child {
  std::string form;
  Graph graph;
};

bool orbit_linked(const CanonicalLabeling& lab, int a, int b, int n) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& gamma : lab.automorphisms)
    for (int v = 0; v < n; ++v) {
      int x = find(v), y = find(gamma[v]);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  return find(a) == find(b);
}

std::vector<Child> expand(const Graph& parent, const EnumerateOptions& opts, bool last) {
  const int m = parent.order();
  const int n = m + 1;
  const auto pdeg = parent.degrees();
  const auto pedges = parent.edges();
  std::vector<Child> out;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    const int d = std::popcount(mask);
    bool min_degree = true;
    for (int u = 0; u < m && min_degree; ++u) min_degree = pdeg[u] + static_cast<int>((mask >> u) & 1u) >= d;
    if (!min_degree) continue;

    GraphBuilder b(n);
    for (const auto& [u, v] : pedges) b.add_edge(u, v);
    for (int u = 0; u < m; ++u)
      if ((mask >> u) & 1u) b.add_edge(u, m);
    Graph child = b.build();
    if (opts.hereditary && !opts.hereditary(child)) continue;
    if (last && opts.filter && !opts.filter(child)) continue;

    CanonicalLabeling lab = canonical_labeling(child);
    int w = -1;
    for (int v = 0; v < n; ++v)
      if (child.degree(v) == d && (w < 0 || lab.position[v] > lab.position[w])) w = v;
    if (w != m) {
      if (lab.root_cell[w] != lab.root_cell[m]) continue;
      if (!orbit_linked(lab, w, m, n) && !same_orbit(child, w, m)) continue;
    }
    out.push_back({lab.form, relabel(child, lab.position)});
  }
  std::sort(out.begin(), out.end(), [](const Child& a, const Child& b) { return a.form < b.form; });
  out.erase(std::unique(out.begin(), out.end(), [](const Child& a, const Child& b) { return a.form == b.form; }),
            out.end());
  return out;
}

int worker_count(int requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Expands parents[first, last) into per-parent child lists, in parallel.
std::vector<std::vector<Child>> expand_block(const std::vector<Graph>& parents, std::size_t first, std::size_t last,
                                             const EnumerateOptions& opts, bool final_level, int threads) {
  std::vector<std::vector<Child>> out(last - first);
  std::atomic<std::size_t> next{first};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < last;) out[i - first] = expand(parents[i], opts, final_level);
  };
  const int t = static_cast<int>(std::min<std::size_t>(threads, last - first));
  if (t <= 1) {
    work();
    return out;
  }
  std::vector<std::jthread> pool;
  for (int i = 0; i < t; ++i) pool.emplace_back(work);
  pool.clear();
  return out;
}

constexpr std::size_t kBlock = 2048;

}  // namespace

void enumerate_graphs(int n, const GraphVisitor& visit, const EnumerateOptions& opts) {
  if (n < 0) throw ParameterError("enumerate_graphs: n must be nonnegative");
  if (n > kEnumerationMaxOrder)
    throw SizeCapError("enumeration supports n <= " + std::to_string(kEnumerationMaxOrder) + " (got " +
                       std::to_string(n) + ")");
  const int threads = worker_count(opts.threads);
  auto keep = [&](const Graph& g, bool last) {
    return (!opts.hereditary || opts.hereditary(g)) && (!last || !opts.filter || opts.filter(g));
  };
  if (n <= 1) {
    Graph g = empty_graph(n);
    if (keep(g, true)) visit(g);
    return;
  }
  std::vector<Graph> level;
  if (Graph g = empty_graph(1); keep(g, false)) level.push_back(g);
  for (int m = 1; m < n; ++m) {
    const bool last = m + 1 == n;
    std::vector<Graph> next;
    for (std::size_t first = 0; first < level.size(); first += kBlock) {
      const std::size_t end = std::min(level.size(), first + kBlock);
      for (auto& children : expand_block(level, first, end, opts, last, threads))
        for (auto& c : children) {
          if (last) visit(c.graph);
          else next.push_back(std::move(c.graph));
        }
    }
    level = std::move(next);
  }
}

std::vector<Graph> enumerate_graphs(int n, GraphPredicate filter) {
  std::vector<Graph> out;
  EnumerateOptions opts;
  opts.filter = std::move(filter);
  enumerate_graphs(n, [&](const Graph& g) { out.push_back(g); }, opts);
  return out;
}

std::vector<Graph> enumerate_bipartite(int n, GraphPredicate filter) {
  std::vector<Graph> out;
  EnumerateOptions opts = class_options(GraphClass::Bipartite);
  opts.filter = std::move(filter);
  enumerate_graphs(n, [&](const Graph& g) { out.push_back(g); }, opts);
  return out;
}

GraphPredicate forest_free(const LinearForestSpec& f) {
  return [f](const Graph& g) { return !contains_linear_forest(g, f); };
}

EnumerateOptions class_options(GraphClass c) {
  EnumerateOptions opts;
  if (c == GraphClass::Bipartite) opts.hereditary = [](const Graph& g) { return is_bipartite(g); };
  if (c == GraphClass::Connected) opts.filter = [](const Graph& g) { return is_connected(g); };
  return opts;
}

double objective_value(const Graph& g, Objective objective) {
  if (objective == Objective::Edges) return static_cast<double>(g.edge_count());
  return spectral_radius(g).value;
}

ExtremalReport exhaustive_extremal(int n, const LinearForestSpec& spec, Objective objective, GraphClass graph_class,
                                   int threads) {
  EnumerateOptions opts = class_options(graph_class);
  opts.threads = threads;
  auto free_of = forest_free(spec);
  if (opts.hereditary) {
    auto cls = opts.hereditary;
    opts.hereditary = [cls, free_of](const Graph& g) { return cls(g) && free_of(g); };
  } else {
    opts.hereditary = free_of;
  }

  struct Candidate {
    double value;
    std::size_t edges;
    std::string form;
  };
  ExtremalReport report;
  report.n = n;
  report.spec = spec;
  report.objective = objective;
  report.graph_class = graph_class;
  report.exhaustive = true;

  const double slack = objective == Objective::Edges ? 0.0 : kSpectralTieTolerance;
  double best = -1.0;
  std::vector<Candidate> near;
  enumerate_graphs(
      n,
      [&](const Graph& g) {
        ++report.visited;
        const double v = objective_value(g, objective);
        if (v < best - slack) return;
        if (v > best) {
          best = v;
          std::erase_if(near, [&](const Candidate& c) { return c.value < best - slack; });
        }
        near.push_back({v, g.edge_count(), encode_graph6(g)});
      },
      opts);

  report.optimum = best;
  std::size_t most_edges = 0;
  for (const auto& c : near) most_edges = std::max(most_edges, c.edges);
  for (const auto& c : near)
    if (c.edges == most_edges) report.witnesses.push_back(c.form);
  std::sort(report.witnesses.begin(), report.witnesses.end());
  return report;
}

}  // namespace sturan
