#include "sturan/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sturan/canonical.hpp"
#include "sturan/error.hpp"
#include "sturan/graph6.hpp"
#include "sturan/spectral.hpp"

namespace sturan {

std::uint64_t SearchRng::below(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

namespace {

constexpr double kPlateau = 1e-12;
constexpr double kSpectralTol = 1e-11;

struct Pair {
  int u, v;  // u < v
  long long index() const { return static_cast<long long>(v) * (v - 1) / 2 + u; }
};

class Climber {
 public:
  Climber(int n, const LinearForestSpec& spec, Objective objective, GraphClass cls, SearchReport& report)
      : n_(n), spec_(spec), objective_(objective), cls_(cls), report_(report), b_(n) {}

  double run(SearchRng& rng, long long budget) {
    b_ = GraphBuilder(n_);
    steps_ = 0;
    budget_ = budget;
    perron_.clear();
    restart_best_ = -std::numeric_limits<double>::infinity();

    choose_pairs(rng);
    random_start(rng);
    evaluate();
    consider();
    while (steps_ < budget_) {
      if (try_addition()) {
        consider();
        continue;
      }
      if (!try_swaps(rng)) break;
      consider();
    }
    report_.steps += steps_;
    return restart_best_;
  }

 private:
  void choose_pairs(SearchRng& rng) {
    pairs_.clear();
    std::vector<int> side(n_, 0);
    if (cls_ == GraphClass::Bipartite)
      for (auto& s : side) s = static_cast<int>(rng.below(2));
    for (int v = 1; v < n_; ++v)
      for (int u = 0; u < v; ++u)
        if (cls_ != GraphClass::Bipartite || side[u] != side[v]) pairs_.push_back({u, v});
  }

  bool add_if_free(const Pair& p) {
    ++steps_;
    b_.add_edge(p.u, p.v);
    if (!contains_linear_forest_through_edge(b_, spec_, p.u, p.v)) return true;
    b_.remove_edge(p.u, p.v);
    return false;
  }

  void random_start(SearchRng& rng) {
    std::vector<Pair> order = pairs_;
    rng.shuffle(order);
    const auto target = rng.below(order.size() + 1);
    for (const auto& p : order) {
      if (b_.edge_count() >= target || steps_ >= budget_) break;
      add_if_free(p);
    }
  }

  void evaluate() {
    if (objective_ == Objective::Edges) {
      value_ = static_cast<double>(b_.edge_count());
      return;
    }
    SpectralOptions opts;
    opts.tol = kSpectralTol;
    if (!perron_.empty()) opts.start = perron_;
    auto r = spectral_radius(b_.build(), opts);
    value_ = r.value;
    perron_ = std::move(*r.vector);
  }

  bool try_addition() {
    std::vector<std::pair<double, Pair>> cands;
    for (const auto& p : pairs_)
      if (!b_.has_edge(p.u, p.v)) {
        const double score = objective_ == Objective::Edges ? 0.0 : perron_[p.u] * perron_[p.v];
        cands.push_back({score, p});
      }
    std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second.index() < b.second.index();
    });
    for (const auto& [score, p] : cands) {
      if (steps_ >= budget_) return false;
      if (add_if_free(p)) {
        evaluate();
        return true;
      }
    }
    return false;
  }

  bool try_swaps(SearchRng& rng) {
    const long long attempts = std::max<long long>(200, static_cast<long long>(n_) * n_);
    for (long long a = 0; a < attempts && steps_ < budget_; ++a) {
      std::vector<Pair> present, absent;
      for (const auto& p : pairs_) (b_.has_edge(p.u, p.v) ? present : absent).push_back(p);
      if (present.empty() || absent.empty()) return false;
      const Pair out = present[rng.below(present.size())];
      const Pair in = absent[rng.below(absent.size())];
      b_.remove_edge(out.u, out.v);
      if (!add_if_free(in)) {
        b_.add_edge(out.u, out.v);
        continue;
      }
      const double old_value = value_;
      const auto old_perron = perron_;
      evaluate();
      if (value_ >= old_value - kPlateau) return true;
      b_.remove_edge(in.u, in.v);
      b_.add_edge(out.u, out.v);
      value_ = old_value;
      perron_ = old_perron;
    }
    return false;
  }

  // Folds the current graph into the restart best and the global witness set.
  void consider() {
    ++report_.visited;
    Graph g = b_.build();
    if (cls_ == GraphClass::Connected && !is_connected(g)) return;
    restart_best_ = std::max(restart_best_, value_);
    const double slack = objective_ == Objective::Edges ? 0.0 : kSpectralTieTolerance;
    const std::size_t edges = g.edge_count();
    const bool first = report_.witnesses.empty();
    const bool better = first || value_ > report_.optimum + slack ||
                        (value_ >= report_.optimum - slack && edges > best_edges_);
    const bool tie = !better && value_ >= report_.optimum - slack && edges == best_edges_;
    if (!better && !tie) return;
    const std::string form = n_ <= kCanonicalMaxOrder ? canonical_form(g) : encode_graph6(g);
    if (better) {
      report_.optimum = value_;
      best_edges_ = edges;
      report_.witnesses.assign(1, form);
      return;
    }
    if (static_cast<int>(report_.witnesses.size()) < kMaxSearchWitnesses &&
        std::find(report_.witnesses.begin(), report_.witnesses.end(), form) == report_.witnesses.end())
      report_.witnesses.push_back(form);
  }

  int n_;
  const LinearForestSpec& spec_;
  Objective objective_;
  GraphClass cls_;
  SearchReport& report_;
  GraphBuilder b_;
  std::vector<Pair> pairs_;
  std::vector<double> perron_;
  double value_ = 0.0;
  double restart_best_ = 0.0;
  std::size_t best_edges_ = 0;
  long long steps_ = 0;
  long long budget_ = 0;
};

}  // namespace

SearchReport hill_climb_search(int n, const LinearForestSpec& spec, Objective objective, GraphClass graph_class,
                               std::uint64_t seed, int restarts, long long step_budget) {
  if (n < 1) throw ParameterError("hill_climb_search: n must be at least 1");
  if (n > kMaxOrder) throw SizeCapError("hill_climb_search supports n <= " + std::to_string(kMaxOrder));
  if (restarts < 1) throw ParameterError("hill_climb_search: restarts must be at least 1");
  if (step_budget < 1) throw ParameterError("hill_climb_search: step budget must be at least 1");

  SearchReport report;
  report.n = n;
  report.spec = spec;
  report.objective = objective;
  report.graph_class = graph_class;
  report.exhaustive = false;
  report.seed = seed;
  report.restarts = restarts;

  SearchRng rng(seed);
  Climber climber(n, spec, objective, graph_class, report);
  for (int r = 0; r < restarts; ++r) report.best_trajectory.push_back(climber.run(rng, step_budget));
  std::sort(report.witnesses.begin(), report.witnesses.end());
  return report;
}

}  // namespace sturan
