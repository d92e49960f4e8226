#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sturan/enumerate.hpp"

namespace sturan {

/// The search RNG: std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Bounded draws and shuffles are done here rather than through
/// <random> distributions, which are implementation-defined.
class SearchRng {
 public:
  explicit SearchRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound);
  /// Fisher-Yates, last position first.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

struct SearchReport : ExtremalReport {
  std::uint64_t seed = 0;
  int restarts = 0;
  /// Containment checks performed, summed over restarts.
  long long steps = 0;
  /// Best value reached by each restart.
  std::vector<double> best_trajectory;
};

inline constexpr int kMaxSearchWitnesses = 32;

/// Stochastic falsification search. Each restart builds a random F-free graph
/// in the class, then repeatedly adds the highest-scoring feasible edge (score
/// x_u*x_v from the Perron vector for the spectral objective, ties to the
/// lowest edge index v(v-1)/2+u); when no addition is feasible it tries random
/// swaps, accepting those that do not lower the value by more than 1e-12. A
/// step is one containment check; each restart gets `step_budget` steps.
/// The result is a lower bound only and is never marked exhaustive.
SearchReport hill_climb_search(int n, const LinearForestSpec& spec, Objective objective, GraphClass graph_class,
                               std::uint64_t seed, int restarts, long long step_budget);

}  // namespace sturan
