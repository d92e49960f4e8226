#include "sturan/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "sturan/error.hpp"
#include "sturan/kernels.hpp"

namespace sturan {

namespace {

enum class Mode { Largest, Smallest };

struct PowerRun {
  double value = 0.0;
  std::vector<double> x;
  double residual = 0.0;
  long long iterations = 0;
};

constexpr long long kWindow = 1000;

void normalize(const kernels::Table& k, std::vector<double>& x, std::size_t n) {
  const double norm = std::sqrt(k.dot(x.data(), x.data(), n));
  k.scale(1.0 / norm, x.data(), n);
}

// Power iteration on a connected graph. Largest iterates A + I; Smallest
// iterates cI - A. The reported value is the Rayleigh quotient of A itself.
PowerRun power_iterate(const Graph& h, Mode mode, std::vector<double> x, const SpectralOptions& opts) {
  const auto& k = kernels::active();
  const int n = h.order();
  const auto un = static_cast<std::size_t>(n);
  const double c = 1.0 + h.max_degree();
  x.resize(kernels::padded_length(n), 0.0);
  normalize(k, x, un);
  std::vector<double> ax(un);

  double checkpoint = INFINITY;
  int stalled_windows = 0;
  double best_value = 0.0, best_residual = INFINITY;
  for (long long it = 0;; ++it) {
    k.adjacency_matvec(h.data(), h.words_per_row(), n, x.data(), ax.data());
    const double lambda = k.dot(x.data(), ax.data(), un);
    const double res = k.residual_inf(ax.data(), x.data(), lambda, un);
    if (res < best_residual) {
      best_residual = res;
      best_value = lambda;
    }
    if (res <= opts.tol) {
      x.resize(un);
      return {lambda, std::move(x), res, it + 1};
    }
    const char* what = mode == Mode::Largest ? "spectral_radius" : "least_eigenvalue";
    if (it + 1 >= opts.max_iterations)
      throw NonConvergence(std::string(what) + ": iteration cap of " + std::to_string(opts.max_iterations) +
                               " reached (best estimate " + std::to_string(best_value) + ", residual " +
                               std::to_string(best_residual) + ")",
                           best_value, best_residual);
    if ((it + 1) % kWindow == 0) {
      // Geometric rate over the last window; a rate at or above one in two
      // consecutive windows means the residual has hit its rounding floor.
      const double rate = std::pow(res / checkpoint, 1.0 / kWindow);
      stalled_windows = rate >= 1.0 ? stalled_windows + 1 : 0;
      bool hopeless = stalled_windows >= 2;
      if (!hopeless && rate < 1.0 && std::isfinite(checkpoint)) {
        const double needed = std::log(opts.tol / res) / std::log(rate);
        hopeless = stalled_windows == 0 && needed > 4.0 * static_cast<double>(opts.max_iterations - it);
      }
      if (hopeless)
        throw NonConvergence(std::string(what) + ": stagnated at residual " + std::to_string(best_residual) +
                                 " (best estimate " + std::to_string(best_value) + ")",
                             best_value, best_residual);
      checkpoint = res;
    }
    if (mode == Mode::Largest) {
      k.axpy(1.0, ax.data(), x.data(), un);
    } else {
      k.scale(c, x.data(), un);
      k.axpy(-1.0, ax.data(), x.data(), un);
    }
    normalize(k, x, un);
  }
}

// Deterministic start with no symmetry, so it is not orthogonal to the
// bottom eigenspace of vertex-transitive graphs.
std::vector<double> mixed_start(int n) {
  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<double> x(static_cast<std::size_t>(n));
  for (auto& v : x) v = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  return x;
}

void check_args(const Graph& g, const SpectralOptions& opts, const char* what) {
  if (g.order() < 1) throw ParameterError(std::string(what) + ": graph must have at least one vertex");
  if (!(opts.tol > 0.0)) throw ParameterError(std::string(what) + ": tol must be positive");
  if (opts.max_iterations < 1) throw ParameterError(std::string(what) + ": max_iterations must be positive");
  if (!opts.start.empty() && static_cast<int>(opts.start.size()) != g.order())
    throw ParameterError(std::string(what) + ": warm start length must equal the order");
}

SpectralResult edgeless(int n) {
  SpectralResult r;
  r.vector = std::vector<double>(static_cast<std::size_t>(n), 0.0);
  (*r.vector)[0] = 1.0;
  return r;
}

SpectralResult solve(const Graph& g, const SpectralOptions& opts, Mode mode) {
  check_args(g, opts, mode == Mode::Largest ? "spectral_radius" : "least_eigenvalue");
  const int n = g.order();
  if (g.edge_count() == 0) return edgeless(n);

  SpectralResult out;
  bool have = false;
  long long iterations = 0;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < 2) continue;
    const bool whole = static_cast<int>(comp.size()) == n;
    Graph sub = whole ? g : induced_subgraph(g, comp);
    std::vector<double> x0;
    if (mode == Mode::Largest) {
      x0.assign(comp.size(), 1.0);
      if (!opts.start.empty()) {
        double mass = 0.0;
        for (std::size_t i = 0; i < comp.size(); ++i) mass += std::max(0.0, opts.start[comp[i]]);
        if (mass > 0.0)
          for (std::size_t i = 0; i < comp.size(); ++i) x0[i] = std::max(0.0, opts.start[comp[i]]);
      }
    } else {
      x0 = mixed_start(static_cast<int>(comp.size()));
    }
    PowerRun run = power_iterate(sub, mode, std::move(x0), opts);
    iterations += run.iterations;
    const bool better = !have || (mode == Mode::Largest ? run.value > out.value : run.value < out.value);
    if (better) {
      have = true;
      out.value = run.value;
      out.residual = run.residual;
      std::vector<double> v(static_cast<std::size_t>(n), 0.0);
      for (std::size_t i = 0; i < comp.size(); ++i) v[comp[i]] = mode == Mode::Largest ? std::fabs(run.x[i]) : run.x[i];
      out.vector = std::move(v);
    }
  }
  out.iterations = iterations;
  return out;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol) {
  SpectralOptions opts;
  opts.tol = tol;
  return solve(g, opts, Mode::Largest);
}

SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts) { return solve(g, opts, Mode::Largest); }

SpectralResult least_eigenvalue(const Graph& g, double tol) {
  SpectralOptions opts;
  opts.tol = tol;
  return solve(g, opts, Mode::Smallest);
}

SpectralResult least_eigenvalue(const Graph& g, const SpectralOptions& opts) {
  return solve(g, opts, Mode::Smallest);
}

}  // namespace sturan
