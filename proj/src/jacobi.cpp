#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "sturan/error.hpp"
#include "sturan/kernels.hpp"
#include "sturan/spectral.hpp"

namespace sturan {

namespace {

constexpr double kOffThreshold = 1e-12;
constexpr int kMaxSweeps = 60;

double off_norm(const std::vector<double>& a, int n) {
  double s = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) s += a[static_cast<std::size_t>(p) * n + q] * a[static_cast<std::size_t>(p) * n + q];
  return std::sqrt(2.0 * s);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(std::vector<double>& a, int n) {
  if (n < 0 || a.size() != static_cast<std::size_t>(n) * n) throw ParameterError("jacobi_eigenvalues: bad matrix size");
  const auto& k = kernels::active();
  const auto un = static_cast<std::size_t>(n);
  auto at = [&](int r, int c) -> double& { return a[static_cast<std::size_t>(r) * un + c]; };

  double off = off_norm(a, n);
  for (int sweep = 0; off > kOffThreshold; ++sweep) {
    if (sweep == kMaxSweeps)
      throw NonConvergence("spectrum: Jacobi did not converge in " + std::to_string(kMaxSweeps) + " sweeps", 0.0, off);
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p), aqq = at(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = theta == 0.0 ? 1.0 : std::copysign(1.0, theta) / (std::fabs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // Rows p and q rotate together; symmetry then gives the columns, and
        // the 2x2 block is set directly.
        k.rotate(&at(p, 0), &at(q, 0), un, c, s);
        for (int r = 0; r < n; ++r) {
          at(r, p) = at(p, r);
          at(r, q) = at(q, r);
        }
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = at(q, p) = 0.0;
      }
    off = off_norm(a, n);
  }
  std::vector<double> values(un);
  for (int i = 0; i < n; ++i) values[i] = at(i, i);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

std::vector<double> spectrum(const Graph& g) {
  const int n = g.order();
  if (n > kSpectrumMaxOrder)
    throw SizeCapError("spectrum supports at most " + std::to_string(kSpectrumMaxOrder) + " vertices (got " +
                       std::to_string(n) + ")");
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (const auto& [u, v] : g.edges()) {
    a[static_cast<std::size_t>(u) * n + v] = 1.0;
    a[static_cast<std::size_t>(v) * n + u] = 1.0;
  }
  return jacobi_eigenvalues(a, n);
}

}  // namespace sturan
