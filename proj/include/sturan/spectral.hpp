#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sturan/graph.hpp"

namespace sturan {

struct SpectralResult {
  double value = 0.0;
  /// Unit eigenvector of length n. For spectral_radius it is entrywise
  /// nonnegative and supported on a component attaining the maximum.
  std::optional<std::vector<double>> vector;
  /// max_i |(Av)_i - value*v_i|
  double residual = 0.0;
  long long iterations = 0;
};

struct SpectralOptions {
  double tol = 1e-10;
  long long max_iterations = 1'000'000;
  /// Optional warm start of length n. Only used by spectral_radius; entries
  /// are clamped to be positive.
  std::span<const double> start = {};
};

inline constexpr int kSpectrumMaxOrder = 2048;

/// Largest adjacency eigenvalue, by power iteration on A + I run separately
/// on each connected component. A graph without edges yields 0 with the
/// vector e_0. Throws NonConvergence on stagnation or when the iteration cap
/// is hit; the exception carries the best estimate.
SpectralResult spectral_radius(const Graph& g, double tol = 1e-10);
SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts);

/// Smallest adjacency eigenvalue, by power iteration on (1 + Delta) I - A per
/// component. A graph without edges yields 0 with the vector e_0.
SpectralResult least_eigenvalue(const Graph& g, double tol = 1e-10);
SpectralResult least_eigenvalue(const Graph& g, const SpectralOptions& opts);

/// All adjacency eigenvalues in descending order (cyclic Jacobi).
/// Throws SizeCapError above kSpectrumMaxOrder vertices.
std::vector<double> spectrum(const Graph& g);

/// Eigenvalues of a dense symmetric row-major n x n matrix, descending.
/// The matrix is overwritten.
std::vector<double> jacobi_eigenvalues(std::vector<double>& a, int n);

}  // namespace sturan
