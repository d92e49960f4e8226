#pragma once

#include <cstddef>
#include <span>

#include "sturan/graph.hpp"

// Dense arithmetic inner loops used by the eigensolvers. Each kernel has a
// scalar reference implementation and, on x86-64, an AVX2/FMA variant selected
// at runtime. Results of the two back ends agree to rounding (summation order
// differs), which the kernel equivalence tests pin down.

namespace sturan::kernels {

enum class Backend { Scalar, Avx2 };

struct Table {
  Backend backend;
  /// y[i] = sum of x[j] over the set bits j of row i. `rows` holds n rows of
  /// `words` words; x must be readable up to words*64 entries (zero padded).
  void (*adjacency_matvec)(const Word* rows, int words, int n, const double* x, double* y);
  double (*dot)(const double* a, const double* b, std::size_t n);
  /// y += a*x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  void (*scale)(double a, double* x, std::size_t n);
  /// Plane rotation: (x, y) <- (c*x - s*y, s*x + c*y).
  void (*rotate)(double* x, double* y, std::size_t n, double c, double s);
  /// max_i |ax[i] - lambda*x[i]|
  double (*residual_inf)(const double* ax, const double* x, double lambda, std::size_t n);
};

const char* name(Backend b);
bool supported(Backend b);
const Table& table(Backend b);

/// The table used by the solvers. Defaults to the best supported back end;
/// the environment variable STURAN_KERNELS=scalar|avx2 overrides it.
const Table& active();
Backend active_backend();
/// Throws ParameterError if the back end is not supported on this CPU.
void set_active(Backend b);

/// Zero-padded length the matvec kernel may read for an order-n graph.
inline constexpr std::size_t padded_length(int n) { return static_cast<std::size_t>(words_for(n)) * kWordBits; }

}  // namespace sturan::kernels
