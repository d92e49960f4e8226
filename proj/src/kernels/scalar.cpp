#include <bit>
#include <cmath>

#include "backends.hpp"

namespace sturan::kernels::scalar {

namespace {

void adjacency_matvec(const Word* rows, int words, int n, const double* x, double* y) {
  for (int i = 0; i < n; ++i) {
    const Word* row = rows + static_cast<std::size_t>(i) * words;
    double acc = 0.0;
    for (int w = 0; w < words; ++w) {
      Word bits = row[w];
      while (bits) {
        acc += x[w * kWordBits + std::countr_zero(bits)];
        bits &= bits - 1;
      }
    }
    y[i] = acc;
  }
}

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void rotate(double* x, double* y, std::size_t n, double c, double s) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i], yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

double residual_inf(const double* ax, const double* x, double lambda, std::size_t n) {
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) worst = std::fmax(worst, std::fabs(ax[i] - lambda * x[i]));
  return worst;
}

constexpr Table kTable{Backend::Scalar, adjacency_matvec, dot, axpy, scale, rotate, residual_inf};

}  // namespace

const Table& table() { return kTable; }

}  // namespace sturan::kernels::scalar
