#include <immintrin.h>

#include <array>
#include <bit>
#include <cmath>

#include "backends.hpp"

namespace sturan::kernels::avx2 {

namespace {

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// Lane masks for every 4-bit pattern.
struct NibbleMasks {
  alignas(32) std::array<std::array<long long, 4>, 16> lanes{};
  NibbleMasks() {
    for (int m = 0; m < 16; ++m)
      for (int b = 0; b < 4; ++b) lanes[m][b] = (m >> b) & 1 ? -1LL : 0LL;
  }
};

const NibbleMasks& nibble_masks() {
  static const NibbleMasks masks;
  return masks;
}

void adjacency_matvec(const Word* rows, int words, int n, const double* x, double* y) {
  const auto& lut = nibble_masks().lanes;
  for (int i = 0; i < n; ++i) {
    const Word* row = rows + static_cast<std::size_t>(i) * words;
    __m256d acc = _mm256_setzero_pd();
    for (int w = 0; w < words; ++w) {
      Word bits = row[w];
      const double* base = x + static_cast<std::size_t>(w) * kWordBits;
      while (bits) {
        const int q = std::countr_zero(bits) >> 2;
        const unsigned nib = static_cast<unsigned>(bits >> (4 * q)) & 0xFu;
        const __m256d mask = _mm256_castsi256_pd(_mm256_load_si256(reinterpret_cast<const __m256i*>(lut[nib].data())));
        acc = _mm256_add_pd(acc, _mm256_and_pd(_mm256_loadu_pd(base + 4 * q), mask));
        bits &= ~(Word{0xF} << (4 * q));
      }
    }
    y[i] = hsum(acc);
  }
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale(double a, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

void rotate(double* x, double* y, std::size_t n, double c, double s) {
  const __m256d vc = _mm256_set1_pd(c), vs = _mm256_set1_pd(s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xi = _mm256_loadu_pd(x + i), yi = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(x + i, _mm256_fmsub_pd(vc, xi, _mm256_mul_pd(vs, yi)));
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(vs, xi, _mm256_mul_pd(vc, yi)));
  }
  for (; i < n; ++i) {
    const double xi = x[i], yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

double residual_inf(const double* ax, const double* x, double lambda, std::size_t n) {
  const __m256d vl = _mm256_set1_pd(lambda);
  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7FFFFFFFFFFFFFFFLL));
  __m256d worst = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r = _mm256_fnmadd_pd(vl, _mm256_loadu_pd(x + i), _mm256_loadu_pd(ax + i));
    worst = _mm256_max_pd(worst, _mm256_and_pd(r, abs_mask));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, worst);
  double out = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
  for (; i < n; ++i) out = std::fmax(out, std::fabs(ax[i] - lambda * x[i]));
  return out;
}

constexpr Table kTable{Backend::Avx2, adjacency_matvec, dot, axpy, scale, rotate, residual_inf};

}  // namespace

const Table& table() { return kTable; }

}  // namespace sturan::kernels::avx2
