#include <atomic>
#include <cstdlib>
#include <string>

#include "backends.hpp"
#include "sturan/error.hpp"

namespace sturan::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(STURAN_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Table* initial_table() {
  Backend choice = cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
  if (const char* env = std::getenv("STURAN_KERNELS")) {
    const std::string v(env);
    if (v == "scalar") choice = Backend::Scalar;
    else if (v == "avx2" && supported(Backend::Avx2)) choice = Backend::Avx2;
  }
  return &table(choice);
}

std::atomic<const Table*>& current() {
  static std::atomic<const Table*> t{initial_table()};
  return t;
}

}  // namespace

const char* name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

bool supported(Backend b) {
  if (b == Backend::Scalar) return true;
  static const bool avx2 = cpu_has_avx2();
  return avx2;
}

const Table& table(Backend b) {
  if (!supported(b)) throw ParameterError(std::string("kernel back end not supported on this CPU: ") + name(b));
#if defined(STURAN_HAVE_AVX2_TU)
  if (b == Backend::Avx2) return avx2::table();
#endif
  return scalar::table();
}

const Table& active() { return *current().load(std::memory_order_relaxed); }

Backend active_backend() { return active().backend; }

void set_active(Backend b) { current().store(&table(b), std::memory_order_relaxed); }

}  // namespace sturan::kernels
