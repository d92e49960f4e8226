#pragma once

#include "sturan/kernels.hpp"

namespace sturan::kernels {

namespace scalar {
const Table& table();
}

#if defined(STURAN_HAVE_AVX2_TU)
namespace avx2 {
const Table& table();
}
#endif

}  // namespace sturan::kernels
