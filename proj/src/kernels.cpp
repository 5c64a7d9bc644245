#include "pu/kernels.hpp"

#include <cstdlib>

namespace pu::kernels {

#ifdef PU_HAVE_AVX2_TU
const Batch& avx2_batch_impl();  // defined in kernels_avx2.cpp
#endif

const Batch* avx2_batch() {
#ifdef PU_HAVE_AVX2_TU
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return &avx2_batch_impl();
#endif
  return nullptr;
}

const Batch& active() {
  static const Batch* chosen = [] {
    if (const char* f = std::getenv("PU_FORCE_SCALAR"); f && f[0] == '1' && f[1] == '\0')
      return &scalar_batch();
    if (const Batch* a = avx2_batch()) return a;
    return &scalar_batch();
  }();
  return *chosen;
}

}  // namespace pu::kernels
