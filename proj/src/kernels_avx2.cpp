// AVX2+FMA lanes of the batch kernels.  This translation unit is the only
// one compiled with -mavx2 -mfma; it must not be entered unless CPUID
// reports both features (see kernels.cpp).

#include "pu/kernels.hpp"

#ifdef __AVX2__

#include <immintrin.h>

#include <cmath>

namespace pu::kernels {
namespace {

// Per-lane renormalisation matching the scalar reference: rescale the
// (cur, prev) pair together when |cur| leaves [2^-512, 2^512].
inline void renorm4(__m256d& cur, __m256d& prev, std::int32_t* e) {
  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  const __m256d a = _mm256_and_pd(cur, abs_mask);
  const __m256d hi = _mm256_cmp_pd(a, _mm256_set1_pd(kScaleHi), _CMP_GT_OQ);
  const __m256d lo = _mm256_and_pd(_mm256_cmp_pd(a, _mm256_set1_pd(kScaleLo), _CMP_LT_OQ),
                                   _mm256_cmp_pd(a, _mm256_setzero_pd(), _CMP_GT_OQ));
  const int mh = _mm256_movemask_pd(hi);
  const int ml = _mm256_movemask_pd(lo);
  if (!(mh | ml)) return;
  cur = _mm256_blendv_pd(cur, _mm256_mul_pd(cur, _mm256_set1_pd(kScaleLo)), hi);
  prev = _mm256_blendv_pd(prev, _mm256_mul_pd(prev, _mm256_set1_pd(kScaleLo)), hi);
  cur = _mm256_blendv_pd(cur, _mm256_mul_pd(cur, _mm256_set1_pd(kScaleHi)), lo);
  prev = _mm256_blendv_pd(prev, _mm256_mul_pd(prev, _mm256_set1_pd(kScaleHi)), lo);
  for (int lane = 0; lane < 4; ++lane) {
    if (mh & (1 << lane)) e[lane] += kScaleShift;
    if (ml & (1 << lane)) e[lane] -= kScaleShift;
  }
}

void laguerre_scaled_avx2(long long m, double alpha, const double* x, std::size_t count,
                          double* mant, std::int32_t* exp2) {
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    if (m == 0) {
      for (int lane = 0; lane < 4; ++lane) {
        mant[i + lane] = 1.0;
        exp2[i + lane] = 0;
      }
      continue;
    }
    const __m256d xv = _mm256_loadu_pd(x + i);
    const __m256d base = _mm256_sub_pd(_mm256_set1_pd(alpha), xv);  // alpha - x
    __m256d prev = _mm256_set1_pd(1.0);
    __m256d cur = _mm256_add_pd(base, _mm256_set1_pd(1.0));
    std::int32_t e[4] = {0, 0, 0, 0};
    for (long long j = 1; j < m; ++j) {
      const __m256d t = _mm256_add_pd(base, _mm256_set1_pd(2.0 * j + 1.0));
      const __m256d c2 = _mm256_set1_pd(double(j) + alpha);
      const __m256d inv = _mm256_set1_pd(1.0 / double(j + 1));
      const __m256d next = _mm256_mul_pd(_mm256_fmsub_pd(t, cur, _mm256_mul_pd(c2, prev)), inv);
      prev = cur;
      cur = next;
      renorm4(cur, prev, e);
    }
    _mm256_storeu_pd(mant + i, cur);
    for (int lane = 0; lane < 4; ++lane) exp2[i + lane] = e[lane];
  }
  if (i < count) scalar_batch().laguerre_scaled(m, alpha, x + i, count - i, mant + i, exp2 + i);
}

void hermite_scaled_avx2(int n, const double* x, std::size_t count,
                         double* mant, std::int32_t* exp2) {
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    if (n == 0) {
      for (int lane = 0; lane < 4; ++lane) {
        mant[i + lane] = 1.0;
        exp2[i + lane] = 0;
      }
      continue;
    }
    const __m256d twox = _mm256_mul_pd(_mm256_set1_pd(2.0), _mm256_loadu_pd(x + i));
    __m256d prev = _mm256_set1_pd(1.0);
    __m256d cur = twox;
    std::int32_t e[4] = {0, 0, 0, 0};
    for (int k = 1; k < n; ++k) {
      const __m256d next =
          _mm256_fmsub_pd(twox, cur, _mm256_mul_pd(_mm256_set1_pd(2.0 * k), prev));
      prev = cur;
      cur = next;
      renorm4(cur, prev, e);
    }
    _mm256_storeu_pd(mant + i, cur);
    for (int lane = 0; lane < 4; ++lane) exp2[i + lane] = e[lane];
  }
  if (i < count) scalar_batch().hermite_scaled(n, x + i, count - i, mant + i, exp2 + i);
}

}  // namespace

const Batch& avx2_batch_impl() {
  static const Batch b{"avx2", &laguerre_scaled_avx2, &hermite_scaled_avx2};
  return b;
}

}  // namespace pu::kernels

#endif  // __AVX2__
