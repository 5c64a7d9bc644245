#pragma once

#include <cstddef>
#include <cstdint>

// Batched polynomial-recurrence kernels for grid evaluation: the same
// three-term recurrences as pu/specfun.hpp, marched across an array of
// abscissas with mantissa/exponent renormalisation so that degrees up to
// ~10^6 never overflow.
//
// Two implementations are provided behind a function-pointer table: a
// portable scalar reference and an AVX2+FMA variant compiled in its own
// translation unit.  Dispatch is resolved once at first use from CPUID;
// setting PU_FORCE_SCALAR=1 in the environment pins the reference kernels.
// The variants agree to floating-point rounding (FMA contraction), not
// bit-exactly; equivalence is asserted in the test suite.

namespace pu::kernels {

// value[i] = mant[i] * 2^exp2[i]
using LaguerreFn = void (*)(long long m, double alpha, const double* x, std::size_t count,
                            double* mant, std::int32_t* exp2);
using HermiteFn = void (*)(int n, const double* x, std::size_t count,
                           double* mant, std::int32_t* exp2);

struct Batch {
  const char* name;
  LaguerreFn laguerre_scaled;
  HermiteFn hermite_scaled;
};

const Batch& scalar_batch();
const Batch* avx2_batch();  // nullptr when the CPU lacks AVX2/FMA
const Batch& active();

// Renormalisation bounds shared by all implementations: a lane is rescaled
// by 2^-+512 once its magnitude leaves [2^-512, 2^512].
inline constexpr double kScaleHi = 0x1p+512;
inline constexpr double kScaleLo = 0x1p-512;
inline constexpr std::int32_t kScaleShift = 512;

}  // namespace pu::kernels
