#include "pu/kernels.hpp"

#include <cmath>

namespace pu::kernels {
namespace {

// Rescales the recurrence pair (cur, prev) as a unit so their ratio is
// preserved across the renormalisation.
inline void renorm(double& cur, double& prev, std::int32_t& e) {
  const double a = std::fabs(cur);
  if (a > kScaleHi) {
    cur *= kScaleLo;
    prev *= kScaleLo;
    e += kScaleShift;
  } else if (a < kScaleLo && a > 0.0) {
    cur *= kScaleHi;
    prev *= kScaleHi;
    e -= kScaleShift;
  }
}

void laguerre_scaled_scalar(long long m, double alpha, const double* x, std::size_t count,
                            double* mant, std::int32_t* exp2) {
  for (std::size_t i = 0; i < count; ++i) {
    if (m == 0) {
      mant[i] = 1.0;
      exp2[i] = 0;
      continue;
    }
    double prev = 1.0;
    double cur = 1.0 + alpha - x[i];
    std::int32_t e = 0;
    for (long long j = 1; j < m; ++j) {
      const double next =
          ((2.0 * j + 1.0 + alpha - x[i]) * cur - (j + alpha) * prev) / double(j + 1);
      prev = cur;
      cur = next;
      renorm(cur, prev, e);
    }
    mant[i] = cur;
    exp2[i] = e;
  }
}

void hermite_scaled_scalar(int n, const double* x, std::size_t count,
                           double* mant, std::int32_t* exp2) {
  for (std::size_t i = 0; i < count; ++i) {
    if (n == 0) {
      mant[i] = 1.0;
      exp2[i] = 0;
      continue;
    }
    double prev = 1.0;
    double cur = 2.0 * x[i];
    std::int32_t e = 0;
    for (int k = 1; k < n; ++k) {
      const double next = 2.0 * x[i] * cur - 2.0 * k * prev;
      prev = cur;
      cur = next;
      renorm(cur, prev, e);
    }
    mant[i] = cur;
    exp2[i] = e;
  }
}

}  // namespace

const Batch& scalar_batch() {
  static const Batch b{"scalar", &laguerre_scaled_scalar, &hermite_scaled_scalar};
  return b;
}

}  // namespace pu::kernels
