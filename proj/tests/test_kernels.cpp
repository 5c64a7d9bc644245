#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <vector>

#include "pu/kernels.hpp"
#include "pu/specfun.hpp"

namespace kn = pu::kernels;
namespace sf = pu::specfun;

namespace {

std::vector<double> abscissas(std::size_t count) {
  std::vector<double> x(count);
  for (std::size_t i = 0; i < count; ++i)
    x[i] = -3.0 + 6.0 * double(i) / double(count - 1);
  return x;
}

double combined_log(double mant, std::int32_t exp2) {
  return std::log(std::abs(mant)) + exp2 * std::log(2.0);
}

}  // namespace

TEST_CASE("scalar batch agrees with the single-value reference") {
  const std::size_t count = 97;  // odd count exercises any vector tail path
  const std::vector<double> x = abscissas(count);
  std::vector<double> mant(count);
  std::vector<std::int32_t> exp2(count);

  kn::scalar_batch().laguerre_scaled(50, 1.5, x.data(), count, mant.data(), exp2.data());
  for (std::size_t i = 0; i < count; ++i) {
    const sf::Scaled ref = sf::laguerre_scaled(50, 1.5, x[i]);
    CHECK(std::ldexp(mant[i], exp2[i]) == doctest::Approx(ref.value()).epsilon(1e-13));
  }

  kn::scalar_batch().hermite_scaled(37, x.data(), count, mant.data(), exp2.data());
  for (std::size_t i = 0; i < count; ++i) {
    const sf::ScaledComplex ref = sf::hermite_scaled(37, {x[i], 0.0});
    CHECK(std::ldexp(mant[i], exp2[i]) ==
          doctest::Approx(ref.value().real()).epsilon(1e-13));
  }
}

TEST_CASE("AVX2 batch matches the scalar batch where available") {
  const kn::Batch* simd = kn::avx2_batch();
  if (simd == nullptr) return;  // nothing to compare on this machine

  const std::size_t count = 101;
  const std::vector<double> x = abscissas(count);
  std::vector<double> ms(count), mv(count);
  std::vector<std::int32_t> es(count), ev(count);

  kn::scalar_batch().laguerre_scaled(200, 0.5, x.data(), count, ms.data(), es.data());
  simd->laguerre_scaled(200, 0.5, x.data(), count, mv.data(), ev.data());
  for (std::size_t i = 0; i < count; ++i) {
    if (ms[i] == 0.0 || mv[i] == 0.0) {
      CHECK(ms[i] == mv[i]);  // exact zeros must agree between paths
      continue;
    }
    const double a = combined_log(ms[i], es[i]);
    const double b = combined_log(mv[i], ev[i]);
    CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
    CHECK(std::signbit(ms[i]) == std::signbit(mv[i]));
  }

  kn::scalar_batch().hermite_scaled(123, x.data(), count, ms.data(), es.data());
  simd->hermite_scaled(123, x.data(), count, mv.data(), ev.data());
  for (std::size_t i = 0; i < count; ++i) {
    if (ms[i] == 0.0 || mv[i] == 0.0) {
      CHECK(ms[i] == mv[i]);  // odd degree at x = 0
      continue;
    }
    const double a = combined_log(ms[i], es[i]);
    const double b = combined_log(mv[i], ev[i]);
    CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
    CHECK(std::signbit(ms[i]) == std::signbit(mv[i]));
  }
}

TEST_CASE("renormalisation keeps high-degree evaluation finite") {
  // H_2000(1.5) overflows a double by hundreds of orders of magnitude
  const double x = 1.5;
  double mant = 0.0;
  std::int32_t exp2 = 0;
  kn::scalar_batch().hermite_scaled(2000, &x, 1, &mant, &exp2);
  CHECK(std::isfinite(mant));
  CHECK(std::abs(mant) >= kn::kScaleLo);
  CHECK(std::abs(mant) <= kn::kScaleHi);
  const double want = sf::hermite_scaled(2000, {x, 0.0}).log_abs();
  CHECK(std::abs(combined_log(mant, exp2) - want) <= 1e-10 * std::abs(want));
}

TEST_CASE("active dispatch honours the environment pin") {
  const char* force = std::getenv("PU_FORCE_SCALAR");
  const bool pinned = force != nullptr && std::strcmp(force, "1") == 0;
  const kn::Batch& a = kn::active();
  if (pinned) {
    CHECK(&a == &kn::scalar_batch());
  } else if (kn::avx2_batch() != nullptr) {
    CHECK(&a == kn::avx2_batch());
  } else {
    CHECK(&a == &kn::scalar_batch());
  }
  // whatever was chosen must evaluate correctly
  const double x = 0.9;
  double mant = 0.0;
  std::int32_t exp2 = 0;
  a.laguerre_scaled(12, 2.0, &x, 1, &mant, &exp2);
  const double want = sf::laguerre(12, 2.0, x);
  CHECK(std::ldexp(mant, exp2) == doctest::Approx(want).epsilon(1e-12));
}
