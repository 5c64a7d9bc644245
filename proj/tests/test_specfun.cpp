#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "pu/specfun.hpp"

namespace sf = pu::specfun;
using std::complex;

namespace {

// finite-sum definition, independent of the recurrence under test
double hermite_sum(int n, double x) {
  double total = 0.0;
  double nfac = 1.0;
  for (int i = 2; i <= n; ++i) nfac *= i;
  for (int j = 0; 2 * j <= n; ++j) {
    double jfac = 1.0;
    for (int i = 2; i <= j; ++i) jfac *= i;
    double kfac = 1.0;
    for (int i = 2; i <= n - 2 * j; ++i) kfac *= i;
    total += (j % 2 ? -1.0 : 1.0) * std::pow(2.0 * x, n - 2 * j) / (jfac * kfac);
  }
  return nfac * total;
}

// sum over binom(m + alpha, m - j) (-x)^j / j!
double laguerre_sum(int m, double alpha, double x) {
  double total = 0.0;
  for (int j = 0; j <= m; ++j) {
    double binom = 1.0;
    for (int i = 1; i <= m - j; ++i) binom *= (alpha + j + i) / i;
    double jfac = 1.0;
    for (int i = 2; i <= j; ++i) jfac *= i;
    total += (j % 2 ? -1.0 : 1.0) * binom * std::pow(x, j) / jfac;
  }
  return total;
}

double bessel_series(int n, double x) {
  double total = 0.0;
  for (int k = 0; k < 30; ++k) {
    double kfac = 1.0;
    for (int i = 2; i <= k; ++i) kfac *= i;
    double knfac = 1.0;
    for (int i = 2; i <= k + n; ++i) knfac *= i;
    total += (k % 2 ? -1.0 : 1.0) * std::pow(x / 2.0, 2 * k + n) / (kfac * knfac);
  }
  return total;
}

}  // namespace

TEST_CASE("hermite matches the finite-sum definition") {
  for (int n = 0; n <= 10; ++n)
    for (double x : {-1.3, 0.2, 2.7}) {
      const double want = hermite_sum(n, x);
      const double got = sf::hermite(n, complex<double>(x, 0.0)).real();
      CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("hermite at a complex argument satisfies the recurrence-free sum") {
  // H_3(z) = 8 z^3 - 12 z
  const complex<double> z(0.7, 0.3);
  const complex<double> want = 8.0 * z * z * z - 12.0 * z;
  const complex<double> got = sf::hermite(3, z);
  CHECK(std::abs(got - want) <= 1e-14 * std::abs(want));
}

TEST_CASE("hermite_scaled reproduces hermite in the representable range") {
  for (int n : {5, 18, 30})
    for (double x : {-2.0, 0.4, 3.0}) {
      const complex<double> plain = sf::hermite(n, complex<double>(x, 0.0));
      const sf::ScaledComplex sc = sf::hermite_scaled(n, complex<double>(x, 0.0));
      CHECK(std::abs(sc.value() - plain) <= 1e-12 * std::abs(plain));
      CHECK(std::abs(sc.log_abs() - std::log(std::abs(plain))) <= 1e-12 *
                std::max(1.0, std::abs(std::log(std::abs(plain)))));
    }
}

TEST_CASE("laguerre matches the finite-sum definition") {
  for (int m = 0; m <= 8; ++m)
    for (double alpha : {0.0, 1.0, 2.5})
      for (double x : {0.3, 1.7, 6.0}) {
        const double want = laguerre_sum(m, alpha, x);
        CHECK(std::abs(sf::laguerre(m, alpha, x) - want) <=
              1e-11 * std::max(1.0, std::abs(want)));
      }
}

TEST_CASE("laguerre_scaled agrees with laguerre and satisfies the recurrence at high degree") {
  for (int m : {0, 1, 7, 40})
    for (double x : {0.5, 4.0}) {
      const double want = sf::laguerre(m, 1.5, x);
      CHECK(std::abs(sf::laguerre_scaled(m, 1.5, x).value() - want) <=
            1e-13 * std::max(1.0, std::abs(want)));
    }
  // (j+1) L_{j+1} = (2j+1+alpha-x) L_j - (j+alpha) L_{j-1} at j = 499
  const double alpha = 0.0, x = 1.0;
  const double l500 = sf::laguerre_scaled(500, alpha, x).value();
  const double l499 = sf::laguerre_scaled(499, alpha, x).value();
  const double l498 = sf::laguerre_scaled(498, alpha, x).value();
  const double lhs = 500.0 * l500;
  const double rhs = (2.0 * 499 + 1 + alpha - x) * l499 - (499 + alpha) * l498;
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  CHECK(std::abs(lhs - rhs) / scale <= 1e-10);
}

TEST_CASE("bessel_j satisfies the three-term recurrence and the sum rule") {
  const double x = 2.5;
  for (int n = 1; n <= 10; ++n) {
    const double lhs = sf::bessel_j(n - 1, x) + sf::bessel_j(n + 1, x);
    const double rhs = 2.0 * n / x * sf::bessel_j(n, x);
    CHECK(std::abs(lhs - rhs) <= 1e-12);
  }
  double total = sf::bessel_j(0, 10.0) * sf::bessel_j(0, 10.0);
  for (int n = 1; n <= 60; ++n) total += 2.0 * sf::bessel_j(n, 10.0) * sf::bessel_j(n, 10.0);
  CHECK(std::abs(total - 1.0) <= 1e-12);
  for (int n : {1, 2, 5})
    CHECK(sf::bessel_j(-n, 3.1) == (n % 2 ? -1.0 : 1.0) * sf::bessel_j(n, 3.1));
}

TEST_CASE("bessel_j matches the ascending series at small order") {
  CHECK(std::abs(sf::bessel_j(3, 1.7) - bessel_series(3, 1.7)) <= 1e-14);
  CHECK(std::abs(sf::bessel_j(0, 0.4) - bessel_series(0, 0.4)) <= 1e-15);
}

TEST_CASE("gauss_hermite integrates a degree-30 monomial exactly") {
  const sf::GaussHermiteRule rule = sf::gauss_hermite(16);
  double got = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    got += rule.weights[i] * std::pow(rule.nodes[i], 30);
  const double want = std::tgamma(15.5);
  CHECK(std::abs(got - want) <= 1e-11 * want);
}

TEST_CASE("refined rule reproduces Hermite orthonormality up to degree 40") {
  // degree-80 products sit past the double Golub-Welsch rule's useful range;
  // this is the regime the Newton-refined long-double rule exists for
  const int kq = 48, nmax = 40;
  const sf::GaussHermiteRuleLD& rule = sf::gauss_hermite_ld(kq);
  std::vector<std::vector<long double>> phi(nmax + 1, std::vector<long double>(kq));
  for (int n = 0; n <= nmax; ++n)
    for (int i = 0; i < kq; ++i) {
      const sf::ScaledComplex h =
          sf::hermite_scaled(n, complex<double>(double(rule.nodes[i]), 0.0));
      const long double sign = h.mant.real() < 0 ? -1.0L : 1.0L;
      phi[n][i] = sign * std::exp((long double)(h.log_abs() + sf::log_hermite_norm(n))) *
                  std::sqrt(rule.weights[i]);
    }
  double worst = 0.0;
  for (int n = 0; n <= nmax; ++n)
    for (int m = 0; m <= nmax; ++m) {
      long double dot = 0.0L;
      for (int i = 0; i < kq; ++i) dot += phi[n][i] * phi[m][i];
      worst = std::max(worst, std::abs(double(dot) - (n == m ? 1.0 : 0.0)));
    }
  CHECK(worst <= 1e-10);
}

TEST_CASE("long-double rule sums its weights to sqrt(pi)") {
  const sf::GaussHermiteRuleLD& rule = sf::gauss_hermite_ld(32);
  long double total = 0.0L;
  for (long double w : rule.weights) total += w;
  const long double want = std::sqrt(3.14159265358979323846264338327950288L);
  CHECK(std::abs(double(total - want)) <= 1e-17);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    CHECK(rule.nodes[i] == -rule.nodes[rule.nodes.size() - 1 - i]);
}

TEST_CASE("log_factorial is exact at small n and Stirling-bounded at large n") {
  CHECK(sf::log_factorial(0) == 0.0);
  CHECK(std::abs(sf::log_factorial(5) - std::log(120.0)) <= 1e-15);
  for (long long n : {5LL, 10LL, 100LL, 1000LL}) {
    const double base = n * std::log(double(n)) - n +
                        0.5 * std::log(2.0 * 3.14159265358979323846 * n);
    const double diff = sf::log_factorial(n) - base;
    CHECK(diff > 0.0);
    CHECK(diff <= 1.0 / (12.0 * n));
  }
}

TEST_CASE("log_hermite_norm matches its definition") {
  // ln N_n with N_n = (2^n n! sqrt(pi))^{-1/2}
  const double want = -0.5 * (10.0 * std::log(2.0) + sf::log_factorial(10) +
                              0.5 * std::log(3.14159265358979323846));
  CHECK(std::abs(sf::log_hermite_norm(10) - want) <= 1e-14 * std::abs(want));
}

TEST_CASE("scaled Laguerre approaches the Bessel limit at degree ten thousand") {
  const int m = 10000;
  const double alpha = 2.0, x = 2.3;
  const sf::Scaled lag = sf::laguerre_scaled(m, alpha, x / m);
  const double sign = lag.mant < 0 ? -1.0 : 1.0;
  const double got = sign * std::exp(lag.log_abs() + 0.5 * alpha * std::log(x) -
                                     alpha * std::log(double(m)));
  const double want = sf::bessel_j(2, 2.0 * std::sqrt(x));
  CHECK(std::abs(got - want) <= 1e-3 * std::abs(want));
}
