#include "pu/specfun.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "pu/kernels.hpp"

namespace pu::specfun {

namespace {
constexpr double kLn2 = 0.6931471805599453094;
constexpr double kPi = 3.14159265358979323846;
constexpr long double kPiL = 3.141592653589793238462643383279502884L;
}  // namespace

double Scaled::value() const { return std::ldexp(mant, exp2); }

double Scaled::log_abs() const {
  if (mant == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(std::fabs(mant)) + double(exp2) * kLn2;
}

std::complex<double> ScaledComplex::value() const {
  return {std::ldexp(mant.real(), exp2), std::ldexp(mant.imag(), exp2)};
}

double ScaledComplex::log_abs() const {
  const double a = std::abs(mant);
  if (a == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(a) + double(exp2) * kLn2;
}

std::complex<double> hermite(int n, std::complex<double> z) {
  if (n < 0) throw std::domain_error("hermite: degree must be nonnegative");
  return hermite_scaled(n, z).value();
}

ScaledComplex hermite_scaled(int n, std::complex<double> z) {
  if (n < 0) throw std::domain_error("hermite: degree must be nonnegative");
  ScaledComplex out;
  if (n == 0) {
    out.mant = 1.0;
    return out;
  }
  std::complex<double> prev = 1.0;
  std::complex<double> cur = 2.0 * z;
  std::int32_t e = 0;
  for (int k = 1; k < n; ++k) {
    const std::complex<double> next = 2.0 * z * cur - 2.0 * double(k) * prev;
    prev = cur;
    cur = next;
    const double a = std::max(std::fabs(cur.real()), std::fabs(cur.imag()));
    if (a > kernels::kScaleHi) {
      cur *= kernels::kScaleLo;
      prev *= kernels::kScaleLo;
      e += kernels::kScaleShift;
    } else if (a < kernels::kScaleLo && a > 0.0) {
      cur *= kernels::kScaleHi;
      prev *= kernels::kScaleHi;
      e -= kernels::kScaleShift;
    }
  }
  out.mant = cur;
  out.exp2 = e;
  return out;
}

double laguerre(long long m, double alpha, double x) {
  return laguerre_scaled(m, alpha, x).value();
}

Scaled laguerre_scaled(long long m, double alpha, double x) {
  if (m < 0) throw std::domain_error("laguerre: degree must be nonnegative");
  Scaled out;
  kernels::scalar_batch().laguerre_scaled(m, alpha, &x, 1, &out.mant, &out.exp2);
  return out;
}

namespace {

double bessel_series(int n, double x) {
  // Ascending series, safe from cancellation for x <= 2.
  const double q = 0.25 * x * x;
  double term = std::exp(n * std::log(0.5 * x) - std::lgamma(double(n) + 1.0));
  double acc = term;
  for (int k = 0; k < 64; ++k) {
    term *= -q / (double(k + 1) * double(n + k + 1));
    acc += term;
    if (std::fabs(term) < 1e-20 * std::fabs(acc) + 1e-300) break;
  }
  return acc;
}

double bessel_miller(int n, double x) {
  // Backward recurrence from a start order comfortably above the Airy
  // transition region, normalised by J_0 + 2 sum_{k>=1} J_{2k} = 1.
  const double mx = std::max(double(n), x);
  int m = n + 16 + int(12.0 * std::cbrt(mx + 1.0));
  if (int(x) + 16 > m) m = int(x) + 16 + int(12.0 * std::cbrt(mx + 1.0));
  if (m % 2 == 1) ++m;
  double next = 0.0;
  double cur = 1e-30;
  double res = (n == m) ? cur : 0.0;
  double sum = 2.0 * cur;  // m is even
  for (int j = m; j >= 1; --j) {
    double prev = (2.0 * j / x) * cur - next;
    next = cur;
    cur = prev;
    if (std::fabs(cur) > 1e250) {
      cur *= 1e-250;
      next *= 1e-250;
      sum *= 1e-250;
      res *= 1e-250;
    }
    const int jj = j - 1;
    if (jj == n) res = cur;
    if (jj > 0 && (jj & 1) == 0) sum += 2.0 * cur;
  }
  sum += cur;  // J_0
  return res / sum;
}

}  // namespace

double bessel_j(int n, double x) {
  if (!std::isfinite(x)) throw std::domain_error("bessel_j: argument must be finite");
  double sign = 1.0;
  if (n < 0) {
    n = -n;
    if (n & 1) sign = -sign;
  }
  if (x < 0.0) {
    x = -x;
    if (n & 1) sign = -sign;
  }
  if (x == 0.0) return n == 0 ? sign : 0.0;
  if (x <= 2.0) return sign * bessel_series(n, x);
  return sign * bessel_miller(n, x);
}

GaussHermiteRule gauss_hermite(int count) {
  if (count < 1) throw std::domain_error("gauss_hermite: need at least one node");
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(count, count);
  for (int j = 1; j < count; ++j) {
    const double b = std::sqrt(0.5 * j);
    jac(j, j - 1) = b;
    jac(j - 1, j) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
  GaussHermiteRule rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  const double w0 = std::sqrt(kPi);
  for (int j = 0; j < count; ++j) {
    rule.nodes[j] = es.eigenvalues()(j);
    const double v = es.eigenvectors()(0, j);
    rule.weights[j] = w0 * v * v;
  }
  // Enforce the exact +- symmetry of the rule.
  for (int j = 0; j < count / 2; ++j) {
    const int k = count - 1 - j;
    const double node = 0.5 * (rule.nodes[k] - rule.nodes[j]);
    const double weight = 0.5 * (rule.weights[k] + rule.weights[j]);
    rule.nodes[k] = node;
    rule.nodes[j] = -node;
    rule.weights[k] = rule.weights[j] = weight;
  }
  if (count % 2 == 1) rule.nodes[count / 2] = 0.0;
  return rule;
}

namespace {

// H_K and H_{K-1} at x in long double.
void hermite_pair_ld(int deg, long double x, long double& hk, long double& hkm1) {
  long double prev = 1.0L;
  long double cur = 2.0L * x;
  if (deg == 0) {
    hk = 1.0L;
    hkm1 = 0.0L;
    return;
  }
  for (int k = 1; k < deg; ++k) {
    const long double next = 2.0L * x * cur - 2.0L * k * prev;
    prev = cur;
    cur = next;
  }
  hk = cur;
  hkm1 = prev;
}

}  // namespace

const GaussHermiteRuleLD& gauss_hermite_ld(int count) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussHermiteRuleLD>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(count);
  if (it != cache.end()) return *it->second;

  const GaussHermiteRule seed = gauss_hermite(count);
  auto rule = std::make_unique<GaussHermiteRuleLD>();
  rule->nodes.resize(count);
  rule->weights.resize(count);
  const long double lw0 = 0.5L * logl(kPiL) + (count - 1) * logl(2.0L) +
                          lgammal((long double)count + 1.0L) - 2.0L * logl((long double)count);
  for (int j = 0; j < count; ++j) {
    long double x = seed.nodes[j];
    long double hk = 0.0L, hkm1 = 0.0L;
    for (int iter = 0; iter < 4; ++iter) {
      hermite_pair_ld(count, x, hk, hkm1);
      const long double deriv = 2.0L * count * hkm1;
      if (deriv == 0.0L) break;
      x -= hk / deriv;
    }
    hermite_pair_ld(count, x, hk, hkm1);
    rule->nodes[j] = x;
    rule->weights[j] = expl(lw0 - 2.0L * logl(fabsl(hkm1)));
  }
  for (int j = 0; j < count / 2; ++j) {
    const int k = count - 1 - j;
    const long double node = 0.5L * (rule->nodes[k] - rule->nodes[j]);
    const long double weight = 0.5L * (rule->weights[k] + rule->weights[j]);
    rule->nodes[k] = node;
    rule->nodes[j] = -node;
    rule->weights[k] = rule->weights[j] = weight;
  }
  if (count % 2 == 1) rule->nodes[count / 2] = 0.0L;

  const auto& ref = *rule;
  cache.emplace(count, std::move(rule));
  return ref;
}

double log_factorial(long long n) {
  if (n < 0) throw std::domain_error("log_factorial: negative argument");
  static const double exact[] = {
      1.0,
      1.0,
      2.0,
      6.0,
      24.0,
      120.0,
      720.0,
      5040.0,
      40320.0,
      362880.0,
      3628800.0,
      39916800.0,
      479001600.0,
      6227020800.0,
      87178291200.0,
      1307674368000.0,
      20922789888000.0,
      355687428096000.0,
      6402373705728000.0,
      121645100408832000.0,
      2432902008176640000.0,
  };
  if (n <= 20) return std::log(exact[n]);
  return std::lgamma(double(n) + 1.0);
}

double log_hermite_norm(int n) {
  if (n < 0) throw std::domain_error("log_hermite_norm: negative degree");
  return -0.5 * (n * kLn2 + log_factorial(n) + 0.5 * std::log(kPi));
}

}  // namespace pu::specfun
