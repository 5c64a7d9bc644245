#include "pu/wavefn.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

#include "pu/classical.hpp"
#include "pu/kernels.hpp"
#include "pu/parallel.hpp"
#include "pu/specfun.hpp"

namespace pu::wavefn {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.6931471805599453094;
const double kSqrt2 = std::sqrt(2.0);
const double kInf = std::numeric_limits<double>::infinity();

using CLD = std::complex<long double>;

void check_labels(QuantumNumbers n) {
  if (n.n1 < 0 || n.n2 < 0) throw std::domain_error("quantum numbers must be nonnegative");
}

void check_reduced(const ReducedParams& rp) {
  if (!(rp.m > 0.0) || !(rp.omega > 0.0) || !(rp.hbar > 0.0))
    throw std::domain_error("reduced parameters must be positive");
}

void check_epsilon(double eps) {
  if (!(eps > 0.0) || !(eps < 1.0))
    throw std::domain_error("epsilon must lie strictly between 0 and 1");
}

// Mode data of the eps-family member: frequencies, the decoupling scale
// g = sqrt(lam (w1^2 - w2^2)) and the mode weights b1, b2.
struct Family {
  double w1, w2, g, b1, b2, B;
};

Family family_of(const OscillatorParams& p) {
  if (classify_regime(p) != Regime::RealDistinct)
    throw std::domain_error("momentum-representation forms require two distinct real frequencies");
  const RealFrequencies f = real_frequencies(p);
  const classical::BCoefficients b = classical::b_coefficients(p);
  Family out;
  out.w1 = f.omega1;
  out.w2 = f.omega2;
  out.g = std::sqrt(p.lambda * (f.omega1 * f.omega1 - f.omega2 * f.omega2));
  out.b1 = b.b1;
  out.b2 = b.b2;
  out.B = b.b1 * b.b1 + b.b2 * b.b2;
  return out;
}

CLD hermite_ld(int n, CLD z) {
  if (n == 0) return CLD(1.0L, 0.0L);
  CLD prev(1.0L, 0.0L);
  CLD cur = 2.0L * z;
  for (int k = 1; k < n; ++k) {
    const CLD next = 2.0L * z * cur - CLD(2.0L * k, 0.0L) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Quad-precision path for the shifted-Hermite quadrature: at labels near 40
// and large radial arguments the alternating sum cancels ~12 decimal digits,
// so long double terms leave only ~1e-6 of the result.  __float128 terms on
// Newton-refined nodes keep the full quadrature exactness in reach.
using Q = __float128;
struct CQ {
  Q re, im;
};
inline CQ operator+(CQ a, CQ b) { return {a.re + b.re, a.im + b.im}; }
inline CQ operator-(CQ a, CQ b) { return {a.re - b.re, a.im - b.im}; }
inline CQ operator*(CQ a, CQ b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline CQ operator*(Q s, CQ a) { return {s * a.re, s * a.im}; }

Q hermite_q_real(int n, Q x) {
  Q prev = 1;
  if (n == 0) return prev;
  Q cur = 2 * x;
  for (int k = 1; k < n; ++k) {
    const Q next = 2 * x * cur - Q(2 * k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

CQ hermite_q(int n, CQ z) {
  CQ prev{1, 0};
  if (n == 0) return prev;
  CQ cur = Q(2) * z;
  for (int k = 1; k < n; ++k) {
    const CQ next = Q(2) * (z * cur) - Q(2 * k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

struct QuadRuleQ {
  std::vector<Q> nodes, weights;
};

// Nodes lifted from the long-double rule by Newton steps on H_count; weights
// from w_j = sqrt(pi) 2^{count-1} count! / (count^2 H_{count-1}(x_j)^2).
const QuadRuleQ& gauss_hermite_q(int count) {
  static std::mutex mu;
  static std::map<int, QuadRuleQ> cache;
  const std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(count);
  if (it == cache.end()) {
    const specfun::GaussHermiteRuleLD& ld = specfun::gauss_hermite_ld(count);
    QuadRuleQ rule;
    rule.nodes.resize(count);
    rule.weights.resize(count);
    Q fact = 1;
    for (int k = 2; k <= count; ++k) fact *= Q(k);
    const Q wnum = sqrtq(M_PIq) * ldexpq(fact, count - 1) / (Q(count) * Q(count));
    for (int j = 0; j < count; ++j) {
      Q x = Q(ld.nodes[j]);
      for (int step = 0; step < 3; ++step)
        x -= hermite_q_real(count, x) / (Q(2 * count) * hermite_q_real(count - 1, x));
      const Q hm = hermite_q_real(count - 1, x);
      rule.nodes[j] = x;
      rule.weights[j] = wnum / (hm * hm);
    }
    it = cache.emplace(count, std::move(rule)).first;
  }
  return it->second;
}

// Combines a log-scale prefactor and phase with a long double accumulator.
std::complex<double> assemble(double log_pref, double phase, CLD acc) {
  const long double mag = hypotl(acc.real(), acc.imag());
  if (mag == 0.0L) return {0.0, 0.0};
  const double logmag = log_pref + double(logl(mag));
  const double ph = phase + double(atan2l(acc.imag(), acc.real()));
  return std::polar(std::exp(logmag), ph);
}

}  // namespace

double coord_wavefunction(QuantumNumbers n, const OscillatorParams& p, double x1, double x2,
                          bool literal_second_argument) {
  check_labels(n);
  const RealFrequencies f = real_frequencies(p);
  const double a1 = std::sqrt(p.m * f.omega1 / p.hbar);
  const double a2 =
      std::sqrt(p.m * (literal_second_argument ? f.omega1 : f.omega2) / p.hbar);
  const specfun::ScaledComplex h1 = specfun::hermite_scaled(n.n1, a1 * x1);
  const specfun::ScaledComplex h2 = specfun::hermite_scaled(n.n2, a2 * x2);
  const double sign = (h1.mant.real() < 0.0) == (h2.mant.real() < 0.0) ? 1.0 : -1.0;
  const double logmag = specfun::log_hermite_norm(n.n1) + specfun::log_hermite_norm(n.n2) +
                        0.25 * std::log(p.m * p.m * f.omega1 * f.omega2 / (p.hbar * p.hbar)) +
                        h1.log_abs() + h2.log_abs() -
                        0.5 * p.m * (f.omega1 * x1 * x1 + f.omega2 * x2 * x2) / p.hbar;
  return sign * std::exp(logmag);
}

std::complex<double> degenerate_wavefunction(int n, double k, double P1, double P2) {
  if (!(k > 0.0)) throw std::domain_error("degenerate_wavefunction: k must be positive");
  const double P = std::hypot(P1, P2);
  const double theta = std::atan2(P2, P1);
  const double radial = std::sqrt(k / (2.0 * kPi)) * specfun::bessel_j(n, k * P);
  return std::polar(1.0, n * theta) * radial;
}

KernelForm transition_kernel(const OscillatorParams& p) {
  const Family f = family_of(p);
  KernelForm kf;
  kf.norm = std::sqrt(p.m * f.g * f.g / (2.0 * kSqrt2 * kPi * p.hbar * p.omega));
  kf.delta_x1 = -f.b1;
  kf.delta_x2 = f.b2;
  kf.delta_p2 = -f.g / (kSqrt2 * p.omega);
  kf.phase_x1 = p.m * f.g * f.b2 / (p.hbar * f.B);
  kf.phase_x2 = p.m * f.g * f.b1 / (p.hbar * f.B);
  return kf;
}

std::complex<double> momentum_wavefunction_exact(QuantumNumbers n, const OscillatorParams& p,
                                                 double P1, double P2, int quad_points) {
  check_labels(n);
  const Family f = family_of(p);
  const double m = p.m, hb = p.hbar, w = p.omega;
  const double B2 = f.B * f.B;
  const double W = f.w1 * f.b2 * f.b2 + f.w2 * f.b1 * f.b1;
  const double V = f.w1 * f.b1 * f.b1 + f.w2 * f.b2 * f.b2;
  const double A = W / B2;
  const double s = f.g * P2 / (kSqrt2 * w);
  const std::complex<double> L(f.b1 * f.b2 * (f.w2 - f.w1) * s / B2, f.g * P1 / f.B);
  const double a1 = std::sqrt(m * f.w1 / hb);
  const double a2 = std::sqrt(m * f.w2 / hb);
  const double scale = std::sqrt(2.0 * hb / (m * A));

  const int count = quad_points > 0 ? quad_points : (n.n1 + n.n2) / 2 + 12;
  const specfun::GaussHermiteRuleLD& rule = specfun::gauss_hermite_ld(count);
  const CLD shift(L.real() / A, L.imag() / A);
  const long double c1 = (long double)(a1 / f.B);
  const long double c2 = (long double)(a2 / f.B);
  CLD acc(0.0L, 0.0L);
  for (int j = 0; j < count; ++j) {
    const CLD wv = CLD(rule.nodes[j] * (long double)scale, 0.0L) - shift;
    const CLD z1 = c1 * ((long double)f.b2 * wv - CLD((long double)(f.b1 * s), 0.0L));
    const CLD z2 = c2 * ((long double)f.b1 * wv + CLD((long double)(f.b2 * s), 0.0L));
    acc += rule.weights[j] * hermite_ld(n.n1, z1) * hermite_ld(n.n2, z2);
  }

  const double log_pref = 0.5 * std::log(m * f.g * f.g / (2.0 * kSqrt2 * kPi * hb * w)) +
                          specfun::log_hermite_norm(n.n1) + specfun::log_hermite_norm(n.n2) +
                          0.25 * std::log(m * m * f.w1 * f.w2 / (hb * hb)) + std::log(scale) -
                          std::log(f.B);
  const std::complex<double> expterm =
      (m / (2.0 * hb)) * (L * L / A - std::complex<double>(s * s * V / B2, 0.0));
  return assemble(log_pref + expterm.real(), expterm.imag(), acc);
}

std::complex<double> momentum_wavefunction_dominant(QuantumNumbers n, const ReducedParams& rp,
                                                    double epsilon, double P1, double P2,
                                                    int quad_points) {
  check_labels(n);
  check_reduced(rp);
  check_epsilon(epsilon);
  const double c = std::sqrt(epsilon / (2.0 * kSqrt2 * rp.m * rp.hbar * rp.omega));
  const CQ sh1{Q(c * P2), Q(c * P1)};   // c (P2 + i P1)
  const CQ sh2{-Q(c * P2), Q(c * P1)};  // c (i P1 - P2)
  const int count = quad_points > 0 ? quad_points : (n.n1 + n.n2) / 2 + 8;
  const QuadRuleQ& rule = gauss_hermite_q(count);
  CQ qacc{0, 0};
  for (int j = 0; j < count; ++j) {
    const CQ y{rule.nodes[j], 0};
    qacc = qacc + rule.weights[j] * (hermite_q(n.n1, y - sh1) * hermite_q(n.n2, y - sh2));
  }
  const CLD acc((long double)qacc.re, (long double)qacc.im);
  const double log_pref = specfun::log_hermite_norm(n.n1) + specfun::log_hermite_norm(n.n2) +
                          0.5 * std::log(epsilon) - 0.5 * std::log(kPi) -
                          0.5 * std::log(kSqrt2 * rp.m * rp.hbar * rp.omega);
  return assemble(log_pref, 0.0, acc);
}

std::complex<double> LogComplex::value() const {
  if (std::isinf(log_abs) && log_abs < 0.0) return {0.0, 0.0};
  return std::polar(std::exp(log_abs), phase);
}

LogComplex momentum_wavefunction_closed(QuantumNumbers n, const ReducedParams& rp,
                                        double epsilon, double P1, double P2) {
  check_labels(n);
  check_reduced(rp);
  check_epsilon(epsilon);
  const int lo = std::min(n.n1, n.n2);
  const int hi = std::max(n.n1, n.n2);
  const int a = hi - lo;
  const double psq = P1 * P1 + P2 * P2;
  const double pr = std::sqrt(psq);
  LogComplex out;
  if (pr == 0.0 && a != 0) {
    out.log_abs = -kInf;
    return out;
  }
  const double x = epsilon * psq / (kSqrt2 * rp.m * rp.omega * rp.hbar);
  const double c = std::sqrt(epsilon / (2.0 * kSqrt2 * rp.m * rp.hbar * rp.omega));
  const specfun::Scaled lag = specfun::laguerre_scaled(lo, double(a), x);
  if (lag.mant == 0.0) {
    out.log_abs = -kInf;
    return out;
  }
  out.log_abs = specfun::log_hermite_norm(n.n1) + specfun::log_hermite_norm(n.n2) +
                0.5 * std::log(epsilon) - 0.5 * std::log(kSqrt2 * rp.m * rp.hbar * rp.omega) +
                hi * kLn2 + specfun::log_factorial(lo) + lag.log_abs();
  if (a > 0) out.log_abs += a * (std::log(c) + std::log(pr));
  const double theta = std::atan2(P2, P1);
  double phase = lag.mant < 0.0 ? kPi : 0.0;
  if (n.n2 >= n.n1) {
    phase += a * (theta - 0.5 * kPi);
  } else {
    // Reflected labels: (-1)^a (P2 + i P1)^a in place of (P2 - i P1)^a.
    phase += a * (0.5 * kPi - theta) + a * kPi;
  }
  out.phase = phase;
  return out;
}

std::vector<ConvergenceRow> limit_scan(const spectra::LimitSchedule& sched,
                                       const ReducedParams& rp, const ScanGrid& grid) {
  check_reduced(rp);
  if (sched.n < 0) throw std::domain_error("limit_scan: schedule n must be nonnegative");
  if (!(grid.pmax > 0.0) || grid.points < 8)
    throw std::domain_error("limit_scan: need pmax > 0 and at least 8 grid points");
  const int g = grid.points;
  std::vector<double> pg(g), target(g);
  double tmax = 0.0, tnorm2 = 0.0;
  for (int i = 0; i < g; ++i) {
    pg[i] = grid.pmax * double(i + 1) / double(g);
    target[i] = std::fabs(std::sqrt(sched.k / (2.0 * kPi)) *
                          specfun::bessel_j(sched.n, sched.k * pg[i]));
    tmax = std::max(tmax, target[i]);
    tnorm2 += target[i] * target[i];
  }
  const double tnorm = std::sqrt(tnorm2);

  std::vector<ConvergenceRow> rows(sched.steps.size());
  parallel_for_index(sched.steps.size(), [&](std::size_t r) {
    const spectra::ScheduleStep& step = sched.steps[r];
    const int n1 = step.n1, n2 = step.n2, nn = sched.n;
    const double eps = step.epsilon;
    const double c = std::sqrt(eps / (2.0 * kSqrt2 * rp.m * rp.hbar * rp.omega));
    double log_pref = specfun::log_hermite_norm(n1) + specfun::log_hermite_norm(n2) +
                      0.5 * std::log(eps) - 0.5 * std::log(kSqrt2 * rp.m * rp.hbar * rp.omega) +
                      n2 * kLn2 + specfun::log_factorial(n1) + nn * std::log(c);
    std::vector<double> xs(g), mant(g), logf(g);
    std::vector<std::int32_t> e2(g);
    for (int i = 0; i < g; ++i)
      xs[i] = eps * pg[i] * pg[i] / (kSqrt2 * rp.m * rp.omega * rp.hbar);
    kernels::active().laguerre_scaled(n1, double(nn), xs.data(), g, mant.data(), e2.data());
    double shift = -kInf;
    for (int i = 0; i < g; ++i) {
      if (mant[i] == 0.0) {
        logf[i] = -kInf;
        continue;
      }
      logf[i] = log_pref + nn * std::log(pg[i]) + std::log(std::fabs(mant[i])) +
                double(e2[i]) * kLn2;
      shift = std::max(shift, logf[i]);
    }
    std::vector<double> f(g, 0.0);
    double fnorm2 = 0.0;
    for (int i = 0; i < g; ++i) {
      f[i] = std::isinf(logf[i]) ? 0.0 : std::exp(logf[i] - shift);
      fnorm2 += f[i] * f[i];
    }
    const double fnorm = std::sqrt(fnorm2);
    double sup = 0.0, l22 = 0.0;
    for (int i = 0; i < g; ++i) {
      const double diff = f[i] / fnorm - target[i] / tnorm;
      sup = std::max(sup, std::fabs(diff));
      l22 += diff * diff;
    }
    ConvergenceRow row;
    row.n1 = n1;
    row.n2 = n2;
    row.epsilon = eps;
    row.sup_error = sup / (tmax / tnorm);
    row.l2_error = std::sqrt(l22);
    row.norm_ratio = std::exp(shift) * fnorm / tnorm;
    rows[r] = row;
  });
  return rows;
}

PdeResidual degenerate_pde_residual(int n, double k, const OscillatorParams& p,
                                    int radial_samples, int angular_samples, double h) {
  validate(p);
  if (!(k > 0.0)) throw std::domain_error("degenerate_pde_residual: k must be positive");
  if (radial_samples < 2 || angular_samples < 1 || !(h > 0.0))
    throw std::domain_error("degenerate_pde_residual: bad grid");
  const double e = spectra::energy_degenerate(n, k, p);
  const double w = p.omega, m = p.m, hb = p.hbar;
  const std::complex<double> iunit(0.0, 1.0);
  const double pref = std::sqrt(k / (2.0 * kPi));

  auto psi = [&](double pp, double th) {
    return pref * specfun::bessel_j(n, k * pp) * std::polar(1.0, n * th);
  };
  auto residual_at = [&](double pp, double th, double hh) {
    const std::complex<double> c0 = psi(pp, th);
    const std::complex<double> tp = psi(pp, th + hh), tm = psi(pp, th - hh);
    const std::complex<double> rp2 = psi(pp + hh, th), rm = psi(pp - hh, th);
    const std::complex<double> dth = (tp - tm) / (2.0 * hh);
    const std::complex<double> d2th = (tp - 2.0 * c0 + tm) / (hh * hh);
    const std::complex<double> dp = (rp2 - rm) / (2.0 * hh);
    const std::complex<double> d2p = (rp2 - 2.0 * c0 + rm) / (hh * hh);
    const std::complex<double> hpsi =
        -iunit * kSqrt2 * w * hb * dth +
        0.5 * m * w * w * hb * hb * (d2p + dp / pp + d2th / (pp * pp));
    return std::abs(hpsi - e * c0);
  };

  // Radial window kP in [1, 8], safely away from the coordinate singularity.
  double maxpsi = 0.0;
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < radial_samples; ++i) {
    const double pp = (1.0 + 7.0 * double(i) / double(radial_samples - 1)) / k;
    for (int j = 0; j < angular_samples; ++j) {
      const double th = 2.0 * kPi * double(j) / double(angular_samples);
      pts.emplace_back(pp, th);
      maxpsi = std::max(maxpsi, std::abs(psi(pp, th)));
    }
  }
  const double denom = (std::fabs(e) + w * hb) * maxpsi;
  PdeResidual out;
  for (const auto& [pp, th] : pts) {
    out.rel_residual_h = std::max(out.rel_residual_h, residual_at(pp, th, h) / denom);
    out.rel_residual_h2 = std::max(out.rel_residual_h2, residual_at(pp, th, 0.5 * h) / denom);
  }
  out.richardson_ratio =
      out.rel_residual_h2 > 0.0 ? out.rel_residual_h / out.rel_residual_h2 : 0.0;
  return out;
}

}  // namespace pu::wavefn
