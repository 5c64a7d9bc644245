#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "pu/params.hpp"
#include "pu/specfun.hpp"
#include "pu/spectra.hpp"
#include "pu/wavefn.hpp"

using namespace pu;
namespace wf = pu::wavefn;
using QN = spectra::QuantumNumbers;
using std::complex;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("ground state value at the origin") {
  OscillatorParams p;
  const RealFrequencies f = real_frequencies(p);
  const double want = std::pow(p.m * p.m * f.omega1 * f.omega2 / (p.hbar * p.hbar), 0.25) /
                      std::sqrt(kPi);
  CHECK(std::abs(wf::coord_wavefunction({0, 0}, p, 0.0, 0.0) - want) <= 1e-14 * want);
}

TEST_CASE("coordinate eigenfunctions have definite parity") {
  OscillatorParams p;
  const double a = wf::coord_wavefunction({2, 3}, p, -0.7, -1.1);
  const double b = -wf::coord_wavefunction({2, 3}, p, 0.7, 1.1);
  CHECK(a == b);
}

TEST_CASE("continuum eigenfunction reduces to a Bessel profile") {
  const double k = 1.3, pr = 2.1;
  const complex<double> v = wf::degenerate_wavefunction(0, k, pr, 0.0);
  const double want = std::sqrt(k / (2.0 * kPi)) * specfun::bessel_j(0, k * pr);
  CHECK(v.imag() == 0.0);
  CHECK(std::abs(v.real() - want) <= 1e-13 * std::max(1.0, std::abs(want)));
  // on the positive P2 axis the angular label n = 2 contributes e^{i pi}
  const complex<double> w = wf::degenerate_wavefunction(2, k, 0.0, pr);
  CHECK(std::abs(std::abs(std::arg(w)) - kPi) <= 1e-12);
}

TEST_CASE("transition kernel carries the mixing coefficients") {
  const OscillatorParams p = params_from_epsilon(1.0, 1.0, 1.0, 0.3);
  const wf::KernelForm kf = wf::transition_kernel(p);
  const double g = std::sqrt(0.3);  // lambda * (w1^2 - w2^2) == eps at unit omega
  const double want_norm = std::sqrt(g * g / (2.0 * std::sqrt(2.0) * kPi));
  CHECK(std::abs(kf.norm - want_norm) <= 1e-13 * want_norm);
  CHECK(kf.delta_x1 < 0.0);
  CHECK(kf.delta_x2 > 0.0);
  CHECK(std::abs(kf.delta_p2 + g / std::sqrt(2.0)) <= 1e-13);
  // phase_x1/phase_x2 == b2/b1 == -delta_x2/delta_x1
  CHECK(std::abs(kf.phase_x1 / kf.phase_x2 - (-kf.delta_x2 / kf.delta_x1)) <= 1e-13);
}

TEST_CASE("closed form agrees with the quadrature at a spot") {
  const wf::ReducedParams rp;
  const double eps = 0.1;
  const complex<double> dom = wf::momentum_wavefunction_dominant(QN{2, 1}, rp, eps, 1.4, 0.8);
  const wf::LogComplex clo = wf::momentum_wavefunction_closed(QN{2, 1}, rp, eps, 1.4, 0.8);
  const complex<double> cv = clo.value();
  CHECK(std::abs(cv - dom) <= 1e-8 * std::abs(dom));
}

TEST_CASE("exact quadrature is stable under extra nodes") {
  const OscillatorParams p = params_from_epsilon(1.0, 1.0, 1.0, 0.1);
  const complex<double> a = wf::momentum_wavefunction_exact(QN{2, 1}, p, 0.9, -0.4, 22);
  const complex<double> b = wf::momentum_wavefunction_exact(QN{2, 1}, p, 0.9, -0.4, 30);
  CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
}

TEST_CASE("log-complex zero encodes as minus infinity") {
  const wf::ReducedParams rp;
  const wf::LogComplex z = wf::momentum_wavefunction_closed(QN{2, 1}, rp, 0.05, 0.0, 0.0);
  CHECK(std::isinf(z.log_abs));
  CHECK(z.log_abs < 0.0);
  CHECK(z.value() == complex<double>(0.0, 0.0));
}

TEST_CASE("limit scan is deterministic across repeated runs") {
  OscillatorParams base;
  const spectra::LimitSchedule sched = spectra::limit_schedule(0, 1.0, base, 2, 50);
  const wf::ReducedParams rp;
  const wf::ScanGrid grid{6.0, 50};
  const std::vector<wf::ConvergenceRow> a = wf::limit_scan(sched, rp, grid);
  const std::vector<wf::ConvergenceRow> b = wf::limit_scan(sched, rp, grid);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].sup_error == b[i].sup_error);
    CHECK(a[i].l2_error == b[i].l2_error);
    CHECK(a[i].norm_ratio == b[i].norm_ratio);
  }
}

TEST_CASE("continuum eigenfunction satisfies its differential equation") {
  OscillatorParams p;
  p.lambda = 0.25;
  const wf::PdeResidual res = wf::degenerate_pde_residual(1, 1.0, p);
  CHECK(res.rel_residual_h <= 1e-5);
  CHECK(res.rel_residual_h2 <= res.rel_residual_h);
}
