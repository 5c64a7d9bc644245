#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "pu/classical.hpp"
#include "pu/params.hpp"

using namespace pu;
namespace cl = pu::classical;

TEST_CASE("regime classification over the coupling axis") {
  OscillatorParams p;
  p.lambda = -1.0;
  CHECK(classify_regime(p) == Regime::MixedRealImaginary);
  p.lambda = 0.15;
  CHECK(classify_regime(p) == Regime::RealDistinct);
  p.lambda = 0.25;
  CHECK(classify_regime(p) == Regime::Degenerate);
  p.lambda = 1.0;
  CHECK(classify_regime(p) == Regime::ComplexPair);
}

TEST_CASE("validate rejects non-physical parameters") {
  OscillatorParams p;
  p.lambda = 0.0;
  CHECK_THROWS_AS(validate(p), std::domain_error);
  p = OscillatorParams{};
  p.m = -1.0;
  CHECK_THROWS_AS(validate(p), std::domain_error);
  p = OscillatorParams{};
  p.hbar = 0.0;
  CHECK_THROWS_AS(validate(p), std::domain_error);
}

TEST_CASE("mixed regime has one real and one imaginary frequency") {
  OscillatorParams p;
  p.lambda = -1.0;
  const FrequencyPair f = frequencies(p);
  CHECK_FALSE(f.both_real(0.0));
  // squared roots are (1 -+ sqrt(5)) / (-2)
  const double golden_minus = (1.0 - std::sqrt(5.0)) / (-2.0);
  const double golden_plus = (1.0 + std::sqrt(5.0)) / (-2.0);
  const std::complex<double> w1s = f.omega1 * f.omega1;
  const std::complex<double> w2s = f.omega2 * f.omega2;
  CHECK(std::abs(w1s - std::complex<double>(golden_plus, 0.0)) <= 1e-12);
  CHECK(std::abs(w2s - std::complex<double>(golden_minus, 0.0)) <= 1e-12);
}

TEST_CASE("epsilon parametrisation roundtrips") {
  const OscillatorParams p = params_from_epsilon(1.0, 1.0, 1.0, 0.2);
  CHECK(std::abs(epsilon_of(p) - 0.2) <= 1e-12);
  const RealFrequencies f = real_frequencies(p);
  CHECK(f.omega1 > f.omega2);
  CHECK(std::abs(f.omega1 - std::sqrt(2.0) / std::sqrt(0.8)) <= 1e-12);
}

TEST_CASE("equation of motion closes the jet") {
  OscillatorParams p;
  const cl::JetState jet{0.3, -0.7, 1.1, 0.2};
  const cl::JetState rhs = cl::eom_rhs(jet, p);
  CHECK(rhs.q == jet.qd);
  CHECK(rhs.qd == jet.qdd);
  CHECK(rhs.qdd == jet.qddd);
  CHECK(std::abs(rhs.qddd - (-(jet.qdd + p.omega * p.omega * jet.q) / p.lambda)) <= 1e-15);
}

TEST_CASE("jet and canonical coordinates are inverse descriptions") {
  OscillatorParams p;
  const cl::ClassicalState s{0.4, -1.2, 0.9, 0.3};
  const cl::ClassicalState back = cl::ostrogradski_from_jet(cl::jet_from_ostrogradski(s, p), p);
  CHECK(std::abs(back.q1 - s.q1) <= 1e-14);
  CHECK(std::abs(back.q2 - s.q2) <= 1e-14);
  CHECK(std::abs(back.pi1 - s.pi1) <= 1e-14);
  CHECK(std::abs(back.pi2 - s.pi2) <= 1e-14);
}

TEST_CASE("pure-mode closed form is exactly a cosine") {
  OscillatorParams p;
  const RealFrequencies f = real_frequencies(p);
  const cl::JetState j0{1.0, 0.0, -f.omega1 * f.omega1, 0.0};
  for (double t : {0.0, 0.37, 2.9}) {
    const cl::JetState s = cl::closed_form_trajectory(j0, p, t);
    CHECK(s.q == std::cos(f.omega1 * t));
  }
}

TEST_CASE("mixing coefficients sum to sqrt(2) m") {
  for (double lam : {0.15, 0.2}) {
    OscillatorParams p;
    p.lambda = lam;
    const cl::BCoefficients b = cl::b_coefficients(p);
    CHECK(std::abs(b.b1 + b.b2 - std::sqrt(2.0) * p.m) <= 1e-15);
    CHECK(b.b1 > b.b2);
  }
}

TEST_CASE("two-frequency decoupling refuses the critical coupling") {
  OscillatorParams p;
  p.lambda = 0.25;
  CHECK_THROWS_AS(cl::normal_mode_map(p), cl::SingularTransformation);
}

TEST_CASE("decoupling maps are symplectic") {
  OscillatorParams p;
  const cl::LinearCanonicalMap nm = cl::normal_mode_map(p);
  CHECK(cl::symplectic_defect(nm.to_modes) <= 1e-12);
  CHECK(cl::symplectic_defect(nm.from_modes) <= 1e-12);
  const cl::LinearCanonicalMap dm = cl::degenerate_mode_map(p);
  CHECK(cl::symplectic_defect(dm.to_modes) <= 1e-12);
  CHECK(cl::symplectic_defect(dm.from_modes) <= 1e-12);
}

TEST_CASE("short integration conserves energy") {
  OscillatorParams p;
  const cl::JetState j0{0.7, -0.3, 0.4, 0.2};
  const cl::Trajectory tr = cl::integrate_eom(j0, p, 5.0, 5000);
  const double e0 = cl::hamiltonian_ostrogradski(cl::ostrogradski_from_jet(j0, p), p);
  double worst = 0.0;
  for (const cl::JetState& s : tr.state) {
    const double e = cl::hamiltonian_ostrogradski(cl::ostrogradski_from_jet(s, p), p);
    worst = std::max(worst, std::abs(e - e0));
  }
  CHECK(worst / (std::abs(e0) + 1.0) <= 1e-9);
}
