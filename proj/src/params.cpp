#include "pu/params.hpp"

#include <cmath>

namespace pu {

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::ComplexPair: return "complex-pair";
    case Regime::RealDistinct: return "real-distinct";
    case Regime::Degenerate: return "degenerate";
    case Regime::MixedRealImaginary: return "mixed-real-imaginary";
  }
  return "unknown";
}

void validate(const OscillatorParams& p) {
  auto bad = [](double v) { return !std::isfinite(v); };
  if (bad(p.m) || bad(p.omega) || bad(p.lambda) || bad(p.hbar))
    throw std::domain_error("oscillator parameters must be finite");
  if (p.m <= 0.0) throw std::domain_error("mass must be positive");
  if (p.omega <= 0.0) throw std::domain_error("base frequency must be positive");
  if (p.hbar <= 0.0) throw std::domain_error("hbar must be positive");
  if (p.lambda == 0.0)
    throw std::domain_error(
        "lambda = 0 removes the higher-derivative term; not a regime of this model");
}

double discriminant(const OscillatorParams& p) {
  return 1.0 - 4.0 * p.lambda * p.omega * p.omega;
}

Regime classify_regime(const OscillatorParams& p, double tol) {
  validate(p);
  const double d = discriminant(p);
  if (std::abs(d) <= tol) return Regime::Degenerate;
  if (p.lambda < 0.0) return Regime::MixedRealImaginary;
  return d > 0.0 ? Regime::RealDistinct : Regime::ComplexPair;
}

FrequencyPair frequencies(const OscillatorParams& p) {
  const Regime r = classify_regime(p);
  FrequencyPair f;
  if (r == Regime::Degenerate) {
    const double w = std::sqrt(2.0) * p.omega;
    f.omega1 = f.omega2 = w;
    return f;
  }
  const std::complex<double> root = std::sqrt(std::complex<double>(discriminant(p), 0.0));
  const double denom = 2.0 * p.lambda;
  f.omega1 = std::sqrt((1.0 + root) / denom);
  f.omega2 = std::sqrt((1.0 - root) / denom);
  return f;
}

RealFrequencies real_frequencies(const OscillatorParams& p) {
  const Regime r = classify_regime(p);
  if (r != Regime::RealDistinct && r != Regime::Degenerate)
    throw std::domain_error("real frequencies exist only for 0 < lambda <= 1/(4 w^2)");
  const FrequencyPair f = frequencies(p);
  return {f.omega1.real(), f.omega2.real()};
}

OscillatorParams params_from_epsilon(double m, double omega, double hbar, double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0) || !std::isfinite(epsilon))
    throw std::domain_error("epsilon must lie strictly between 0 and 1");
  OscillatorParams p;
  p.m = m;
  p.omega = omega;
  p.hbar = hbar;
  p.lambda = (1.0 - epsilon * epsilon) / (4.0 * omega * omega);
  validate(p);
  return p;
}

double epsilon_of(const OscillatorParams& p) {
  validate(p);
  const double d = discriminant(p);
  if (d < 0.0) throw std::domain_error("epsilon is defined only for a nonnegative discriminant");
  return std::sqrt(d);
}

}  // namespace pu
