#pragma once

#include <complex>
#include <stdexcept>

// Parameters of the one-dimensional oscillator with a higher-derivative term,
//
//     L = (m/2) qdot^2 - (m w^2/2) q^2 - (m lam/2) qddot^2 ,
//
// whose equation of motion factorises over two mode frequencies
//
//     w_{1,2}^2 = (1 +- sqrt(1 - 4 lam w^2)) / (2 lam) .
//
// The sign of lam and of the discriminant d = 1 - 4 lam w^2 splits parameter
// space into four regimes.  Near the equal-frequency point the substitution
// d = eps^2 (0 < eps < 1) is used, for which
//
//     w_{1,2} = sqrt(2) w / sqrt(1 -+ eps) ,
//
// and Vieta's relations  lam (w_1^2 + w_2^2) = 1,  lam w_1^2 w_2^2 = w^2
// hold identically.

namespace pu {

enum class Regime {
  ComplexPair,         // lam > 1/(4 w^2): conjugate complex pair
  RealDistinct,        // 0 < lam < 1/(4 w^2): two real frequencies, w1 > w2
  Degenerate,          // lam = 1/(4 w^2): w1 = w2 = sqrt(2) w
  MixedRealImaginary,  // lam < 0: one real, one imaginary frequency
};

const char* regime_name(Regime r);

struct OscillatorParams {
  double m = 1.0;
  double omega = 1.0;
  double lambda = 0.15;
  double hbar = 1.0;
};

// Throws std::domain_error unless m, omega, hbar > 0 and lambda != 0, all finite.
// lambda = 0 is a hard error: the theory changes type, it is not a regime.
void validate(const OscillatorParams& p);

// Discriminant 1 - 4 lam w^2 of the frequency equation.
double discriminant(const OscillatorParams& p);

// Absolute tolerance on the discriminant inside which the parameters are
// treated as exactly degenerate.
inline constexpr double kDegenerateTol = 1e-14;

Regime classify_regime(const OscillatorParams& p, double tol = kDegenerateTol);

struct FrequencyPair {
  std::complex<double> omega1;  // the (1 + sqrt(d)) branch
  std::complex<double> omega2;  // the (1 - sqrt(d)) branch

  bool both_real(double tol = 0.0) const {
    return std::abs(omega1.imag()) <= tol && std::abs(omega2.imag()) <= tol;
  }
};

// Principal square roots throughout; in the degenerate regime both entries
// are set to the common value sqrt(2) w exactly.  In the real regime
// omega1 >= omega2 > 0.
FrequencyPair frequencies(const OscillatorParams& p);

// Real frequencies (w1, w2); throws std::domain_error outside RealDistinct /
// Degenerate.
struct RealFrequencies {
  double omega1;
  double omega2;
};
RealFrequencies real_frequencies(const OscillatorParams& p);

// eps-parametrised family: lambda = (1 - eps^2) / (4 w^2), requires
// 0 < eps < 1 and classifies as RealDistinct.
OscillatorParams params_from_epsilon(double m, double omega, double hbar, double epsilon);

// Recovers eps = sqrt(1 - 4 lam w^2); requires a nonnegative discriminant.
double epsilon_of(const OscillatorParams& p);

}  // namespace pu
