#pragma once

#include <complex>
#include <cstdint>
#include <vector>

// Scalar special-function evaluations used across the library: physicists'
// Hermite polynomials (complex argument), generalised Laguerre polynomials,
// integer-order Bessel functions of the first kind, Gauss-Hermite quadrature
// rules, and log-scale normalisation helpers.
//
// The *_scaled variants return a mantissa/exponent pair value = mant * 2^e
// so that degrees up to ~10^6 stay representable; plain variants may
// overflow to +-inf for large degree and are intended for moderate orders.
//
// Batched (grid) evaluation lives in pu/kernels.hpp; the scalar routines
// here delegate to the portable reference kernels where the recurrences
// coincide.

namespace pu::specfun {

struct Scaled {
  double mant = 0.0;
  std::int32_t exp2 = 0;

  double value() const;    // mant * 2^exp2, +-inf on overflow
  double log_abs() const;  // log|mant| + exp2 * log 2, -inf at zero
};

struct ScaledComplex {
  std::complex<double> mant{0.0, 0.0};
  std::int32_t exp2 = 0;

  std::complex<double> value() const;
  double log_abs() const;
};

// Physicists' Hermite polynomial H_n via the three-term recurrence
// H_{k+1} = 2 z H_k - 2 k H_{k-1}.
std::complex<double> hermite(int n, std::complex<double> z);
ScaledComplex hermite_scaled(int n, std::complex<double> z);

// Generalised Laguerre polynomial L^alpha_m via
// (j+1) L_{j+1} = (2j+1+alpha-x) L_j - (j+alpha) L_{j-1}.
double laguerre(long long m, double alpha, double x);
Scaled laguerre_scaled(long long m, double alpha, double x);

// Bessel function J_n of integer order, real argument.  Small arguments use
// the ascending series, otherwise Miller's backward recurrence normalised by
// J_0 + 2 sum J_{2k} = 1.  J_{-n}(x) = (-1)^n J_n(x), J_n(-x) = (-1)^n J_n(x).
double bessel_j(int n, double x);

struct GaussHermiteRule {
  std::vector<double> nodes;    // ascending, symmetric about 0
  std::vector<double> weights;  // for weight exp(-x^2) on (-inf, inf)
};

// Golub-Welsch rule of the given node count (>= 1).
GaussHermiteRule gauss_hermite(int count);

// Nodes refined by Newton iteration in long double, with matching weights
// w_j = sqrt(pi) 2^{K-1} K! / (K^2 H_{K-1}(x_j)^2).  Used where quadrature
// cancellation makes double-precision node error the dominant term.  Cached;
// safe for concurrent use.
struct GaussHermiteRuleLD {
  std::vector<long double> nodes;
  std::vector<long double> weights;
};
const GaussHermiteRuleLD& gauss_hermite_ld(int count);

// ln n! (exact table through 20, lgamma beyond).
double log_factorial(long long n);

// ln of the harmonic-oscillator Hermite normalisation
// N_n = (2^n n! sqrt(pi))^{-1/2}.
double log_hermite_norm(int n);

}  // namespace pu::specfun
