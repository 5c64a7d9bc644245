#pragma once

#include <complex>
#include <vector>

#include "pu/params.hpp"
#include "pu/spectra.hpp"

// Eigenfunctions in both representations and the equal-frequency limit of
// the momentum-representation family.
//
// Coordinate representation (two decoupled modes, real frequencies):
//   psi_{n1 n2}(x1, x2) = N_{n1} N_{n2} (m^2 w1 w2 / hbar^2)^{1/4}
//       H_{n1}(x1 sqrt(m w1/hbar)) H_{n2}(x2 sqrt(m w2/hbar))
//       exp(-(m/2hbar)(w1 x1^2 + w2 x2^2)).
//
// Momentum representation of the rotated degenerate pair (P1, P2): the
// eigenfunctions are evaluated three ways that must agree -- a Gauss-Hermite
// quadrature of the exact overlap integral, the same quadrature of its
// leading small-eps form (shifted Hermite products), and the closed form
//
//   cpsi_{n1 n2}(P) ~ sqrt(eps) c^n (P2 - i P1)^n n1! 2^{n2} N_{n1} N_{n2}
//                     L^n_{n1}(eps P^2 / (sqrt(2) m w hbar)) ,
//   c = sqrt(eps / (2 sqrt(2) m hbar w)),  n = n2 - n1 >= 0,
//
// with the n1 > n2 labels obtained from the reflected closed form
// (-1)^|n| c^|n| (P2 + i P1)^|n| n2! 2^{n1} L^|n|_{n2} at the same radial
// argument.  As eps -> 0 along n1 + n2 = s -> inf with eps s fixed, the
// closed form converges (after normalisation) onto the degenerate continuum
// eigenfunction sqrt(k/2pi) J_n(k P) e^{i n Theta}.

namespace pu::wavefn {

using spectra::QuantumNumbers;

// Background (m, w, hbar) of the eps-parametrised family; lambda is fixed
// by eps and never enters the small-eps forms.
struct ReducedParams {
  double m = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
};

// Coordinate-representation eigenfunction (real-valued).  With
// literal_second_argument the second Hermite argument uses w1 instead of
// w2; the two variants coincide only at equal frequencies, and only the
// default is an eigenfunction elsewhere.
double coord_wavefunction(QuantumNumbers n, const OscillatorParams& p, double x1, double x2,
                          bool literal_second_argument = false);

// Degenerate continuum eigenfunction sqrt(k/2pi) J_n(kP) e^{i n Theta} with
// P = |(P1, P2)|, Theta = atan2(P2, P1); any integer n.
std::complex<double> degenerate_wavefunction(int n, double k, double P1, double P2);

// Structure of the coordinate -> momentum transition kernel
//   K(P; x) = norm * exp(i P1 (phase_x1 x1 + phase_x2 x2))
//             * delta(delta_x1 x1 + delta_x2 x2 + delta_p2 P2).
struct KernelForm {
  double norm;      // sqrt(m g^2 / (2 sqrt(2) pi hbar w))
  double delta_x1;  // -b1
  double delta_x2;  // +b2
  double delta_p2;  // -g / (sqrt(2) w)
  double phase_x1;  // m g b2 / (hbar (b1^2 + b2^2))
  double phase_x2;  // m g b1 / (hbar (b1^2 + b2^2))
};
KernelForm transition_kernel(const OscillatorParams& p);

// Momentum-representation eigenfunction by Gauss-Hermite quadrature of the
// kernel integral at the exact lambda(eps); quad_points = 0 picks
// (n1 + n2)/2 + 12.  Unit L^2 norm.
std::complex<double> momentum_wavefunction_exact(QuantumNumbers n, const OscillatorParams& p,
                                                 double P1, double P2, int quad_points = 0);

// Leading small-eps form: quadrature of the shifted Hermite product with
// prefactor N1 N2 sqrt(eps) / (sqrt(pi) sqrt(sqrt(2) m hbar w)).
std::complex<double> momentum_wavefunction_dominant(QuantumNumbers n, const ReducedParams& rp,
                                                    double epsilon, double P1, double P2,
                                                    int quad_points = 0);

// Closed form of the dominant integral, in log-magnitude/phase form so that
// labels up to n1 + n2 ~ 10^6 stay representable.
struct LogComplex {
  double log_abs = 0.0;  // -inf encodes an exact zero
  double phase = 0.0;
  std::complex<double> value() const;
};
LogComplex momentum_wavefunction_closed(QuantumNumbers n, const ReducedParams& rp,
                                        double epsilon, double P1, double P2);

// Convergence of the closed form onto the degenerate continuum function
// along a limit schedule.  Errors compare shape-normalised radial profiles
// on a fixed grid P in (0, pmax]; norm_ratio is ||closed|| / ||target||
// before normalisation (expected to scale like sqrt(eps)).
struct ScanGrid {
  double pmax = 10.0;
  int points = 400;
};
struct ConvergenceRow {
  int n1 = 0, n2 = 0;
  double epsilon = 0.0;
  double sup_error = 0.0;   // max |f_hat - g_hat| / max g_hat
  double l2_error = 0.0;    // ||f_hat - g_hat||_2, both unit vectors
  double norm_ratio = 0.0;  // ||f|| / ||g|| on the grid
};
std::vector<ConvergenceRow> limit_scan(const spectra::LimitSchedule& sched,
                                       const ReducedParams& rp, const ScanGrid& grid);

// Residual of the polar-coordinate eigenvalue equation
//   [-i sqrt(2) w hbar d_Theta + (m w^2 hbar^2 / 2)
//      (d^2_P + (1/P) d_P + (1/P^2) d^2_Theta)] Psi = E Psi
// under central finite differences at spacing h and h/2.  The Richardson
// ratio residual(h)/residual(h/2) is ~4 when truncation dominates.
struct PdeResidual {
  double rel_residual_h = 0.0;
  double rel_residual_h2 = 0.0;
  double richardson_ratio = 0.0;
};
PdeResidual degenerate_pde_residual(int n, double k, const OscillatorParams& p,
                                    int radial_samples = 24, int angular_samples = 8,
                                    double h = 1e-3);

}  // namespace pu::wavefn
