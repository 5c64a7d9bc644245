#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <vector>

#include "pu/params.hpp"

// Classical layer: the fourth-order equation of motion, its Ostrogradski
// phase space (q1, q2, Pi1, Pi2) = (q, qdot, m(qdot + lam qdddot), -m lam qddot)
// with conserved energy
//
//     H = Pi1 q2 - Pi2^2/(2 m lam) + (m w^2/2) q1^2 - (m/2) q2^2 ,
//
// and the two linear canonical maps used by the quantum layer: the
// decoupling map onto oscillator modes (x1, x2, p1, p2) valid for distinct
// real frequencies, and the lambda-independent map onto the rotated pair
// (Q1, Q2, P1, P2) in which the equal-frequency Hamiltonian takes the form
//
//     H_deg = sqrt(2) w (Q1 P2 - Q2 P1) - (m w^2/2) (Q1^2 + Q2^2) .

namespace pu::classical {

// Raised when a transformation degenerates (the two-mode decoupling has a
// 1/(w1^2 - w2^2) normalisation and does not exist at equal frequencies).
struct SingularTransformation : std::domain_error {
  using std::domain_error::domain_error;
};

struct JetState {
  double q = 0.0;
  double qd = 0.0;
  double qdd = 0.0;
  double qddd = 0.0;
};

struct ClassicalState {
  double q1 = 0.0;
  double q2 = 0.0;
  double pi1 = 0.0;
  double pi2 = 0.0;
};

struct NormalModeState {
  double x1 = 0.0;
  double x2 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
};

struct DegenerateModeState {
  double Q1 = 0.0;
  double Q2 = 0.0;
  double P1 = 0.0;
  double P2 = 0.0;
};

ClassicalState ostrogradski_from_jet(const JetState& jet, const OscillatorParams& p);
JetState jet_from_ostrogradski(const ClassicalState& s, const OscillatorParams& p);

double hamiltonian_ostrogradski(const ClassicalState& s, const OscillatorParams& p);
double hamiltonian_normal(const NormalModeState& s, const OscillatorParams& p);
double hamiltonian_degenerate(const DegenerateModeState& s, const OscillatorParams& p);

// Pair of 4x4 matrices for a linear canonical change of variables; rows and
// columns are ordered (position pair, momentum pair).
struct LinearCanonicalMap {
  Eigen::Matrix4d to_modes;    // (q1,q2,Pi1,Pi2) -> mode coordinates
  Eigen::Matrix4d from_modes;  // inverse
};

// max |M^T J M - J| over entries, J the standard symplectic form for the
// ordering above.  Zero (to rounding) for a canonical map.
double symplectic_defect(const Eigen::Matrix4d& map);

// Decoupling onto modes with g = sqrt(lam (w1^2 - w2^2)); requires
// RealDistinct, throws SingularTransformation otherwise.
LinearCanonicalMap normal_mode_map(const OscillatorParams& p);
NormalModeState to_normal_modes(const ClassicalState& s, const OscillatorParams& p);
ClassicalState from_normal_modes(const NormalModeState& s, const OscillatorParams& p);

// Rotated pair used at the equal-frequency point; the map itself is
// lambda-independent and always defined.
LinearCanonicalMap degenerate_mode_map(const OscillatorParams& p);
DegenerateModeState to_degenerate_modes(const ClassicalState& s, const OscillatorParams& p);
ClassicalState from_degenerate_modes(const DegenerateModeState& s, const OscillatorParams& p);

// Mode weights b1, b2 with b1 + b2 = sqrt(2) m, entering the composed map
// from oscillator modes to the rotated degenerate pair.
struct BCoefficients {
  double b1 = 0.0;
  double b2 = 0.0;
};
BCoefficients b_coefficients(const OscillatorParams& p);

// The momenta of the rotated pair expressed directly through the oscillator
// modes:  P1 = (b2 p1 + b1 p2)/(m g),  P2 = sqrt(2) w (-b1 x1 + b2 x2)/g.
DegenerateModeState degenerate_from_normal(const NormalModeState& s, const OscillatorParams& p);

// Fixed-step classical integration of the jet (q, qd, qdd, qddd).  The
// right-hand side uses only the Vieta combinations 1/lam and w^2/lam, so it
// is real in every regime.
struct Trajectory {
  std::vector<double> t;
  std::vector<JetState> state;
};
JetState eom_rhs(const JetState& jet, const OscillatorParams& p);
Trajectory integrate_eom(const JetState& jet0, const OscillatorParams& p, double t_end,
                         int steps);

// Closed-form solution with the initial jet at t = 0; implemented for
// RealDistinct (four-mode trigonometric fit) and Degenerate (secular
// (a + b t) cos / sin form).
JetState closed_form_trajectory(const JetState& jet0, const OscillatorParams& p, double t);

}  // namespace pu::classical
