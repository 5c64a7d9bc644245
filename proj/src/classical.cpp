#include "pu/classical.hpp"

#include <cmath>

namespace pu::classical {

namespace {
const double kSqrt2 = std::sqrt(2.0);

struct ModeQuantities {
  double w1, w2, delta, g, h;
};

ModeQuantities mode_quantities(const OscillatorParams& p) {
  if (classify_regime(p) != Regime::RealDistinct)
    throw SingularTransformation(
        "mode decoupling requires two distinct real frequencies (0 < lambda < 1/(4 w^2))");
  const RealFrequencies f = real_frequencies(p);
  ModeQuantities m;
  m.w1 = f.omega1;
  m.w2 = f.omega2;
  m.delta = f.omega1 * f.omega1 - f.omega2 * f.omega2;
  m.g = std::sqrt(p.lambda * m.delta);
  m.h = std::sqrt(p.lambda / m.delta);
  return m;
}
}  // namespace

ClassicalState ostrogradski_from_jet(const JetState& jet, const OscillatorParams& p) {
  validate(p);
  ClassicalState s;
  s.q1 = jet.q;
  s.q2 = jet.qd;
  s.pi1 = p.m * (jet.qd + p.lambda * jet.qddd);
  s.pi2 = -p.m * p.lambda * jet.qdd;
  return s;
}

JetState jet_from_ostrogradski(const ClassicalState& s, const OscillatorParams& p) {
  validate(p);
  JetState jet;
  jet.q = s.q1;
  jet.qd = s.q2;
  jet.qdd = -s.pi2 / (p.m * p.lambda);
  jet.qddd = (s.pi1 - p.m * s.q2) / (p.m * p.lambda);
  return jet;
}

double hamiltonian_ostrogradski(const ClassicalState& s, const OscillatorParams& p) {
  validate(p);
  return s.pi1 * s.q2 - s.pi2 * s.pi2 / (2.0 * p.m * p.lambda) +
         0.5 * p.m * p.omega * p.omega * s.q1 * s.q1 - 0.5 * p.m * s.q2 * s.q2;
}

double hamiltonian_normal(const NormalModeState& s, const OscillatorParams& p) {
  const ModeQuantities mq = mode_quantities(p);
  const double osc1 =
      s.p1 * s.p1 / (2.0 * p.m) + 0.5 * p.m * mq.w1 * mq.w1 * s.x1 * s.x1;
  const double osc2 =
      s.p2 * s.p2 / (2.0 * p.m) + 0.5 * p.m * mq.w2 * mq.w2 * s.x2 * s.x2;
  return osc2 - osc1;
}

double hamiltonian_degenerate(const DegenerateModeState& s, const OscillatorParams& p) {
  validate(p);
  return kSqrt2 * p.omega * (s.Q1 * s.P2 - s.Q2 * s.P1) -
         0.5 * p.m * p.omega * p.omega * (s.Q1 * s.Q1 + s.Q2 * s.Q2);
}

double symplectic_defect(const Eigen::Matrix4d& map) {
  Eigen::Matrix4d j = Eigen::Matrix4d::Zero();
  j(0, 2) = j(1, 3) = 1.0;
  j(2, 0) = j(3, 1) = -1.0;
  return (map.transpose() * j * map - j).cwiseAbs().maxCoeff();
}

LinearCanonicalMap normal_mode_map(const OscillatorParams& p) {
  const ModeQuantities mq = mode_quantities(p);
  const double m = p.m;
  const double w1s = mq.w1 * mq.w1;
  const double w2s = mq.w2 * mq.w2;
  LinearCanonicalMap lcm;
  Eigen::Matrix4d& fwd = lcm.from_modes;  // (x1,x2,p1,p2) -> (q1,q2,Pi1,Pi2)
  fwd.setZero();
  fwd(0, 0) = -1.0 / mq.g;
  fwd(0, 1) = 1.0 / mq.g;
  fwd(1, 2) = 1.0 / (m * mq.g);
  fwd(1, 3) = 1.0 / (m * mq.g);
  fwd(2, 2) = mq.h * w2s;
  fwd(2, 3) = mq.h * w1s;
  fwd(3, 0) = -m * mq.h * w1s;
  fwd(3, 1) = m * mq.h * w2s;
  Eigen::Matrix4d& inv = lcm.to_modes;  // (q1,q2,Pi1,Pi2) -> (x1,x2,p1,p2)
  inv.setZero();
  inv(0, 0) = w2s * mq.g / mq.delta;
  inv(0, 3) = -1.0 / (m * mq.h * mq.delta);
  inv(1, 0) = w1s * mq.g / mq.delta;
  inv(1, 3) = -1.0 / (m * mq.h * mq.delta);
  inv(2, 1) = m * mq.g * w1s / mq.delta;
  inv(2, 2) = -1.0 / (mq.h * mq.delta);
  inv(3, 1) = -m * mq.g * w2s / mq.delta;
  inv(3, 2) = 1.0 / (mq.h * mq.delta);
  return lcm;
}

NormalModeState to_normal_modes(const ClassicalState& s, const OscillatorParams& p) {
  const LinearCanonicalMap lcm = normal_mode_map(p);
  const Eigen::Vector4d v = lcm.to_modes * Eigen::Vector4d(s.q1, s.q2, s.pi1, s.pi2);
  return {v(0), v(1), v(2), v(3)};
}

ClassicalState from_normal_modes(const NormalModeState& s, const OscillatorParams& p) {
  const LinearCanonicalMap lcm = normal_mode_map(p);
  const Eigen::Vector4d v = lcm.from_modes * Eigen::Vector4d(s.x1, s.x2, s.p1, s.p2);
  return {v(0), v(1), v(2), v(3)};
}

LinearCanonicalMap degenerate_mode_map(const OscillatorParams& p) {
  validate(p);
  const double m = p.m;
  const double w = p.omega;
  LinearCanonicalMap lcm;
  Eigen::Matrix4d& fwd = lcm.from_modes;  // (Q1,Q2,P1,P2) -> (q1,q2,Pi1,Pi2)
  fwd.setZero();
  fwd(0, 0) = 1.0 / (2.0 * kSqrt2);
  fwd(0, 3) = 1.0 / (m * w);
  fwd(1, 1) = 0.5 * w;
  fwd(1, 2) = kSqrt2 / m;
  fwd(2, 1) = -0.75 * m * w;
  fwd(2, 2) = 1.0 / kSqrt2;
  fwd(3, 0) = -3.0 * m / (4.0 * kSqrt2);
  fwd(3, 3) = 1.0 / (2.0 * w);
  Eigen::Matrix4d& inv = lcm.to_modes;  // (q1,q2,Pi1,Pi2) -> (Q1,Q2,P1,P2)
  inv.setZero();
  inv(0, 0) = 1.0 / kSqrt2;
  inv(0, 3) = -kSqrt2 / m;
  inv(1, 1) = 1.0 / (2.0 * w);
  inv(1, 2) = -1.0 / (m * w);
  inv(2, 1) = 3.0 * m / (4.0 * kSqrt2);
  inv(2, 2) = 1.0 / (2.0 * kSqrt2);
  inv(3, 0) = 0.75 * m * w;
  inv(3, 3) = 0.5 * w;
  return lcm;
}

DegenerateModeState to_degenerate_modes(const ClassicalState& s, const OscillatorParams& p) {
  const LinearCanonicalMap lcm = degenerate_mode_map(p);
  const Eigen::Vector4d v = lcm.to_modes * Eigen::Vector4d(s.q1, s.q2, s.pi1, s.pi2);
  return {v(0), v(1), v(2), v(3)};
}

ClassicalState from_degenerate_modes(const DegenerateModeState& s, const OscillatorParams& p) {
  const LinearCanonicalMap lcm = degenerate_mode_map(p);
  const Eigen::Vector4d v = lcm.from_modes * Eigen::Vector4d(s.Q1, s.Q2, s.P1, s.P2);
  return {v(0), v(1), v(2), v(3)};
}

BCoefficients b_coefficients(const OscillatorParams& p) {
  const RealFrequencies f = real_frequencies(p);
  BCoefficients b;
  b.b1 = p.m / (2.0 * kSqrt2) * (1.5 + p.lambda * f.omega1 * f.omega1);
  b.b2 = p.m / (2.0 * kSqrt2) * (1.5 + p.lambda * f.omega2 * f.omega2);
  return b;
}

DegenerateModeState degenerate_from_normal(const NormalModeState& s, const OscillatorParams& p) {
  const ModeQuantities mq = mode_quantities(p);
  const BCoefficients b = b_coefficients(p);
  // Momenta through the mode weights; positions via the composed linear maps.
  const DegenerateModeState composed = to_degenerate_modes(from_normal_modes(s, p), p);
  DegenerateModeState out;
  out.Q1 = composed.Q1;
  out.Q2 = composed.Q2;
  out.P1 = (b.b2 * s.p1 + b.b1 * s.p2) / (p.m * mq.g);
  out.P2 = kSqrt2 * p.omega * (-b.b1 * s.x1 + b.b2 * s.x2) / mq.g;
  return out;
}

JetState eom_rhs(const JetState& jet, const OscillatorParams& p) {
  JetState d;
  d.q = jet.qd;
  d.qd = jet.qdd;
  d.qdd = jet.qddd;
  d.qddd = -(jet.qdd + p.omega * p.omega * jet.q) / p.lambda;
  return d;
}

namespace {
JetState axpy(const JetState& a, double h, const JetState& b) {
  return {a.q + h * b.q, a.qd + h * b.qd, a.qdd + h * b.qdd, a.qddd + h * b.qddd};
}
}  // namespace

Trajectory integrate_eom(const JetState& jet0, const OscillatorParams& p, double t_end,
                         int steps) {
  validate(p);
  if (steps < 1) throw std::domain_error("integrate_eom: need at least one step");
  if (!(t_end > 0.0)) throw std::domain_error("integrate_eom: t_end must be positive");
  Trajectory traj;
  traj.t.reserve(steps + 1);
  traj.state.reserve(steps + 1);
  const double h = t_end / steps;
  JetState y = jet0;
  traj.t.push_back(0.0);
  traj.state.push_back(y);
  for (int i = 0; i < steps; ++i) {
    const JetState k1 = eom_rhs(y, p);
    const JetState k2 = eom_rhs(axpy(y, 0.5 * h, k1), p);
    const JetState k3 = eom_rhs(axpy(y, 0.5 * h, k2), p);
    const JetState k4 = eom_rhs(axpy(y, h, k3), p);
    y.q += h / 6.0 * (k1.q + 2.0 * k2.q + 2.0 * k3.q + k4.q);
    y.qd += h / 6.0 * (k1.qd + 2.0 * k2.qd + 2.0 * k3.qd + k4.qd);
    y.qdd += h / 6.0 * (k1.qdd + 2.0 * k2.qdd + 2.0 * k3.qdd + k4.qdd);
    y.qddd += h / 6.0 * (k1.qddd + 2.0 * k2.qddd + 2.0 * k3.qddd + k4.qddd);
    traj.t.push_back((i + 1) * h);
    traj.state.push_back(y);
  }
  return traj;
}

JetState closed_form_trajectory(const JetState& jet0, const OscillatorParams& p, double t) {
  const Regime regime = classify_regime(p);
  if (regime == Regime::RealDistinct) {
    const RealFrequencies f = real_frequencies(p);
    const double w1 = f.omega1, w2 = f.omega2;
    const double delta = w1 * w1 - w2 * w2;
    const double a = -(jet0.qdd + w2 * w2 * jet0.q) / delta;
    const double c = jet0.q - a;
    const double b = -(jet0.qddd + w2 * w2 * jet0.qd) / (w1 * delta);
    const double d = (jet0.qd - b * w1) / w2;
    const double c1 = std::cos(w1 * t), s1 = std::sin(w1 * t);
    const double c2 = std::cos(w2 * t), s2 = std::sin(w2 * t);
    JetState out;
    out.q = a * c1 + b * s1 + c * c2 + d * s2;
    out.qd = w1 * (-a * s1 + b * c1) + w2 * (-c * s2 + d * c2);
    out.qdd = -w1 * w1 * (a * c1 + b * s1) - w2 * w2 * (c * c2 + d * s2);
    out.qddd = w1 * w1 * w1 * (a * s1 - b * c1) + w2 * w2 * w2 * (c * s2 - d * c2);
    return out;
  }
  if (regime == Regime::Degenerate) {
    const double om = kSqrt2 * p.omega;
    const double a = jet0.q;
    const double b = -(jet0.qddd + om * om * jet0.qd) / (2.0 * om * om);
    const double c = (jet0.qd - b) / om;
    const double d = (jet0.qdd + a * om * om) / (2.0 * om);
    const double co = std::cos(om * t), si = std::sin(om * t);
    const double u = a + b * t, v = c + d * t;
    JetState out;
    out.q = u * co + v * si;
    out.qd = b * co - u * om * si + d * si + v * om * co;
    out.qdd = -2.0 * b * om * si - u * om * om * co + 2.0 * d * om * co - v * om * om * si;
    out.qddd = -3.0 * b * om * om * co + u * om * om * om * si - 3.0 * d * om * om * si -
               v * om * om * om * co;
    return out;
  }
  throw std::domain_error("closed-form trajectory implemented for the real-frequency regimes");
}

}  // namespace pu::classical
