#include "pu/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pu::fock {

namespace {
const double kSqrt2 = std::sqrt(2.0);
const std::complex<double> kI(0.0, 1.0);
}  // namespace

FockBasis::FockBasis(int nmax_) : nmax(nmax_) {
  if (nmax < 2) throw std::domain_error("FockBasis: nmax must be at least 2");
  for (int total = 0; total <= nmax; ++total)
    for (int n1 = total; n1 >= 0; --n1) labels.emplace_back(n1, total - n1);
}

int FockBasis::index(int n1, int n2) const {
  if (n1 < 0 || n2 < 0 || n1 + n2 > nmax) return -1;
  const int total = n1 + n2;
  // labels for a given total start at total*(total+1)/2, ordered by descending n1
  return total * (total + 1) / 2 + (total - n1);
}

bool FockBasis::interior(int flat, int margin) const {
  const auto& [n1, n2] = labels[flat];
  return n1 + n2 <= nmax - margin;
}

namespace {

// Lowering matrices of the two modes on the truncated basis.
std::pair<Op, Op> ladders(const FockBasis& basis) {
  const int d = basis.dim();
  Op a1 = Op::Zero(d, d), a2 = Op::Zero(d, d);
  for (int j = 0; j < d; ++j) {
    const auto& [n1, n2] = basis.labels[j];
    if (const int i = basis.index(n1 - 1, n2); i >= 0) a1(i, j) = std::sqrt(double(n1));
    if (const int i = basis.index(n1, n2 - 1); i >= 0) a2(i, j) = std::sqrt(double(n2));
  }
  return {a1, a2};
}

}  // namespace

ModeOperators build_mode_operators(const FockBasis& basis, const OscillatorParams& p) {
  const RealFrequencies f = real_frequencies(p);
  ModeOperators ops{basis, p, f.omega1, f.omega2, {}, {}, {}, {}, {}, {}, {}, {}};
  auto [a1, a2] = ladders(basis);
  ops.a1 = a1;
  ops.a2 = a2;
  ops.a1d = a1.adjoint();
  ops.a2d = a2.adjoint();
  const double c1 = std::sqrt(p.hbar / (2.0 * p.m * f.omega1));
  const double c2 = std::sqrt(p.hbar / (2.0 * p.m * f.omega2));
  ops.x1 = kI * c1 * (ops.a1 - ops.a1d);
  ops.x2 = kI * c2 * (ops.a2 - ops.a2d);
  ops.p1 = std::sqrt(p.m * p.hbar * f.omega1 / 2.0) * (ops.a1 + ops.a1d);
  ops.p2 = std::sqrt(p.m * p.hbar * f.omega2 / 2.0) * (ops.a2 + ops.a2d);
  return ops;
}

Op hamiltonian_normal_op(const ModeOperators& ops) {
  const double m = ops.params.m;
  const Op osc1 =
      ops.p1 * ops.p1 / (2.0 * m) + 0.5 * m * ops.w1 * ops.w1 * ops.x1 * ops.x1;
  const Op osc2 =
      ops.p2 * ops.p2 / (2.0 * m) + 0.5 * m * ops.w2 * ops.w2 * ops.x2 * ops.x2;
  return osc2 - osc1;
}

Op hamiltonian_ostrogradski_op(const ModeOperators& ops) {
  const OscillatorParams& p = ops.params;
  const double delta = ops.w1 * ops.w1 - ops.w2 * ops.w2;
  const double g = std::sqrt(p.lambda * delta);
  const double h = std::sqrt(p.lambda / delta);
  const Op q1 = (-ops.x1 + ops.x2) / g;
  const Op q2 = (ops.p1 + ops.p2) / (p.m * g);
  const Op pi1 = h * (ops.w2 * ops.w2 * ops.p1 + ops.w1 * ops.w1 * ops.p2);
  const Op pi2 = p.m * h * (-ops.w1 * ops.w1 * ops.x1 + ops.w2 * ops.w2 * ops.x2);
  return pi1 * q2 - pi2 * pi2 / (2.0 * p.m * p.lambda) +
         0.5 * p.m * p.omega * p.omega * q1 * q1 - 0.5 * p.m * q2 * q2;
}

MetricOperator metric_eta(const FockBasis& basis) {
  MetricOperator m;
  m.signs.resize(basis.dim());
  for (int j = 0; j < basis.dim(); ++j) m.signs(j) = basis.labels[j].first % 2 ? -1.0 : 1.0;
  return m;
}

MetricOperator metric_tau(const FockBasis& basis) {
  MetricOperator m;
  m.signs.resize(basis.dim());
  for (int j = 0; j < basis.dim(); ++j) m.signs(j) = basis.labels[j].second % 2 ? -1.0 : 1.0;
  return m;
}

Op star_conjugate(const Op& a, const MetricOperator& metric) {
  return metric.signs.asDiagonal() * a.adjoint() * metric.signs.asDiagonal();
}

std::complex<double> metric_inner(const MetricOperator& metric, const Vec& u, const Vec& v) {
  return (u.adjoint() * (metric.signs.asDiagonal() * v))(0, 0);
}

double max_abs_interior(const Op& a, const FockBasis& basis, int margin) {
  double best = 0.0;
  for (int j = 0; j < basis.dim(); ++j) {
    if (!basis.interior(j, margin)) continue;
    for (int i = 0; i < basis.dim(); ++i) best = std::max(best, std::abs(a(i, j)));
  }
  return best;
}

Op commutator(const Op& a, const Op& b) { return a * b - b * a; }

PositiveCheckReport positive_hamiltonian_check(const FockBasis& basis,
                                               const OscillatorParams& p) {
  const ModeOperators ops = build_mode_operators(basis, p);
  const double m = p.m, hb = p.hbar;
  // Standard hermitean quadratures of the positive scheme.
  const Op xp1 = std::sqrt(hb / (2.0 * m * ops.w1)) * (ops.a1 + ops.a1d);
  const Op xp2 = std::sqrt(hb / (2.0 * m * ops.w2)) * (ops.a2 + ops.a2d);
  const Op pp1 = kI * std::sqrt(m * hb * ops.w1 / 2.0) * (ops.a1d - ops.a1);
  const Op pp2 = kI * std::sqrt(m * hb * ops.w2 / 2.0) * (ops.a2d - ops.a2);
  const Op hpos = pp1 * pp1 / (2.0 * m) + 0.5 * m * ops.w1 * ops.w1 * xp1 * xp1 +
                  pp2 * pp2 / (2.0 * m) + 0.5 * m * ops.w2 * ops.w2 * xp2 * xp2;

  // The indefinite-energy assembly evaluated on the rotated quadratures
  // x1 -> -i X'_1, p1 -> i P'_1 must reproduce hpos identically.
  const Op x1m = -kI * xp1;
  const Op p1m = kI * pp1;
  const Op osc1m = p1m * p1m / (2.0 * m) + 0.5 * m * ops.w1 * ops.w1 * x1m * x1m;
  const Op osc2m = pp2 * pp2 / (2.0 * m) + 0.5 * m * ops.w2 * ops.w2 * xp2 * xp2;
  const Op mapped = osc2m - osc1m;

  PositiveCheckReport rep;
  rep.substitution_residual = (mapped - hpos).cwiseAbs().maxCoeff();

  double offdiag = 0.0;
  for (int j = 0; j < basis.dim(); ++j) {
    if (!basis.interior(j, 2)) continue;
    for (int i = 0; i < basis.dim(); ++i)
      if (i != j) offdiag = std::max(offdiag, std::abs(hpos(i, j)));
  }
  rep.offdiag_interior = offdiag;

  Eigen::MatrixXd hr = hpos.real();
  hr = 0.5 * (hr + hr.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hr);
  const Eigen::VectorXd evals = es.eigenvalues();

  std::vector<double> expected;
  for (int j = 0; j < basis.dim(); ++j) {
    if (!basis.interior(j, 2)) continue;
    const auto& [n1, n2] = basis.labels[j];
    expected.push_back(hb * (ops.w1 * (n1 + 0.5) + ops.w2 * (n2 + 0.5)));
  }
  std::sort(expected.begin(), expected.end());
  rep.interior_levels = int(expected.size());
  rep.ground_expected = 0.5 * hb * (ops.w1 + ops.w2);
  rep.ground_energy = evals(0);

  double worst = 0.0;
  for (double e : expected) {
    // nearest eigenvalue to the expected level
    const double* begin = evals.data();
    const double* end = begin + evals.size();
    const double* it = std::lower_bound(begin, end, e);
    double best = std::numeric_limits<double>::infinity();
    if (it != end) best = std::min(best, std::fabs(*it - e));
    if (it != begin) best = std::min(best, std::fabs(*(it - 1) - e));
    worst = std::max(worst, best / std::fabs(e));
  }
  rep.max_interior_rel_dev = worst;
  return rep;
}

AdjointScan adjoint_blowup_scan(int basis_nmax, double m, double omega, double hbar,
                                const std::vector<double>& eps_list) {
  if (eps_list.size() < 2)
    throw std::domain_error("adjoint_blowup_scan: need at least two eps samples");
  const FockBasis basis(basis_nmax);
  auto [a1, a2] = ladders(basis);
  const Op a1d = a1.adjoint();
  const Op a2d = a2.adjoint();

  AdjointScan scan;
  scan.rows.reserve(eps_list.size());
  for (const double eps : eps_list) {
    const OscillatorParams p = params_from_epsilon(m, omega, hbar, eps);
    const RealFrequencies f = real_frequencies(p);
    const double w1 = f.omega1, w2 = f.omega2;
    const double delta = w1 * w1 - w2 * w2;
    const double g = std::sqrt(p.lambda * delta);
    const double h = std::sqrt(p.lambda / delta);

    const Op xp1 = std::sqrt(hbar / (2.0 * m * w1)) * (a1 + a1d);
    const Op xp2 = std::sqrt(hbar / (2.0 * m * w2)) * (a2 + a2d);
    const Op pp1 = kI * std::sqrt(m * hbar * w1 / 2.0) * (a1d - a1);
    const Op pp2 = kI * std::sqrt(m * hbar * w2 / 2.0) * (a2d - a2);
    // Indefinite-energy quadratures realised inside the positive scheme.
    const Op x1 = -kI * xp1;
    const Op p1 = kI * pp1;
    const Op& x2 = xp2;
    const Op& p2 = pp2;

    const Op q1 = (-x1 + x2) / g;
    const Op q2 = (p1 + p2) / (m * g);
    const Op pi1 = h * (w2 * w2 * p1 + w1 * w1 * p2);
    const Op pi2 = m * h * (-w1 * w1 * x1 + w2 * w2 * x2);
    const Op q1d = q1.adjoint();

    const Op* basis_ops[4] = {&q1, &q2, &pi1, &pi2};
    Eigen::Matrix4cd gram;
    Eigen::Vector4cd rhs;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c)
        gram(r, c) = (basis_ops[r]->adjoint() * (*basis_ops[c])).trace();
      rhs(r) = (basis_ops[r]->adjoint() * q1d).trace();
    }
    const Eigen::Vector4cd coeff = gram.fullPivLu().solve(rhs);

    Op fit = Op::Zero(basis.dim(), basis.dim());
    for (int c = 0; c < 4; ++c) fit += coeff(c) * (*basis_ops[c]);

    AdjointScanRow row;
    row.epsilon = eps;
    row.lead_coeff = coeff(0).real();
    row.pi2_coeff = coeff(3).real();
    row.cross_coeff = std::max(std::abs(coeff(1)), std::abs(coeff(2)));
    row.pair_consistency =
        std::abs(row.pi2_coeff + 2.0 * row.lead_coeff / m) / std::fabs(row.lead_coeff);
    row.residual = (q1d - fit).norm() / q1d.norm();
    scan.rows.push_back(row);
  }

  // Least-squares slope of log(lead_coeff) against log(eps).
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = double(scan.rows.size());
  for (const AdjointScanRow& r : scan.rows) {
    const double lx = std::log(r.epsilon);
    const double ly = std::log(std::fabs(r.lead_coeff));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  scan.fitted_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return scan;
}

SparseOp SparseOp::zero(int dim) {
  SparseOp m;
  m.dim = dim;
  m.col.resize(dim);
  return m;
}

SparseOp SparseOp::identity(int dim) {
  SparseOp m = zero(dim);
  for (int j = 0; j < dim; ++j) m.col[j].emplace_back(j, 1.0);
  return m;
}

SparseOp sparse_mul(const SparseOp& x, const SparseOp& y) {
  if (x.dim != y.dim) throw std::logic_error("sparse_mul: shape mismatch");
  SparseOp out = SparseOp::zero(x.dim);
  std::vector<std::complex<double>> tmp(x.dim, 0.0);
  std::vector<int> touched;
  for (int j = 0; j < y.dim; ++j) {
    touched.clear();
    for (const auto& [k, vk] : y.col[j]) {
      for (const auto& [i, vi] : x.col[k]) {
        if (tmp[i] == 0.0) touched.push_back(i);
        tmp[i] += vi * vk;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (int i : touched) {
      if (tmp[i] != 0.0) out.col[j].emplace_back(i, tmp[i]);
      tmp[i] = 0.0;
    }
  }
  return out;
}

SparseOp sparse_lincomb(std::complex<double> cx, const SparseOp& x, std::complex<double> cy,
                        const SparseOp& y) {
  if (x.dim != y.dim) throw std::logic_error("sparse_lincomb: shape mismatch");
  SparseOp out = SparseOp::zero(x.dim);
  std::vector<std::complex<double>> tmp(x.dim, 0.0);
  std::vector<int> touched;
  for (int j = 0; j < x.dim; ++j) {
    touched.clear();
    for (const auto& [i, v] : x.col[j]) {
      if (tmp[i] == 0.0) touched.push_back(i);
      tmp[i] += cx * v;
    }
    for (const auto& [i, v] : y.col[j]) {
      if (tmp[i] == 0.0) touched.push_back(i);
      tmp[i] += cy * v;
    }
    std::sort(touched.begin(), touched.end());
    for (int i : touched) {
      if (tmp[i] != 0.0) out.col[j].emplace_back(i, tmp[i]);
      tmp[i] = 0.0;
    }
  }
  return out;
}

SparseOp sparse_scale(std::complex<double> c, const SparseOp& x) {
  SparseOp out = x;
  for (auto& column : out.col)
    for (auto& [i, v] : column) v *= c;
  return out;
}

SparseOp sparse_adjoint(const SparseOp& x) {
  SparseOp out = SparseOp::zero(x.dim);
  for (int j = 0; j < x.dim; ++j)
    for (const auto& [i, v] : x.col[j]) out.col[i].emplace_back(j, std::conj(v));
  for (auto& column : out.col)
    std::sort(column.begin(), column.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

SparseOp sparse_star(const SparseOp& x, const MetricOperator& metric) {
  SparseOp out = sparse_adjoint(x);
  for (int j = 0; j < out.dim; ++j)
    for (auto& [i, v] : out.col[j]) v *= metric.signs(i) * metric.signs(j);
  return out;
}

double sparse_max_abs_interior(const SparseOp& x, const FockBasis& basis, int margin) {
  double best = 0.0;
  for (int j = 0; j < x.dim; ++j) {
    if (!basis.interior(j, margin)) continue;
    for (const auto& [i, v] : x.col[j]) best = std::max(best, std::abs(v));
  }
  return best;
}

Op sparse_to_dense(const SparseOp& x) {
  Op out = Op::Zero(x.dim, x.dim);
  for (int j = 0; j < x.dim; ++j)
    for (const auto& [i, v] : x.col[j]) out(i, j) = v;
  return out;
}

DegenerateAlgebra build_degenerate_algebra(int basis_nmax, double mu, double omega) {
  if (!(mu > 0.0)) throw std::domain_error("build_degenerate_algebra: mu must be positive");
  if (!(omega > 0.0)) throw std::domain_error("build_degenerate_algebra: omega must be positive");
  DegenerateAlgebra alg{FockBasis(basis_nmax), mu, omega, {}, {}, {}, {},
                        {},                    {},  {},    {}, {}, {}};
  const int dim = alg.basis.dim();
  alg.A1 = SparseOp::zero(dim);
  alg.A2 = SparseOp::zero(dim);
  for (int j = 0; j < dim; ++j) {
    const auto& [n1, n2] = alg.basis.labels[j];
    if (const int i = alg.basis.index(n1 - 1, n2); i >= 0)
      alg.A1.col[j].emplace_back(i, std::sqrt(double(n1)));
    if (const int i = alg.basis.index(n1, n2 - 1); i >= 0)
      alg.A2.col[j].emplace_back(i, std::sqrt(double(n2)));
  }
  alg.A1s = sparse_adjoint(alg.A1);
  alg.A2s = sparse_scale(-1.0, sparse_adjoint(alg.A2));
  const double c = std::sqrt(0.5 * mu);
  alg.a = sparse_lincomb(c, alg.A1, c, alg.A2);
  alg.b = sparse_lincomb(c, alg.A1, -c, alg.A2);
  alg.as = sparse_lincomb(c, alg.A1s, c, alg.A2s);
  alg.bs = sparse_lincomb(c, alg.A1s, -c, alg.A2s);
  const SparseOp bsb = sparse_mul(alg.bs, alg.b);
  const SparseOp asb = sparse_mul(alg.as, alg.b);
  const SparseOp bsa = sparse_mul(alg.bs, alg.a);
  alg.h_mixed = sparse_scale(omega / mu,
                             sparse_lincomb(1.0, sparse_lincomb(2.0, bsb, 1.0, asb), 1.0, bsa));
  const SparseOp a1d = sparse_adjoint(alg.A1);
  const SparseOp a2d = sparse_adjoint(alg.A2);
  alg.h_ladder = sparse_scale(
      omega, sparse_lincomb(1.0,
                            sparse_lincomb(2.0, sparse_mul(a1d, alg.A1), -1.0,
                                           sparse_mul(a1d, alg.A2)),
                            1.0, sparse_mul(a2d, alg.A1)));
  return alg;
}

}  // namespace pu::fock
