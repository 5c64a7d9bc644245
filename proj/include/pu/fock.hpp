#pragma once

#include <Eigen/Dense>

#include <complex>
#include <utility>
#include <vector>

#include "pu/params.hpp"
#include "pu/spectra.hpp"

// Concrete matrix realisation of the two quantisation schemes on the
// truncated two-mode number basis { |n1, n2> : n1 + n2 <= nmax }.
//
// Indefinite-energy scheme: hermitean H with spectrum
// -hbar w1 (n1+1/2) + hbar w2 (n2+1/2) on a positive-norm basis.
//
// Positive-energy scheme: the same algebra supports a positive spectrum at
// the price of an indefinite inner product <.|.>_eta = <.|eta|.> with
// eta = (-1)^{N1}; operator adjoints with respect to it are
// A^+ = eta A^dagger eta.
//
// Truncation note: products of ladder matrices are exact on interior labels
// (n1 + n2 <= nmax - margin) and clipped on the top layers; every check
// accounts for this by restricting to the interior block.

namespace pu::fock {

using Op = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

struct FockBasis {
  explicit FockBasis(int nmax);
  int nmax = 0;
  std::vector<std::pair<int, int>> labels;  // flat index -> (n1, n2)
  int dim() const { return int(labels.size()); }
  int index(int n1, int n2) const;  // -1 outside the truncation
  bool interior(int flat, int margin = 2) const;
};

// Lowering/raising matrices and the mode quadratures
//   x_i = i sqrt(hbar / 2 m w_i) (a_i - a_i^dagger),
//   p_i =   sqrt(m hbar w_i / 2) (a_i + a_i^dagger),
// both hermitean, for which the decoupled Hamiltonian assembled as
// (osc 2) - (osc 1) is diagonal with the indefinite-energy spectrum.
struct ModeOperators {
  FockBasis basis;
  OscillatorParams params;
  double w1 = 0.0, w2 = 0.0;
  Op a1, a2, a1d, a2d;
  Op x1, x2, p1, p2;
};
ModeOperators build_mode_operators(const FockBasis& basis, const OscillatorParams& p);

// Hamiltonian of the decoupled modes, (p2^2/2m + m w2^2 x2^2/2) -
// (p1^2/2m + m w1^2 x1^2/2), assembled from the matrices above.
Op hamiltonian_normal_op(const ModeOperators& ops);

// Ostrogradski Hamiltonian assembled from the operator images of the
// decoupling map (identical to hamiltonian_normal_op on interior labels).
Op hamiltonian_ostrogradski_op(const ModeOperators& ops);

// Diagonal sign metrics.
struct MetricOperator {
  Eigen::VectorXd signs;
};
MetricOperator metric_eta(const FockBasis& basis);  // (-1)^{n1}
MetricOperator metric_tau(const FockBasis& basis);  // (-1)^{n2}

Op star_conjugate(const Op& a, const MetricOperator& metric);  // eta a^dagger eta
std::complex<double> metric_inner(const MetricOperator& metric, const Vec& u, const Vec& v);

double max_abs_interior(const Op& a, const FockBasis& basis, int margin = 2);
Op commutator(const Op& a, const Op& b);

// Positive-energy scheme cross-check: builds the standard hermitean
// quadratures X'_i, P'_i, the positive Hamiltonian H' = sum_i (P'_i^2/2m +
// m w_i^2 X'_i^2 / 2), and verifies it against the indefinite-energy scheme
// through the substitution x1 -> -i X'_1, p1 -> i P'_1.
struct PositiveCheckReport {
  double ground_energy = 0.0;
  double ground_expected = 0.0;
  double max_interior_rel_dev = 0.0;   // eigenvalues vs hbar(w1(n1+1/2)+w2(n2+1/2))
  double substitution_residual = 0.0;  // |H8(mapped) - H'| over all entries
  double offdiag_interior = 0.0;       // |offdiag of H'| on interior columns
  int interior_levels = 0;
};
PositiveCheckReport positive_hamiltonian_check(const FockBasis& basis,
                                               const OscillatorParams& p);

// Adjoint of the position operator q1 in the positive scheme, decomposed on
// the operator basis {q1, q2, Pi1, Pi2}: q1^+ = lead_coeff q1 + ... with
// lead_coeff = 1/eps exactly.  The scan fits log(lead_coeff) vs log(eps).
struct AdjointScanRow {
  double epsilon = 0.0;
  double lead_coeff = 0.0;         // coefficient of q1
  double pi2_coeff = 0.0;          // coefficient of Pi2 (equals -2 lead/m)
  double cross_coeff = 0.0;        // max |coefficient| of q2, Pi1 (expected 0)
  double pair_consistency = 0.0;   // |pi2_coeff + 2 lead/m| / lead
  double residual = 0.0;           // fit residual relative to |q1^+|
};
struct AdjointScan {
  std::vector<AdjointScanRow> rows;
  double fitted_slope = 0.0;  // d log(lead) / d log(eps)
};
AdjointScan adjoint_blowup_scan(int basis_nmax, double m, double omega, double hbar,
                                const std::vector<double>& eps_list);

// Column-sparse operator.  Ladder combinations keep O(1) nonzeros per
// column, so products and commutators on large truncations cost O(dim)
// where dense GEMM would not fit the runtime budget.
struct SparseOp {
  int dim = 0;
  std::vector<std::vector<std::pair<int, std::complex<double>>>> col;

  static SparseOp zero(int dim);
  static SparseOp identity(int dim);
};

SparseOp sparse_mul(const SparseOp& x, const SparseOp& y);
SparseOp sparse_lincomb(std::complex<double> cx, const SparseOp& x, std::complex<double> cy,
                        const SparseOp& y);
SparseOp sparse_scale(std::complex<double> c, const SparseOp& x);
SparseOp sparse_adjoint(const SparseOp& x);
// metric . adjoint . metric, the star conjugation for a diagonal sign metric.
SparseOp sparse_star(const SparseOp& x, const MetricOperator& metric);
double sparse_max_abs_interior(const SparseOp& x, const FockBasis& basis, int margin = 2);
Op sparse_to_dense(const SparseOp& x);

// Equal-frequency scheme: mode ladders A1, A2 with star conjugates
// A1* = A1^dagger, A2* = -A2^dagger, the mixed pair a = sqrt(mu/2)(A1+A2),
// b = sqrt(mu/2)(A1-A2) obeying [b, a*] = [a, b*] = mu, and the Hamiltonian
//   H = (w/mu)(2 b* b + a* b + b* a)
// which equals w (2 A1^dagger A1 - A1^dagger A2 + A2^dagger A1) identically
// (the additive constant between the two assemblies vanishes).
struct DegenerateAlgebra {
  FockBasis basis;
  double mu = 1.0;
  double omega = 1.0;
  SparseOp A1, A2, A1s, A2s;
  SparseOp a, b, as, bs;
  SparseOp h_mixed;   // (w/mu)(2 b* b + a* b + b* a)
  SparseOp h_ladder;  // w (2 A1d A1 - A1d A2 + A2d A1)
};
DegenerateAlgebra build_degenerate_algebra(int basis_nmax, double mu, double omega);

}  // namespace pu::fock
