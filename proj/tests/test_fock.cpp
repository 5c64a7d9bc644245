#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <stdexcept>
#include <vector>

#include "pu/exact.hpp"
#include "pu/fock.hpp"
#include "pu/params.hpp"
#include "pu/spectra.hpp"

using namespace pu;
using QN = spectra::QuantumNumbers;
using std::complex;

namespace {

long long entry(const exact::SparseIntMat& m, int i, int j) {
  for (const auto& [row, v] : m.col[j])
    if (row == i) return v;
  return 0;
}

}  // namespace

TEST_CASE("basis bookkeeping") {
  const fock::FockBasis b(6);
  CHECK(b.dim() == 28);  // triangular truncation n1 + n2 <= 6
  for (int f = 0; f < b.dim(); ++f)
    CHECK(b.index(b.labels[f].first, b.labels[f].second) == f);
  CHECK(b.index(7, 0) == -1);
  CHECK(b.index(0, 7) == -1);
  CHECK(b.index(3, 4) == -1);
  CHECK(b.interior(b.index(2, 2), 2));
  CHECK(!b.interior(b.index(3, 2), 2));
}

TEST_CASE("ladder commutators hold on interior labels") {
  const fock::FockBasis b(8);
  const OscillatorParams p;
  const fock::ModeOperators ops = fock::build_mode_operators(b, p);
  const fock::Op eye = fock::Op::Identity(b.dim(), b.dim());
  CHECK(fock::max_abs_interior(fock::commutator(ops.a1, ops.a1d) - eye, b) <= 1e-12);
  CHECK(fock::max_abs_interior(fock::commutator(ops.a2, ops.a2d) - eye, b) <= 1e-12);
  CHECK(fock::max_abs_interior(fock::commutator(ops.a1, ops.a2d), b) <= 1e-12);
}

TEST_CASE("decoupled Hamiltonian is diagonal with the scheme spectrum") {
  const fock::FockBasis b(8);
  const OscillatorParams p;
  const fock::ModeOperators ops = fock::build_mode_operators(b, p);
  const fock::Op h = fock::hamiltonian_normal_op(ops);
  const int f = b.index(1, 2);
  const double want = spectra::energy_indefinite(QN{1, 2}, p);
  CHECK(std::abs(h(f, f).real() - want) <= 1e-12 * std::abs(want));
  CHECK(std::abs(h(f, f).imag()) <= 1e-14);
  const fock::Op g = fock::hamiltonian_ostrogradski_op(ops);
  CHECK(fock::max_abs_interior(h - g, b) <= 1e-9);
}

TEST_CASE("sign metrics and the metric inner product") {
  const fock::FockBasis b(6);
  const fock::MetricOperator eta = fock::metric_eta(b);
  const fock::MetricOperator tau = fock::metric_tau(b);
  CHECK(eta.signs(b.index(1, 0)) == -1.0);
  CHECK(eta.signs(b.index(2, 0)) == 1.0);
  CHECK(eta.signs(b.index(0, 1)) == 1.0);
  CHECK(tau.signs(b.index(0, 1)) == -1.0);
  fock::Vec u = fock::Vec::Zero(b.dim());
  u(b.index(1, 0)) = 1.0;
  CHECK(fock::metric_inner(eta, u, u) == complex<double>(-1.0, 0.0));
  fock::Vec v = fock::Vec::Zero(b.dim());
  v(b.index(0, 1)) = 1.0;
  CHECK(fock::metric_inner(eta, v, v) == complex<double>(1.0, 0.0));
  CHECK(fock::metric_inner(eta, u, v) == complex<double>(0.0, 0.0));
}

TEST_CASE("star conjugation is an exact involution") {
  const fock::FockBasis b(6);
  const OscillatorParams p;
  const fock::ModeOperators ops = fock::build_mode_operators(b, p);
  const fock::MetricOperator eta = fock::metric_eta(b);
  const fock::Op twice = fock::star_conjugate(fock::star_conjugate(ops.a1, eta), eta);
  CHECK((twice - ops.a1).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("positive scheme reproduces its ground level") {
  const fock::FockBasis b(8);
  const OscillatorParams p;
  const fock::PositiveCheckReport rep = fock::positive_hamiltonian_check(b, p);
  CHECK(rep.interior_levels > 0);
  CHECK(std::abs(rep.ground_energy - rep.ground_expected) <=
        1e-10 * std::abs(rep.ground_expected));
}

TEST_CASE("sparse algebra matches dense products") {
  const fock::DegenerateAlgebra alg = fock::build_degenerate_algebra(6, 1.0, 1.0);
  const fock::Op da1 = fock::sparse_to_dense(alg.A1);
  const fock::Op da2 = fock::sparse_to_dense(alg.A2);
  const fock::Op prod = fock::sparse_to_dense(fock::sparse_mul(alg.A1, alg.A2));
  CHECK((prod - da1 * da2).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK((fock::sparse_to_dense(fock::sparse_adjoint(alg.A1)) - da1.adjoint())
            .cwiseAbs()
            .maxCoeff() == 0.0);
  // the two Hamiltonian assemblies coincide away from the truncation edge
  const fock::SparseOp diff = fock::sparse_lincomb(1.0, alg.h_mixed, -1.0, alg.h_ladder);
  CHECK(fock::sparse_max_abs_interior(diff, alg.basis) <= 1e-12);
  // star structure of the mode ladders
  CHECK((fock::sparse_to_dense(alg.A1s) - da1.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((fock::sparse_to_dense(alg.A2s) + da2.adjoint()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("integer rank and kernel") {
  exact::IMat m(3, 3);
  const long vals[9] = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = vals[3 * i + j];
  CHECK(exact::bareiss_rank(m) == 2);

  exact::IMat k(2, 2);
  k.at(0, 0) = 1;
  k.at(0, 1) = 2;
  k.at(1, 0) = 2;
  k.at(1, 1) = 4;
  const std::vector<exact::Int> v = exact::kernel_vector(k);
  REQUIRE(v.size() == 2);
  CHECK(v[0] == 2);
  CHECK(v[1] == -1);

  CHECK_THROWS_AS(exact::kernel_vector(exact::IMat::identity(2)), std::domain_error);
  CHECK_THROWS_AS(exact::kernel_vector(exact::IMat(2, 2)), std::domain_error);
}

TEST_CASE("invariant subspace matrix is the documented tridiagonal") {
  const exact::IMat m = exact::h_subspace(2);
  const long want[3][3] = {{0, 1, 0}, {-2, 2, 2}, {0, -1, 4}};
  REQUIRE(m.rows == 3);
  REQUIRE(m.cols == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(m.at(i, j) == want[i][j]);
}

TEST_CASE("Jordan structure at a small label") {
  const exact::JordanReport rep = exact::jordan_analysis(5);
  CHECK(rep.single_block);
  CHECK(!rep.ranks_derived);
  CHECK(rep.nilpotency_index == 6);
  REQUIRE(rep.ranks.size() == 6);
  for (int j = 1; j <= 6; ++j) CHECK(rep.ranks[j - 1] == 6 - j);
  const long binom[6] = {1, 5, 10, 10, 5, 1};
  REQUIRE(rep.eigenvector.size() == 6);
  for (int kk = 0; kk < 6; ++kk) CHECK(rep.eigenvector[kk] == binom[kk]);
  CHECK(rep.metric_norm == 0);
}

TEST_CASE("eigenvector coefficients on the normalised basis") {
  const std::vector<exact::RadicalCoeff> c = exact::chain_eigenvector(2);
  REQUIRE(c.size() == 3);
  CHECK(c[0].coeff == 1);
  CHECK(c[0].radicand == 2);
  CHECK(c[1].coeff == 2);
  CHECK(c[1].radicand == 1);
  CHECK(c[2].coeff == 1);
  CHECK(c[2].radicand == 2);
  CHECK(exact::zero_norm_value(2) == 0);
  CHECK(exact::zero_norm_value(0) == 1);
}

TEST_CASE("normality defect vanishes only at the bottom label") {
  CHECK(exact::normality_defect(0).zero);
  const exact::NormalityDefect d = exact::normality_defect(1);
  CHECK(!d.zero);
  CHECK(d.max_coeff == 4);
  CHECK(d.max_radicand == 1);
}

TEST_CASE("monomial ladder action carries integer coefficients") {
  const exact::MonomialOps ops = exact::build_monomial_ops(6);
  const int j = ops.index(1, 1);
  CHECK(entry(ops.h, ops.index(1, 1), j) == 2);
  CHECK(entry(ops.h, ops.index(2, 0), j) == -1);
  CHECK(entry(ops.h, ops.index(0, 2), j) == 1);
  CHECK(entry(ops.number, j, j) == 2);
}

TEST_CASE("sparse integer products are overflow checked") {
  exact::SparseIntMat m = exact::SparseIntMat::zero(1);
  m.col[0].emplace_back(0, 3000000000000000000LL);
  CHECK_THROWS_AS(exact::smul(m, m), std::overflow_error);
}
