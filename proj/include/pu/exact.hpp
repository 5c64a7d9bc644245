#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

// Exact-arithmetic layer for the equal-frequency scheme.  All operators are
// represented on the unnormalised monomial basis
//
//     e_{n1 n2} = (R1)^{n1} (R2)^{n2} |0,0> ,
//
// in which both ladder directions act with integer coefficients:
// R_i e = e' and A_i e = n_i e''.  Identities checked in this basis are
// exact, not approximate: integer matrix algebra over 64-bit entries for the
// algebraic identities, GMP big integers for rank computations, norms and
// factorial-weighted coefficients.
//
// On the invariant subspace N = n the Hamiltonian (in units of omega) is
// the (n+1) x (n+1) integer matrix
//
//     M[k, k] = 2k,  M[k+1, k] = -(n - k),  M[k-1, k] = k ,
//
// a single Jordan block: rank (M - n)^j = n + 1 - j, nilpotency index n + 1,
// one eigenvector with binomial coordinates and vanishing indefinite norm.

namespace pu::exact {

using Int = mpz_class;

// Dense big-integer matrix.
struct IMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c) {}
  Int& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[std::size_t(i) * cols + j]; }
  static IMat identity(int n);
};

IMat imul(const IMat& x, const IMat& y);
IMat isub(const IMat& x, const IMat& y);
bool is_zero(const IMat& x);

// Rank over the integers (= rank over Q) by fraction-free Bareiss
// elimination with full pivoting.
int bareiss_rank(IMat m);

// Exact integer kernel of a matrix with nullity one: returns the primitive
// integer vector (content 1, first nonzero entry positive).  Throws if the
// nullity is not exactly one.
std::vector<Int> kernel_vector(const IMat& m);

// Sparse integer matrix, column-major action on the truncated basis.
struct SparseIntMat {
  int dim = 0;
  std::vector<std::vector<std::pair<int, long long>>> col;  // col[j] = {(row, value)}

  static SparseIntMat zero(int dim);
  static SparseIntMat identity(int dim);
};

SparseIntMat smul(const SparseIntMat& x, const SparseIntMat& y);  // overflow-checked
SparseIntMat slincomb(long long cx, const SparseIntMat& x, long long cy, const SparseIntMat& y);

// Two-mode ladder operators on { e_{n1 n2} : n1 + n2 <= nmax }.
struct MonomialOps {
  int nmax = 0;
  int dim = 0;
  std::vector<std::pair<int, int>> labels;
  SparseIntMat a1, a2;  // lowering, A_i e = n_i e''
  SparseIntMat r1, r2;  // raising, clipped at the truncation edge
  SparseIntMat number;  // N = N1 + N2
  SparseIntMat h;       // 2 R1 A1 - R1 A2 + R2 A1, in units of omega

  int index(int n1, int n2) const;
  bool interior(int flat, int margin) const;
};
MonomialOps build_monomial_ops(int nmax);

// Largest |entry| over columns whose label satisfies n1 + n2 <= nmax - margin.
long long max_abs_interior(const SparseIntMat& m, const MonomialOps& ops, int margin);

// H restricted to the N = n subspace, basis e_k = e_{k, n-k}.
IMat h_subspace(int n);

struct JordanReport {
  int n = 0;
  bool single_block = false;
  std::vector<int> ranks;      // rank((M - n)^j) for j = 1, 2, ...
  bool ranks_derived = false;  // large n: sequence pinned by the kernel-chain argument
  int nilpotency_index = 0;    // smallest j with (M - n)^j = 0
  std::vector<Int> eigenvector;
  Int metric_norm;  // sum_k v_k^2 k! (n-k)! (-1)^{n-k}
};
JordanReport jordan_analysis(int n);

// Coefficients of the unique eigenvector on the normalised number basis:
// coeff * sqrt(radicand) with squarefree radicand, from binom(n,k)
// sqrt(k! (n-k)!).
struct RadicalCoeff {
  Int coeff;
  Int radicand;
};
std::vector<RadicalCoeff> chain_eigenvector(int n);

// Indefinite norm sum_k binom(n,k)^2 k!(n-k)! (-1)^{n-k}; equals n! (1-1)^n,
// i.e. 0 for n >= 1 and 1 for n = 0.
Int zero_norm_value(int n);

// Exact commutator defect [M, M^dagger] on the N = n subspace in the
// normalised basis, whose entries are integers times square roots; the
// largest entry is reported as (coeff, radicand) maximising coeff^2 *
// radicand.  Zero only at n = 0.
struct NormalityDefect {
  bool zero = true;
  long long max_coeff = 0;
  long long max_radicand = 1;
};
NormalityDefect normality_defect(int n);

}  // namespace pu::exact
