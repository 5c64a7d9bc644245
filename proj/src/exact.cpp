#include "pu/exact.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace pu::exact {

IMat IMat::identity(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat imul(const IMat& x, const IMat& y) {
  if (x.cols != y.rows) throw std::logic_error("imul: shape mismatch");
  IMat out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        if (y.at(k, j) == 0) continue;
        out.at(i, j) += v * y.at(k, j);
      }
    }
  return out;
}

IMat isub(const IMat& x, const IMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::logic_error("isub: shape mismatch");
  IMat out(x.rows, x.cols);
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = x.a[i] - y.a[i];
  return out;
}

bool is_zero(const IMat& x) {
  for (const Int& v : x.a)
    if (v != 0) return false;
  return true;
}

int bareiss_rank(IMat m) {
  const int rows = m.rows, cols = m.cols;
  const int steps = std::min(rows, cols);
  Int prev = 1;
  int rank = 0;
  for (int k = 0; k < steps; ++k) {
    int pi = -1, pj = -1;
    for (int i = k; i < rows && pi < 0; ++i)
      for (int j = k; j < cols; ++j)
        if (m.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    if (pi != k)
      for (int j = 0; j < cols; ++j) std::swap(m.at(k, j), m.at(pi, j));
    if (pj != k)
      for (int i = 0; i < rows; ++i) std::swap(m.at(i, k), m.at(i, pj));
    for (int i = k + 1; i < rows; ++i) {
      for (int j = k + 1; j < cols; ++j) {
        Int t = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
    ++rank;
  }
  return rank;
}

std::vector<Int> kernel_vector(const IMat& m) {
  const int rows = m.rows, cols = m.cols;
  std::vector<std::vector<mpq_class>> q(rows, std::vector<mpq_class>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) q[i][j] = mpq_class(m.at(i, j));

  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int p = -1;
    for (int i = row; i < rows; ++i)
      if (q[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(q[p], q[row]);
    const mpq_class inv = q[row][col];
    for (int j = col; j < cols; ++j) q[row][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || q[i][col] == 0) continue;
      const mpq_class f = q[i][col];
      for (int j = col; j < cols; ++j) q[i][j] -= f * q[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  const int rank = int(pivot_col.size());
  if (cols - rank != 1) throw std::domain_error("kernel_vector: nullity is not one");

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = 0;
  while (is_pivot[free_col]) ++free_col;

  std::vector<mpq_class> x(cols, 0);
  x[free_col] = 1;
  for (int r = rank - 1; r >= 0; --r) {
    const int pc = pivot_col[r];
    mpq_class s = 0;
    for (int j = pc + 1; j < cols; ++j)
      if (q[r][j] != 0) s += q[r][j] * x[j];
    x[pc] = -s;  // pivot entry is 1 after reduction
  }

  Int lcm = 1;
  for (const mpq_class& v : x) {
    Int den = v.get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<Int> out(cols);
  Int content = 0;
  for (int j = 0; j < cols; ++j) {
    mpq_class scaled = x[j] * mpq_class(lcm);
    out[j] = scaled.get_num();  // denominator is 1 by construction
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[j].get_mpz_t());
  }
  if (content > 1)
    for (Int& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  for (const Int& v : out) {
    if (v == 0) continue;
    if (v < 0)
      for (Int& w : out) w = -w;
    break;
  }
  return out;
}

SparseIntMat SparseIntMat::zero(int dim) {
  SparseIntMat m;
  m.dim = dim;
  m.col.resize(dim);
  return m;
}

SparseIntMat SparseIntMat::identity(int dim) {
  SparseIntMat m = zero(dim);
  for (int j = 0; j < dim; ++j) m.col[j].emplace_back(j, 1);
  return m;
}

namespace {

long long checked_mul(long long a, long long b) {
  long long out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("sparse integer matrix product overflows 64 bits");
  return out;
}

long long checked_add(long long a, long long b) {
  long long out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("sparse integer matrix sum overflows 64 bits");
  return out;
}

}  // namespace

SparseIntMat smul(const SparseIntMat& x, const SparseIntMat& y) {
  if (x.dim != y.dim) throw std::logic_error("smul: shape mismatch");
  SparseIntMat out = SparseIntMat::zero(x.dim);
  std::vector<long long> tmp(x.dim, 0);
  std::vector<int> touched;
  for (int j = 0; j < y.dim; ++j) {
    touched.clear();
    for (const auto& [k, vk] : y.col[j]) {
      for (const auto& [i, vi] : x.col[k]) {
        if (tmp[i] == 0) touched.push_back(i);
        tmp[i] = checked_add(tmp[i], checked_mul(vi, vk));
      }
    }
    std::sort(touched.begin(), touched.end());
    for (int i : touched) {
      if (tmp[i] != 0) out.col[j].emplace_back(i, tmp[i]);
      tmp[i] = 0;
    }
  }
  return out;
}

SparseIntMat slincomb(long long cx, const SparseIntMat& x, long long cy, const SparseIntMat& y) {
  if (x.dim != y.dim) throw std::logic_error("slincomb: shape mismatch");
  SparseIntMat out = SparseIntMat::zero(x.dim);
  std::vector<long long> tmp(x.dim, 0);
  std::vector<int> touched;
  for (int j = 0; j < x.dim; ++j) {
    touched.clear();
    for (const auto& [i, v] : x.col[j]) {
      if (tmp[i] == 0) touched.push_back(i);
      tmp[i] = checked_add(tmp[i], checked_mul(cx, v));
    }
    for (const auto& [i, v] : y.col[j]) {
      if (tmp[i] == 0) touched.push_back(i);
      tmp[i] = checked_add(tmp[i], checked_mul(cy, v));
    }
    std::sort(touched.begin(), touched.end());
    for (int i : touched) {
      if (tmp[i] != 0) out.col[j].emplace_back(i, tmp[i]);
      tmp[i] = 0;
    }
  }
  return out;
}

int MonomialOps::index(int n1, int n2) const {
  if (n1 < 0 || n2 < 0 || n1 + n2 > nmax) return -1;
  const int total = n1 + n2;
  return total * (total + 1) / 2 + (total - n1);
}

bool MonomialOps::interior(int flat, int margin) const {
  const auto& [n1, n2] = labels[flat];
  return n1 + n2 <= nmax - margin;
}

MonomialOps build_monomial_ops(int nmax) {
  if (nmax < 2) throw std::domain_error("build_monomial_ops: nmax must be at least 2");
  MonomialOps ops;
  ops.nmax = nmax;
  for (int total = 0; total <= nmax; ++total)
    for (int n1 = total; n1 >= 0; --n1) ops.labels.emplace_back(n1, total - n1);
  ops.dim = int(ops.labels.size());
  ops.a1 = SparseIntMat::zero(ops.dim);
  ops.a2 = SparseIntMat::zero(ops.dim);
  ops.r1 = SparseIntMat::zero(ops.dim);
  ops.r2 = SparseIntMat::zero(ops.dim);
  ops.number = SparseIntMat::zero(ops.dim);
  for (int j = 0; j < ops.dim; ++j) {
    const auto& [n1, n2] = ops.labels[j];
    if (int i = ops.index(n1 - 1, n2); i >= 0) ops.a1.col[j].emplace_back(i, n1);
    if (int i = ops.index(n1, n2 - 1); i >= 0) ops.a2.col[j].emplace_back(i, n2);
    if (int i = ops.index(n1 + 1, n2); i >= 0) ops.r1.col[j].emplace_back(i, 1);
    if (int i = ops.index(n1, n2 + 1); i >= 0) ops.r2.col[j].emplace_back(i, 1);
    if (n1 + n2 > 0) ops.number.col[j].emplace_back(j, n1 + n2);
  }
  ops.h = slincomb(1, slincomb(2, smul(ops.r1, ops.a1), -1, smul(ops.r1, ops.a2)), 1,
                   smul(ops.r2, ops.a1));
  return ops;
}

long long max_abs_interior(const SparseIntMat& m, const MonomialOps& ops, int margin) {
  long long best = 0;
  for (int j = 0; j < m.dim; ++j) {
    if (!ops.interior(j, margin)) continue;
    for (const auto& [i, v] : m.col[j]) best = std::max(best, v < 0 ? -v : v);
  }
  return best;
}

IMat h_subspace(int n) {
  if (n < 0) throw std::domain_error("h_subspace: n must be nonnegative");
  IMat m(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) {
    m.at(k, k) = 2 * k;
    if (k + 1 <= n) m.at(k + 1, k) = -(n - k);
    if (k - 1 >= 0) m.at(k - 1, k) = k;
  }
  return m;
}

JordanReport jordan_analysis(int n) {
  JordanReport rep;
  rep.n = n;
  const IMat m = h_subspace(n);
  IMat d = m;
  for (int k = 0; k <= n; ++k) d.at(k, k) -= n;

  rep.single_block = true;
  // Every power's rank is computed directly while the Bareiss minors stay
  // small; past that the sequence is pinned exactly by two cheap facts
  // (see the kernel-chain argument below).
  constexpr int kDirectRankMax = 32;
  const bool direct = n <= kDirectRankMax;

  IMat power = IMat::identity(n + 1);
  int j = 0;
  bool power_n_nonzero = false;
  while (true) {
    power = imul(power, d);
    ++j;
    if (j == n && !is_zero(power)) power_n_nonzero = true;
    if (direct) {
      const int rank = bareiss_rank(power);
      rep.ranks.push_back(rank);
      if (rank != std::max(0, n + 1 - j)) rep.single_block = false;
      if (rank == 0) {
        rep.nilpotency_index = j;
        break;
      }
    } else if (is_zero(power)) {
      rep.nilpotency_index = j;
      break;
    }
    if (j > n + 2) {  // not nilpotent within the expected index; give up
      rep.nilpotency_index = -1;
      rep.single_block = false;
      break;
    }
  }

  if (!direct && rep.nilpotency_index > 0) {
    // Kernel-chain argument: D maps ker D^{j+1}/ker D^j injectively into
    // ker D^j/ker D^{j-1}, so nullity increments never grow with j.  With
    // rank(D) = n (unit first increment), D^{n+1} = 0 and D^n != 0 -- each
    // established exactly above -- the increments are all 1, which forces
    // rank(D^j) = n + 1 - j and nilpotency index exactly n + 1.
    const int rank1 = bareiss_rank(d);
    rep.single_block = rank1 == n && rep.nilpotency_index == n + 1 && power_n_nonzero;
    rep.ranks_derived = true;
    if (rep.single_block) {
      rep.ranks.clear();
      for (int k = 1; k <= n + 1; ++k) rep.ranks.push_back(n + 1 - k);
    } else {
      rep.ranks.assign(1, rank1);
    }
  }

  rep.eigenvector = kernel_vector(d);
  Int norm = 0;
  Int fk, fnk;
  for (int k = 0; k <= n; ++k) {
    mpz_fac_ui(fk.get_mpz_t(), unsigned(k));
    mpz_fac_ui(fnk.get_mpz_t(), unsigned(n - k));
    Int term = rep.eigenvector[k] * rep.eigenvector[k] * fk * fnk;
    if ((n - k) % 2 == 1)
      norm -= term;
    else
      norm += term;
  }
  rep.metric_norm = norm;
  return rep;
}

namespace {

// Exponent of prime p in k! (Legendre's formula).
long long legendre_exponent(int k, int p) {
  long long e = 0;
  for (long long q = p; q <= k; q *= p) e += k / q;
  return e;
}

std::vector<int> primes_up_to(int n) {
  std::vector<int> primes;
  std::vector<bool> sieve(std::max(n + 1, 3), true);
  for (int i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    primes.push_back(i);
    for (long long j = (long long)i * i; j <= n; j += i) sieve[j] = false;
  }
  return primes;
}

}  // namespace

std::vector<RadicalCoeff> chain_eigenvector(int n) {
  if (n < 0) throw std::domain_error("chain_eigenvector: n must be nonnegative");
  const std::vector<int> primes = primes_up_to(n);
  std::vector<RadicalCoeff> out(n + 1);
  for (int k = 0; k <= n; ++k) {
    Int square_part = 1, radicand = 1;
    for (int p : primes) {
      const long long e = legendre_exponent(k, p) + legendre_exponent(n - k, p);
      if (e / 2 > 0) {
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), unsigned(p), unsigned(e / 2));
        square_part *= pw;
      }
      if (e % 2 == 1) radicand *= p;
    }
    Int bin;
    mpz_bin_uiui(bin.get_mpz_t(), unsigned(n), unsigned(k));
    out[k].coeff = bin * square_part;
    out[k].radicand = radicand;
  }
  return out;
}

Int zero_norm_value(int n) {
  if (n < 0) throw std::domain_error("zero_norm_value: n must be nonnegative");
  Int total = 0;
  Int bin, fk, fnk;
  for (int k = 0; k <= n; ++k) {
    mpz_bin_uiui(bin.get_mpz_t(), unsigned(n), unsigned(k));
    mpz_fac_ui(fk.get_mpz_t(), unsigned(k));
    mpz_fac_ui(fnk.get_mpz_t(), unsigned(n - k));
    Int term = bin * bin * fk * fnk;
    if ((n - k) % 2 == 1)
      total -= term;
    else
      total += term;
  }
  return total;
}

namespace {

// Scalar of the form sum_r coeff_r sqrt(r) with squarefree radicands r.
using Rad = std::map<long long, long long>;

void rad_add(Rad& dst, long long radicand, long long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = dst.emplace(radicand, coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) dst.erase(it);
  }
}

// (c1 sqrt(r1)) * (c2 sqrt(r2)) = c1 c2 g sqrt((r1/g)(r2/g)), g = gcd(r1,r2);
// the product radicand is squarefree because r1/g and r2/g are coprime.
void rad_mul_into(Rad& dst, long long r1, long long c1, long long r2, long long c2) {
  const long long g = std::gcd(r1, r2);
  const long long radicand = checked_mul(r1 / g, r2 / g);
  const long long coeff = checked_mul(checked_mul(c1, c2), g);
  rad_add(dst, radicand, coeff);
}

}  // namespace

NormalityDefect normality_defect(int n) {
  if (n < 0) throw std::domain_error("normality_defect: n must be nonnegative");
  const int d = n + 1;
  // H on the normalised basis: diag 2k, sub -sqrt((k+1)(n-k)), super +sqrt(k(n-k+1)).
  std::vector<Rad> h(std::size_t(d) * d), hd(std::size_t(d) * d);
  auto at = [d](std::vector<Rad>& m, int i, int j) -> Rad& { return m[std::size_t(i) * d + j]; };
  auto put = [&](int i, int j, long long radsq, long long sign) {
    // entry sign * sqrt(radsq); split radsq = s^2 * r with r squarefree
    long long s = 1, r = radsq;
    for (long long p = 2; p * p <= r; ++p)
      while (r % (p * p) == 0) {
        r /= p * p;
        s *= p;
      }
    rad_add(at(h, i, j), r, sign * s);
    rad_add(at(hd, j, i), r, sign * s);  // real entries: dagger = transpose
  };
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      rad_add(at(h, k, k), 1, 2LL * k);
      rad_add(at(hd, k, k), 1, 2LL * k);
    }
    if (k + 1 <= n) put(k + 1, k, (long long)(k + 1) * (n - k), -1);
    if (k - 1 >= 0) put(k - 1, k, (long long)k * (n - k + 1), +1);
  }

  auto mul = [&](const std::vector<Rad>& x, const std::vector<Rad>& y) {
    std::vector<Rad> out(std::size_t(d) * d);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        const Rad& xe = x[std::size_t(i) * d + k];
        if (xe.empty()) continue;
        for (int j = 0; j < d; ++j) {
          const Rad& ye = y[std::size_t(k) * d + j];
          if (ye.empty()) continue;
          Rad& oe = out[std::size_t(i) * d + j];
          for (const auto& [r1, c1] : xe)
            for (const auto& [r2, c2] : ye) rad_mul_into(oe, r1, c1, r2, c2);
        }
      }
    return out;
  };

  const std::vector<Rad> hhd = mul(h, hd);
  const std::vector<Rad> hdh = mul(hd, h);

  NormalityDefect out;
  __int128 best = -1;
  for (std::size_t e = 0; e < hhd.size(); ++e) {
    Rad diff = hhd[e];
    for (const auto& [r, c] : hdh[e]) rad_add(diff, r, -c);
    for (const auto& [r, c] : diff) {
      out.zero = false;
      const long long ac = c < 0 ? -c : c;
      const __int128 key = (__int128)ac * ac * r;
      if (key > best) {
        best = key;
        out.max_coeff = ac;
        out.max_radicand = r;
      }
    }
  }
  return out;
}

}  // namespace pu::exact
