#pragma once

#include <gmpxx.h>

#include <vector>

#include "alcove/base.hpp"

namespace alcove {
namespace gen {

using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;

// Hermite normal form of the row lattice (row-style, column pivots);
// returns a basis of the lattice spanned by the input rows.
inline ZMat row_lattice_basis(ZMat rows) {
  if (rows.empty()) return rows;
  size_t m = rows.size(), n = rows[0].size();
  size_t r = 0; // current pivot row
  for (size_t c = 0; c < n && r < m; ++c) {
    // gcd-reduce all rows below r on column c into row r
    while (true) {
      size_t piv = m;
      for (size_t i = r; i < m; ++i)
        if (rows[i][c] != 0 && (piv == m || cmp(abs(rows[i][c]), abs(rows[piv][c])) < 0))
          piv = i;
      if (piv == m) break;
      std::swap(rows[r], rows[piv]);
      bool clean = true;
      for (size_t i = r + 1; i < m; ++i) {
        if (rows[i][c] == 0) continue;
        mpz_class q = rows[i][c] / rows[r][c]; // truncated division is fine
        if (q != 0)
          for (size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[r][c] != 0) ++r;
  }
  rows.resize(r);
  return rows;
}

// Integral LLL on linearly independent rows with the positive-definite
// bilinear form given by `dot`.  Classic Cohen 2.6.3 (all-integer).
template <class Dot>
inline void lll_reduce(ZMat& b, const Dot& dot) {
  const int n = (int)b.size();
  if (n <= 1) return;
  std::vector<ZVec> lam(n + 1, ZVec(n + 1, 0));
  ZVec d(n + 1, 0);
  d[0] = 1;

  auto redi = [&](int k, int l) {
    // size-reduce b_k against b_l  (0-based l: mu = lam[k][l] / d[l+1])
    mpz_class two_lam = 2 * lam[k][l];
    if (cmp(abs(two_lam), d[l + 1]) > 0) {
      mpz_class q;
      mpz_class num = two_lam + d[l + 1];
      mpz_class den = 2 * d[l + 1];
      mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      for (size_t j = 0; j < b[k].size(); ++j) b[k][j] -= q * b[l][j];
      lam[k][l] -= q * d[l + 1];
      for (int i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
    }
  };

  int k = 1, kmax = 0;
  auto incremental_gram = [&](int kk) {
    for (int j = 0; j <= kk; ++j) {
      mpz_class u = dot(b[kk], b[j]);
      for (int i = 0; i < j; ++i)
        u = (d[i + 1] * u - lam[kk][i] * lam[j][i]) / d[i];
      if (j < kk) lam[kk][j] = u;
      else {
        d[kk + 1] = u;
        check(sgn(u) > 0, "LLL: dependent rows");
      }
    }
  };
  incremental_gram(0);
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      incremental_gram(k);
    }
    redi(k, k - 1);
    // Lovasz condition with delta = 3/4: 4(d[k+1] d[k-1]) < 3 d[k]^2 - 4 lam^2
    mpz_class lhs = d[k + 1] * d[k - 1] * 4;
    mpz_class rhs = d[k] * d[k] * 3 - lam[k][k - 1] * lam[k][k - 1] * 4;
    if (cmp(lhs, rhs) < 0) {
      // swap b_k, b_{k-1}
      std::swap(b[k], b[k - 1]);
      for (int j = 0; j < k - 1; ++j) std::swap(lam[k][j], lam[k - 1][j]);
      mpz_class lamv = lam[k][k - 1];
      mpz_class Bv = (d[k - 1] * d[k + 1] + lamv * lamv) / d[k];
      for (int i = k + 1; i <= kmax; ++i) {
        mpz_class t = lam[i][k];
        lam[i][k] = (d[k + 1] * lam[i][k - 1] - lamv * t) / d[k];
        lam[i][k - 1] = (Bv * t + lamv * lam[i][k]) / d[k + 1];
      }
      d[k] = Bv;
      k = std::max(1, k - 1);
    } else {
      for (int l = k - 2; l >= 0; --l) redi(k, l);
      ++k;
    }
  }
}

} // namespace gen
} // namespace alcove
