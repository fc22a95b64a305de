#pragma once

#include <vector>
#include <algorithm>

#include "alcove/base.hpp"

namespace alcove {

using IVec = std::vector<i64>;

// Small dense integer matrix, row-major.  Used for Weyl group elements
// acting on the root lattice (rank <= 16), so everything stays in i64.
struct IMat {
  int n = 0;
  std::vector<i64> a;

  IMat() = default;
  explicit IMat(int n_) : n(n_), a((size_t)n_ * n_, 0) {}

  i64& operator()(int i, int j) { return a[(size_t)i * n + j]; }
  i64 operator()(int i, int j) const { return a[(size_t)i * n + j]; }

  static IMat identity(int n) {
    IMat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  bool operator==(const IMat& o) const { return n == o.n && a == o.a; }
  bool operator<(const IMat& o) const { return a < o.a; }

  IMat operator*(const IMat& o) const {
    IMat r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        i64 v = (*this)(i, k);
        if (!v) continue;
        const i64* row = &o.a[(size_t)k * n];
        i64* out = &r.a[(size_t)i * n];
        for (int j = 0; j < n; ++j) out[j] += v * row[j];
      }
    return r;
  }

  IVec apply(const IVec& v) const {
    IVec r(n, 0);
    for (int i = 0; i < n; ++i) {
      i64 s = 0;
      for (int j = 0; j < n; ++j) s += (*this)(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  i64 trace() const {
    i64 t = 0;
    for (int i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_identity() const {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((*this)(i, j) != (i == j)) return false;
    return true;
  }
};

// Matrix convention: columns act on coordinate vectors, i.e. (M v)_i =
// sum_j M(i,j) v_j, and images of basis vectors are the columns.

// Characteristic polynomial det(t*I - A) by the Berkowitz algorithm
// (division-free).  Returns coefficients low-to-high, degree n.
inline std::vector<i64> charpoly(const IMat& A) {
  const int n = A.n;
  std::vector<i128> p{1};
  // iteratively build char poly of leading principal minors
  for (int k = 1; k <= n; ++k) {
    // Toeplitz column for step k: c_0 = 1 handled implicitly
    // s_j = R * M^j * C over the (k-1)x(k-1) block, see Berkowitz.
    std::vector<i128> c(k + 1, 0);
    c[0] = 1;
    c[1] = -(i128)A(k - 1, k - 1);
    if (k >= 2) {
      std::vector<i128> v(k - 1), w(k - 1);
      for (int i = 0; i < k - 1; ++i) v[i] = A(i, k - 1);
      for (int j = 2; j <= k; ++j) {
        // c[j] = - R M^{j-2} C
        i128 s = 0;
        for (int i = 0; i < k - 1; ++i) s += (i128)A(k - 1, i) * v[i];
        c[j] = -s;
        if (j < k) {
          for (int i = 0; i < k - 1; ++i) {
            i128 t = 0;
            for (int l = 0; l < k - 1; ++l) t += (i128)A(i, l) * v[l];
            w[i] = t;
          }
          v.swap(w);
        }
      }
    }
    std::vector<i128> q(k + 1, 0);
    for (int i = 0; i < (int)p.size(); ++i)
      for (int j = 0; j <= k && i + j <= k; ++j) q[i + j] += p[i] * c[j];
    p.swap(q);
  }
  // p holds coefficients with p[0] = leading; reverse to low-to-high
  std::vector<i64> out(n + 1);
  for (int i = 0; i <= n; ++i) {
    i128 v = p[n - i];
    check(v <= (i128)INT64_MAX && v >= (i128)INT64_MIN, "charpoly overflow");
    out[i] = (i64)v;
  }
  return out;
}

// Induced action on the second exterior power, basis e_i ^ e_j (i < j).
inline IMat exterior_square(const IMat& A) {
  const int n = A.n;
  std::vector<std::pair<int, int>> idx;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) idx.push_back({i, j});
  IMat R((int)idx.size());
  for (size_t col = 0; col < idx.size(); ++col) {
    auto [i, j] = idx[col];
    for (size_t row = 0; row < idx.size(); ++row) {
      auto [k, l] = idx[row];
      R((int)row, (int)col) = A(k, i) * A(l, j) - A(l, i) * A(k, j);
    }
  }
  return R;
}

inline i64 det(const IMat& A) {
  auto cp = charpoly(A);
  return (A.n % 2 ? -cp[0] : cp[0]);
}

} // namespace alcove
