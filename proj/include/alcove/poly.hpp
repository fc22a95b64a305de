#pragma once

#include <vector>
#include <string>

#include "alcove/base.hpp"

namespace alcove {

// Dense polynomial over Z, coefficients low degree first, normalized
// (no trailing zeros).  All arithmetic is exact; overflow guards sit on
// the multiply path since fake-degree coefficients reach ~2e7.
struct IPoly {
  std::vector<i64> c;

  IPoly() = default;
  IPoly(std::initializer_list<i64> l) : c(l) { trim(); }
  explicit IPoly(std::vector<i64> v) : c(std::move(v)) { trim(); }

  static IPoly monomial(int deg, i64 coeff = 1) {
    IPoly p;
    p.c.assign(deg + 1, 0);
    p.c[deg] = coeff;
    p.trim();
    return p;
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  int degree() const { return (int)c.size() - 1; } // -1 for zero poly
  i64 coeff(int d) const { return (d >= 0 && d < (int)c.size()) ? c[d] : 0; }

  bool operator==(const IPoly& o) const { return c == o.c; }

  IPoly& operator+=(const IPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
    for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    trim();
    return *this;
  }
  IPoly& operator-=(const IPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
    for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
    trim();
    return *this;
  }
  friend IPoly operator+(IPoly a, const IPoly& b) { return a += b; }
  friend IPoly operator-(IPoly a, const IPoly& b) { return a -= b; }

  friend IPoly operator*(const IPoly& a, const IPoly& b) {
    if (a.zero() || b.zero()) return {};
    std::vector<i128> acc(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (!a.c[i]) continue;
      for (size_t j = 0; j < b.c.size(); ++j) acc[i + j] += (i128)a.c[i] * b.c[j];
    }
    IPoly r;
    r.c.resize(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) {
      check(acc[i] <= (i128)INT64_MAX && acc[i] >= (i128)INT64_MIN,
            "poly multiply overflow");
      r.c[i] = (i64)acc[i];
    }
    r.trim();
    return r;
  }

  IPoly& operator*=(const IPoly& o) { return *this = *this * o; }

  i64 eval1() const {
    i64 s = 0;
    for (i64 v : c) s += v;
    return s;
  }

  std::string str(const char* var = "q") const {
    if (zero()) return "0";
    std::string s;
    for (int d = 0; d < (int)c.size(); ++d) {
      if (!c[d]) continue;
      if (!s.empty()) s += c[d] > 0 ? " + " : " - ";
      else if (c[d] < 0) s += "-";
      i64 v = c[d] > 0 ? c[d] : -c[d];
      if (v != 1 || d == 0) s += std::to_string(v);
      if (d > 0) {
        s += var;
        if (d > 1) s += "^" + std::to_string(d);
      }
    }
    return s;
  }
};

// Exact division where the divisor has constant term +-1 (all of our
// divisors are reversed characteristic polynomials of finite-order
// matrices).  Throws if the division leaves a remainder.
inline IPoly exact_div(const IPoly& num, const IPoly& den, const char* what) {
  check(!den.zero() && (den.c[0] == 1 || den.c[0] == -1),
        std::string("exact_div: divisor constant term not a unit in ") + what);
  if (num.zero()) return {};
  int qd = num.degree() - den.degree();
  check(qd >= 0, std::string("exact_div: degree mismatch in ") + what);
  std::vector<i64> r = num.c;
  std::vector<i64> q(qd + 1, 0);
  const i64 u = den.c[0];
  for (int d = 0; d <= qd; ++d) {
    i64 t = r[d] * u; // u is +-1
    q[d] = t;
    if (t)
      for (int j = 0; j < (int)den.c.size(); ++j) r[d + j] -= t * den.c[j];
  }
  for (i64 v : r)
    check(v == 0, std::string("exact_div: nonzero remainder in ") + what);
  return IPoly(std::move(q));
}

} // namespace alcove
