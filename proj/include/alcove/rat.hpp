#pragma once

#include <numeric>
#include <string>

#include "alcove/base.hpp"

namespace alcove {

// exact rational over i64, always normalized with positive denominator
struct Rat {
  i64 num = 0;
  i64 den = 1;

  Rat() = default;
  Rat(i64 n, i64 d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    check(den != 0, "rational with zero denominator");
    if (den < 0) {
      den = -den;
      num = -num;
    }
    i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_integer() const { return den == 1; }
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator<(const Rat& o) const {
    return (i128)num * o.den < (i128)o.num * den;
  }

  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat((i64)((i128)a.num * b.num), (i64)((i128)a.den * b.den));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    check(b.num != 0, "division by zero rational");
    return Rat((i64)((i128)a.num * b.den), (i64)((i128)a.den * b.num));
  }
  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat((i64)((i128)a.num * b.den + (i128)b.num * a.den),
               (i64)((i128)a.den * b.den));
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

} // namespace alcove
