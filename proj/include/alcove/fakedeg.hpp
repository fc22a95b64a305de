#pragma once

#include <vector>
#include <map>
#include <algorithm>

#include "alcove/weylchar.hpp"

namespace alcove {

// det(1 - q w) on the reflection representation: the reversed
// characteristic polynomial of the representative.
inline IPoly det_one_minus_qw(const IMat& w) {
  auto cp = charpoly(w);
  std::vector<i64> rev(cp.rbegin(), cp.rend());
  return IPoly(std::move(rev));
}

// graded character of w on the coinvariant algebra:
//   sum_j tr(w | V_j) q^j  =  prod_i (1 - q^{d_i}) / det(1 - q w)
inline IPoly coinvariant_trace(const RootSystem& rs, const IMat& w) {
  IPoly numer{1};
  for (int d : rs.degrees) {
    IPoly f;
    f.c.assign(d + 1, 0);
    f.c[0] = 1;
    f.c[d] = -1;
    f.trim();
    numer *= f;
  }
  return exact_div(numer, det_one_minus_qw(w), "coinvariant trace");
}

// Fake degree of irreducible E: graded multiplicity of E in the
// coinvariant algebra, as an exact polynomial.
inline IPoly fake_degree(const CharTable& t, int irrep_index) {
  const auto& ir = t.irreps[irrep_index];
  IPoly numer{1};
  for (int d : t.rs.degrees) {
    IPoly f;
    f.c.assign(d + 1, 0);
    f.c[0] = 1;
    f.c[d] = -1;
    f.trim();
    numer *= f;
  }
  std::vector<i128> acc(t.rs.nu + 1, 0);
  for (int c = 0; c < t.n_classes(); ++c) {
    if (!ir.values[c]) continue;
    IPoly quot = exact_div(numer, det_one_minus_qw(t.classes[c].rep),
                           "fake degree class term");
    check(quot.degree() <= t.rs.nu, "coinvariant trace degree > nu");
    i128 f = (i128)t.classes[c].size * ir.values[c];
    for (int d = 0; d <= quot.degree(); ++d) acc[d] += f * quot.c[d];
  }
  IPoly fd;
  fd.c.resize(acc.size());
  for (size_t d = 0; d < acc.size(); ++d) {
    check(acc[d] % t.order == 0, "fake degree: class sum not divisible by |W|");
    i128 v = acc[d] / t.order;
    check(v >= 0, "fake degree: negative coefficient");
    check(v <= (i128)INT64_MAX, "fake degree overflow");
    fd.c[d] = (i64)v;
  }
  fd.trim();
  return fd;
}

inline std::pair<int, int> b_invariants(const IPoly& fd) {
  check(!fd.zero(), "b_invariants of the zero polynomial");
  int b = 0;
  while (fd.coeff(b) == 0) ++b;
  return {b, fd.degree()};
}

// Computes fake degrees, b-invariants, sign/trivial markers, the
// E -> E(x)sgn permutation and phi{D,b} labels (primes resolve ties).
// For tables loaded from packaged data, existing labels are verified
// instead of overwritten.
inline void finalize_table(CharTable& t, bool relabel = true) {
  IPoly numer{1};
  for (int d : t.rs.degrees) {
    IPoly f;
    f.c.assign(d + 1, 0);
    f.c[0] = 1;
    f.c[d] = -1;
    f.trim();
    numer *= f;
  }
  std::vector<IPoly> quot(t.n_classes());
  for (int c = 0; c < t.n_classes(); ++c) {
    quot[c] = exact_div(numer, det_one_minus_qw(t.classes[c].rep),
                        "coinvariant trace");
    check(quot[c].degree() <= t.rs.nu, "coinvariant trace degree > nu");
  }
  for (auto& ir : t.irreps) {
    std::vector<i128> acc(t.rs.nu + 1, 0);
    for (int c = 0; c < t.n_classes(); ++c) {
      if (!ir.values[c]) continue;
      i128 f = (i128)t.classes[c].size * ir.values[c];
      for (int d = 0; d <= quot[c].degree(); ++d) acc[d] += f * quot[c].c[d];
    }
    ir.fake.c.assign(acc.size(), 0);
    for (size_t d = 0; d < acc.size(); ++d) {
      check(acc[d] % t.order == 0, "fake degree not divisible by |W|");
      i128 v = acc[d] / t.order;
      check(v >= 0 && v <= (i128)INT64_MAX, "fake degree coefficient range");
      ir.fake.c[d] = (i64)v;
    }
    ir.fake.trim();
    check(ir.fake.eval1() == ir.dim, "fake degree at q=1 != dim for " +
                                         ir.label);
    auto [b, bp] = b_invariants(ir.fake);
    ir.b = b;
    ir.bprime = bp;
  }

  // sign character values = det on the reflection representation
  std::vector<i64> dets(t.n_classes());
  for (int c = 0; c < t.n_classes(); ++c) dets[c] = det(t.classes[c].rep);
  t.trivial = t.sign = -1;
  for (int i = 0; i < t.n_irreps(); ++i) {
    bool istriv = true, issgn = true;
    for (int c = 0; c < t.n_classes(); ++c) {
      if (t.irreps[i].values[c] != 1) istriv = false;
      if (t.irreps[i].values[c] != dets[c]) issgn = false;
    }
    if (istriv) t.trivial = i;
    if (issgn) t.sign = i;
  }
  check(t.trivial >= 0 && t.sign >= 0, "trivial or sign character missing");

  // tensor with sign permutes the irreducibles
  std::map<std::vector<i64>, int> by_values;
  for (int i = 0; i < t.n_irreps(); ++i) {
    auto ins = by_values.emplace(t.irreps[i].values, i);
    check(ins.second, "duplicate character rows");
  }
  t.tensor_sign_map.assign(t.n_irreps(), -1);
  for (int i = 0; i < t.n_irreps(); ++i) {
    std::vector<i64> prod(t.n_classes());
    for (int c = 0; c < t.n_classes(); ++c)
      prod[c] = t.irreps[i].values[c] * dets[c];
    auto it = by_values.find(prod);
    check(it != by_values.end(),
          "sign tensor of " + t.irreps[i].label + " not in table");
    t.tensor_sign_map[i] = it->second;
  }
  // duality b(E) = nu - b'(E (x) sgn)
  for (int i = 0; i < t.n_irreps(); ++i) {
    int j = t.tensor_sign_map[i];
    check(t.irreps[i].b == t.rs.nu - t.irreps[j].bprime,
          "b / b' duality fails for " + t.irreps[i].label);
  }

  if (relabel) {
    std::map<std::pair<i64, int>, std::vector<int>> groups;
    for (int i = 0; i < t.n_irreps(); ++i)
      groups[{t.irreps[i].dim, t.irreps[i].b}].push_back(i);
    for (auto& [key, idxs] : groups) {
      std::sort(idxs.begin(), idxs.end(), [&](int a, int b2) {
        return t.irreps[a].values < t.irreps[b2].values;
      });
      for (size_t k = 0; k < idxs.size(); ++k) {
        std::string lab = "phi{" + std::to_string(key.first) + "," +
                          std::to_string(key.second) + "}";
        lab += std::string(k, '\'');
        t.irreps[idxs[k]].label = lab;
      }
    }
  } else {
    // verify packaged labels carry the computed (D, b) pair; joined
    // product labels are left alone
    for (auto& ir : t.irreps) {
      if (ir.label.find('*') != std::string::npos) continue;
      std::string want = "phi{" + std::to_string(ir.dim) + "," +
                         std::to_string(ir.b) + "}";
      check(ir.label.rfind(want, 0) == 0,
            "packaged label " + ir.label + " disagrees with computed " + want);
    }
  }
}

inline int tensor_sign(const CharTable& t, int irrep_index) {
  check(!t.tensor_sign_map.empty(), "table not finalized");
  return t.tensor_sign_map[irrep_index];
}

// Poincare identity: sum_E dim(E) FD_E(q) = prod_i (q^{d_i}-1)/(q-1)
inline bool poincare_identity_holds(const CharTable& t) {
  IPoly lhs;
  for (auto& ir : t.irreps) {
    IPoly term = ir.fake;
    for (auto& c : term.c) c *= ir.dim;
    lhs += term;
  }
  IPoly rhs{1};
  for (int d : t.rs.degrees) {
    IPoly f;
    f.c.assign(d, 1); // 1 + q + ... + q^{d-1}
    rhs *= f;
  }
  return lhs == rhs;
}

} // namespace alcove
