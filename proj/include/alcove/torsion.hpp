#pragma once

#include <vector>
#include <map>
#include <set>
#include <algorithm>

#include "alcove/rootsys.hpp"
#include "alcove/rat.hpp"

namespace alcove {

// ---------------------------------------------------------------------
// Torsion classes in adjoint simple groups via alcove coordinates: a
// class of elements g with g^n = 1 is a tuple (s_0,...,s_r) of
// non-negative integers with sum a_i s_i = n, taken modulo the action
// of the fundamental group on the affine diagram.  Nodes with s_i = 0
// span the root system of the connected centralizer.
// ---------------------------------------------------------------------

struct TorsionClass {
  SimpleFactor group;
  int n = 0;                    // g^n = 1
  std::vector<i64> kac;         // canonical (lex-minimal) representative
  TypeLabel centralizer_type;
  i64 nu_n = 0;
  i64 N_n = 1;                  // order of the omega-stabilizer
  bool order_exact = false;     // order is exactly n (gcd of kac is 1)

  std::string kac_str() const {
    std::string s = "(";
    for (size_t i = 0; i < kac.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(kac[i]);
    }
    return s + ")";
  }
};

struct TorsionContext {
  RootSystem rs;
  AffineDiagram ad;

  explicit TorsionContext(const SimpleFactor& g)
      : rs(build_root_system(TypeLabel{g})), ad(affine_diagram(rs)) {}
};

namespace detail {

inline std::vector<i64> omega_apply(const std::vector<int>& g,
                                    const std::vector<i64>& s) {
  // (g . s)[g[i]] = s[i]
  std::vector<i64> out(s.size());
  for (size_t i = 0; i < s.size(); ++i) out[g[i]] = s[i];
  return out;
}

inline std::vector<i64> omega_canonical(const AffineDiagram& ad,
                                        const std::vector<i64>& s) {
  std::vector<i64> best = s;
  for (auto& g : ad.omega) best = std::min(best, omega_apply(g, s));
  return best;
}

inline i64 omega_stabilizer(const AffineDiagram& ad,
                            const std::vector<i64>& s) {
  i64 cnt = 0;
  for (auto& g : ad.omega)
    if (omega_apply(g, s) == s) ++cnt;
  return cnt;
}

// centralizer subsystem from the zero nodes (affine node = -theta)
inline SubSystem zero_node_subsystem(const TorsionContext& cx,
                                     const std::vector<i64>& s) {
  std::vector<IVec> seeds;
  IVec theta = cx.rs.highest_root();
  if (s[0] == 0) {
    IVec m = theta;
    for (auto& c : m) c = -c;
    seeds.push_back(m);
  }
  for (int i = 0; i < cx.rs.rank; ++i)
    if (s[i + 1] == 0) {
      IVec e(cx.rs.rank, 0);
      e[i] = 1;
      seeds.push_back(e);
    }
  return subsystem_closure(cx.rs, seeds);
}

} // namespace detail

// all conjugacy classes of elements with g^n = 1 in the adjoint group
inline std::vector<TorsionClass> torsion_classes(const TorsionContext& cx,
                                                 int n) {
  check(n >= 1, "torsion order must be positive");
  const auto& ad = cx.ad;
  int m = ad.r;
  std::set<std::vector<i64>> canon;
  // enumerate s_1..s_r with sum a_i s_i <= n; s_0 makes up the rest
  std::vector<i64> s(m + 1, 0);
  auto rec = [&](auto&& self, int node, i64 rem) -> void {
    if (node == m + 1) {
      s[0] = rem; // a_0 = 1
      canon.insert(detail::omega_canonical(ad, s));
      return;
    }
    for (i64 v = 0; v * ad.marks[node] <= rem; ++v) {
      s[node] = v;
      self(self, node + 1, rem - v * ad.marks[node]);
    }
    s[node] = 0;
  };
  rec(rec, 1, n);

  std::vector<TorsionClass> out;
  for (auto& kac : canon) {
    TorsionClass tc;
    tc.group = cx.rs.type[0];
    tc.n = n;
    tc.kac = kac;
    i64 g = 0;
    for (i64 v : kac) g = std::gcd(g, v);
    tc.order_exact = (g == 1) || (n == 1);
    auto ss = detail::zero_node_subsystem(cx, kac);
    tc.centralizer_type = ss.type;
    tc.nu_n = ss.nu_sub;
    tc.N_n = detail::omega_stabilizer(ad, kac);
    check(ad.N % tc.N_n == 0, "stabilizer does not divide |omega|");
    out.push_back(std::move(tc));
  }
  // deterministic order: by kac tuple
  std::sort(out.begin(), out.end(),
            [](const TorsionClass& a, const TorsionClass& b) {
              return a.kac < b.kac;
            });
  return out;
}

// class of the squares: double the alcove point and reduce back
inline TorsionClass square_class(const TorsionContext& cx,
                                 const TorsionClass& tc) {
  const auto& ad = cx.ad;
  int m = ad.r;
  // finite coordinates t_i = n alpha_i(2v) = 2 s_i, reduced into the
  // fundamental alcove t_i >= 0, sum a_i t_i <= n by the affine Weyl
  // group.  Pairings: <alpha_i, alpha_j^vee> = cartan(i,j) and
  // <alpha_i, theta^vee> = sum_k cartan(i,k) a_k (simply laced).
  std::vector<i64> t(m);
  for (int i = 0; i < m; ++i) t[i] = 2 * tc.kac[i + 1];
  int guard = 1000000;
  while (true) {
    check(guard-- > 0, "alcove reduction did not terminate");
    int neg = -1;
    for (int i = 0; i < m; ++i)
      if (t[i] < 0) { neg = i; break; }
    if (neg >= 0) {
      i64 ci = t[neg];
      for (int j = 0; j < m; ++j) t[j] -= ci * cx.rs.cartan(j, neg);
      continue;
    }
    i64 level = 0;
    for (int i = 0; i < m; ++i) level += ad.marks[i + 1] * t[i];
    if (level <= tc.n) break;
    i64 excess = level - tc.n;
    for (int j = 0; j < m; ++j) {
      i64 pair = 0;
      for (int k = 0; k < m; ++k) pair += cx.rs.cartan(j, k) * ad.marks[k + 1];
      t[j] -= excess * pair;
    }
  }
  std::vector<i64> kac(m + 1);
  i64 level = 0;
  for (int i = 0; i < m; ++i) {
    kac[i + 1] = t[i];
    level += ad.marks[i + 1] * t[i];
  }
  kac[0] = tc.n - level;
  check(kac[0] >= 0, "alcove reduction left the fundamental alcove");
  TorsionClass sq;
  sq.group = tc.group;
  sq.n = tc.n;
  sq.kac = detail::omega_canonical(ad, kac);
  i64 g = 0;
  for (i64 v : sq.kac) g = std::gcd(g, v);
  sq.order_exact = (g == 1);
  auto ss = detail::zero_node_subsystem(cx, sq.kac);
  sq.centralizer_type = ss.type;
  sq.nu_n = ss.nu_sub;
  sq.N_n = detail::omega_stabilizer(ad, sq.kac);
  return sq;
}

// ---------------------------------------------------------------------
// 235-triples
// ---------------------------------------------------------------------

struct TripleReport {
  int c2 = 0, c3 = 0, c5 = 0; // indices into the three class lists
  TypeLabel t2, t3, t5;
  i64 defect = 0;
  bool regular = false;
  bool degenerate = false;       // some member has order < n (gcd > 1)
  Rat count{0, 1};               // N / (N_2 N_3 N_5)
  int iota_partner = -1;         // index in the triple list

  std::string type_str() const {
    return "(" + label_str(t2) + "," + label_str(t3) + "," + label_str(t5) +
           ")";
  }
};

struct TripleSet {
  SimpleFactor group;
  std::vector<TorsionClass> cls2, cls3, cls5;
  std::vector<TripleReport> triples;
  i64 N = 1;

  const TripleReport* unique_regular() const {
    const TripleReport* r = nullptr;
    for (auto& t : triples)
      if (t.regular) {
        if (r) return nullptr;
        r = &t;
      }
    return r;
  }
};

inline TripleSet enumerate_235_triples(const SimpleFactor& g) {
  TorsionContext cx(g);
  TripleSet ts;
  ts.group = g;
  ts.N = cx.ad.N;
  ts.cls2 = torsion_classes(cx, 2);
  ts.cls3 = torsion_classes(cx, 3);
  ts.cls5 = torsion_classes(cx, 5);
  i64 nu = cx.rs.nu;
  i64 r = cx.rs.rank;
  // square classes of the order-5 list, for the iota involution
  std::vector<int> sq5(ts.cls5.size(), -1);
  for (size_t i = 0; i < ts.cls5.size(); ++i) {
    TorsionClass s = square_class(cx, ts.cls5[i]);
    for (size_t j = 0; j < ts.cls5.size(); ++j)
      if (ts.cls5[j].kac == s.kac) sq5[i] = (int)j;
    check(sq5[i] >= 0, "square of an order-5 class is not in the list");
  }
  for (size_t i2 = 0; i2 < ts.cls2.size(); ++i2)
    for (size_t i3 = 0; i3 < ts.cls3.size(); ++i3)
      for (size_t i5 = 0; i5 < ts.cls5.size(); ++i5) {
        TripleReport tr;
        tr.c2 = (int)i2;
        tr.c3 = (int)i3;
        tr.c5 = (int)i5;
        tr.t2 = ts.cls2[i2].centralizer_type;
        tr.t3 = ts.cls3[i3].centralizer_type;
        tr.t5 = ts.cls5[i5].centralizer_type;
        tr.defect = nu - (ts.cls2[i2].nu_n + ts.cls3[i3].nu_n +
                          ts.cls5[i5].nu_n) - r;
        tr.regular = (tr.defect == 0);
        tr.degenerate = !(ts.cls2[i2].order_exact && ts.cls3[i3].order_exact &&
                          ts.cls5[i5].order_exact);
        tr.count = Rat(ts.N, 1) /
                   Rat(ts.cls2[i2].N_n * ts.cls3[i3].N_n * ts.cls5[i5].N_n, 1);
        ts.triples.push_back(tr);
      }
  // iota: fixes C2 and C3, squares C5
  auto index_of = [&](int a, int b, int c) {
    return (int)((a * ts.cls3.size() + b) * ts.cls5.size() + c);
  };
  for (size_t i = 0; i < ts.triples.size(); ++i) {
    auto& tr = ts.triples[i];
    tr.iota_partner = index_of(tr.c2, tr.c3, sq5[tr.c5]);
  }
  return ts;
}

inline TripleReport iota_image(const TripleSet& ts, const TripleReport& tr) {
  return ts.triples[tr.iota_partner];
}

// Theorem-level count for a regular triple
inline Rat hom_count(const TripleSet& ts, const TripleReport& tr) {
  check(tr.regular, "hom_count requires a regular triple");
  return tr.count;
}

} // namespace alcove
