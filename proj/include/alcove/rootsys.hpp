#pragma once

#include <vector>
#include <map>
#include <set>
#include <algorithm>
#include <string>
#include <cctype>

#include "alcove/base.hpp"
#include "alcove/matrix.hpp"

namespace alcove {

// ---------------------------------------------------------------------
// Type labels.  Simply laced only: A_m (m>=1), D_m (m>=4), E_6,7,8 and
// products thereof.  String grammar: "E8", "D5xA3", "A4xA4" (case
// insensitive).  Canonical factor order: E before D before A, then rank
// descending; this matches the usual way pseudo-Levi types are written.
// ---------------------------------------------------------------------

struct SimpleFactor {
  char series = 'A'; // 'A', 'D', 'E'
  int rank = 1;

  bool valid() const {
    if (series == 'A') return rank >= 1;
    if (series == 'D') return rank >= 4;
    if (series == 'E') return rank >= 6 && rank <= 8;
    return false;
  }
  int series_key() const { return series == 'E' ? 0 : series == 'D' ? 1 : 2; }
  bool operator<(const SimpleFactor& o) const {
    if (series_key() != o.series_key()) return series_key() < o.series_key();
    return rank > o.rank;
  }
  bool operator==(const SimpleFactor& o) const {
    return series == o.series && rank == o.rank;
  }
  std::string str() const { return series + std::to_string(rank); }
};

using TypeLabel = std::vector<SimpleFactor>; // canonically sorted

inline std::string label_str(const TypeLabel& t) {
  if (t.empty()) return "0"; // the empty root system
  std::string s;
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += "x";
    s += t[i].str();
  }
  return s;
}

inline TypeLabel parse_type(const std::string& in) {
  TypeLabel out;
  std::string s;
  for (char c : in)
    if (!std::isspace((unsigned char)c)) s += (char)std::toupper((unsigned char)c);
  if (s == "0" || s.empty()) return out;
  size_t i = 0;
  while (i < s.size()) {
    char ser = s[i];
    if (ser != 'A' && ser != 'D' && ser != 'E')
      throw usage_error("bad type label '" + in + "': unknown series '" +
                        std::string(1, ser) + "'");
    ++i;
    size_t j = i;
    while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
    if (j == i) throw usage_error("bad type label '" + in + "': missing rank");
    SimpleFactor f{ser, std::stoi(s.substr(i, j - i))};
    if (!f.valid())
      throw usage_error("bad type label '" + in + "': unsupported factor " +
                        f.str());
    out.push_back(f);
    i = j;
    if (i < s.size()) {
      if (s[i] != 'X')
        throw usage_error("bad type label '" + in + "': expected 'x'");
      ++i;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int label_rank(const TypeLabel& t) {
  int r = 0;
  for (auto& f : t) r += f.rank;
  return r;
}

inline i64 factor_nu(const SimpleFactor& f) {
  if (f.series == 'A') return (i64)f.rank * (f.rank + 1) / 2;
  if (f.series == 'D') return (i64)f.rank * (f.rank - 1);
  return f.rank == 6 ? 36 : f.rank == 7 ? 63 : 120;
}

inline i64 label_nu(const TypeLabel& t) {
  i64 s = 0;
  for (auto& f : t) s += factor_nu(f);
  return s;
}

inline std::vector<int> factor_degrees(const SimpleFactor& f) {
  std::vector<int> d;
  if (f.series == 'A') {
    for (int i = 2; i <= f.rank + 1; ++i) d.push_back(i);
  } else if (f.series == 'D') {
    for (int i = 2; i <= 2 * (f.rank - 1); i += 2) d.push_back(i);
    d.push_back(f.rank);
  } else if (f.rank == 6) {
    d = {2, 5, 6, 8, 9, 12};
  } else if (f.rank == 7) {
    d = {2, 6, 8, 10, 12, 14, 18};
  } else {
    d = {2, 8, 12, 14, 18, 20, 24, 30};
  }
  std::sort(d.begin(), d.end());
  return d;
}

inline i64 factor_weyl_order(const SimpleFactor& f) {
  i64 w = 1;
  for (int d : factor_degrees(f)) w *= d;
  return w;
}

inline i64 label_weyl_order(const TypeLabel& t) {
  i128 w = 1;
  for (auto& f : t) w *= factor_weyl_order(f);
  check(w <= (i128)INT64_MAX, "Weyl order overflow");
  return (i64)w;
}

// Cartan matrix of a simple factor, Bourbaki numbering (0-based here).
inline std::vector<std::pair<int, int>> factor_edges(const SimpleFactor& f) {
  std::vector<std::pair<int, int>> e;
  int m = f.rank;
  if (f.series == 'A') {
    for (int i = 1; i < m; ++i) e.push_back({i, i + 1});
  } else if (f.series == 'D') {
    for (int i = 1; i <= m - 2; ++i) e.push_back({i, i + 1});
    e.push_back({m - 2, m});
  } else {
    e = {{1, 3}, {3, 4}, {4, 5}, {2, 4}};
    for (int i = 5; i < m; ++i) e.push_back({i, i + 1});
  }
  for (auto& [a, b] : e) { --a; --b; } // 0-based
  return e;
}

// ---------------------------------------------------------------------
// RootSystem.  Roots live in the root lattice with the simple roots as
// basis; all arithmetic is exact integer.  The bilinear form in this
// basis is the Cartan matrix itself ((a_i, a_i) = 2, simply laced).
// ---------------------------------------------------------------------

struct RootSystem {
  TypeLabel type;
  int rank = 0;
  std::vector<std::vector<int>> factor_nodes; // node indices per factor
  IMat cartan;                        // rank x rank, also the Gram matrix
  std::vector<IVec> roots;            // positives first, then negatives
  int nu = 0;                         // number of positive roots
  std::vector<int> degrees;
  i64 weyl_order = 1;
  std::map<IVec, int> root_index;

  const IVec& root(int i) const { return roots[i]; }
  bool is_simple() const { return type.size() == 1; }
  int r() const { return rank; }

  int index_of(const IVec& v) const {
    auto it = root_index.find(v);
    return it == root_index.end() ? -1 : it->second;
  }

  // pairing <v, alpha^vee> = (v, alpha) for roots in this normalization
  i64 pair(const IVec& v, const IVec& alpha) const {
    i64 s = 0;
    for (int i = 0; i < rank; ++i) {
      if (!alpha[i]) continue;
      i64 t = 0;
      for (int j = 0; j < rank; ++j) t += cartan(i, j) * v[j];
      s += t * alpha[i];
    }
    return s;
  }

  IVec reflect(const IVec& v, const IVec& alpha) const {
    i64 c = pair(v, alpha);
    IVec r = v;
    for (int i = 0; i < rank; ++i) r[i] -= c * alpha[i];
    return r;
  }

  // reflection in an arbitrary root as a matrix on the root lattice
  IMat reflection_matrix(const IVec& alpha) const {
    IMat s = IMat::identity(rank);
    IVec w(rank, 0); // w = A * alpha
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) w[i] += cartan(i, j) * alpha[j];
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) s(i, j) -= alpha[i] * w[j];
    return s;
  }

  IMat simple_reflection(int i) const {
    IVec e(rank, 0);
    e[i] = 1;
    return reflection_matrix(e);
  }

  bool is_positive(const IVec& v) const {
    for (i64 c : v)
      if (c < 0) return false;
    return true;
  }

  i64 height(const IVec& v) const {
    i64 h = 0;
    for (i64 c : v) h += c;
    return h;
  }

  // highest root of a simple system
  IVec highest_root() const {
    check(is_simple(), "highest_root: root system not simple");
    int best = -1;
    i64 bh = -1;
    for (int i = 0; i < nu; ++i) {
      i64 h = height(roots[i]);
      if (h > bh) { bh = h; best = i; }
    }
    return roots[best];
  }
};

inline RootSystem build_root_system(const TypeLabel& label) {
  RootSystem rs;
  rs.type = label;
  rs.rank = label_rank(label);
  check(rs.rank <= 16, "rank > 16 unsupported");
  rs.cartan = IMat(rs.rank);
  int off = 0;
  for (auto& f : label) {
    std::vector<int> nodes;
    for (int i = 0; i < f.rank; ++i) {
      rs.cartan(off + i, off + i) = 2;
      nodes.push_back(off + i);
    }
    for (auto [a, b] : factor_edges(f)) {
      rs.cartan(off + a, off + b) = -1;
      rs.cartan(off + b, off + a) = -1;
    }
    for (int d : factor_degrees(f)) rs.degrees.push_back(d);
    rs.factor_nodes.push_back(nodes);
    off += f.rank;
  }
  std::sort(rs.degrees.begin(), rs.degrees.end());
  rs.weyl_order = label_weyl_order(label);

  // close the simple roots under simple reflections
  std::set<IVec> seen;
  std::vector<IVec> queue;
  for (int i = 0; i < rs.rank; ++i) {
    IVec e(rs.rank, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  IVec simple(rs.rank);
  while (!queue.empty()) {
    IVec v = queue.back();
    queue.pop_back();
    for (int i = 0; i < rs.rank; ++i) {
      IVec e(rs.rank, 0);
      e[i] = 1;
      IVec w = rs.reflect(v, e);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  std::vector<IVec> pos, neg;
  for (auto& v : seen) {
    if (rs.is_positive(v)) pos.push_back(v);
    else neg.push_back(v);
  }
  check(pos.size() == neg.size(), "root system not symmetric");
  for (auto& v : pos) {
    IVec m = v;
    for (auto& c : m) c = -c;
    check(seen.count(m) == 1, "root without negative");
  }
  std::sort(pos.begin(), pos.end());
  rs.roots = pos;
  for (auto& v : pos) {
    IVec m = v;
    for (auto& c : m) c = -c;
    rs.roots.push_back(m);
  }
  rs.nu = (int)pos.size();
  check((i64)rs.nu == label_nu(label), "positive root count mismatch for " +
                                            label_str(label));
  i64 degsum = 0;
  for (int d : rs.degrees) degsum += d - 1;
  check(degsum == rs.nu, "sum of (d_i - 1) != nu");
  for (int i = 0; i < 2 * rs.nu; ++i) rs.root_index[rs.roots[i]] = i;
  return rs;
}

inline RootSystem build_root_system(const std::string& label) {
  return build_root_system(parse_type(label));
}

// ---------------------------------------------------------------------
// Subsystems: reflection-closed subsets of the roots, with type
// identification via the Dynkin graph of an indecomposable simple set.
// ---------------------------------------------------------------------

struct SubSystem {
  const RootSystem* parent = nullptr;
  std::vector<IVec> roots;      // closed under negation
  std::vector<IVec> positive;   // the parent-positive half
  TypeLabel type;
  // simple roots per factor, Bourbaki order within the factor, factors in
  // canonical label order
  std::vector<std::vector<IVec>> factor_simples;
  i64 nu_sub = 0;

  int rank() const { return label_rank(type); }
  std::vector<IVec> all_simples() const {
    std::vector<IVec> s;
    for (auto& f : factor_simples) s.insert(s.end(), f.begin(), f.end());
    return s;
  }
};

namespace detail {

// Order the nodes of one Dynkin component Bourbaki-style.  adj is the
// component's adjacency (indices into comp), returns (factor, ordering).
inline std::pair<SimpleFactor, std::vector<int>> classify_component(
    const std::vector<IVec>& simples, const std::vector<int>& comp,
    const std::vector<std::vector<int>>& adj) {
  int n = (int)comp.size();
  auto lex_less = [&](int a, int b) { return simples[comp[a]] < simples[comp[b]]; };
  std::vector<int> deg(n);
  int tri = -1, ntri = 0;
  for (int i = 0; i < n; ++i) {
    deg[i] = (int)adj[i].size();
    check(deg[i] <= 3, "Dynkin node of degree > 3");
    if (deg[i] == 3) { tri = i; ntri++; }
  }
  check(ntri <= 1, "Dynkin component with two branch nodes");
  std::vector<int> order;
  if (ntri == 0) {
    // path: A_n
    if (n == 1) return {{'A', 1}, {0}};
    std::vector<int> ends;
    for (int i = 0; i < n; ++i)
      if (deg[i] == 1) ends.push_back(i);
    check(ends.size() == 2, "Dynkin path without two ends (cycle?)");
    int start = lex_less(ends[0], ends[1]) ? ends[0] : ends[1];
    order.push_back(start);
    int prev = -1, cur = start;
    while ((int)order.size() < n) {
      int nxt = -1;
      for (int x : adj[cur])
        if (x != prev) nxt = x;
      check(nxt >= 0, "broken path");
      order.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    return {{'A', n}, order};
  }
  // branch node: walk the three arms outward
  std::vector<std::vector<int>> arms;
  for (int nb : adj[tri]) {
    std::vector<int> arm{nb};
    int prev = tri, cur = nb;
    while (true) {
      int nxt = -1;
      for (int x : adj[cur])
        if (x != prev) nxt = x;
      if (nxt < 0) break;
      arm.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    arms.push_back(arm);
  }
  std::sort(arms.begin(), arms.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a[0], b[0]);
  });
  int a = (int)arms[0].size(), b = (int)arms[1].size(), c = (int)arms[2].size();
  check(a == 1, "Dynkin branch with no length-1 arm");
  if (b == 1) {
    // D_{c+3}: long arm outward-in = 1..c, branch = c+1, short arms last
    int m = c + 3;
    order.assign(m, -1);
    for (int i = 0; i < c; ++i) order[i] = arms[2][c - 1 - i];
    order[c] = tri;
    int l1 = arms[0][0], l2 = arms[1][0];
    if (!lex_less(l1, l2)) std::swap(l1, l2);
    order[c + 1] = l1;
    order[c + 2] = l2;
    return {{'D', m}, order};
  }
  check(b == 2 && c >= 2 && c <= 4, "not an ADE diagram");
  int m = c + 4; // E6, E7, E8
  order.assign(m, -1);
  order[1] = arms[0][0];            // node 2
  order[3] = tri;                   // node 4
  order[2] = arms[1][0];            // node 3
  order[0] = arms[1][1];            // node 1
  for (int i = 0; i < c; ++i) order[4 + i] = arms[2][i]; // nodes 5..m
  return {{'E', m}, order};
}

} // namespace detail

// Smallest reflection-closed subsystem containing the seeds.
inline SubSystem subsystem_closure(const RootSystem& rs,
                                   const std::vector<IVec>& seeds) {
  // The reflection closure of a set of roots equals the orbit of the
  // set (and its negatives) under the group generated by the seed
  // reflections: s_{w a} = w s_a w^{-1} keeps the orbit closed under
  // all of its own reflections.
  SubSystem sub;
  sub.parent = &rs;
  std::set<IVec> cur;
  std::vector<IVec> queue;
  for (auto& s : seeds) {
    check(rs.index_of(s) >= 0, "subsystem seed is not a root");
    IVec m = s;
    for (auto& c : m) c = -c;
    if (cur.insert(s).second) queue.push_back(s);
    if (cur.insert(m).second) queue.push_back(m);
  }
  while (!queue.empty()) {
    IVec v = queue.back();
    queue.pop_back();
    for (auto& a : seeds) {
      IVec w = rs.reflect(v, a);
      if (cur.insert(w).second) queue.push_back(w);
    }
  }
  for (auto& v : cur) {
    sub.roots.push_back(v);
    if (rs.is_positive(v)) sub.positive.push_back(v);
  }
  sub.nu_sub = (i64)sub.positive.size();
  if (sub.positive.empty()) return sub; // empty type

  // indecomposable positives form a simple system
  std::set<IVec> posset(sub.positive.begin(), sub.positive.end());
  std::vector<IVec> simples;
  for (auto& a : sub.positive) {
    bool decomposable = false;
    for (auto& b : sub.positive) {
      if (b == a) continue;
      IVec d(rs.rank);
      for (int i = 0; i < rs.rank; ++i) d[i] = a[i] - b[i];
      if (posset.count(d)) { decomposable = true; break; }
    }
    if (!decomposable) simples.push_back(a);
  }
  // component split by the Gram matrix
  int k = (int)simples.size();
  std::vector<std::vector<int>> adj(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      i64 p = rs.pair(simples[i], simples[j]);
      check(p <= 0 && p >= -1, "simple system pairing out of range");
      if (p == -1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  std::vector<int> compof(k, -1);
  std::vector<std::vector<int>> comps;
  for (int i = 0; i < k; ++i) {
    if (compof[i] >= 0) continue;
    std::vector<int> comp{i};
    compof[i] = (int)comps.size();
    for (size_t q = 0; q < comp.size(); ++q)
      for (int x : adj[comp[q]])
        if (compof[x] < 0) { compof[x] = (int)comps.size(); comp.push_back(x); }
    comps.push_back(comp);
  }
  std::vector<std::pair<SimpleFactor, std::vector<IVec>>> factors;
  for (auto& comp : comps) {
    std::vector<std::vector<int>> cadj(comp.size());
    std::map<int, int> pos_in;
    for (size_t i = 0; i < comp.size(); ++i) pos_in[comp[i]] = (int)i;
    for (size_t i = 0; i < comp.size(); ++i)
      for (int x : adj[comp[i]])
        cadj[i].push_back(pos_in[x]);
    auto [fac, order] = detail::classify_component(simples, comp, cadj);
    std::vector<IVec> fs;
    for (int idx : order) fs.push_back(simples[comp[idx]]);
    factors.push_back({fac, fs});
  }
  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
    if (!(a.first == b.first)) return a.first < b.first;
    return a.second < b.second;
  });
  for (auto& [fac, fs] : factors) {
    sub.type.push_back(fac);
    sub.factor_simples.push_back(fs);
  }
  check(label_nu(sub.type) == sub.nu_sub,
        "subsystem type " + label_str(sub.type) + " inconsistent with " +
            std::to_string(sub.nu_sub) + " positive roots");
  return sub;
}

// ---------------------------------------------------------------------
// Affine diagram with marks and the action of the fundamental group.
// Node 0 is the affine node (lowest root -theta); nodes 1..r are the
// simple roots.  omega is given by explicit node permutations.
// ---------------------------------------------------------------------

struct AffineDiagram {
  SimpleFactor factor;
  int r = 0;                       // rank of the finite diagram
  std::vector<i64> marks;          // size r+1, marks[0] = 1
  std::vector<std::vector<int>> omega; // node permutations, incl. identity
  i64 N = 1;                       // |omega| = order of the centre of G~

  // adjacency pairing between affine nodes (Gram values)
  std::vector<std::vector<i64>> gram; // (r+1)x(r+1)
};

inline AffineDiagram affine_diagram(const RootSystem& rs) {
  check(rs.is_simple(), "affine_diagram: root system must be simple");
  AffineDiagram ad;
  ad.factor = rs.type[0];
  ad.r = rs.rank;
  IVec theta = rs.highest_root();
  ad.marks.assign(ad.r + 1, 0);
  ad.marks[0] = 1;
  for (int i = 0; i < ad.r; ++i) ad.marks[i + 1] = theta[i];

  // Gram matrix of (-theta, a_1 .. a_r)
  auto pairing = [&](const IVec& a, const IVec& b) { return rs.pair(a, b); };
  std::vector<IVec> nodes;
  IVec mtheta = theta;
  for (auto& c : mtheta) c = -c;
  nodes.push_back(mtheta);
  for (int i = 0; i < ad.r; ++i) {
    IVec e(ad.r, 0);
    e[i] = 1;
    nodes.push_back(e);
  }
  ad.gram.assign(ad.r + 1, std::vector<i64>(ad.r + 1, 0));
  for (int i = 0; i <= ad.r; ++i)
    for (int j = 0; j <= ad.r; ++j) ad.gram[i][j] = pairing(nodes[i], nodes[j]);

  // generators of omega per series
  const int m = ad.r;
  std::vector<std::vector<int>> gens;
  auto identity = [&]() {
    std::vector<int> p(m + 1);
    for (int i = 0; i <= m; ++i) p[i] = i;
    return p;
  };
  if (ad.factor.series == 'A') {
    std::vector<int> rot(m + 1);
    for (int i = 0; i <= m; ++i) rot[i] = (i + 1) % (m + 1);
    gens.push_back(rot);
  } else if (ad.factor.series == 'D') {
    std::vector<int> z = identity();
    std::swap(z[0], z[1]);
    std::swap(z[m - 1], z[m]);
    gens.push_back(z);
    if (m % 2) {
      // order four: 0 -> m -> 1 -> m-1 -> 0, chain reversed
      std::vector<int> s(m + 1);
      s[0] = m; s[m] = 1; s[1] = m - 1; s[m - 1] = 0;
      for (int i = 2; i <= m - 2; ++i) s[i] = m - i;
      gens.push_back(s);
    } else {
      std::vector<int> d(m + 1);
      d[0] = m - 1; d[m - 1] = 0; d[1] = m; d[m] = 1;
      for (int i = 2; i <= m - 2; ++i) d[i] = m - i;
      gens.push_back(d);
    }
  } else if (ad.factor.rank == 6) {
    std::vector<int> rho(7);
    rho[4] = 4;
    rho[3] = 5; rho[1] = 6; rho[5] = 2; rho[6] = 0; rho[2] = 3; rho[0] = 1;
    gens.push_back(rho);
  } else if (ad.factor.rank == 7) {
    std::vector<int> f(8);
    f[0] = 7; f[7] = 0; f[1] = 6; f[6] = 1; f[3] = 5; f[5] = 3;
    f[2] = 2; f[4] = 4;
    gens.push_back(f);
  }
  // close the generators into a group
  std::set<std::vector<int>> grp;
  grp.insert(identity());
  std::vector<std::vector<int>> queue{identity()};
  while (!queue.empty()) {
    auto g = queue.back();
    queue.pop_back();
    for (auto& h : gens) {
      std::vector<int> gh(m + 1);
      for (int i = 0; i <= m; ++i) gh[i] = h[g[i]];
      if (grp.insert(gh).second) queue.push_back(gh);
    }
  }
  ad.omega.assign(grp.begin(), grp.end());
  ad.N = (i64)ad.omega.size();

  // validation: automorphisms preserve marks and the Gram pairing, the
  // group is simply transitive on the mark-1 nodes, and |omega| is the
  // known centre order.
  std::set<int> special;
  for (int i = 0; i <= m; ++i)
    if (ad.marks[i] == 1) special.insert(i);
  check((i64)special.size() == ad.N, "mark-1 node count != |omega|");
  std::set<int> orbit0;
  for (auto& g : ad.omega) {
    for (int i = 0; i <= m; ++i) {
      check(ad.marks[g[i]] == ad.marks[i], "omega does not preserve marks");
      for (int j = 0; j <= m; ++j)
        check(ad.gram[g[i]][g[j]] == ad.gram[i][j],
              "omega is not a diagram automorphism");
    }
    orbit0.insert(g[0]);
  }
  check(orbit0 == special, "omega orbit of the affine node != special nodes");
  i64 expect = ad.factor.series == 'A'   ? m + 1
               : ad.factor.series == 'D' ? 4
               : ad.factor.rank == 6     ? 3
               : ad.factor.rank == 7     ? 2
                                         : 1;
  check(ad.N == expect, "|omega| != centre order");
  // sum of marks * simple root = highest root (by construction), and the
  // recomputed highest root must be the height-maximal positive root
  return ad;
}

} // namespace alcove
