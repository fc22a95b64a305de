#pragma once

#include <vector>
#include <map>
#include <set>
#include <memory>
#include <algorithm>
#include <numeric>
#include <sstream>

#include "alcove/base.hpp"
#include "alcove/matrix.hpp"
#include "alcove/poly.hpp"
#include "alcove/partitions.hpp"
#include "alcove/rootsys.hpp"

namespace alcove {

// ---------------------------------------------------------------------
// Conjugacy class and character table data for Weyl groups of the
// supported types.  Class representatives carry both a word in the
// simple reflections and the matrix on the reflection representation;
// the (char poly on V, root cycle type, char poly on L^2 V) triple is
// the fingerprint used for class identification and fusion.
// ---------------------------------------------------------------------

struct Fingerprint {
  std::vector<i64> cp_v;
  std::vector<int> cycles; // sorted cycle lengths of the root permutation
  std::vector<i64> cp_l2;

  bool operator==(const Fingerprint& o) const {
    return cp_v == o.cp_v && cycles == o.cycles && cp_l2 == o.cp_l2;
  }
  bool operator<(const Fingerprint& o) const {
    if (cp_v != o.cp_v) return cp_v < o.cp_v;
    if (cycles != o.cycles) return cycles < o.cycles;
    return cp_l2 < o.cp_l2;
  }
};

// permutation of the parent's root list induced by w
inline std::vector<int> root_permutation(const RootSystem& rs, const IMat& w) {
  std::vector<int> p(rs.roots.size());
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    int j = rs.index_of(w.apply(rs.roots[i]));
    check(j >= 0, "matrix does not permute the roots");
    p[i] = j;
  }
  return p;
}

inline std::vector<int> cycle_type_of_perm(const std::vector<int>& p) {
  std::vector<int> out;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = p[j];
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Fingerprint fingerprint(const RootSystem& rs, const IMat& w) {
  Fingerprint f;
  f.cp_v = charpoly(w);
  f.cycles = cycle_type_of_perm(root_permutation(rs, w));
  f.cp_l2 = charpoly(exterior_square(w));
  return f;
}

// express w as a word in the simple reflections (indices 0-based)
inline std::vector<int> matrix_to_word(const RootSystem& rs, IMat w) {
  std::vector<int> collected;
  int guard = 4 * rs.nu + 8;
  while (!w.is_identity()) {
    check(guard-- > 0, "matrix_to_word: not a Weyl group element");
    int found = -1;
    for (int i = 0; i < rs.rank; ++i) {
      IVec e(rs.rank, 0);
      e[i] = 1;
      if (!rs.is_positive(w.apply(e))) { found = i; break; }
    }
    check(found >= 0, "matrix_to_word: no descent");
    w = w * rs.simple_reflection(found);
    collected.push_back(found);
  }
  std::reverse(collected.begin(), collected.end());
  return collected;
}

inline IMat word_to_matrix(const RootSystem& rs, const std::vector<int>& word) {
  IMat w = IMat::identity(rs.rank);
  for (int i : word) w = w * rs.simple_reflection(i);
  return w;
}

struct ClassData {
  std::string label;
  std::vector<int> word; // in simple reflections of the group, 0-based
  IMat rep;              // on the reflection representation (root basis)
  i64 size = 0;
  Fingerprint fp;
  // type D bookkeeping
  BiPartition dcycles;
  int split_sign = 0; // 0: not split, +1 / -1 for the two halves
};

struct IrrData {
  std::string label; // phi{D,b} with optional primes
  std::string nat;   // natural label (partition data) for A/D builders
  i64 dim = 0;
  std::vector<i64> values;
  IPoly fake;  // fake degree polynomial
  int b = 0, bprime = 0;
};

struct CharTable {
  TypeLabel type;
  RootSystem rs;
  i64 order = 0;
  std::vector<ClassData> classes;
  std::vector<IrrData> irreps;
  int trivial = -1, sign = -1;
  std::vector<int> tensor_sign_map; // irrep index -> index of E (x) sgn
  std::vector<std::string> ambig_note; // colliding class labels, if any

  int nu() const { return rs.nu; }
  int n_classes() const { return (int)classes.size(); }
  int n_irreps() const { return (int)irreps.size(); }

  int irrep_by_label(const std::string& l) const {
    for (int i = 0; i < n_irreps(); ++i)
      if (irreps[i].label == l) return i;
    throw usage_error("no irreducible labelled '" + l + "' in " +
                      label_str(type));
  }
  int class_by_label(const std::string& l) const {
    for (int i = 0; i < n_classes(); ++i)
      if (classes[i].label == l) return i;
    throw usage_error("no class labelled '" + l + "' in " + label_str(type));
  }
};

// ---------------------------------------------------------------------
// Signed permutations (hyperoctahedral elements) for type D machinery.
// img[i] = +-(j+1) (1-based signed image of basis vector i).
// ---------------------------------------------------------------------

struct SignedPerm {
  std::vector<int> img;

  int n() const { return (int)img.size(); }
  static SignedPerm identity(int n) {
    SignedPerm s;
    s.img.resize(n);
    for (int i = 0; i < n; ++i) s.img[i] = i + 1;
    return s;
  }
  IMat matrix() const {
    IMat m(n());
    for (int i = 0; i < n(); ++i) {
      int j = std::abs(img[i]) - 1;
      m(j, i) = img[i] > 0 ? 1 : -1;
    }
    return m;
  }
  int sign_flips() const {
    int c = 0;
    for (int v : img)
      if (v < 0) ++c;
    return c;
  }
};

// canonical representative of the B_n class (lambda, mu): positive
// cycles on consecutive blocks, then negative cycles (one sign on the
// wrap-around of each block)
inline SignedPerm dn_class_rep(int n, const BiPartition& c) {
  SignedPerm s = SignedPerm::identity(n);
  int pos = 0;
  for (int l : c.first) {
    for (int i = 0; i < l - 1; ++i) s.img[pos + i] = pos + i + 2;
    s.img[pos + l - 1] = pos + 1;
    pos += l;
  }
  for (int l : c.second) {
    for (int i = 0; i < l - 1; ++i) s.img[pos + i] = pos + i + 2;
    s.img[pos + l - 1] = -(pos + 1);
    pos += l;
  }
  return s;
}

// cycle data of a signed permutation: positive and negative cycle lengths
inline BiPartition signed_cycles(const SignedPerm& s) {
  int n = s.n();
  BiPartition out;
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, sgn = 1, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      int im = s.img[j];
      if (im < 0) sgn = -sgn;
      j = std::abs(im) - 1;
      ++len;
    }
    (sgn > 0 ? out.first : out.second).push_back(len);
  }
  std::sort(out.first.rbegin(), out.first.rend());
  std::sort(out.second.rbegin(), out.second.rend());
  return out;
}

namespace detail {

// base change between the standard basis of Z^m and the simple-root
// basis of D_m / A_m; returns the matrix in root coordinates
struct BaseChange {
  IMat B;     // columns = simple roots in the standard basis
  IMat Badj;  // adjugate-like inverse numerator: Binv = Badj / den
  i64 den = 1;
};

inline BaseChange base_change_for(const RootSystem& rs) {
  check(rs.is_simple(), "base change only for simple types");
  int m = rs.rank;
  BaseChange bc;
  bc.B = IMat(m);
  char ser = rs.type[0].series;
  check(ser == 'A' || ser == 'D', "base change for A/D only");
  if (ser == 'D') {
    for (int i = 0; i < m - 1; ++i) { bc.B(i, i) = 1; bc.B(i + 1, i) = -1; }
    bc.B(m - 2, m - 1) = 1;
    bc.B(m - 1, m - 1) = 1;
  }
  // integer inverse via Gauss with rationals scaled by det
  // (small m; do fraction-free elimination on [B | I])
  int n = m;
  std::vector<std::vector<i128>> aug(n, std::vector<i128>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = bc.B(i, j);
    aug[i][n + i] = 1;
  }
  i128 den = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (aug[r][col] != 0) { piv = r; break; }
    check(piv >= 0, "singular base change");
    std::swap(aug[piv], aug[col]);
    i128 p = aug[col][col];
    for (int r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      i128 f = aug[r][col];
      for (int c2 = 0; c2 < 2 * n; ++c2)
        aug[r][c2] = aug[r][c2] * p - f * aug[col][c2];
    }
  }
  den = 1;
  for (int i = 0; i < n; ++i) den *= aug[i][i];
  // normalize rows to a common denominator den
  bc.Badj = IMat(n);
  for (int i = 0; i < n; ++i) {
    i128 rowden = aug[i][i];
    for (int j = 0; j < n; ++j) {
      i128 v = aug[i][n + j] * (den / rowden);
      check(v <= (i128)INT64_MAX && v >= (i128)INT64_MIN, "base change overflow");
      bc.Badj(i, j) = (i64)v;
    }
  }
  check(den <= (i128)INT64_MAX && den != 0, "base change denominator");
  bc.den = (i64)den;
  return bc;
}

// root-basis matrix -> signed permutation (type D)
inline SignedPerm to_signed_perm(const BaseChange& bc, const IMat& w_root) {
  int m = w_root.n;
  IMat w_std(m);
  // w_std = B * w_root * Binv = B * w_root * Badj / den
  IMat t = bc.B * w_root * bc.Badj;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      check(t(i, j) % bc.den == 0, "element not integral in standard basis");
      w_std(i, j) = t(i, j) / bc.den;
    }
  SignedPerm s;
  s.img.assign(m, 0);
  for (int j = 0; j < m; ++j) {
    int hits = 0;
    for (int i = 0; i < m; ++i) {
      if (w_std(i, j) == 0) continue;
      check(w_std(i, j) == 1 || w_std(i, j) == -1, "not a signed permutation");
      s.img[j] = w_std(i, j) > 0 ? i + 1 : -(i + 1);
      ++hits;
    }
    check(hits == 1, "not a signed permutation");
  }
  return s;
}

inline SignedPerm sp_mul(const SignedPerm& a, const SignedPerm& b) {
  // (a*b)(x) = a(b(x))
  SignedPerm r;
  r.img.resize(a.n());
  for (int i = 0; i < a.n(); ++i) {
    int bi = b.img[i];
    int ai = a.img[std::abs(bi) - 1];
    r.img[i] = bi > 0 ? ai : -ai;
  }
  return r;
}

// Decide which half of a split D_n class w belongs to: +1 if some B_n
// conjugator from w to the canonical representative lies in D_n.
inline int split_half(const SignedPerm& w, const BiPartition& cls) {
  int n = w.n();
  // cycles of w with their entries in order
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> wcycles; // 0-based index chains
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      cyc.push_back(j);
      j = std::abs(w.img[j]) - 1;
    }
    wcycles.push_back(cyc);
  }
  // canonical blocks of the representative, grouped by length
  std::map<int, std::vector<int>> blocks_by_len; // length -> block starts
  int pos = 0;
  for (int l : cls.first) {
    blocks_by_len[l].push_back(pos);
    pos += l;
  }
  check(cls.second.empty(), "split classes have no negative cycles");
  int flips = 0;
  std::map<int, int> next_block; // length -> next unused block index
  for (auto& cyc : wcycles) {
    int l = (int)cyc.size();
    int bi = next_block[l]++;
    check(bi < (int)blocks_by_len[l].size(), "cycle length mismatch");
    int start = blocks_by_len[l][bi];
    // map cyc[t] -> eps_t * (start + t + 1); propagate signs so that
    // g w g^-1 = rep; rep has all-positive transitions.
    int eps = 1;
    for (int t = 0; t < l; ++t) {
      if (eps < 0) ++flips;
      (void)start;
      int im = w.img[cyc[t]];
      int sigma = im > 0 ? 1 : -1;
      eps = eps * sigma; // tau_t = +1 in the canonical rep
    }
  }
  return flips % 2 == 0 ? 1 : -1;
}

} // namespace detail

// ---------------------------------------------------------------------
// Table builders
// ---------------------------------------------------------------------

namespace detail {

inline std::string partition_str(const Partition& p) {
  if (p.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ".";
    s += std::to_string(p[i]);
  }
  return s;
}

// S_{m+1} permutation (1-based images) to matrix on the A_m root basis
inline IMat sn_perm_matrix(int m, const std::vector<int>& img) {
  IMat w(m);
  // column i: image of alpha_i = e_{img(i)} - e_{img(i+1)}
  for (int i = 0; i < m; ++i) {
    int a = img[i], b = img[i + 1];
    if (a < b)
      for (int k = a; k < b; ++k) w(k - 1, i) += 1;
    else
      for (int k = b; k < a; ++k) w(k - 1, i) -= 1;
  }
  return w;
}

inline std::vector<int> cycle_type_perm_rep(int n, const Partition& lam) {
  std::vector<int> img(n);
  int pos = 0;
  for (int l : lam) {
    for (int i = 0; i < l - 1; ++i) img[pos + i] = pos + i + 2;
    img[pos + l - 1] = pos + 1;
    pos += l;
  }
  return img;
}

inline CharTable build_a_table(int m) {
  CharTable t;
  t.type = {{'A', m}};
  t.rs = build_root_system(t.type);
  t.order = factorial(m + 1);
  auto parts = all_partitions(m + 1);
  for (auto& lam : parts) {
    ClassData c;
    c.label = partition_str(lam);
    c.dcycles.first = lam;
    c.size = t.order / sn_centralizer(lam);
    c.rep = sn_perm_matrix(m, cycle_type_perm_rep(m + 1, lam));
    c.word = matrix_to_word(t.rs, c.rep);
    t.classes.push_back(std::move(c));
  }
  for (auto& lam : parts) {
    IrrData ir;
    ir.label = partition_str(lam); // relabelled later
    ir.nat = partition_str(lam);
    ir.dim = hook_length_dim(lam);
    for (auto& mu : parts) ir.values.push_back(sn_char(lam, mu));
    t.irreps.push_back(std::move(ir));
  }
  return t;
}

inline CharTable build_d_table(int m) {
  CharTable t;
  t.type = {{'D', m}};
  t.rs = build_root_system(t.type);
  t.order = factor_weyl_order(t.type[0]);
  auto bc = base_change_for(t.rs);
  i64 border = (i64)1 << m; // 2^m m! = |B_m|
  border *= factorial(m);

  auto bps = all_bipartitions(m);
  std::vector<BiPartition> dclasses;
  for (auto& c : bps)
    if (c.second.size() % 2 == 0) dclasses.push_back(c);

  auto is_split = [&](const BiPartition& c) {
    if (!c.second.empty()) return false;
    for (int l : c.first)
      if (l % 2) return false;
    return true;
  };

  for (auto& c : dclasses) {
    i64 bsize = border / bn_centralizer(c);
    SignedPerm repp = dn_class_rep(m, c);
    if (is_split(c)) {
      for (int half : {1, -1}) {
        ClassData cd;
        cd.dcycles = c;
        cd.split_sign = half;
        cd.label = "(" + partition_str(c.first) + "|" +
                   partition_str(c.second) + ")" + (half > 0 ? "+" : "-");
        cd.size = bsize / 2;
        SignedPerm rp = repp;
        if (half < 0) {
          // conjugate by the sign change on the last coordinate
          SignedPerm tt = SignedPerm::identity(m);
          tt.img[m - 1] = -m;
          rp = sp_mul(tt, sp_mul(rp, tt));
        }
        IMat t1 = bc.Badj * rp.matrix() * bc.B;
        IMat wroot(m);
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) {
            check(t1(i, j) % bc.den == 0, "rep not in root basis");
            wroot(i, j) = t1(i, j) / bc.den;
          }
        cd.rep = wroot;
        cd.word = matrix_to_word(t.rs, cd.rep);
        t.classes.push_back(std::move(cd));
      }
    } else {
      ClassData cd;
      cd.dcycles = c;
      cd.label =
          "(" + partition_str(c.first) + "|" + partition_str(c.second) + ")";
      cd.size = bsize;
      IMat t1 = bc.Badj * repp.matrix() * bc.B;
      IMat wroot(m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          check(t1(i, j) % bc.den == 0, "rep not in root basis");
          wroot(i, j) = t1(i, j) / bc.den;
        }
      cd.rep = wroot;
      cd.word = matrix_to_word(t.rs, cd.rep);
      t.classes.push_back(std::move(cd));
    }
  }

  // character columns from the hyperoctahedral table
  std::vector<std::map<BiPartition, i64>> bcols;
  for (auto& cd : t.classes)
    bcols.push_back(bn_column_map(m, cd.dcycles.first, cd.dcycles.second));

  // unsplit characters {alpha, beta}, alpha != beta
  std::set<BiPartition> done;
  for (auto& bp : bps) {
    BiPartition swapped{bp.second, bp.first};
    if (bp.first == bp.second) continue;
    if (done.count(swapped)) continue;
    done.insert(bp);
    IrrData ir;
    ir.label = "{" + partition_str(bp.first) + "|" + partition_str(bp.second) +
               "}";
    ir.nat = ir.label;
    ir.dim = 0;
    for (size_t j = 0; j < t.classes.size(); ++j) {
      auto it = bcols[j].find(bp);
      ir.values.push_back(it == bcols[j].end() ? 0 : it->second);
    }
    ir.dim = ir.values[0]; // identity class is first iff ordering says so
    t.irreps.push_back(std::move(ir));
  }
  // split characters (alpha, alpha)^{+-}, m even
  if (m % 2 == 0) {
    int k = m / 2;
    for (auto& alpha : all_partitions(k)) {
      BiPartition bp{alpha, alpha};
      for (int eps : {1, -1}) {
        IrrData ir;
        ir.label = "{" + partition_str(alpha) + "|" + partition_str(alpha) +
                   "}" + (eps > 0 ? "+" : "-");
        ir.nat = ir.label;
        for (size_t j = 0; j < t.classes.size(); ++j) {
          auto it = bcols[j].find(bp);
          i64 bv = it == bcols[j].end() ? 0 : it->second;
          if (t.classes[j].split_sign == 0) {
            check(bv % 2 == 0, "split character with odd restriction value");
            ir.values.push_back(bv / 2);
          } else {
            Partition half;
            for (int l : t.classes[j].dcycles.first) half.push_back(l / 2);
            i64 cross = ((i64)1 << half.size()) * sn_char(alpha, half);
            i64 v2 = bv + (i64)eps * t.classes[j].split_sign * cross;
            check(v2 % 2 == 0, "split character value not integral");
            ir.values.push_back(v2 / 2);
          }
        }
        t.irreps.push_back(std::move(ir));
      }
    }
  }
  for (auto& ir : t.irreps) {
    // identity class index
    for (size_t j = 0; j < t.classes.size(); ++j)
      if (t.classes[j].rep.is_identity()) ir.dim = ir.values[j];
  }
  return t;
}

inline CharTable tensor_table(const TypeLabel& type,
                              const std::vector<const CharTable*>& fac) {
  CharTable t;
  t.type = type;
  t.rs = build_root_system(type);
  t.order = 1;
  for (auto* f : fac) t.order *= f->order;

  // Cartesian products of classes and irreps, factor-major order
  std::vector<size_t> cidx(fac.size(), 0);
  auto next = [&](std::vector<size_t>& idx, auto count) {
    for (size_t i = fac.size(); i-- > 0;) {
      if (++idx[i] < count(i)) return true;
      idx[i] = 0;
    }
    return false;
  };
  auto ccount = [&](size_t i) { return fac[i]->classes.size(); };
  auto icount = [&](size_t i) { return fac[i]->irreps.size(); };

  do {
    ClassData c;
    c.size = 1;
    c.rep = IMat(t.rs.rank);
    int off = 0;
    std::string lab;
    for (size_t i = 0; i < fac.size(); ++i) {
      const ClassData& fc = fac[i]->classes[cidx[i]];
      if (i) lab += "*";
      lab += fc.label;
      c.size *= fc.size;
      for (int a = 0; a < fac[i]->rs.rank; ++a)
        for (int b = 0; b < fac[i]->rs.rank; ++b)
          c.rep(off + a, off + b) = fc.rep(a, b);
      for (int wday : fc.word) c.word.push_back(off + wday);
      off += fac[i]->rs.rank;
    }
    c.label = lab;
    t.classes.push_back(std::move(c));
  } while (next(cidx, ccount));

  std::vector<size_t> iidx(fac.size(), 0);
  do {
    IrrData ir;
    ir.dim = 1;
    std::string lab;
    for (size_t i = 0; i < fac.size(); ++i) {
      const IrrData& fi = fac[i]->irreps[iidx[i]];
      if (i) lab += "*";
      lab += fi.label;
      ir.dim *= fi.dim;
    }
    ir.label = lab;
    ir.values.assign(t.classes.size(), 1);
    size_t ncl = t.classes.size();
    // recompute by walking the class Cartesian product in the same order
    std::vector<size_t> cj(fac.size(), 0);
    size_t pos = 0;
    do {
      i64 v = 1;
      for (size_t i = 0; i < fac.size(); ++i)
        v *= fac[i]->irreps[iidx[i]].values[cj[i]];
      ir.values[pos++] = v;
    } while (next(cj, ccount));
    check(pos == ncl, "tensor class walk mismatch");
    t.irreps.push_back(std::move(ir));
  } while (next(iidx, icount));
  return t;
}

} // namespace detail

// ---------------------------------------------------------------------
// Class identification: which class of the table contains w?
// ---------------------------------------------------------------------

int identify_class(const CharTable& t, const IMat& w); // defined in fusion.hpp

// verify row orthogonality, the class-size sum and the degree sum
inline void verify_table(const CharTable& t, const std::string& origin) {
  i64 szsum = 0;
  for (auto& c : t.classes) szsum += c.size;
  if (szsum != t.order)
    throw data_error(origin + ": class sizes sum to " + std::to_string(szsum) +
                     ", group order is " + std::to_string(t.order));
  check(t.classes.size() == t.irreps.size(),
        origin + ": class and irreducible counts differ");
  i64 d2 = 0;
  for (auto& ir : t.irreps) d2 += ir.dim * ir.dim;
  if (d2 != t.order)
    throw data_error(origin + ": sum of squared degrees " + std::to_string(d2) +
                     " != group order " + std::to_string(t.order));
  size_t n = t.irreps.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      i128 s = 0;
      for (size_t c = 0; c < n; ++c)
        s += (i128)t.classes[c].size * t.irreps[i].values[c] *
             t.irreps[j].values[c];
      i128 want = (i == j) ? (i128)t.order : 0;
      if (s != want)
        throw data_error(origin + ": row orthogonality fails for " +
                         t.irreps[i].label + ", " + t.irreps[j].label);
    }
}

} // namespace alcove
