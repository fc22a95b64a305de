#pragma once

#include <vector>
#include <map>
#include <algorithm>
#include <numeric>
#include <string>

#include "alcove/base.hpp"

namespace alcove {

// Partitions are weakly decreasing vectors of positive ints.
using Partition = std::vector<int>;

inline std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  // descending lexicographic enumeration
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

inline int part_sum(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), 0);
}

// n(lambda) = sum (i-1) lambda_i ; equals b-invariant of the S_n irreducible.
inline i64 n_invariant(const Partition& p) {
  i64 s = 0;
  for (size_t i = 0; i < p.size(); ++i) s += (i64)i * p[i];
  return s;
}

inline Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  Partition c(p[0], 0);
  for (int part : p)
    for (int j = 0; j < part; ++j) c[j]++;
  return c;
}

inline i64 hook_length_dim(const Partition& p) {
  // dimension of S_n irreducible by the hook length formula
  int n = part_sum(p);
  Partition cj = conjugate(p);
  i64 num = 1;
  // dim = n! / prod hooks; compute exactly via i128
  i128 hooks = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j)
      hooks *= (i64)(p[i] - j) + (cj[j] - (i64)i) - 1;
  i128 fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  check(fact % hooks == 0, "hook length division");
  i128 d = fact / hooks;
  check(d <= (i128)INT64_MAX, "dimension overflow");
  (void)num;
  return (i64)d;
}

// centralizer order of the class with cycle type lambda in S_n
inline i64 sn_centralizer(const Partition& lam) {
  std::map<int, int> mult;
  for (int p : lam) mult[p]++;
  i128 z = 1;
  for (auto [l, m] : mult) {
    for (int i = 0; i < m; ++i) z *= l;
    for (int i = 2; i <= m; ++i) z *= i;
  }
  check(z <= (i128)INT64_MAX, "centralizer overflow");
  return (i64)z;
}

inline i64 factorial(int n) {
  i64 f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Beta-set of fixed length len: {p_i + (len - 1 - i)} for the partition
// padded with zeros to len parts, stored as sorted-ascending distinct ints.
inline std::vector<int> beta_set(const Partition& p, int len) {
  std::vector<int> b(len);
  for (int i = 0; i < len; ++i) {
    int part = i < (int)p.size() ? p[i] : 0;
    b[len - 1 - i] = part + (len - 1 - i);
  }
  // b is ascending: entry for row i is p_i + len-1-i, rows from bottom
  return b;
}

inline Partition partition_from_beta(std::vector<int> b) {
  std::sort(b.begin(), b.end());
  Partition p;
  for (int i = 0; i < (int)b.size(); ++i) {
    int part = b[i] - i;
    if (part > 0) p.push_back(part);
  }
  std::reverse(p.begin(), p.end());
  return p;
}

// All ways of adding a border strip of size l to partition p (with beta
// sets of length len).  Each result: (new partition, sign (-1)^height).
inline std::vector<std::pair<Partition, int>> add_strips(const Partition& p,
                                                         int l, int len) {
  std::vector<std::pair<Partition, int>> out;
  std::vector<int> b = beta_set(p, len);
  for (int i = 0; i < len; ++i) {
    int from = b[i], to = from + l;
    if (std::binary_search(b.begin(), b.end(), to)) continue;
    int height = 0;
    for (int x : b)
      if (x > from && x < to) height++;
    std::vector<int> nb = b;
    nb[i] = to;
    out.push_back({partition_from_beta(std::move(nb)), height % 2 ? -1 : 1});
  }
  return out;
}

// --- symmetric group character table ---------------------------------
// Computed column by column: start with the empty partition and add the
// cycles of the class one at a time (Murnaghan-Nakayama, building up).

struct SnTable {
  int n;
  std::vector<Partition> irreps;  // row labels
  std::vector<Partition> classes; // column labels (cycle types)
  std::vector<i64> class_size;
  std::vector<std::vector<i64>> val; // [irrep][class]
};

inline std::vector<i64> sn_column(int n, const Partition& cycles,
                                  const std::vector<Partition>& irreps) {
  std::map<Partition, i64> cur;
  cur[{}] = 1;
  int len = n + 1;
  for (int l : cycles) {
    std::map<Partition, i64> next;
    for (auto& [p, v] : cur)
      for (auto& [np, sg] : add_strips(p, l, len)) next[np] += v * sg;
    cur.swap(next);
  }
  std::vector<i64> col(irreps.size(), 0);
  for (size_t i = 0; i < irreps.size(); ++i) {
    auto it = cur.find(irreps[i]);
    if (it != cur.end()) col[i] = it->second;
  }
  return col;
}

inline SnTable sn_table(int n) {
  SnTable t;
  t.n = n;
  t.irreps = all_partitions(n);
  t.classes = t.irreps;
  i64 fact = factorial(n);
  for (auto& c : t.classes) t.class_size.push_back(fact / sn_centralizer(c));
  t.val.assign(t.irreps.size(), std::vector<i64>(t.classes.size(), 0));
  for (size_t j = 0; j < t.classes.size(); ++j) {
    auto col = sn_column(n, t.classes[j], t.irreps);
    for (size_t i = 0; i < t.irreps.size(); ++i) t.val[i][j] = col[i];
  }
  return t;
}

// single character value chi_lambda(mu)
inline i64 sn_char(const Partition& lam, const Partition& mu) {
  int n = part_sum(lam);
  check(part_sum(mu) == n, "sn_char: size mismatch");
  std::map<Partition, i64> cur;
  cur[{}] = 1;
  for (int l : mu) {
    std::map<Partition, i64> next;
    for (auto& [p, v] : cur)
      for (auto& [np, sg] : add_strips(p, l, n + 1)) next[np] += v * sg;
    cur.swap(next);
  }
  auto it = cur.find(lam);
  return it == cur.end() ? 0 : it->second;
}

// --- hyperoctahedral group (Z2 wr S_n) -------------------------------
// Irreducibles and classes are both indexed by ordered bipartitions
// (alpha, beta) with |alpha| + |beta| = n.  For classes, alpha holds the
// positive cycle lengths, beta the negative ones.

using BiPartition = std::pair<Partition, Partition>;

inline std::vector<BiPartition> all_bipartitions(int n) {
  std::vector<BiPartition> out;
  for (int a = n; a >= 0; --a)
    for (auto& pa : all_partitions(a))
      for (auto& pb : all_partitions(n - a)) out.push_back({pa, pb});
  return out;
}

// centralizer order of class (lambda, mu) in Z2 wr S_n (order 2^n n!)
inline i64 bn_centralizer(const BiPartition& c) {
  i128 z = 1;
  for (const Partition* p : {&c.first, &c.second}) {
    std::map<int, int> mult;
    for (int l : *p) mult[l]++;
    for (auto [l, m] : mult) {
      for (int i = 0; i < m; ++i) z *= 2 * l;
      for (int i = 2; i <= m; ++i) z *= i;
    }
  }
  check(z <= (i128)INT64_MAX, "bn centralizer overflow");
  return (i64)z;
}

// Character value column for the class whose positive cycles are lam and
// negative cycles mu, over all bipartition irreps.  Rule: adding a cycle
// of length l and sign s to (alpha, beta) adds an l-strip to alpha with
// factor (-1)^height, or to beta with factor s * (-1)^height.
inline std::map<BiPartition, i64> bn_column_map(int n, const Partition& lam,
                                                const Partition& mu) {
  std::map<BiPartition, i64> cur;
  cur[{{}, {}}] = 1;
  int len = n + 1;
  auto step = [&](int l, int sign) {
    std::map<BiPartition, i64> next;
    for (auto& [bp, v] : cur) {
      for (auto& [np, sg] : add_strips(bp.first, l, len))
        next[{np, bp.second}] += v * sg;
      for (auto& [np, sg] : add_strips(bp.second, l, len))
        next[{bp.first, np}] += v * sg * sign;
    }
    cur.swap(next);
  };
  for (int l : lam) step(l, 1);
  for (int l : mu) step(l, -1);
  return cur;
}

inline i64 bn_char(const BiPartition& irr, const BiPartition& cls) {
  int n = part_sum(irr.first) + part_sum(irr.second);
  auto col = bn_column_map(n, cls.first, cls.second);
  auto it = col.find(irr);
  return it == col.end() ? 0 : it->second;
}

} // namespace alcove
