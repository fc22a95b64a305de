#pragma once

#include <vector>
#include <map>
#include <algorithm>
#include <functional>

#include "alcove/base.hpp"
#include "alcove/matrix.hpp"
#include "alcove/rootsys.hpp"
#include "alcove/weylchar.hpp"

namespace alcove {

using Perm = std::vector<int>;

inline Perm perm_mul(const Perm& a, const Perm& b) {
  // (a*b)(x) = a(b(x))
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Perm perm_inv(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = (int)i;
  return r;
}

inline bool perm_is_id(const Perm& a) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != (int)i) return false;
  return true;
}

// Schreier-Sims stabilizer chain on a permutation domain.  Plenty for
// Weyl groups acting on their root sets (degree <= 240).  Strong
// generators are stored flat; level l uses those fixing base[0..l-1].
struct PermGroup {
  int n = 0;
  std::vector<int> base;
  std::vector<Perm> strong;
  std::vector<std::vector<int>> orbit;          // orbit of base[l]
  std::vector<std::map<int, Perm>> transversal; // point -> coset rep

  explicit PermGroup(int n_) : n(n_) {}

  bool fixes_prefix(const Perm& g, size_t l) const {
    for (size_t i = 0; i < l; ++i)
      if (g[base[i]] != base[i]) return false;
    return true;
  }

  void rebuild_orbit(size_t l) {
    orbit[l].clear();
    transversal[l].clear();
    Perm id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    orbit[l].push_back(base[l]);
    transversal[l][base[l]] = id;
    for (size_t q = 0; q < orbit[l].size(); ++q) {
      int p = orbit[l][q];
      for (auto& g : strong) {
        if (!fixes_prefix(g, l)) continue;
        int img = g[p];
        if (!transversal[l].count(img)) {
          transversal[l][img] = perm_mul(g, transversal[l].at(p));
          orbit[l].push_back(img);
        }
      }
    }
  }

  // returns (residue, level reached); identity residue means membership
  std::pair<Perm, size_t> sift(Perm g) const {
    for (size_t l = 0; l < base.size(); ++l) {
      int img = g[base[l]];
      auto it = transversal[l].find(img);
      if (it == transversal[l].end()) return {g, l};
      g = perm_mul(perm_inv(it->second), g);
    }
    return {g, base.size()};
  }

  bool contains(const Perm& g) const {
    auto [res, lvl] = sift(g);
    return lvl == base.size() && perm_is_id(res);
  }

  i64 order() const {
    i64 o = 1;
    for (auto& ob : orbit) o *= (i64)ob.size();
    return o;
  }

  void insert_strong(const Perm& g) {
    strong.push_back(g);
    // extend the base until no strong generator fixes all of it
    while (true) {
      bool all_fixed_exists = false;
      for (auto& s : strong)
        if (fixes_prefix(s, base.size()) && !perm_is_id(s)) {
          int pt = -1;
          for (int i = 0; i < n; ++i)
            if (s[i] != i) { pt = i; break; }
          base.push_back(pt);
          orbit.push_back({});
          transversal.push_back({});
          all_fixed_exists = true;
          break;
        }
      if (!all_fixed_exists) break;
    }
    for (size_t l = 0; l < base.size(); ++l) rebuild_orbit(l);
  }

  // verify all Schreier generators sift to the identity, inserting the
  // residues until the chain is complete
  void complete() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t l = 0; l < base.size() && !changed; ++l) {
        for (size_t q = 0; q < orbit[l].size() && !changed; ++q) {
          int p = orbit[l][q];
          const Perm& rep = transversal[l].at(p);
          for (auto& s : strong) {
            if (!fixes_prefix(s, l)) continue;
            Perm sg = perm_mul(s, rep);
            Perm schreier =
                perm_mul(perm_inv(transversal[l].at(sg[base[l]])), sg);
            if (perm_is_id(schreier)) continue;
            auto [res, lvl] = sift(schreier);
            if (!perm_is_id(res)) {
              insert_strong(res);
              changed = true;
              break;
            }
          }
        }
      }
    }
  }

  static PermGroup generated_by(int n, const std::vector<Perm>& gens) {
    PermGroup G(n);
    for (auto& g : gens) {
      if (perm_is_id(g)) continue;
      if (!G.contains(g)) G.insert_strong(g);
    }
    G.complete();
    return G;
  }
};

// Weyl group as a permutation group on its roots.
inline PermGroup weyl_perm_group(const RootSystem& rs) {
  std::vector<Perm> gens;
  for (int i = 0; i < rs.rank; ++i)
    gens.push_back(root_permutation(rs, rs.simple_reflection(i)));
  return PermGroup::generated_by((int)rs.roots.size(), gens);
}

// ---------------------------------------------------------------------
// Backtrack search over root images for elements g of Aut(R) with
// g w g^{-1} = u.  Assignments propagate along w-cycles and through
// negation, with Gram-matrix pruning.  `accept` may stop the search by
// returning false.  `member` filters by group membership (needed when
// Aut(R) is bigger than W, i.e. for E6 / D4 / A_m ambients).
// ---------------------------------------------------------------------

struct ConjugacySearch {
  const RootSystem& rs;
  int nroots;
  std::vector<std::vector<i64>> gram; // root x root pairing
  std::vector<int> neg;               // index of -root

  explicit ConjugacySearch(const RootSystem& rs_) : rs(rs_) {
    nroots = (int)rs.roots.size();
    gram.assign(nroots, std::vector<i64>(nroots));
    for (int i = 0; i < nroots; ++i)
      for (int j = 0; j < nroots; ++j)
        gram[i][j] = rs.pair(rs.roots[i], rs.roots[j]);
    neg.resize(nroots);
    for (int i = 0; i < nroots; ++i) {
      IVec m = rs.roots[i];
      for (auto& c : m) c = -c;
      neg[i] = rs.index_of(m);
    }
  }

  // search for g with g.pw = pu.g  (as root permutations)
  // visit(img) is called for each complete consistent assignment and
  // returns true to continue enumerating.
  void search(const Perm& pw, const Perm& pu,
              const std::function<bool(const std::vector<int>&)>& visit) const {
    std::vector<int> wc_len(nroots), uc_len(nroots);
    cycle_lengths(pw, wc_len);
    cycle_lengths(pu, uc_len);
    std::vector<int> pivots;
    for (int i = 0; i < rs.rank; ++i) {
      IVec e(rs.rank, 0);
      e[i] = 1;
      pivots.push_back(rs.index_of(e));
    }
    std::vector<int> img(nroots, -1), used(nroots, 0);
    std::vector<int> trail;
    bool stop = false;

    std::function<bool(int, int, size_t)> assign = [&](int r, int b,
                                                       size_t trail_mark) {
      // assign img[r] = b plus closure; returns false on contradiction
      std::vector<int> stack{r};
      std::vector<int> vals{b};
      while (!stack.empty()) {
        int x = stack.back(), y = vals.back();
        stack.pop_back();
        vals.pop_back();
        if (img[x] >= 0) {
          if (img[x] != y) return false;
          continue;
        }
        if (used[y]) return false;
        // Gram consistency against everything assigned so far
        for (int t = (int)trail_mark; t < (int)trail.size(); ++t) {
          int z = trail[t];
          if (gram[x][z] != gram[y][img[z]]) return false;
        }
        img[x] = y;
        used[y] = 1;
        trail.push_back(x);
        stack.push_back(neg[x]);
        vals.push_back(neg[y]);
        stack.push_back(pw[x]);
        vals.push_back(pu[y]);
      }
      return true;
    };

    std::function<void(size_t)> rec = [&](size_t pi) {
      if (stop) return;
      while (pi < pivots.size() && img[pivots[pi]] >= 0) ++pi;
      if (pi == pivots.size()) {
        if (!visit(img)) stop = true;
        return;
      }
      int r = pivots[pi];
      for (int b = 0; b < nroots && !stop; ++b) {
        if (used[b]) continue;
        if (wc_len[r] != uc_len[b]) continue;
        if (gram[r][r] != gram[b][b]) continue;
        size_t mark = trail.size();
        bool pre_ok = true;
        for (int t = 0; t < (int)mark; ++t) {
          int z = trail[t];
          if (gram[r][z] != gram[b][img[z]]) { pre_ok = false; break; }
        }
        if (pre_ok && assign(r, b, 0)) rec(pi + 1);
        while (trail.size() > mark) {
          int x = trail.back();
          trail.pop_back();
          used[img[x]] = 0;
          img[x] = -1;
        }
      }
    };
    rec(0);
  }

  static void cycle_lengths(const Perm& p, std::vector<int>& out) {
    std::vector<char> seen(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) continue;
      std::vector<int> cyc;
      size_t j = i;
      while (!seen[j]) {
        seen[j] = 1;
        cyc.push_back((int)j);
        j = p[j];
      }
      for (int x : cyc) out[x] = (int)cyc.size();
    }
  }

  // turn a full root-image assignment into the matrix on the root basis
  IMat to_matrix(const std::vector<int>& img) const {
    IMat m(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
      IVec e(rs.rank, 0);
      e[i] = 1;
      int r = rs.index_of(e);
      const IVec& im = rs.roots[img[r]];
      for (int j = 0; j < rs.rank; ++j) m(j, i) = im[j];
    }
    return m;
  }
};

// Are w and u conjugate in the Weyl group?  `member` tests membership of
// the conjugating element (pass nullptr when Aut(R) = W, as in E7/E8).
inline bool weyl_conjugate(const RootSystem& rs, const IMat& w, const IMat& u,
                           const std::function<bool(const IMat&)>& member) {
  ConjugacySearch cs(rs);
  Perm pw = root_permutation(rs, w), pu = root_permutation(rs, u);
  bool found = false;
  cs.search(pw, pu, [&](const std::vector<int>& img) {
    IMat g = cs.to_matrix(img);
    if (!(g * w == u * g)) return true; // keep searching
    if (member && !member(g)) return true;
    found = true;
    return false;
  });
  return found;
}

// order of the centralizer of w in the Weyl group
inline i64 weyl_centralizer_order(
    const RootSystem& rs, const IMat& w,
    const std::function<bool(const IMat&)>& member) {
  ConjugacySearch cs(rs);
  Perm pw = root_permutation(rs, w);
  i64 count = 0;
  cs.search(pw, pw, [&](const std::vector<int>& img) {
    IMat g = cs.to_matrix(img);
    IMat gw = g * w, wg = w * g;
    if (gw == wg && (!member || member(g))) ++count;
    return true;
  });
  check(count > 0, "centralizer search found nothing");
  return count;
}

} // namespace alcove
