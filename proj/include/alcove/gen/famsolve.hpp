#pragma once

#include <optional>
#include <cstdio>
#include <cstdlib>

#include "alcove/families.hpp"
#include "alcove/fusion.hpp"
#include "alcove/gen/classgen.hpp"

namespace alcove {
namespace gen {

// ---------------------------------------------------------------------
// Family partition solver for the exceptional types.  Exact facts used:
//   (J1) truncated induction from a parabolic subgroup has a unique
//        b-minimal constituent of multiplicity one, and it preserves
//        the a-invariant: a(j(E')) = a(E').
//   (J2) the a-truncated induction of one subgroup family lies inside
//        a single family.
//   (J3) tensoring with sign permutes families.
//   (J4) a(F) = min b over F, attained exactly at the unique special
//        member; hence a(E) <= b(E) with equality iff E is special.
//   (J5) duality: a(F) = nu - a'(F (x) sgn), a' = max b' over members.
// Propagation pins most memberships; the final exhaustive completion is
// validated against all of (J2)-(J5) and must be unique.
// ---------------------------------------------------------------------

// a-values per irreducible of any supported type (via its families)
inline std::vector<i64> a_values(TableRegistry& reg, const TypeLabel& type) {
  const CharTable& t = reg.get(type);
  std::vector<i64> a(t.n_irreps(), -1);
  for (auto& f : families(reg, type))
    for (int m : f.members) a[m] = f.a;
  return a;
}

struct ParabolicData {
  SubSystem ss;
  const CharTable* table = nullptr;
  std::vector<Family> fams;
  std::vector<i64> aJ;                  // per subgroup irrep
  std::vector<std::vector<i64>> mult;   // [W irrep][subgroup irrep]
};

class FamilySolver {
 public:
  FamilySolver(const CharTable& t, TableRegistry& reg) : t_(t), reg_(reg) {
    n_ = t.n_irreps();
    parent_.resize(n_);
    for (int i = 0; i < n_; ++i) parent_[i] = i;
    lo_.assign(n_, 0);
    hi_.resize(n_);
    exact_.assign(n_, -1);
    for (int i = 0; i < n_; ++i) hi_[i] = t.irreps[i].b;
  }

  std::vector<Family> solve() {
    gather_parabolics();
    // the unit representation is a family by itself, and by duality so
    // is sign
    set_exact(t_.trivial, 0);
    set_exact(t_.sign, t_.rs.nu);
    singleton_.insert(t_.trivial);
    singleton_.insert(t_.sign);
    assign_j_values();
    bool changed = true;
    while (changed) {
      changed = false;
      changed |= k6_merges();
      changed |= sgn_closure();
      changed |= tighten();
    }
    auto partition = endgame();
    std::vector<Family> out;
    for (auto& block : partition) {
      Family f;
      f.members = block;
      detail::finish_family(t_, f);
      out.push_back(f);
    }
    std::sort(out.begin(), out.end(), [&](const Family& x, const Family& y) {
      if (x.a != y.a) return x.a < y.a;
      return x.special_degree < y.special_degree;
    });
    validate(out);
    return out;
  }

 private:
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    i64 ea = exact_[a], eb = exact_[b];
    check(ea < 0 || eb < 0 || ea == eb, "conflicting a-values merged");
    parent_[b] = a;
    if (exact_[a] < 0) exact_[a] = eb;
    return true;
  }

  void gather_parabolics() {
    std::set<std::vector<int>> seen;
    for (auto& ss : proper_parabolic_subsystems(t_.rs)) {
      std::vector<int> key;
      for (auto& r : ss.positive) key.push_back(t_.rs.index_of(r));
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) continue;
      if (ss.type.empty()) continue;
      ParabolicData pd;
      pd.ss = ss;
      pd.table = &reg_.get(ss.type);
      pd.fams = families(reg_, ss.type);
      pd.aJ = a_values(reg_, ss.type);
      FusionMap fm = build_fusion(t_, ss, *pd.table);
      for (int e = 0; e < n_; ++e)
        pd.mult.push_back(restrict_multiplicities(fm, e));
      paras_.push_back(std::move(pd));
    }
  }

  // Induction facts: a_W(E) >= a_{W_J}(E') for every constituent E of
  // Ind(E') (monotonicity), so a b-minimal constituent over a special
  // source is pinned exactly: a(E) >= a(E') = b(E') = b(E) >= a(E).
  void assign_j_values() {
    for (auto& pd : paras_) {
      for (int ep = 0; ep < pd.table->n_irreps(); ++ep) {
        int bj = pd.table->irreps[ep].b;
        i64 aj = pd.aJ[ep];
        bool special_src = (aj == bj);
        for (int e = 0; e < n_; ++e) {
          if (!pd.mult[e][ep]) continue;
          check(t_.irreps[e].b >= bj, "induction below the b-floor");
          if (lo_[e] < aj) lo_[e] = aj;
          check(lo_[e] <= hi_[e], "empty a-interval for " + t_.irreps[e].label);
          if (special_src && t_.irreps[e].b == bj) set_exact(e, bj);
        }
      }
    }
  }

  void set_exact(int e, i64 v) {
    int r = find(e);
    check(exact_[r] < 0 || exact_[r] == v,
          "inconsistent a-value for " + t_.irreps[e].label);
    exact_[r] = v;
    check(v >= lo_[e] && v <= hi_[e], "a-value outside its interval");
  }

  bool k6_merges() {
    bool changed = false;
    for (auto& pd : paras_) {
      for (auto& fj : pd.fams) {
        i64 av = fj.a;
        std::vector<int> definite;
        for (int e = 0; e < n_; ++e) {
          bool touched = false;
          for (int m : fj.members)
            if (pd.mult[e][m]) touched = true;
          if (!touched) continue;
          if (exact_[find(e)] == av) definite.push_back(e);
        }
        for (size_t i = 1; i < definite.size(); ++i)
          changed |= unite(definite[0], definite[i]);
      }
    }
    return changed;
  }

  bool sgn_closure() {
    bool changed = false;
    for (int e = 0; e < n_; ++e) {
      int f = find(e);
      if (f == e) continue;
      changed |= unite(t_.tensor_sign_map[e], t_.tensor_sign_map[f]);
    }
    return changed;
  }

  bool tighten() {
    bool changed = false;
    std::map<int, std::vector<int>> blocks;
    for (int e = 0; e < n_; ++e) blocks[find(e)].push_back(e);
    for (auto& [r, mem] : blocks) {
      i64 minb = INT64_MAX;
      for (int e : mem) minb = std::min<i64>(minb, t_.irreps[e].b);
      for (int e : mem) {
        if (hi_[e] > minb) {
          hi_[e] = minb;
          changed = true;
        }
        if (exact_[r] >= 0 && (lo_[e] != exact_[r] || hi_[e] != exact_[r])) {
          check(exact_[r] >= lo_[e] && exact_[r] <= hi_[e],
                "interval excludes the block a-value");
          lo_[e] = hi_[e] = exact_[r];
          changed = true;
        }
      }
    }
    return changed;
  }

  // completion: closed blocks already contain their special (a = min b);
  // open blocks either stand alone as a new family or join a closed one
  std::vector<std::vector<int>> endgame() {
    std::map<int, std::vector<int>> blocks;
    for (int e = 0; e < n_; ++e) blocks[find(e)].push_back(e);
    std::vector<std::vector<int>> closed;
    std::vector<std::pair<i64, std::vector<int>>> open;
    for (auto& [r, mem] : blocks) {
      i64 minb = INT64_MAX;
      for (int e : mem) minb = std::min<i64>(minb, t_.irreps[e].b);
      i64 a = exact_[r];
      if (a >= 0 && a == minb) closed.push_back(mem);
      else open.push_back({a, mem});
    }
    std::vector<std::vector<int>> best;
    long solutions = 0;
    std::function<void(size_t)> rec = [&](size_t k) {
      if (solutions > 1) return;
      if (k == open.size()) {
        if (validate_quiet(closed)) {
          ++solutions;
          if (solutions == 1) best = closed;
        }
        return;
      }
      auto& [a, mem] = open[k];
      i64 minb = INT64_MAX;
      for (int e : mem) minb = std::min<i64>(minb, t_.irreps[e].b);
      // standalone family: a becomes min b
      bool fits = (a < 0 || a == minb);
      for (int e : mem)
        if (lo_[e] > minb || hi_[e] < minb) fits = false;
      if (fits) {
        closed.push_back(mem);
        rec(k + 1);
        closed.pop_back();
      }
      // join an existing family
      for (auto& cb : closed) {
        if (cb.size() == 1 && singleton_.count(cb[0])) continue;
        i64 cb_a = INT64_MAX;
        for (int e : cb) cb_a = std::min<i64>(cb_a, t_.irreps[e].b);
        if (a >= 0) {
          if (cb_a != a) continue;
        } else {
          bool ok = cb_a < minb; // a second b-minimum would mean two specials
          for (int e : mem)
            if (lo_[e] > cb_a || hi_[e] < cb_a) ok = false;
          if (!ok) continue;
        }
        size_t before = cb.size();
        cb.insert(cb.end(), mem.begin(), mem.end());
        rec(k + 1);
        cb.resize(before);
      }
    };
    rec(0);
    if (solutions != 1 && std::getenv("ALCOVE_FAMSOLVE_DEBUG")) {
      std::fprintf(stderr, "solutions=%ld; open blocks:\n", solutions);
      for (auto& [a, mem] : open) {
        std::fprintf(stderr, "  a=%lld:", a);
        for (int e : mem)
          std::fprintf(stderr, " %s(b=%d,lo=%lld,hi=%lld)",
                       t_.irreps[e].label.c_str(), t_.irreps[e].b, lo_[e],
                       hi_[e]);
        std::fprintf(stderr, "\n");
      }
      std::fprintf(stderr, "closed blocks:\n");
      for (auto& cb : closed) {
        std::fprintf(stderr, " ");
        for (int e : cb) std::fprintf(stderr, " %s", t_.irreps[e].label.c_str());
        std::fprintf(stderr, "\n");
      }
    }
    check(solutions >= 1, "no valid family partition found");
    check(solutions == 1, "family partition is not unique");
    return best;
  }

  bool validate_quiet(const std::vector<std::vector<int>>& parts) {
    try {
      std::vector<Family> fams;
      for (auto& mem : parts) {
        Family f;
        f.members = mem;
        detail::finish_family(t_, f); // throws on two specials
        fams.push_back(f);
      }
      for (auto& f : fams)
        for (int e : f.members) {
          int r = find(e);
          if (exact_[r] >= 0 && exact_[r] != f.a) return false;
          if (f.a < lo_[e] || f.a > hi_[e]) return false;
          if (singleton_.count(e) && f.members.size() != 1) return false;
        }
      // sign permutes families with the a / a' duality
      for (size_t i = 0; i < fams.size(); ++i) family_dual(t_, fams, (int)i);
      // (J2): an a-truncated induction set never crosses families, and
      // every irreducible is covered by some such set or the sign twist
      // of one (constructible characters cover Irr(W))
      std::vector<int> fam_of(n_, -1);
      for (size_t i = 0; i < fams.size(); ++i)
        for (int e : fams[i].members) fam_of[e] = (int)i;
      std::vector<char> covered(n_, 0);
      for (auto& pd : paras_)
        for (auto& fj : pd.fams) {
          int hit = -1;
          for (int e = 0; e < n_; ++e) {
            bool touched = false;
            for (int m : fj.members)
              if (pd.mult[e][m]) touched = true;
            if (!touched || fams[fam_of[e]].a != fj.a) continue;
            if (hit < 0) hit = fam_of[e];
            if (hit != fam_of[e]) return false;
            covered[e] = 1;
            covered[t_.tensor_sign_map[e]] = 1;
          }
        }
      for (int e = 0; e < n_; ++e)
        if (!covered[e]) return false;
      return true;
    } catch (const std::exception&) {
      return false;
    }
  }

  void validate(const std::vector<Family>& fams) {
    std::set<int> covered;
    for (auto& f : fams)
      for (int m : f.members) check(covered.insert(m).second, "overlap");
    check((int)covered.size() == n_, "partition misses irreducibles");
    for (size_t i = 0; i < fams.size(); ++i)
      family_dual(t_, fams, (int)i);
  }

  const CharTable& t_;
  TableRegistry& reg_;
  int n_ = 0;
  std::vector<ParabolicData> paras_;
  std::vector<int> parent_;
  std::vector<i64> lo_, hi_, exact_;
  std::set<int> singleton_;
};

inline std::vector<Family> solve_families(const CharTable& t,
                                          TableRegistry& reg) {
  return FamilySolver(t, reg).solve();
}

} // namespace gen
} // namespace alcove
