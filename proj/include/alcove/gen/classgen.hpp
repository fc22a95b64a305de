#pragma once

#include <unordered_set>
#include <random>
#include <array>

#include "alcove/tables.hpp"
#include "alcove/fusion.hpp"

namespace alcove {
namespace gen {

// ---------------------------------------------------------------------
// Conjugacy class discovery for the exceptional Weyl groups.  Classes
// are seeded deterministically (parabolic elliptics, full-rank
// subsystem elliptics via iterated Borel-de Siebenthal, the longest and
// Coxeter elements, power closure, pairwise products) plus a seeded
// pseudo-random stream; completeness is certified by the exact identity
// sum of class sizes == |W|.
// ---------------------------------------------------------------------

struct GenClass {
  IMat rep;
  i64 size = 0;
  int order = 0;
  Fingerprint fp;
};

using ExtKey = std::vector<i64>;

// hash of the multiset of root-orbit Gram profiles: for every root r
// with w-orbit length L, the sequence ((r, w r), ..., (r, w^{L-1} r)).
// Conjugation invariant and much sharper than eigenvalue data.
inline i64 orbit_profile_hash(const RootSystem& rs, const IMat& w) {
  auto pw = root_permutation(rs, w);
  int n = (int)pw.size();
  std::vector<std::vector<i64>> profiles;
  for (int r = 0; r < n; ++r) {
    std::vector<i64> prof;
    int x = pw[r];
    while (x != r) {
      prof.push_back(rs.pair(rs.roots[r], rs.roots[x]));
      x = pw[x];
    }
    profiles.push_back(std::move(prof));
  }
  std::sort(profiles.begin(), profiles.end());
  unsigned long long h = 1469598103934665603ULL;
  for (auto& p : profiles) {
    h = (h ^ 0x9e3779b97f4a7c15ULL) * 1099511628211ULL;
    for (i64 v : p) h = (h ^ (unsigned long long)(v + 7)) * 1099511628211ULL;
  }
  return (i64)(h >> 1);
}

inline ExtKey extended_key(const RootSystem& rs, const IMat& w,
                           const Fingerprint& fp) {
  ExtKey k;
  auto app = [&](const std::vector<i64>& v) {
    k.insert(k.end(), v.begin(), v.end());
    k.push_back(INT64_MIN);
  };
  app(fp.cp_v);
  std::vector<i64> cyc(fp.cycles.begin(), fp.cycles.end());
  app(cyc);
  app(fp.cp_l2);
  IMat w2 = w * w;
  IMat w3 = w2 * w;
  IMat w5 = w3 * w2;
  app(charpoly(w2));
  app(charpoly(w3));
  app(charpoly(w5));
  k.push_back(orbit_profile_hash(rs, w));
  return k;
}

inline int element_order(const Fingerprint& fp) {
  int o = 1;
  for (int c : fp.cycles) o = std::lcm(o, c);
  return o;
}

// all proper standard parabolic subsystems (one per subset of the nodes)
inline std::vector<SubSystem> proper_parabolic_subsystems(const RootSystem& rs) {
  std::vector<SubSystem> out;
  int r = rs.rank;
  for (int mask = 1; mask < (1 << r) - 1; ++mask) {
    std::vector<IVec> seeds;
    for (int i = 0; i < r; ++i)
      if (mask & (1 << i)) {
        IVec e(r, 0);
        e[i] = 1;
        seeds.push_back(e);
      }
    out.push_back(subsystem_closure(rs, seeds));
  }
  return out;
}

// iterated Borel-de Siebenthal: all proper full-rank subsystems found by
// repeatedly replacing a simple factor with (factor minus node + lowest
// root), deduplicated by root set
inline std::vector<SubSystem> proper_fullrank_subsystems(const RootSystem& rs) {
  std::set<std::vector<int>> seen;
  std::vector<SubSystem> work;
  {
    std::vector<IVec> all;
    for (int i = 0; i < rs.rank; ++i) {
      IVec e(rs.rank, 0);
      e[i] = 1;
      all.push_back(e);
    }
    work.push_back(subsystem_closure(rs, all));
  }
  auto key_of = [&](const SubSystem& s) {
    std::vector<int> k;
    for (auto& r : s.positive) k.push_back(rs.index_of(r));
    std::sort(k.begin(), k.end());
    return k;
  };
  seen.insert(key_of(work[0]));
  for (size_t qi = 0; qi < work.size(); ++qi) {
    SubSystem cur = work[qi]; // copy: work may reallocate
    for (size_t fi = 0; fi < cur.factor_simples.size(); ++fi) {
      auto& simples = cur.factor_simples[fi];
      auto marks =
          affine_diagram(build_root_system(TypeLabel{cur.type[fi]})).marks;
      IVec theta(rs.rank, 0);
      for (size_t i = 0; i < simples.size(); ++i)
        for (int j = 0; j < rs.rank; ++j)
          theta[j] += marks[i + 1] * simples[i][j];
      IVec mtheta = theta;
      for (auto& c : mtheta) c = -c;
      check(rs.index_of(mtheta) >= 0, "lowest root not a root");
      for (size_t drop = 0; drop < simples.size(); ++drop) {
        std::vector<IVec> seeds{mtheta};
        for (size_t i = 0; i < simples.size(); ++i)
          if (i != drop) seeds.push_back(simples[i]);
        for (size_t fj = 0; fj < cur.factor_simples.size(); ++fj)
          if (fj != fi)
            for (auto& s : cur.factor_simples[fj]) seeds.push_back(s);
        SubSystem child = subsystem_closure(rs, seeds);
        if (child.type == cur.type) continue;
        auto k = key_of(child);
        if (!seen.insert(k).second) continue;
        work.push_back(child);
      }
    }
  }
  std::vector<SubSystem> out;
  for (auto& ss : work)
    if (!(ss.type == rs.type)) out.push_back(ss);
  return out;
}

// longest element by greedy length increase
inline IMat longest_element(const RootSystem& rs) {
  IMat w = IMat::identity(rs.rank);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < rs.rank; ++i) {
      IVec e(rs.rank, 0);
      e[i] = 1;
      if (rs.is_positive(w.apply(e))) {
        w = w * rs.simple_reflection(i);
        grew = true;
        break;
      }
    }
  }
  return w;
}

class ClassGen {
 public:
  ClassGen(const RootSystem& rs, TableRegistry& reg)
      : rs_(rs), reg_(reg) {
    check(rs.is_simple() && rs.type[0].series == 'E', "ClassGen is for E types");
    gens_.reserve(rs.rank);
    for (int i = 0; i < rs.rank; ++i) gens_.push_back(rs.simple_reflection(i));
    if (rs.type[0].rank == 6) {
      W_ = std::make_unique<PermGroup>(weyl_perm_group(rs));
      check(W_->order() == rs.weyl_order, "Schreier-Sims order mismatch");
    }
  }

  std::vector<GenClass> run() {
    add_candidate(IMat::identity(rs_.rank));
    add_candidate(longest_element(rs_));
    IMat cox = IMat::identity(rs_.rank);
    for (auto& s : gens_) cox = cox * s;
    add_candidate(cox);
    seed_parabolic_elliptics();
    seed_fullrank_elliptics();
    pairwise_products();
    random_stream(false);
    if (total_size() != rs_.weyl_order) {
      // invariant collision between distinct classes: rerun the stream
      // with explicit conjugacy tests on key matches
      random_stream(true);
    }
    check(total_size() == rs_.weyl_order,
          "class discovery incomplete: sizes sum to " +
              std::to_string(total_size()) + " of " +
              std::to_string(rs_.weyl_order));
    // canonical deterministic order
    std::vector<int> perm(classes_.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = (int)i;
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      if (classes_[a].size != classes_[b].size)
        return classes_[a].size < classes_[b].size;
      if (classes_[a].order != classes_[b].order)
        return classes_[a].order < classes_[b].order;
      return keys_[a] < keys_[b];
    });
    std::vector<GenClass> out;
    for (int i : perm) out.push_back(classes_[i]);
    return out;
  }

 private:
  void seed_parabolic_elliptics() {
    for (auto& ss : proper_parabolic_subsystems(rs_)) seed_subsystem(ss);
  }

  void seed_subsystem(const SubSystem& ss) {
    if (ss.type.empty()) return;
    const CharTable& t = reg_.get(ss.type);
    std::vector<IMat> refl;
    for (auto& root : ss.all_simples())
      refl.push_back(rs_.reflection_matrix(root));
    for (auto& cls : t.classes) {
      // elliptic in the subgroup: no eigenvalue 1 there
      auto cp = charpoly(cls.rep);
      i64 at1 = 0;
      for (i64 c : cp) at1 += c;
      if (at1 == 0) continue;
      IMat w = IMat::identity(rs_.rank);
      for (int i : cls.word) w = w * refl[i];
      add_candidate(w);
    }
  }

  void seed_fullrank_elliptics() {
    for (auto& ss : proper_fullrank_subsystems(rs_)) seed_subsystem(ss);
  }

  void pairwise_products() {
    size_t n0 = classes_.size();
    for (size_t i = 0; i < n0; ++i)
      for (size_t j = i; j < n0 && j < i + 40; ++j)
        add_candidate(classes_[i].rep * classes_[j].rep);
  }

  i64 total_size() const {
    i64 sum = 0;
    for (auto& c : classes_) sum += c.size;
    return sum;
  }

  void random_stream(bool paranoid) {
    std::mt19937_64 rng(paranoid ? 0xbacc0ffeULL : 0x5eed5eedULL);
    int spins = 0;
    const int max_spins = paranoid ? 30000 : 200000;
    i64 want = rs_.weyl_order;
    while (total_size() != want && spins < max_spins) {
      IMat w = IMat::identity(rs_.rank);
      int len = 24 + (int)(rng() % 40);
      for (int k = 0; k < len; ++k) w = w * gens_[rng() % gens_.size()];
      add_candidate(w, paranoid);
      ++spins;
    }
  }

  // returns the size of a newly discovered class, 0 if already known
  i64 add_candidate(const IMat& w, bool paranoid = false) {
    Fingerprint fp = fingerprint(rs_, w);
    ExtKey key = extended_key(rs_, w, fp);
    auto it = index_.find(key);
    if (it != index_.end()) {
      if (!paranoid) return 0;
      for (int idx : it->second)
        if (weyl_conjugate(rs_, w, classes_[idx].rep, member_fn())) return 0;
      // genuinely new class sharing every invariant with a known one
    }
    GenClass gc;
    gc.rep = w;
    gc.fp = fp;
    gc.order = element_order(fp);
    gc.size = measure_class(w);
    int idx = (int)classes_.size();
    index_[key].push_back(idx);
    keys_.push_back(key);
    classes_.push_back(gc);
    // closure under power maps
    IMat p = w;
    for (int k = 2; k < gc.order; ++k) {
      p = p * w;
      add_candidate(p, paranoid);
    }
    return gc.size;
  }

  std::function<bool(const IMat&)> member_fn() {
    if (!W_) return nullptr;
    return [this](const IMat& g) {
      return W_->contains(root_permutation(rs_, g));
    };
  }

  i64 measure_class(const IMat& w) {
    const i64 cap = 420;
    i64 cnt = centralizer_capped(w, cap);
    if (cnt < cap) return rs_.weyl_order / cnt;
    return bfs_class_size(w);
  }

  i64 centralizer_capped(const IMat& w, i64 cap) {
    ConjugacySearch cs = conj_search();
    Perm pw = root_permutation(rs_, w);
    i64 count = 0;
    cs.search(pw, pw, [&](const std::vector<int>& img) {
      IMat g = cs.to_matrix(img);
      if (g * w == w * g && (!W_ || W_->contains(root_permutation(rs_, g))))
        ++count;
      return count < cap;
    });
    return count;
  }

  ConjugacySearch& conj_search() {
    if (!cs_) cs_ = std::make_unique<ConjugacySearch>(rs_);
    return *cs_;
  }

  i64 bfs_class_size(const IMat& w) {
    auto pack = [&](const IMat& m) {
      std::string s((size_t)rs_.rank * rs_.rank, 0);
      for (size_t i = 0; i < s.size(); ++i) {
        check(m.a[i] >= -127 && m.a[i] <= 127, "pack overflow");
        s[i] = (char)(int8_t)m.a[i];
      }
      return s;
    };
    std::unordered_set<std::string> seen;
    std::vector<IMat> queue{w};
    seen.insert(pack(w));
    while (!queue.empty()) {
      IMat x = queue.back();
      queue.pop_back();
      for (auto& s : gens_) {
        IMat y = s * x * s;
        auto k = pack(y);
        if (seen.insert(k).second) queue.push_back(y);
      }
    }
    return (i64)seen.size();
  }

  const RootSystem& rs_;
  TableRegistry& reg_;
  std::vector<IMat> gens_;
  std::unique_ptr<PermGroup> W_;
  std::unique_ptr<ConjugacySearch> cs_;
  std::vector<GenClass> classes_;
  std::vector<ExtKey> keys_;
  std::map<ExtKey, std::vector<int>> index_;
};

} // namespace gen
} // namespace alcove
