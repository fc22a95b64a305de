#pragma once

#include <set>

#include "alcove/gen/classgen.hpp"
#include "alcove/gen/lll.hpp"

namespace alcove {
namespace gen {

// ---------------------------------------------------------------------
// Character table construction for the exceptional Weyl groups, the
// classical way: start from the exterior powers of the reflection
// representation, grow the pool with tensor products, symmetrized
// squares, Adams operations and inductions from reflection subgroups,
// and peel irreducibles off with exact norm bookkeeping (lattice
// reduction closes the endgame).
// ---------------------------------------------------------------------

struct CharGen {
  CharGen(const RootSystem& rs, TableRegistry& reg, std::vector<GenClass> cls)
      : rs_(rs), reg_(reg), cls_(std::move(cls)) {
    order_ = rs.weyl_order;
    n_ = (int)cls_.size();
    for (int i = 0; i < n_; ++i) {
      extindex_[extended_key(rs_, cls_[i].rep, cls_[i].fp)].push_back(i);
      if (cls_[i].rep.is_identity()) id_class_ = i;
    }
    if (rs.type[0].rank == 6)
      W_ = std::make_unique<PermGroup>(weyl_perm_group(rs));
    check(id_class_ >= 0, "identity class missing");
    for (int i = 0; i < n_; ++i) {
      IMat w2 = cls_[i].rep * cls_[i].rep;
      IMat w3 = w2 * cls_[i].rep;
      IMat w5 = w3 * w2;
      pow2_.push_back(locate(w2));
      pow3_.push_back(locate(w3));
      pow5_.push_back(locate(w5));
    }
  }

  int locate(const IMat& w) const {
    Fingerprint fp = fingerprint(rs_, w);
    auto it = extindex_.find(extended_key(rs_, w, fp));
    check(it != extindex_.end(), "element does not match any class");
    if (it->second.size() == 1) return it->second[0];
    std::function<bool(const IMat&)> member = nullptr;
    if (W_)
      member = [this](const IMat& g) {
        return W_->contains(root_permutation(rs_, g));
      };
    for (size_t k = 0; k + 1 < it->second.size(); ++k)
      if (weyl_conjugate(rs_, w, cls_[it->second[k]].rep, member))
        return it->second[k];
    return it->second.back();
  }

  i64 inner(const std::vector<i64>& f, const std::vector<i64>& g) const {
    i128 s = 0;
    for (int c = 0; c < n_; ++c) s += (i128)cls_[c].size * f[c] * g[c];
    check(s % order_ == 0, "inner product not integral");
    i128 v = s / order_;
    check(v <= (i128)INT64_MAX && v >= (i128)INT64_MIN, "inner overflow");
    return (i64)v;
  }

  // subtract all known irreducible components; returns the norm
  i64 reduce(std::vector<i64>& f) const {
    for (auto& chi : irr_) {
      i64 m = inner(f, chi);
      if (!m) continue;
      for (int c = 0; c < n_; ++c) {
        i128 v = (i128)f[c] - (i128)m * chi[c];
        check(v <= (i128)INT64_MAX && v >= (i128)INT64_MIN, "reduce overflow");
        f[c] = (i64)v;
      }
    }
    return inner(f, f);
  }

  void consider(std::vector<i64> f) {
    if (!seen_.insert(f).second) return;
    i64 nrm = reduce(f);
    if (nrm == 0) return;
    if (nrm == 1) {
      admit(f);
      return;
    }
    if ((int)pool_.size() < 400) pool_.push_back(std::move(f));
  }

  void admit(std::vector<i64> f) {
    std::vector<std::vector<i64>> pending{std::move(f)};
    while (!pending.empty()) {
      std::vector<i64> g = std::move(pending.back());
      pending.pop_back();
      i64 nrm = reduce(g); // may have been absorbed by a newer irreducible
      if (nrm == 0) continue;
      if (nrm != 1) {
        pool_.push_back(std::move(g));
        continue;
      }
      if (g[id_class_] < 0)
        for (auto& v : g) v = -v;
      check(g[id_class_] > 0, "irreducible with zero degree");
      irr_.push_back(std::move(g));
      // keep the pool reduced with respect to the new irreducible
      std::vector<std::vector<i64>> keep;
      for (auto& p : pool_) {
        i64 pn = reduce(p);
        if (pn == 1) pending.push_back(std::move(p));
        else if (pn > 1) keep.push_back(std::move(p));
      }
      pool_.swap(keep);
    }
  }

  void exterior_powers() {
    for (int k = 0; k <= rs_.rank; ++k) {
      std::vector<i64> f(n_);
      for (int c = 0; c < n_; ++c) {
        auto cp = charpoly(cls_[c].rep);
        i64 ek = cp[rs_.rank - k];
        if (k % 2) ek = -ek;
        f[c] = ek;
      }
      consider(std::move(f));
    }
  }

  void inductions() {
    auto subs = proper_parabolic_subsystems(rs_);
    auto fr = proper_fullrank_subsystems(rs_);
    subs.insert(subs.end(), fr.begin(), fr.end());
    std::set<std::vector<int>> seen_sets;
    for (auto& ss : subs) {
      std::vector<int> key;
      for (auto& r : ss.positive) key.push_back(rs_.index_of(r));
      std::sort(key.begin(), key.end());
      if (!seen_sets.insert(key).second) continue;
      induce_from(ss);
    }
  }

  void induce_from(const SubSystem& ss) {
    if (ss.type.empty()) return;
    const CharTable& t = reg_.get(ss.type);
    std::vector<IMat> refl;
    for (auto& root : ss.all_simples())
      refl.push_back(rs_.reflection_matrix(root));
    std::vector<int> fuse(t.n_classes());
    for (int c = 0; c < t.n_classes(); ++c) {
      IMat w = IMat::identity(rs_.rank);
      for (int i : t.classes[c].word) w = w * refl[i];
      fuse[c] = locate(w);
    }
    for (auto& ir : t.irreps) {
      std::vector<i128> acc(n_, 0);
      for (int c = 0; c < t.n_classes(); ++c)
        acc[fuse[c]] += (i128)t.classes[c].size * ir.values[c];
      std::vector<i64> f(n_);
      for (int C = 0; C < n_; ++C) {
        i128 num = acc[C] * order_;
        i128 den = (i128)cls_[C].size * t.order;
        check(num % den == 0, "induction value not integral");
        i128 v = num / den;
        check(v <= (i128)INT64_MAX && v >= (i128)INT64_MIN, "induction range");
        f[C] = (i64)v;
      }
      consider(std::move(f));
    }
  }

  void tensor_round() {
    size_t nk = irr_.size();
    for (size_t i = 0; i < nk && (int)irr_.size() < n_; ++i)
      for (size_t j = i; j < nk && (int)irr_.size() < n_; ++j) {
        std::vector<i64> f(n_);
        bool ok = true;
        for (int c = 0; c < n_ && ok; ++c) {
          i128 v = (i128)irr_[i][c] * irr_[j][c];
          if (v > INT64_MAX || v < INT64_MIN) ok = false;
          else f[c] = (i64)v;
        }
        if (ok) consider(std::move(f));
      }
  }

  void symmetrized_round() {
    size_t nk = irr_.size();
    for (size_t i = 0; i < nk && (int)irr_.size() < n_; ++i) {
      std::vector<i64> sym(n_), alt(n_), a2(n_), a3(n_), a5(n_);
      for (int c = 0; c < n_; ++c) {
        i64 x = irr_[i][c], x2 = irr_[i][pow2_[c]];
        sym[c] = (x * x + x2) / 2;
        alt[c] = (x * x - x2) / 2;
        a2[c] = x2;
        a3[c] = irr_[i][pow3_[c]];
        a5[c] = irr_[i][pow5_[c]];
      }
      consider(std::move(sym));
      consider(std::move(alt));
      consider(std::move(a2));
      consider(std::move(a3));
      consider(std::move(a5));
    }
  }

  void lattice_round() {
    if (pool_.empty()) return;
    // sort by norm, keep a workable basis of the residual lattice
    std::sort(pool_.begin(), pool_.end(),
              [&](const std::vector<i64>& a, const std::vector<i64>& b) {
                return inner(a, a) < inner(b, b);
              });
    if (pool_.size() > 160) pool_.resize(160);
    ZMat rows;
    for (auto& p : pool_) {
      ZVec r(n_);
      for (int c = 0; c < n_; ++c) r[c] = (long)p[c];
      rows.push_back(std::move(r));
    }
    rows = row_lattice_basis(std::move(rows));
    auto dot = [&](const ZVec& a, const ZVec& b) {
      mpz_class s = 0;
      for (int c = 0; c < n_; ++c) s += mpz_class((long)cls_[c].size) * a[c] * b[c];
      mpz_class q, r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t(),
                  mpz_class((long)order_).get_mpz_t());
      check(r == 0, "lattice dot not integral");
      return q;
    };
    lll_reduce(rows, dot);
    pool_.clear();
    for (auto& r : rows) {
      std::vector<i64> f(n_);
      for (int c = 0; c < n_; ++c) {
        check(r[c].fits_slong_p(), "lattice vector out of range");
        f[c] = r[c].get_si();
      }
      seen_.erase(f); // allow reconsideration after reduction
      consider(std::move(f));
    }
  }

  CharTable build() {
    exterior_powers();
    inductions();
    int guard = 40;
    while ((int)irr_.size() < n_ && guard-- > 0) {
      size_t before = irr_.size();
      symmetrized_round();
      if ((int)irr_.size() < n_) tensor_round();
      if ((int)irr_.size() < n_) lattice_round();
      if (irr_.size() == before && (int)irr_.size() < n_) {
        // widen: tensor knowns against the pool remnants
        size_t pn = std::min<size_t>(pool_.size(), 40);
        size_t nk = irr_.size();
        for (size_t i = 0; i < nk; ++i)
          for (size_t j = 0; j < pn; ++j) {
            std::vector<i64> f(n_);
            bool ok = true;
            for (int c = 0; c < n_ && ok; ++c) {
              i128 v = (i128)irr_[i][c] * pool_[j][c];
              if (v > INT64_MAX || v < INT64_MIN) ok = false;
              else f[c] = (i64)v;
            }
            if (ok) consider(std::move(f));
          }
        lattice_round();
        check(irr_.size() > before,
              "character generation stalled at " +
                  std::to_string(irr_.size()) + " of " + std::to_string(n_));
      }
    }
    check((int)irr_.size() == n_, "character generation incomplete");

    CharTable t;
    t.type = rs_.type;
    t.rs = rs_;
    t.order = order_;
    for (int i = 0; i < n_; ++i) {
      ClassData c;
      c.label = "c" + std::to_string(i + 1);
      c.rep = cls_[i].rep;
      c.size = cls_[i].size;
      c.fp = cls_[i].fp;
      c.word = matrix_to_word(rs_, c.rep);
      t.classes.push_back(std::move(c));
    }
    std::sort(irr_.begin(), irr_.end(),
              [&](const std::vector<i64>& a, const std::vector<i64>& b) {
                if (a[id_class_] != b[id_class_])
                  return a[id_class_] < b[id_class_];
                return a < b;
              });
    for (auto& chi : irr_) {
      IrrData ir;
      ir.dim = chi[id_class_];
      ir.values = chi;
      t.irreps.push_back(std::move(ir));
    }
    verify_table(t, "generated " + label_str(rs_.type));
    return t;
  }

  const RootSystem& rs_;
  TableRegistry& reg_;
  std::vector<GenClass> cls_;
  i64 order_ = 0;
  int n_ = 0;
  int id_class_ = -1;
  std::map<ExtKey, std::vector<int>> extindex_;
  std::unique_ptr<PermGroup> W_;
  std::vector<int> pow2_, pow3_, pow5_;
  std::vector<std::vector<i64>> irr_;
  std::vector<std::vector<i64>> pool_;
  std::set<std::vector<i64>> seen_;
};

} // namespace gen
} // namespace alcove
