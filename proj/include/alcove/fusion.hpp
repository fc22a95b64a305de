#pragma once

#include <vector>
#include <map>

#include "alcove/tables.hpp"

namespace alcove {

// ---------------------------------------------------------------------
// Class fusion for a reflection subsystem W' < W: every class of the
// abstract subgroup table is realized inside the ambient group through
// the subsystem's simple roots and identified there.  Restrictions of
// ambient characters are then exact class-level inner products; no
// element enumeration happens anywhere.
// ---------------------------------------------------------------------

struct FusionMap {
  const CharTable* sub = nullptr;
  const CharTable* amb = nullptr;
  std::vector<int> to_ambient;     // sub class index -> ambient class index
  std::vector<IMat> sub_rep_amb;   // subgroup class reps in ambient coords
};

inline FusionMap build_fusion(const CharTable& amb, const SubSystem& sub,
                              const CharTable& subt) {
  check(label_str(subt.type) == label_str(sub.type),
        "fusion: table type does not match the subsystem");
  FusionMap fm;
  fm.sub = &subt;
  fm.amb = &amb;
  const RootSystem& ars = amb.rs;
  std::vector<IMat> srefl;
  for (auto& root : sub.all_simples())
    srefl.push_back(ars.reflection_matrix(root));
  check((int)srefl.size() == label_rank(subt.type), "fusion: rank mismatch");
  for (auto& c : subt.classes) {
    IMat w = IMat::identity(ars.rank);
    for (int i : c.word) w = w * srefl[i];
    fm.sub_rep_amb.push_back(w);
    fm.to_ambient.push_back(identify_class(amb, w));
  }
  return fm;
}

// multiplicities of the subgroup irreducibles in Res_{W'} of an ambient
// irreducible; exact, with dimension bookkeeping verified
inline std::vector<i64> restrict_multiplicities(const FusionMap& fm,
                                                int amb_irrep) {
  const CharTable& S = *fm.sub;
  const CharTable& A = *fm.amb;
  const auto& chi = A.irreps[amb_irrep];
  std::vector<i64> mult(S.n_irreps(), 0);
  for (int f = 0; f < S.n_irreps(); ++f) {
    i128 s = 0;
    for (int c = 0; c < S.n_classes(); ++c)
      s += (i128)S.classes[c].size * chi.values[fm.to_ambient[c]] *
           S.irreps[f].values[c];
    check(s % S.order == 0, "restriction: non-integral multiplicity");
    i128 m = s / S.order;
    check(m >= 0, "restriction: negative multiplicity");
    check(m <= (i128)INT64_MAX, "restriction overflow");
    mult[f] = (i64)m;
  }
  i64 dim = 0;
  for (int f = 0; f < S.n_irreps(); ++f) dim += mult[f] * S.irreps[f].dim;
  check(dim == chi.dim, "restriction loses dimension");
  return mult;
}

// b_n and b'_n of an ambient irreducible with respect to the subsystem
inline std::pair<int, int> restrict_b_invariants(const FusionMap& fm,
                                                 int amb_irrep) {
  auto mult = restrict_multiplicities(fm, amb_irrep);
  const CharTable& S = *fm.sub;
  int bn = INT32_MAX, bpn = -1;
  for (int f = 0; f < S.n_irreps(); ++f) {
    if (!mult[f]) continue;
    bn = std::min(bn, S.irreps[f].b);
    bpn = std::max(bpn, S.irreps[f].bprime);
  }
  check(bpn >= 0, "empty restriction");
  return {bn, bpn};
}

// induction of a subgroup class function to the ambient group
inline std::vector<i64> induce_values(const FusionMap& fm,
                                      const std::vector<i64>& f_sub) {
  const CharTable& S = *fm.sub;
  const CharTable& A = *fm.amb;
  std::vector<i128> acc(A.n_classes(), 0);
  for (int c = 0; c < S.n_classes(); ++c)
    acc[fm.to_ambient[c]] += (i128)S.classes[c].size * f_sub[c];
  std::vector<i64> out(A.n_classes(), 0);
  for (int C = 0; C < A.n_classes(); ++C) {
    // Ind f (C) = |W| / (|C| |W'|) * sum_{c -> C} |c| f(c)
    i128 num = acc[C] * A.order;
    i128 den = (i128)A.classes[C].size * S.order;
    check(num % den == 0, "induction: non-integral value");
    i128 v = num / den;
    check(v <= (i128)INT64_MAX && v >= (i128)INT64_MIN, "induction overflow");
    out[C] = (i64)v;
  }
  return out;
}

// Frobenius reciprocity spot check: <Ind f, chi>_W = <f, Res chi>_{W'}
inline bool frobenius_spot_check(const FusionMap& fm, int sub_irrep,
                                 int amb_irrep) {
  const CharTable& S = *fm.sub;
  const CharTable& A = *fm.amb;
  auto ind = induce_values(fm, S.irreps[sub_irrep].values);
  i128 lhs = 0;
  for (int C = 0; C < A.n_classes(); ++C)
    lhs += (i128)A.classes[C].size * ind[C] * A.irreps[amb_irrep].values[C];
  check(lhs % A.order == 0, "reciprocity lhs not integral");
  lhs /= A.order;
  auto mult = restrict_multiplicities(fm, amb_irrep);
  return lhs == mult[sub_irrep];
}

} // namespace alcove
