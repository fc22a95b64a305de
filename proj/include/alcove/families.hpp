#pragma once

#include <vector>
#include <map>
#include <set>

#include "alcove/tables.hpp"

namespace alcove {

// ---------------------------------------------------------------------
// Lusztig families.  Type A: every irreducible is a family by itself.
// Type D: families are the symbol content classes (degenerate symbols
// give two singleton families, one per split character).  E types ship
// as packaged FAMILY records and are re-verified against the computed
// b-invariants.  Products get product families.
// ---------------------------------------------------------------------

struct Family {
  std::vector<int> members;  // irrep indices, ascending
  i64 a = 0;
  i64 a_prime = 0;
  i64 special_degree = 0;
  int special_member = -1;
};

namespace detail {

// symbol content of the D_n pair {alpha, beta} with both rows padded to
// length n: multiset of beta-numbers
inline std::vector<int> d_symbol_content(const BiPartition& bp, int n) {
  std::vector<int> z = beta_set(bp.first, n);
  std::vector<int> z2 = beta_set(bp.second, n);
  z.insert(z.end(), z2.begin(), z2.end());
  std::sort(z.begin(), z.end());
  return z;
}

inline i64 pairwise_min_sum(const std::vector<int>& zs) {
  // sum over i<j of min(z_i, z_j) = sum over sorted-desc positions of
  // (position index) * value
  std::vector<int> d(zs.rbegin(), zs.rend());
  i64 s = 0;
  for (size_t i = 0; i < d.size(); ++i) s += (i64)i * d[i];
  return s;
}

inline i64 d_symbol_a(const std::vector<int>& content, int n) {
  std::vector<int> base;
  for (int i = 0; i < n; ++i) {
    base.push_back(i);
    base.push_back(i);
  }
  std::sort(base.begin(), base.end());
  return pairwise_min_sum(content) - pairwise_min_sum(base);
}

// recover the bipartition of a D irreducible from its natural label
// "{a1.a2|b1}" or "{...|...}+" / "-"
inline std::pair<BiPartition, int> parse_d_nat(const std::string& nat) {
  check(nat.size() >= 2 && nat.front() == '{', "bad D label " + nat);
  int split = 0;
  std::string body = nat.substr(1);
  if (body.back() == '+' || body.back() == '-') {
    split = body.back() == '+' ? 1 : -1;
    body.pop_back();
  }
  check(body.back() == '}', "bad D label " + nat);
  body.pop_back();
  auto bar = body.find('|');
  check(bar != std::string::npos, "bad D label " + nat);
  auto parse_part = [](const std::string& s) {
    Partition p;
    if (s == "e") return p;
    std::istringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '.')) p.push_back(std::stoi(tok));
    return p;
  };
  return {{parse_part(body.substr(0, bar)), parse_part(body.substr(bar + 1))},
          split};
}

inline void finish_family(const CharTable& t, Family& f) {
  std::sort(f.members.begin(), f.members.end());
  f.a = INT64_MAX;
  f.a_prime = -1;
  for (int m : f.members) {
    f.a = std::min<i64>(f.a, t.irreps[m].b);
    f.a_prime = std::max<i64>(f.a_prime, t.irreps[m].bprime);
  }
  f.special_member = -1;
  for (int m : f.members)
    if (t.irreps[m].b == f.a) {
      check(f.special_member < 0,
            "two b-minimal members in one family of " + label_str(t.type));
      f.special_member = m;
    }
  f.special_degree = t.irreps[f.special_member].dim;
}

} // namespace detail

inline std::vector<Family> families(TableRegistry& reg, const TypeLabel& type);

namespace detail {

inline std::vector<Family> families_a(const CharTable& t) {
  std::vector<Family> out;
  for (int i = 0; i < t.n_irreps(); ++i) {
    Family f;
    f.members = {i};
    finish_family(t, f);
    out.push_back(f);
  }
  return out;
}

inline std::vector<Family> families_d(const CharTable& t) {
  int n = t.type[0].rank;
  std::map<std::vector<int>, std::vector<int>> by_content;
  std::vector<Family> out;
  for (int i = 0; i < t.n_irreps(); ++i) {
    auto [bp, split] = parse_d_nat(t.irreps[i].nat);
    if (split != 0) {
      // degenerate symbol: each half is a family by itself
      Family f;
      f.members = {i};
      finish_family(t, f);
      auto content = d_symbol_content(bp, n);
      check(f.a == d_symbol_a(content, n),
            "degenerate symbol a-value mismatch in D" + std::to_string(n));
      out.push_back(f);
    } else {
      by_content[d_symbol_content(bp, n)].push_back(i);
    }
  }
  for (auto& [content, members] : by_content) {
    Family f;
    f.members = members;
    finish_family(t, f);
    check(f.a == d_symbol_a(content, n),
          "symbol a-value disagrees with min b in D" + std::to_string(n));
    out.push_back(f);
  }
  return out;
}

inline std::vector<Family> families_e(TableRegistry& reg, const CharTable& t) {
  const auto& recs = reg.family_records(t.type);
  check(!recs.empty(), "no FAMILY records packaged for " + label_str(t.type));
  std::vector<Family> out;
  std::set<int> covered;
  for (auto& fr : recs) {
    Family f;
    for (auto& name : fr.members) {
      int idx = t.irrep_by_label(name);
      check(covered.insert(idx).second,
            "irreducible " + name + " in two families");
      f.members.push_back(idx);
    }
    finish_family(t, f);
    if (f.a != fr.a || f.special_degree != fr.D)
      throw data_error("family record " + std::to_string(fr.D) + "," +
                       std::to_string(fr.a) +
                       " inconsistent with computed b-invariants of " +
                       label_str(t.type));
    out.push_back(f);
  }
  check((int)covered.size() == t.n_irreps(),
        "family records do not partition Irr(" + label_str(t.type) + ")");
  return out;
}

inline std::vector<Family> families_product(TableRegistry& reg,
                                            const CharTable& t) {
  std::vector<std::vector<Family>> fac;
  std::vector<size_t> nirr;
  for (auto& f : t.type) {
    fac.push_back(families(reg, TypeLabel{f}));
    nirr.push_back(reg.get(TypeLabel{f}).irreps.size());
  }
  // irrep index in the tensor table is mixed-radix over factor indices,
  // factor 0 most significant (same walker as tensor_table)
  std::vector<Family> out;
  std::vector<size_t> pick(fac.size(), 0);
  auto advance = [&]() {
    for (size_t i = fac.size(); i-- > 0;) {
      if (++pick[i] < fac[i].size()) return true;
      pick[i] = 0;
    }
    return false;
  };
  do {
    Family f;
    // members: cartesian product of the chosen factor families
    std::vector<size_t> mi(fac.size(), 0);
    auto adv2 = [&]() {
      for (size_t i = fac.size(); i-- > 0;) {
        if (++mi[i] < fac[i][pick[i]].members.size()) return true;
        mi[i] = 0;
      }
      return false;
    };
    do {
      size_t idx = 0;
      for (size_t i = 0; i < fac.size(); ++i)
        idx = idx * nirr[i] + fac[i][pick[i]].members[mi[i]];
      f.members.push_back((int)idx);
    } while (adv2());
    finish_family(t, f);
    out.push_back(f);
  } while (advance());
  return out;
}

} // namespace detail

inline std::vector<Family> families(TableRegistry& reg, const TypeLabel& type) {
  const CharTable& t = reg.get(type);
  std::vector<Family> out;
  if (type.empty()) {
    Family f;
    f.members = {0};
    detail::finish_family(t, f);
    return {f};
  }
  if (type.size() > 1) {
    out = detail::families_product(reg, t);
  } else if (type[0].series == 'A') {
    out = detail::families_a(t);
  } else if (type[0].series == 'D') {
    out = detail::families_d(t);
  } else {
    out = detail::families_e(reg, t);
  }
  // partition property
  std::set<int> covered;
  for (auto& f : out)
    for (int m : f.members)
      check(covered.insert(m).second, "families overlap");
  check((int)covered.size() == t.n_irreps(), "families miss an irreducible");
  return out;
}

inline std::vector<Family> families(TableRegistry& reg,
                                    const std::string& label) {
  return families(reg, parse_type(label));
}

// index of the family {E (x) sgn : E in f}; verifies the a / a' duality
inline int family_dual(const CharTable& t, const std::vector<Family>& fams,
                       int fi) {
  std::set<int> image;
  for (int m : fams[fi].members) image.insert(t.tensor_sign_map[m]);
  for (size_t j = 0; j < fams.size(); ++j) {
    std::set<int> mem(fams[j].members.begin(), fams[j].members.end());
    if (mem == image) {
      check(fams[fi].a == t.rs.nu - fams[j].a_prime,
            "family duality a = nu - a'(dual) fails");
      return (int)j;
    }
  }
  throw invariant_error("tensor-sign image is not a family");
}

} // namespace alcove
