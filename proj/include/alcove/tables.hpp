#pragma once

#include <mutex>
#include <memory>

#include "alcove/weylchar.hpp"
#include "alcove/fakedeg.hpp"
#include "alcove/tablefile.hpp"
#include "alcove/permgroup.hpp"

namespace alcove {

// ---------------------------------------------------------------------
// Class identification: find the class of the table containing w.
// Types A and D go through their permutation models; E types match the
// fingerprint and fall back to an explicit conjugacy search when the
// packaged data declares a collision.
// ---------------------------------------------------------------------

namespace detail {

// recover the S_{m+1} permutation from the matrix on the A_m root basis
inline std::vector<int> a_matrix_to_perm(const RootSystem& rs, const IMat& w) {
  int m = rs.rank;
  std::vector<int> img(m + 2, 0); // 1-based sigma
  auto decode = [&](const IVec& v) {
    // x in Z^{m+1} with x_j = v_j - v_{j-1}
    int a = 0, b = 0;
    for (int j = 1; j <= m + 1; ++j) {
      i64 x = (j <= m ? v[j - 1] : 0) - (j >= 2 ? v[j - 2] : 0);
      if (x == 1) a = j;
      else if (x == -1) b = j;
      else check(x == 0, "not a permutation matrix on the A root basis");
    }
    check(a && b, "root image decode failed");
    return std::pair<int, int>(a, b);
  };
  for (int i = 0; i < m; ++i) {
    IVec e(m, 0);
    e[i] = 1;
    auto [a, b] = decode(w.apply(e));
    img[i + 1] = a;
    if (i == m - 1) img[m + 1] = b;
  }
  return std::vector<int>(img.begin() + 1, img.end());
}

inline Partition perm_cycle_type(const std::vector<int>& img) {
  int n = (int)img.size();
  Partition out;
  std::vector<char> seen(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = img[j - 1];
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline const PermGroup& weyl_group_of(const CharTable& t) {
  static std::map<std::string, std::unique_ptr<PermGroup>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  std::string key = label_str(t.type);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto pg = std::make_unique<PermGroup>(weyl_perm_group(t.rs));
    it = cache.emplace(key, std::move(pg)).first;
  }
  return *it->second;
}

} // namespace detail

inline int identify_class(const CharTable& t, const IMat& w) {
  check(t.type.size() == 1, "class identification needs a simple type");
  char ser = t.type[0].series;
  if (ser == 'A') {
    Partition ct = detail::perm_cycle_type(detail::a_matrix_to_perm(t.rs, w));
    for (int i = 0; i < t.n_classes(); ++i)
      if (t.classes[i].dcycles.first == ct) return i;
    throw invariant_error("A-type class not found");
  }
  if (ser == 'D') {
    auto bc = detail::base_change_for(t.rs);
    SignedPerm sp = detail::to_signed_perm(bc, w);
    BiPartition cyc = signed_cycles(sp);
    std::vector<int> cand;
    for (int i = 0; i < t.n_classes(); ++i)
      if (t.classes[i].dcycles == cyc) cand.push_back(i);
    check(!cand.empty(), "D-type class not found");
    if (cand.size() == 1) return cand[0];
    check(cand.size() == 2, "split class with more than two halves");
    int half = detail::split_half(sp, cyc);
    for (int i : cand)
      if (t.classes[i].split_sign == half) return i;
    throw invariant_error("split half not found");
  }
  // E types: fingerprint, then conjugacy search on declared collisions
  Fingerprint fp = fingerprint(t.rs, w);
  std::vector<int> cand;
  for (int i = 0; i < t.n_classes(); ++i)
    if (t.classes[i].fp == fp) cand.push_back(i);
  check(!cand.empty(), "E-type class not found by fingerprint");
  if (cand.size() == 1) return cand[0];
  // collision: explicit backtrack conjugacy test against each candidate
  std::function<bool(const IMat&)> member = nullptr;
  if (t.type[0].rank == 6) {
    const PermGroup& W = detail::weyl_group_of(t);
    member = [&t, &W](const IMat& g) {
      return W.contains(root_permutation(t.rs, g));
    };
  }
  for (size_t k = 0; k + 1 < cand.size(); ++k)
    if (weyl_conjugate(t.rs, w, t.classes[cand[k]].rep, member))
      return cand[k];
  return cand.back();
}

// class of rep^k
inline int power_class(const CharTable& t, int ci, int k) {
  IMat p = IMat::identity(t.rs.rank);
  IMat base = t.classes[ci].rep;
  for (int i = 0; i < k; ++i) p = p * base;
  return identify_class(t, p);
}

// ---------------------------------------------------------------------
// Table registry.  Tables are immutable after construction; lookups are
// cheap pointer returns so concurrent readers are safe once built.
// ---------------------------------------------------------------------

class TableRegistry {
 public:
  explicit TableRegistry(std::string data_dir = resolve_data_dir())
      : dir_(std::move(data_dir)) {}

  const CharTable& get(const TypeLabel& type) {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    std::string key = label_str(type);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second->table;
    auto tf = std::make_unique<TableFile>(build(type));
    auto* p = tf.get();
    cache_.emplace(key, std::move(tf));
    return p->table;
  }
  const CharTable& get(const std::string& label) { return get(parse_type(label)); }

  // family records packaged alongside E-type tables
  const std::vector<FamilyRec>& family_records(const TypeLabel& type) {
    std::lock_guard<std::recursive_mutex> lk(mu_);
    get(type);
    return cache_.at(label_str(type))->families;
  }

  const std::string& data_dir() const { return dir_; }

 private:
  TableFile build(const TypeLabel& type) {
    check(label_weyl_order(type) <= 1000000000LL,
          "Weyl group order above 1e9 is unsupported");
    if (type.empty()) {
      // the trivial group: one class, one irreducible
      TableFile tf;
      CharTable& t = tf.table;
      t.type = type;
      t.rs = build_root_system(type);
      t.order = 1;
      ClassData c;
      c.label = "e";
      c.size = 1;
      c.rep = IMat(0);
      t.classes.push_back(c);
      IrrData ir;
      ir.label = "phi{1,0}";
      ir.dim = 1;
      ir.values = {1};
      t.irreps.push_back(ir);
      finalize_table(t);
      return tf;
    }
    if (type.size() == 1) {
      char ser = type[0].series;
      if (ser == 'A') {
        TableFile tf;
        tf.table = detail::build_a_table(type[0].rank);
        verify_table(tf.table, "A" + std::to_string(type[0].rank));
        finalize_table(tf.table);
        return tf;
      }
      if (ser == 'D') {
        TableFile tf;
        tf.table = detail::build_d_table(type[0].rank);
        verify_table(tf.table, "D" + std::to_string(type[0].rank));
        finalize_table(tf.table);
        return tf;
      }
      // E types ship as packaged data
      std::string fn = dir_ + "/" + label_str(type);
      std::transform(fn.begin(), fn.end(), fn.begin(), [](char c) {
        return std::tolower((unsigned char)c);
      });
      fn += ".tbl";
      TableFile tf = parse_table_file(fn);
      check(label_str(tf.table.type) == label_str(type),
            fn + " holds the wrong group");
      finalize_table(tf.table, /*relabel=*/false);
      return tf;
    }
    // products: tensor of the factor tables
    std::vector<const CharTable*> fac;
    for (auto& f : type) fac.push_back(&get(TypeLabel{f}));
    TableFile tf;
    tf.table = detail::tensor_table(type, fac);
    verify_table(tf.table, label_str(type));
    finalize_table(tf.table, /*relabel=*/false);
    return tf;
  }

  std::string dir_;
  std::recursive_mutex mu_;
  std::map<std::string, std::unique_ptr<TableFile>> cache_;
};

inline TableRegistry& default_registry() {
  static TableRegistry reg;
  return reg;
}

// spec-level entry points
inline const std::vector<ClassData>& conjugacy_classes(TableRegistry& reg,
                                                       const std::string& label) {
  return reg.get(label).classes;
}
inline const CharTable& character_table(TableRegistry& reg,
                                        const std::string& label) {
  return reg.get(label);
}

} // namespace alcove
