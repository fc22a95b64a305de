#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "alcove/tables.hpp"
#include "alcove/fusion.hpp"

using namespace alcove;

namespace {

TableRegistry& reg() {
  static TableRegistry r(ALCOVE_SOURCE_DATA_DIR);
  return r;
}

// brute-force conjugacy classes of the Weyl group by matrix enumeration
struct BruteGroup {
  std::vector<IMat> elems;
  std::vector<std::vector<IMat>> classes;

  explicit BruteGroup(const RootSystem& rs) {
    std::set<IMat> seen;
    std::vector<IMat> queue{IMat::identity(rs.rank)};
    seen.insert(queue[0]);
    std::vector<IMat> gens;
    for (int i = 0; i < rs.rank; ++i) gens.push_back(rs.simple_reflection(i));
    while (!queue.empty()) {
      IMat w = queue.back();
      queue.pop_back();
      elems.push_back(w);
      for (auto& s : gens) {
        IMat ws = w * s;
        if (seen.insert(ws).second) queue.push_back(ws);
      }
    }
    std::set<IMat> assigned;
    for (auto& w : elems) {
      if (assigned.count(w)) continue;
      std::set<IMat> orb{w};
      std::vector<IMat> bfs{w};
      while (!bfs.empty()) {
        IMat x = bfs.back();
        bfs.pop_back();
        for (auto& s : gens) {
          IMat y = s * x * s; // conjugate by a generator
          if (orb.insert(y).second) bfs.push_back(y);
        }
      }
      classes.push_back({orb.begin(), orb.end()});
      for (auto& x : orb) assigned.insert(x);
    }
  }
};

} // namespace

TEST_CASE("S3 character table matches the classical one") {
  const CharTable& t = reg().get("A2");
  REQUIRE(t.n_classes() == 3);
  std::vector<i64> sizes;
  for (auto& c : t.classes) sizes.push_back(c.size);
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<i64>{1, 2, 3});
  CHECK(t.order == 6);
}

TEST_CASE("A1 table") {
  const CharTable& t = reg().get("A1");
  REQUIRE(t.n_classes() == 2);
  for (auto& ir : t.irreps) {
    CHECK(ir.dim == 1);
    for (i64 v : ir.values) CHECK((v == 1 || v == -1));
  }
}

TEST_CASE("class counts") {
  CHECK(reg().get("D4").n_classes() == 13);
  CHECK(reg().get("A4").n_classes() == 7);   // partitions of 5
  CHECK(reg().get("A7").n_classes() == 22);  // partitions of 8
  CHECK(reg().get("D5").n_classes() == 18);
}

TEST_CASE("brute force: tables for rank <= 5 A and D match enumeration") {
  for (auto label : {"A2", "A3", "A4", "D4", "D5"}) {
    INFO(label);
    const CharTable& t = reg().get(label);
    BruteGroup bg(t.rs);
    REQUIRE((i64)bg.elems.size() == t.order);
    REQUIRE(bg.classes.size() == (size_t)t.n_classes());
    // brute classes match table classes via identify_class, with sizes
    std::map<int, i64> found;
    for (auto& cls : bg.classes) {
      int ci = identify_class(t, cls.front());
      // every sampled element of the brute class identifies identically
      for (size_t k = 0; k < cls.size(); k += std::max<size_t>(1, cls.size() / 7))
        CHECK(identify_class(t, cls[k]) == ci);
      CHECK(found.emplace(ci, (i64)cls.size()).second);
      CHECK(t.classes[ci].size == (i64)cls.size());
    }
    CHECK((int)found.size() == t.n_classes());
    // rows are orthonormal integral class functions: combined with the
    // class matching this pins the table as THE character table
    verify_table(t, label);
  }
}

TEST_CASE("brute force: D6 split classes and characters") {
  const CharTable& t = reg().get("D6");
  BruteGroup bg(t.rs);
  REQUIRE((i64)bg.elems.size() == t.order);
  REQUIRE(bg.classes.size() == (size_t)t.n_classes());
  std::map<int, i64> found;
  for (auto& cls : bg.classes) {
    int ci = identify_class(t, cls.front());
    CHECK(found.emplace(ci, (i64)cls.size()).second);
    CHECK(t.classes[ci].size == (i64)cls.size());
  }
}

TEST_CASE("degree-4 irreducible of W(A4) = S5") {
  const CharTable& t = reg().get("A4");
  // canonical class order is descending-lex partitions of 5
  std::vector<Partition> order;
  for (auto& c : t.classes) order.push_back(c.dcycles.first);
  CHECK(order == std::vector<Partition>{{5},
                                        {4, 1},
                                        {3, 2},
                                        {3, 1, 1},
                                        {2, 2, 1},
                                        {2, 1, 1, 1},
                                        {1, 1, 1, 1, 1}});
  // frozen from the Murnaghan-Nakayama oracle after the brute-force and
  // orthogonality checks above
  int idx = t.irrep_by_label("phi{4,1}");
  CHECK(t.irreps[idx].values == std::vector<i64>{-1, 0, -1, 1, 0, 2, 4});
  int idx2 = t.irrep_by_label("phi{4,6}");
  CHECK(t.irreps[idx2].values == std::vector<i64>{-1, 0, 1, 1, 0, -2, 4});
}

TEST_CASE("Weyl group orders via Schreier-Sims match degree products") {
  for (auto label : {"A4", "D5", "E6", "E7", "E8"}) {
    auto rs = build_root_system(label);
    PermGroup g = weyl_perm_group(rs);
    CHECK(g.order() == rs.weyl_order);
  }
}

TEST_CASE("tensor product tables") {
  const CharTable& t = reg().get("A2xA1");
  CHECK(t.order == 12);
  CHECK(t.n_classes() == 6);
  verify_table(t, "A2xA1");
  const CharTable& t2 = reg().get("A4xA4");
  CHECK(t2.order == 120 * 120);
  CHECK(t2.n_classes() == 49);
}

TEST_CASE("identify_class handles D split classes") {
  const CharTable& t = reg().get("D4");
  int plus = t.class_by_label("(2.2|e)+");
  int minus = t.class_by_label("(2.2|e)-");
  CHECK(identify_class(t, t.classes[plus].rep) == plus);
  CHECK(identify_class(t, t.classes[minus].rep) == minus);
  CHECK(t.classes[plus].size == t.classes[minus].size);
}

TEST_CASE("fusion: A1 subsystem of A2 fuses to the transposition class") {
  const CharTable& amb = reg().get("A2");
  const CharTable& sub = reg().get("A1");
  IVec alpha(2, 0);
  alpha[0] = 1;
  auto ss = subsystem_closure(amb.rs, {alpha});
  auto fm = build_fusion(amb, ss, sub);
  int a1refl = -1;
  for (int i = 0; i < sub.n_classes(); ++i)
    if (!sub.classes[i].rep.is_identity()) a1refl = i;
  CHECK(amb.classes[fm.to_ambient[a1refl]].label == "2.1");
  // Frobenius reciprocity spot checks
  for (int f = 0; f < sub.n_irreps(); ++f)
    for (int e = 0; e < amb.n_irreps(); ++e)
      CHECK(frobenius_spot_check(fm, f, e));
}

TEST_CASE("fusion: A2xA1 inside A4 (3-cycle x transposition -> 3.2)") {
  const CharTable& amb = reg().get("A4");
  const CharTable& sub = reg().get("A2xA1");
  IVec a1(4, 0), a2(4, 0), a4(4, 0);
  a1[0] = 1;
  a2[1] = 1;
  a4[3] = 1;
  auto ss = subsystem_closure(amb.rs, {a1, a2, a4});
  REQUIRE(label_str(ss.type) == "A2xA1");
  auto fm = build_fusion(amb, ss, sub);
  int src = sub.class_by_label("3*2");
  CHECK(amb.classes[fm.to_ambient[src]].label == "3.2");
  for (int e = 0; e < amb.n_irreps(); ++e) restrict_multiplicities(fm, e);
}
