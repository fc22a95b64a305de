#include <catch2/catch_amalgamated.hpp>

#include "alcove/rootsys.hpp"

using namespace alcove;

TEST_CASE("type label grammar round trips") {
  CHECK(label_str(parse_type("e8")) == "E8");
  CHECK(label_str(parse_type("D5xA3")) == "D5xA3");
  CHECK(label_str(parse_type("a3xd5")) == "D5xA3");
  CHECK(label_str(parse_type("A4xA4")) == "A4xA4");
  CHECK(label_str(parse_type("a1xa2xe6xd4")) == "E6xD4xA2xA1");
  CHECK(parse_type("0").empty());
  CHECK_THROWS_AS(parse_type("B2"), usage_error);
  CHECK_THROWS_AS(parse_type("D3"), usage_error);
  CHECK_THROWS_AS(parse_type("E9"), usage_error);
  CHECK_THROWS_AS(parse_type("A"), usage_error);
}

TEST_CASE("positive root counts") {
  CHECK(build_root_system("A1").nu == 1);
  CHECK(build_root_system("E8").nu == 120);
  CHECK(build_root_system("D8").nu == 56);
  CHECK(build_root_system("A8").nu == 36);
  CHECK(build_root_system("A4xA4").nu == 20);
  CHECK(build_root_system("E7").nu == 63);
  CHECK(build_root_system("E6").nu == 36);
  CHECK(build_root_system("D4").nu == 12);
}

TEST_CASE("degrees multiply to the Weyl group order") {
  for (auto label : {"A4", "D5", "E6", "E7", "E8", "D4xA3"}) {
    auto rs = build_root_system(label);
    i64 prod = 1;
    for (int d : rs.degrees) prod *= d;
    CHECK(prod == rs.weyl_order);
    i64 degsum = 0;
    for (int d : rs.degrees) degsum += d - 1;
    CHECK(degsum == rs.nu);
  }
  CHECK(build_root_system("E8").weyl_order == 696729600LL);
  CHECK(build_root_system("E7").weyl_order == 2903040LL);
  CHECK(build_root_system("E6").weyl_order == 51840LL);
}

TEST_CASE("roots come in opposite pairs and reflections permute them") {
  auto rs = build_root_system("D5");
  CHECK((int)rs.roots.size() == 2 * rs.nu);
  for (int i = 0; i < rs.rank; ++i) {
    IMat s = rs.simple_reflection(i);
    for (auto& r : rs.roots) CHECK(rs.index_of(s.apply(r)) >= 0);
    CHECK(det(s) == -1);
  }
}

TEST_CASE("subsystem closure identifies types") {
  auto e8 = build_root_system("E8");

  SECTION("empty seed") {
    auto s = subsystem_closure(e8, {});
    CHECK(s.type.empty());
    CHECK(s.nu_sub == 0);
  }

  SECTION("A1xA1 inside A3") {
    auto a3 = build_root_system("A3");
    IVec a1(3, 0), a3v(3, 0);
    a1[0] = 1;
    a3v[2] = 1;
    auto s = subsystem_closure(a3, {a1, a3v});
    CHECK(label_str(s.type) == "A1xA1");
    CHECK(s.nu_sub == 2);
  }

  SECTION("closure is idempotent") {
    auto a3 = build_root_system("A3");
    IVec a1(3, 0), a3v(3, 0);
    a1[0] = 1;
    a3v[2] = 1;
    auto s = subsystem_closure(a3, {a1, a3v});
    auto s2 = subsystem_closure(a3, s.roots);
    CHECK(s2.roots == s.roots);
  }

  SECTION("D8 inside E8 from the affine diagram") {
    // order-2 torsion point: keep the affine node and all nodes of mark
    // != 2; here simply seed with -theta and the seven simple roots that
    // give the D8 pseudo-Levi.
    IVec mtheta = e8.highest_root();
    for (auto& c : mtheta) c = -c;
    std::vector<IVec> seeds{mtheta};
    for (int i : {1, 2, 3, 4, 5, 6, 7}) { // drop node 1 (Bourbaki), keep rest
      IVec e(8, 0);
      e[i] = 1;
      seeds.push_back(e);
    }
    auto s = subsystem_closure(e8, seeds);
    CHECK(label_str(s.type) == "D8");
    CHECK(s.nu_sub == 56);
  }
}

TEST_CASE("highest root from marks agrees with height-maximal root") {
  for (auto label : {"A5", "D6", "E6", "E7", "E8"}) {
    auto rs = build_root_system(label);
    auto ad = affine_diagram(rs);
    IVec theta(rs.rank);
    for (int i = 0; i < rs.rank; ++i) theta[i] = ad.marks[i + 1];
    CHECK(theta == rs.highest_root());
  }
}

TEST_CASE("affine diagram centre orders") {
  CHECK(affine_diagram(build_root_system("E8")).N == 1);
  CHECK(affine_diagram(build_root_system("E7")).N == 2);
  CHECK(affine_diagram(build_root_system("E6")).N == 3);
  CHECK(affine_diagram(build_root_system("A4")).N == 5);
  CHECK(affine_diagram(build_root_system("A1")).N == 2);
  CHECK(affine_diagram(build_root_system("D4")).N == 4);
  CHECK(affine_diagram(build_root_system("D5")).N == 4);
  CHECK(affine_diagram(build_root_system("D6")).N == 4);
  auto a4 = affine_diagram(build_root_system("A4"));
  for (i64 m : a4.marks) CHECK(m == 1);
  auto e8 = affine_diagram(build_root_system("E8"));
  std::multiset<i64> got(e8.marks.begin(), e8.marks.end());
  CHECK(got == std::multiset<i64>{1, 2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("D5 omega is cyclic of order four") {
  auto ad = affine_diagram(build_root_system("D5"));
  // some element must have order 4
  bool has4 = false;
  for (auto& g : ad.omega) {
    std::vector<int> p(g.size());
    for (size_t i = 0; i < g.size(); ++i) p[i] = (int)i;
    int ord = 0;
    do {
      for (size_t i = 0; i < g.size(); ++i) p[i] = g[p[i]];
      ++ord;
    } while (![&] {
      for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != (int)i) return false;
      return true;
    }());
    if (ord == 4) has4 = true;
  }
  CHECK(has4);
}

TEST_CASE("non-simple affine diagram rejected") {
  auto rs = build_root_system("A1xA1");
  CHECK_THROWS_AS(affine_diagram(rs), invariant_error);
}
