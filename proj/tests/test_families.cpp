#include <catch2/catch_amalgamated.hpp>

#include "alcove/families.hpp"

using namespace alcove;

namespace {
TableRegistry& reg() {
  static TableRegistry r(ALCOVE_SOURCE_DATA_DIR);
  return r;
}
} // namespace

TEST_CASE("type A families are singletons with a = b") {
  auto fams = families(reg(), "A2");
  const CharTable& t = reg().get("A2");
  REQUIRE(fams.size() == 3);
  std::multiset<i64> as;
  for (auto& f : fams) {
    CHECK(f.members.size() == 1);
    CHECK(f.a == t.irreps[f.members[0]].b);
    CHECK(f.a_prime == t.irreps[f.members[0]].bprime);
    as.insert(f.a);
  }
  CHECK(as == std::multiset<i64>{0, 1, 3});
}

TEST_CASE("unit and sign families") {
  for (auto label : {"A3", "A5", "D4", "D5", "D6"}) {
    INFO(label);
    const CharTable& t = reg().get(label);
    auto fams = families(reg(), label);
    bool unit_single = false, sign_single = false;
    for (auto& f : fams) {
      if (f.members == std::vector<int>{t.trivial}) {
        unit_single = true;
        CHECK(f.a == 0);
      }
      if (f.members == std::vector<int>{t.sign}) {
        sign_single = true;
        CHECK(f.a == t.rs.nu);
      }
    }
    CHECK(unit_single);
    CHECK(sign_single);
  }
}

TEST_CASE("D4 has the three-member subregular family") {
  auto fams = families(reg(), "D4");
  const CharTable& t = reg().get("D4");
  int found3 = 0;
  for (auto& f : fams)
    if (f.members.size() == 3) {
      ++found3;
      CHECK(f.a == 3);
      CHECK(f.special_degree == 8);
      std::multiset<i64> dims;
      for (int m : f.members) dims.insert(t.irreps[m].dim);
      CHECK(dims == std::multiset<i64>{2, 6, 8});
    }
  CHECK(found3 == 1);
  // the two split pairs give singleton families in matching dimensions
  // 13 irreps = 3 + 10 singletons
  CHECK(fams.size() == 11);
}

TEST_CASE("family duality") {
  for (auto label : {"A4", "D4", "D5", "D6"}) {
    INFO(label);
    const CharTable& t = reg().get(label);
    auto fams = families(reg(), label);
    for (size_t i = 0; i < fams.size(); ++i) {
      int j = family_dual(t, fams, (int)i);
      CHECK(family_dual(t, fams, j) == (int)i);
    }
  }
}

TEST_CASE("dual of the unit family is the sign family") {
  const CharTable& t = reg().get("D5");
  auto fams = families(reg(), "D5");
  int unit = -1, sgn = -1;
  for (size_t i = 0; i < fams.size(); ++i) {
    if (fams[i].members == std::vector<int>{t.trivial}) unit = (int)i;
    if (fams[i].members == std::vector<int>{t.sign}) sgn = (int)i;
  }
  REQUIRE(unit >= 0);
  CHECK(family_dual(t, fams, unit) == sgn);
}

TEST_CASE("product families multiply") {
  auto fams = families(reg(), "A2xA1");
  CHECK(fams.size() == 6); // 3 x 2 singleton products
  for (auto& f : fams) CHECK(f.members.size() == 1);
  auto fams2 = families(reg(), "D4xA1");
  // 11 x 2
  CHECK(fams2.size() == 22);
}

TEST_CASE("families partition Irr for all supported classical types") {
  for (auto label : {"A6", "A7", "A8", "D7", "D8"}) {
    INFO(label);
    auto fams = families(reg(), label);
    const CharTable& t = reg().get(label);
    size_t total = 0;
    for (auto& f : fams) total += f.members.size();
    CHECK((int)total == t.n_irreps());
    for (auto& f : fams) {
      CHECK(f.special_member >= 0);
      CHECK(t.irreps[f.special_member].b == (int)f.a);
    }
  }
}
