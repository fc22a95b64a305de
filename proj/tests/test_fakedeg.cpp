#include <catch2/catch_amalgamated.hpp>

#include "alcove/tables.hpp"

using namespace alcove;

namespace {
TableRegistry& reg() {
  static TableRegistry r(ALCOVE_SOURCE_DATA_DIR);
  return r;
}

bool t_invariants_ok(const CharTable& t) {
  for (int i = 0; i < t.n_irreps(); ++i) {
    auto& ir = t.irreps[i];
    if (ir.fake.eval1() != ir.dim) return false;
    if (ir.fake.degree() > t.rs.nu) return false;
    int j = t.tensor_sign_map[i];
    if (ir.b != t.rs.nu - t.irreps[j].bprime) return false;
    if (ir.bprime != t.rs.nu - t.irreps[j].b) return false;
  }
  return true;
}
} // namespace

TEST_CASE("fake degree basics") {
  const CharTable& t = reg().get("A2");
  CHECK(t.irreps[t.trivial].fake == IPoly{1});
  // sign sits in the top degree of the coinvariant algebra
  CHECK(t.irreps[t.sign].fake == IPoly::monomial(t.rs.nu));
  // reflection representation of S3: q + q^2, from the explicit basis
  // {x, y} mod invariants in degrees 1 and 2
  int refl = t.irrep_by_label("phi{2,1}");
  CHECK(t.irreps[refl].fake == IPoly{0, 1, 1});
  auto [b, bp] = b_invariants(t.irreps[refl].fake);
  CHECK(b == 1);
  CHECK(bp == 2);
}

TEST_CASE("b invariants") {
  CHECK(b_invariants(IPoly{1}) == std::pair<int, int>(0, 0));
  const CharTable& e = reg().get("A3");
  CHECK(t_invariants_ok(e));
}

TEST_CASE("Poincare identity and dualities for A and D types") {
  for (auto label :
       {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "D4", "D5", "D6",
        "D7", "D8"}) {
    INFO(label);
    const CharTable& t = reg().get(label);
    CHECK(poincare_identity_holds(t));
    CHECK(t_invariants_ok(t));
  }
}

TEST_CASE("tensor with sign examples") {
  const CharTable& t = reg().get("A2");
  CHECK(tensor_sign(t, t.trivial) == t.sign);
  int refl = t.irrep_by_label("phi{2,1}");
  CHECK(tensor_sign(t, refl) == refl); // self-dual, 1 = 3 - 2
}

TEST_CASE("fake degree via the standalone entry point") {
  const CharTable& t = reg().get("D4");
  for (int i = 0; i < t.n_irreps(); ++i)
    CHECK(fake_degree(t, i) == t.irreps[i].fake);
}
