#include <catch2/catch_amalgamated.hpp>

#include "alcove/matrix.hpp"
#include "alcove/poly.hpp"
#include "alcove/partitions.hpp"

using namespace alcove;

TEST_CASE("charpoly of small matrices") {
  IMat id = IMat::identity(3);
  CHECK(charpoly(id) == std::vector<i64>{-1, 3, -3, 1});

  IMat m(2);
  m(0, 0) = 0; m(0, 1) = -1;
  m(1, 0) = 1; m(1, 1) = 0; // rotation by 90 degrees: t^2 + 1
  CHECK(charpoly(m) == std::vector<i64>{1, 0, 1});
  CHECK(det(m) == 1);

  IMat a(3);
  // companion matrix of t^3 - 2t - 5
  a(0, 1) = 1; a(1, 2) = 1;
  a(2, 0) = 5; a(2, 1) = 2; a(2, 2) = 0;
  auto cp = charpoly(a);
  CHECK(cp == std::vector<i64>{-5, -2, 0, 1});
}

TEST_CASE("exterior square trace identity") {
  // tr L^2(A) = (tr(A)^2 - tr(A^2)) / 2
  IMat a(4);
  i64 vals[16] = {2, -1, 0, 3, 1, 1, -2, 0, 0, 2, 1, -1, 3, 0, 1, 2};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = vals[4 * i + j];
  auto l2 = exterior_square(a);
  i64 t = a.trace(), t2 = (a * a).trace();
  CHECK(l2.trace() == (t * t - t2) / 2);
}

TEST_CASE("polynomial arithmetic and exact division") {
  IPoly p{1, 2, 1};  // (1+q)^2
  IPoly q{1, 1};
  CHECK(p == q * q);
  CHECK(exact_div(p, q, "test") == q);
  CHECK(p.eval1() == 4);
  CHECK_THROWS_AS(exact_div(IPoly{1, 1, 1}, q, "test"), invariant_error);
  CHECK(IPoly{0, 1} * IPoly{} == IPoly{});
  CHECK((IPoly{1, 1} - IPoly{1, 1}).zero());
}

TEST_CASE("partitions and hooks") {
  CHECK(all_partitions(5).size() == 7);
  CHECK(all_partitions(8).size() == 22);
  CHECK(all_partitions(9).size() == 30);
  CHECK(hook_length_dim({2, 2}) == 2);
  CHECK(hook_length_dim({3, 1, 1}) == 6);
  CHECK(hook_length_dim({4, 1}) == 4);
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(n_invariant({1, 1, 1}) == 3); // sign of S3: b = nu = 3
}

TEST_CASE("symmetric group characters via strip building") {
  // S3: chi_{21} is the 2-dim representation
  CHECK(sn_char({2, 1}, {1, 1, 1}) == 2);
  CHECK(sn_char({2, 1}, {2, 1}) == 0);
  CHECK(sn_char({2, 1}, {3}) == -1);
  // sign character
  CHECK(sn_char({1, 1, 1, 1}, {2, 1, 1}) == -1);
  CHECK(sn_char({1, 1, 1, 1}, {2, 2}) == 1);
  // orthogonality of the full S5 table
  auto t = sn_table(5);
  i64 ord = factorial(5);
  for (size_t i = 0; i < t.irreps.size(); ++i)
    for (size_t j = 0; j < t.irreps.size(); ++j) {
      i64 s = 0;
      for (size_t c = 0; c < t.classes.size(); ++c)
        s += t.class_size[c] * t.val[i][c] * t.val[j][c];
      CHECK(s == (i == j ? ord : 0));
    }
  // dimensions match hook lengths
  for (size_t i = 0; i < t.irreps.size(); ++i) {
    size_t id = 0;
    for (size_t c = 0; c < t.classes.size(); ++c)
      if ((int)t.classes[c].size() == t.n) id = c; // class of the identity
    CHECK(t.val[i][id] == hook_length_dim(t.irreps[i]));
  }
}

TEST_CASE("hyperoctahedral characters") {
  // B2: reflection representation values computed by hand
  BiPartition refl{{1}, {1}};
  CHECK(bn_char(refl, {{1, 1}, {}}) == 2);
  CHECK(bn_char(refl, {{}, {1, 1}}) == -2);
  CHECK(bn_char(refl, {{1}, {1}}) == 0);
  CHECK(bn_char(refl, {{2}, {}}) == 0);
  CHECK(bn_char(refl, {{}, {2}}) == 0);
  // orthogonality of the full B3 table
  int n = 3;
  auto bps = all_bipartitions(n);
  i64 ord = 48; // 2^3 3!
  std::vector<std::vector<i64>> val;
  for (auto& cls : bps) {
    auto col = bn_column_map(n, cls.first, cls.second);
    std::vector<i64> cv;
    for (auto& irr : bps) {
      auto it = col.find(irr);
      cv.push_back(it == col.end() ? 0 : it->second);
    }
    val.push_back(cv); // val[class][irrep]
  }
  for (size_t i = 0; i < bps.size(); ++i)
    for (size_t j = 0; j < bps.size(); ++j) {
      i64 s = 0;
      for (size_t c = 0; c < bps.size(); ++c)
        s += (ord / bn_centralizer(bps[c])) * val[c][i] * val[c][j];
      CHECK(s == (i == j ? ord : 0));
    }
}
