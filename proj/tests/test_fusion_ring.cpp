#include <catch_amalgamated.hpp>

#include <algorithm>
#include <array>

#include "support.hpp"

using namespace fuselab;

namespace {

// Brute-force su(2) truncated Clebsch-Gordan rule, written independently of
// the library constructor.
int cg(int level, int a, int b, int c) {
  if ((a + b + c) % 2 != 0) return 0;
  if (c < std::abs(a - b) || c > a + b) return 0;
  return a + b + c <= 2 * level ? 1 : 0;
}

FusionElement elem(std::vector<CycloNumber> c) { return FusionElement(std::move(c)); }

FusionRing trivial_ring() { return FusionRing({"1"}, {0}, Tensor3{{{1}}}); }

}  // namespace

TEST_CASE("su2 rings match the Clebsch-Gordan rule") {
  for (int l = 0; l <= 12; ++l) {
    const auto R = su2_fusion_ring(l);
    REQUIRE(R.rank() == l + 1);
    for (int a = 0; a <= l; ++a) {
      CHECK(R.dual(a) == a);
      for (int b = 0; b <= l; ++b)
        for (int c = 0; c <= l; ++c) CHECK(R.N(a, b, c) == cg(l, a, b, c));
    }
  }
}

TEST_CASE("verify_axioms examples") {
  CHECK(verify_axioms(su2_fusion_ring(2)).ok);
  CHECK(verify_axioms(trivial_ring()).ok);
  for (int l = 0; l <= kMaxCatalogLevel; l += 7) CHECK(verify_axioms(su2_fusion_ring(l)).ok);
}

TEST_CASE("editing N_11^1 of su(2)_2 to 1 yields another valid ring") {
  // x1 x1 = 1 + x1 + x2 is the fusion rule of Rep(S_3), which satisfies all
  // four axioms; the associativity breakage needs a different edit.
  auto N = su2_fusion_ring(2).tensor();
  N[1][1][1] = 1;
  CHECK(verify_axioms(FusionRing({"x0", "x1", "x2"}, {0, 1, 2}, N)).ok);
}

TEST_CASE("dropping x2 from x1 x1 breaks associativity") {
  auto N = su2_fusion_ring(2).tensor();
  N[1][1][2] = 0;  // x1 x1 = x0 while x1 x2 = x1
  const auto v = verify_axioms(FusionRing({"x0", "x1", "x2"}, {0, 1, 2}, N));
  REQUIRE_FALSE(v.ok);
  CHECK(v.check == "associativity");
  REQUIRE(v.witness.size() == 4);
  // witness genuinely violates (ab)c = a(bc) on coefficient d
  const auto& w = v.witness;
  int lhs = 0, rhs = 0;
  for (int e = 0; e < 3; ++e) {
    lhs += N[w[0]][w[1]][e] * N[e][w[2]][w[3]];
    rhs += N[w[1]][w[2]][e] * N[w[0]][e][w[3]];
  }
  CHECK(lhs != rhs);
}

TEST_CASE("verify_axioms names each failing axiom") {
  SECTION("negative entry") {
    auto N = su2_fusion_ring(1).tensor();
    N[1][1][1] = -1;
    const auto v = verify_axioms(FusionRing({"a", "b"}, {0, 1}, N));
    CHECK(v.check == "non-negativity");
    CHECK(v.witness == std::vector<int>{1, 1, 1});
  }
  SECTION("unit") {
    auto N = su2_fusion_ring(1).tensor();
    N[0][1][0] = 1;
    CHECK(verify_axioms(FusionRing({"a", "b"}, {0, 1}, N)).check == "unit");
  }
  SECTION("duality") {
    CHECK(verify_axioms(FusionRing({"a", "b"}, {1, 0}, su2_fusion_ring(1).tensor())).check == "duality");
    CHECK(verify_axioms(FusionRing({"a", "b", "c"}, {0, 2, 2}, su2_fusion_ring(2).tensor())).check == "duality");
  }
  SECTION("commutativity") {
    // group ring of S_3: passes every axiom except commutativity
    std::vector<std::array<int, 3>> g;
    std::array<int, 3> p{0, 1, 2};
    do g.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index = [&](const std::array<int, 3>& q) { return static_cast<int>(std::find(g.begin(), g.end(), q) - g.begin()); };
    Tensor3 N(6, std::vector<std::vector<int>>(6, std::vector<int>(6, 0)));
    std::vector<int> dual(6);
    std::vector<std::string> labels;
    for (int a = 0; a < 6; ++a) {
      labels.push_back("g" + std::to_string(a));
      std::array<int, 3> inv{};
      for (int i = 0; i < 3; ++i) inv[g[a][i]] = i;
      dual[a] = index(inv);
      for (int b = 0; b < 6; ++b) {
        std::array<int, 3> ab{};
        for (int i = 0; i < 3; ++i) ab[i] = g[a][g[b][i]];
        N[a][b][index(ab)] = 1;
      }
    }
    const auto v = verify_axioms(FusionRing(labels, dual, N));
    CHECK(v.check == "commutativity");
    REQUIRE(v.witness.size() == 3);
    CHECK(N[v.witness[0]][v.witness[1]][v.witness[2]] != N[v.witness[1]][v.witness[0]][v.witness[2]]);
  }
}

TEST_CASE("ragged tensors raise ShapeMismatch") {
  Tensor3 N = {{{1, 0}, {0, 1}}, {{0, 1}}};
  CHECK_THROWS_AS(FusionRing({"a", "b"}, {0, 1}, N), ShapeMismatch);
  CHECK_THROWS_AS(FusionRing({"a", "b"}, {0}, su2_fusion_ring(1).tensor()), ShapeMismatch);
  CHECK_THROWS_AS(FusionRing({"a", "b"}, {0, 5}, su2_fusion_ring(1).tensor()), ShapeMismatch);
  CHECK_THROWS_AS(FusionRing({}, {}, Tensor3{}), ShapeMismatch);
}

TEST_CASE("su2 products") {
  const auto R1 = su2_fusion_ring(1);
  const auto x1 = FusionElement::basis(2, 1);
  CHECK(multiply(R1, x1, x1) == FusionElement::unit(2));
  const auto R2 = su2_fusion_ring(2);
  const auto y1 = FusionElement::basis(3, 1);
  CHECK(multiply(R2, y1, y1) == FusionElement::basis(3, 0) + FusionElement::basis(3, 2));
  CHECK(su2_fusion_ring(0).rank() == 1);
}

TEST_CASE("multiply examples") {
  const auto R = su2_fusion_ring(1);
  const CycloNumber half(mpq_class(1, 2));
  const auto e0 = elem({half, half});
  const auto e1 = elem({half, -half});
  CHECK(multiply(R, e0, e0) == e0);
  CHECK(multiply(R, e0, e1).is_zero());
  std::mt19937_64 rng(1);
  const auto y = elem({testing::random_cyclo(rng, 5), testing::random_cyclo(rng, 5)});
  CHECK(multiply(R, FusionElement::unit(2), y) == y);
  CHECK_THROWS_AS(multiply(R, FusionElement::unit(3), y), ShapeMismatch);
}

TEST_CASE("multiply is associative and commutative on random elements") {
  std::mt19937_64 rng(77);
  for (int l : {2, 3, 5}) {
    const auto R = su2_fusion_ring(l);
    for (int iter = 0; iter < 5; ++iter) {
      auto rnd = [&] {
        std::vector<CycloNumber> c;
        for (int a = 0; a <= l; ++a) c.push_back(testing::random_cyclo(rng, 2 * (l + 2), 2));
        return elem(std::move(c));
      };
      const auto x = rnd(), y = rnd(), z = rnd();
      CHECK(multiply(R, x, y) == multiply(R, y, x));
      CHECK(multiply(R, multiply(R, x, y), z) == multiply(R, x, multiply(R, y, z)));
    }
  }
}

TEST_CASE("regular matrices") {
  const auto m1 = regular_matrices(su2_fusion_ring(1));
  CHECK(m1[1] == IntMatrix::from_rows({{0, 1}, {1, 0}}));
  for (int l : {0, 3, 6}) CHECK(regular_matrices(su2_fusion_ring(l))[0] == IntMatrix::identity(l + 1));
  const auto m2 = regular_matrices(su2_fusion_ring(2));
  CHECK(m2[1] * m2[1] == m2[0] + m2[2]);
}

TEST_CASE("regular representation is a ring homomorphism on all catalog rings") {
  for (const auto& id : testing::all_catalog_ids()) {
    const auto R = build_catalog_entry(id).ring();
    if (R.rank() > 31) continue;
    INFO(id);
    const auto N = regular_matrices(R);
    CHECK(verify_nimrep(R, N).ok);
  }
}

TEST_CASE("su2 regular matrices satisfy the Chebyshev recurrence") {
  for (int l = 2; l <= kMaxCatalogLevel; ++l) {
    const auto N = regular_matrices(su2_fusion_ring(l));
    for (int a = 1; a <= l - 1; ++a) CHECK(N[a + 1] == N[1] * N[a] - N[a - 1]);
  }
}
