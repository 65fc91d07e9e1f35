#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <numeric>

#include "support.hpp"

using namespace fuselab;

namespace {

const ModularData& su2(int l) { return catalog("su2:" + std::to_string(l)); }

CycloNumber q(long n, long d = 1) { return CycloNumber(mpq_class(n, d)); }

}  // namespace

TEST_CASE("verify_nimrep examples") {
  for (const auto& id : testing::light_catalog_ids()) {
    const auto& md = catalog(id);
    CHECK(verify_nimrep(md.ring(), regular_matrices(md.ring())).ok);
  }
  const std::vector<IntMatrix> one{IntMatrix::identity(1)};
  CHECK(verify_nimrep(su2_fusion_ring(0), one).ok);
}

TEST_CASE("the tadpole graph is not a NIM-rep at level 2") {
  const IntMatrix A = IntMatrix::from_rows({{0, 1}, {1, 1}});
  const auto mats = su2_recurrence(A, 2);
  const auto v = verify_nimrep(su2_fusion_ring(2), mats);
  REQUIRE_FALSE(v.ok);
  CHECK(v.check == "module homomorphism");
  // N(x1) N(x2) != N(x1)
  CHECK_FALSE(mats[1] * mats[2] == mats[1]);
  BoundaryGraph g{{"a", "b"}, A};
  CHECK_THROWS_AS(su2_nimrep_from_graph(g, 2), NotANimRep);
}

TEST_CASE("verify_nimrep detects each failure") {
  const auto R = su2_fusion_ring(1);
  SECTION("shape") {
    const std::vector<IntMatrix> m{IntMatrix::identity(2)};
    CHECK_THROWS_AS(verify_nimrep(R, m), ShapeMismatch);
    const std::vector<IntMatrix> m2{IntMatrix::identity(2), IntMatrix::identity(3)};
    CHECK_THROWS_AS(verify_nimrep(R, m2), ShapeMismatch);
  }
  SECTION("negative") {
    const std::vector<IntMatrix> m{IntMatrix::identity(1), IntMatrix::from_rows({{-1}})};
    CHECK(verify_nimrep(R, m).check == "non-negativity");
  }
  SECTION("unit") {
    const std::vector<IntMatrix> m{IntMatrix::from_rows({{0, 1}, {1, 0}}), IntMatrix::identity(2)};
    CHECK(verify_nimrep(R, m).check == "unit acts as identity");
  }
  SECTION("transpose") {
    const std::vector<IntMatrix> m{IntMatrix::identity(2), IntMatrix::from_rows({{0, 1}, {0, 0}})};
    CHECK(verify_nimrep(R, m).check == "dual acts by transpose");
  }
}

TEST_CASE("su2_nimrep_from_graph examples") {
  const auto a2 = su2_nimrep_from_graph(ade_graph('A', 2), 1);
  CHECK(a2.mats[1] == IntMatrix::from_rows({{0, 1}, {1, 0}}));
  const auto a3 = su2_nimrep_from_graph(ade_graph('A', 3), 2);
  CHECK(a3.mats[2] == IntMatrix::from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  CHECK_THROWS_AS(su2_nimrep_from_graph(ade_graph('A', 2), 2), NotANimRep);
  try {
    su2_nimrep_from_graph(ade_graph('A', 2), 2);
  } catch (const NotANimRep& e) {
    CHECK_FALSE(e.witness().empty());
  }
}

TEST_CASE("ADE constructors") {
  const auto d4 = ade_graph('D', 4);
  CHECK(d4.adjacency == IntMatrix::from_rows({{0, 1, 0, 0}, {1, 0, 1, 1}, {0, 1, 0, 0}, {0, 1, 0, 0}}));
  const auto e6 = ade_graph('E', 6);
  // Bourbaki: 1-3, 2-4, 3-4, 4-5, 5-6
  std::vector<std::int64_t> deg(6, 0);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) deg[i] += e6.adjacency(i, j);
  CHECK(deg == std::vector<std::int64_t>{1, 1, 2, 3, 2, 1});
  CHECK(e6.adjacency(1, 3) == 1);
  CHECK(coxeter_number('E', 6) == 12);
  CHECK(coxeter_number('E', 7) == 18);
  CHECK(coxeter_number('E', 8) == 30);
  CHECK(coxeter_number('D', 5) == 8);
  CHECK_THROWS(ade_graph('E', 9));
  CHECK_THROWS(ade_graph('D', 3));
  CHECK_THROWS(ade_graph('X', 3));
  BoundaryGraph asym{{"a", "b"}, IntMatrix::from_rows({{0, 1}, {0, 0}})};
  CHECK(validate_graph(asym).check == "symmetric adjacency");
  CHECK_THROWS_AS(su2_nimrep_from_graph(asym, 1), ValidationError);
}

TEST_CASE("every ADE graph at its level is a NIM-rep") {
  for (const auto& c : testing::ade_cases()) {
    INFO(c.name());
    CHECK(coxeter_number(c.family, c.rank) == c.level + 2);
    CHECK_NOTHROW(su2_nimrep_from_graph(ade_graph(c.family, c.rank), c.level));
  }
}

TEST_CASE("ADE graphs at the wrong level are rejected") {
  CHECK_THROWS_AS(su2_nimrep_from_graph(ade_graph('E', 6), 9), NotANimRep);
  CHECK_THROWS_AS(su2_nimrep_from_graph(ade_graph('D', 5), 4), NotANimRep);
  CHECK_THROWS_AS(su2_nimrep_from_graph(ade_graph('A', 4), 4), NotANimRep);
}

TEST_CASE("character examples") {
  CHECK(character(su2_nimrep_from_graph(ade_graph('A', 2), 1)) == std::vector<std::int64_t>{2, 0});
  CHECK(character(regular_nimrep(su2_fusion_ring(2))) == std::vector<std::int64_t>{3, 0, 1});
  CHECK(character(regular_nimrep(su2_fusion_ring(0))) == std::vector<std::int64_t>{1});
}

TEST_CASE("multiplicity profile examples") {
  CHECK(multiplicity_profile(su2_nimrep_from_graph(ade_graph('A', 2), 1), su2(1)) == std::vector<std::int64_t>{1, 1});
  CHECK(multiplicity_profile(su2_nimrep_from_graph(ade_graph('D', 4), 4), su2(4)) == std::vector<std::int64_t>{1, 0, 2, 0, 1});
  for (const auto& id : testing::light_catalog_ids()) {
    INFO(id);
    const auto& md = catalog(id);
    CHECK(multiplicity_profile(regular_nimrep(md.ring()), md) == std::vector<std::int64_t>(md.rank(), 1));
    // projector trace d(I)^2 <lambda_I, lambda_I> / d(C) = 1
    for (int I = 0; I < md.rank(); ++I) CHECK(md.d()[I] * md.d()[I] * md.spectrum()[I].norm_sq / md.global_dim() == q(1));
  }
}

TEST_CASE("profiles agree with the float eigen-oracle on every ADE case") {
  for (const auto& c : testing::ade_cases()) {
    INFO(c.name());
    const auto g = ade_graph(c.family, c.rank);
    const auto nr = su2_nimrep_from_graph(g, c.level);
    const auto m = multiplicity_profile(nr, su2(c.level));
    const auto o = adjacency_eigen_oracle(g.adjacency, c.level + 2);
    CHECK(o.unmatched == 0);
    CHECK(m == o.counts);
    CHECK(std::accumulate(m.begin(), m.end(), std::int64_t{0}) == g.size());
  }
}

TEST_CASE("E-type profiles sit at the exponents") {
  auto support = [](int level, char f, int n) {
    const auto m = multiplicity_profile(su2_nimrep_from_graph(ade_graph(f, n), level), su2(level));
    std::vector<int> s;
    for (int I = 0; I <= level; ++I)
      if (m[I]) {
        CHECK(m[I] == 1);
        s.push_back(I);
      }
    return s;
  };
  CHECK(support(10, 'E', 6) == std::vector<int>{0, 3, 4, 6, 7, 10});
  CHECK(support(16, 'E', 7) == std::vector<int>{0, 4, 6, 8, 10, 12, 16});
  CHECK(support(28, 'E', 8) == std::vector<int>{0, 6, 10, 12, 16, 18, 22, 28});
}

TEST_CASE("projector traces sum to the boundary rank") {
  const auto nr = direct_sum(su2_nimrep_from_graph(ade_graph('D', 6), 8), regular_nimrep(su2_fusion_ring(8)));
  const auto m = multiplicity_profile(nr, su2(8));
  CHECK(std::accumulate(m.begin(), m.end(), std::int64_t{0}) == nr.size());
}

TEST_CASE("mismatched module and data") {
  const auto nr = su2_nimrep_from_graph(ade_graph('A', 3), 2);
  const std::vector<CycloNumber> bad{q(2), q(1, 3), q(0)};
  CHECK_THROWS_AS(multiplicity_profile_from_traces(bad, su2(2)), NonIntegralMultiplicity);
  CHECK_THROWS_AS(multiplicity_profile(nr, su2(3)), ShapeMismatch);
}

TEST_CASE("d_eigenvector examples") {
  const auto v3 = d_eigenvector(su2_nimrep_from_graph(ade_graph('A', 3), 2), su2(2));
  CHECK(v3 == std::vector<CycloNumber>{q(1), two_cos(1, 4), q(1)});
  CHECK(d_eigenvector(su2_nimrep_from_graph(ade_graph('A', 2), 1), su2(1)) == std::vector<CycloNumber>{q(1), q(1)});
  const auto a2 = su2_nimrep_from_graph(ade_graph('A', 2), 1);
  CHECK_THROWS_AS(d_eigenvector(direct_sum(a2, a2), su2(1)), MultiplicityNotOne);
}

TEST_CASE("d_eigenvector is the Perron-Frobenius vector") {
  for (const auto& c : testing::ade_cases(16)) {
    INFO(c.name());
    const auto g = ade_graph(c.family, c.rank);
    const auto nr = su2_nimrep_from_graph(g, c.level);
    const auto v = d_eigenvector(nr, su2(c.level));
    const double d1 = 2 * std::cos(std::numbers::pi / (c.level + 2));
    for (int i = 0; i < g.size(); ++i) {
      CHECK(v[i].to_complex().real() > 0);
      double s = 0;
      for (int j = 0; j < g.size(); ++j) s += g.adjacency(i, j) * v[j].to_complex().real();
      CHECK(std::abs(s - d1 * v[i].to_complex().real()) < 1e-9);
    }
  }
}

TEST_CASE("indecomposability and unions") {
  const auto a2 = su2_nimrep_from_graph(ade_graph('A', 2), 1);
  CHECK(is_indecomposable(a2));
  CHECK_FALSE(is_indecomposable(direct_sum(a2, a2)));
  const auto g = disjoint_union(ade_graph('A', 2), ade_graph('A', 2));
  CHECK(g.size() == 4);
  CHECK(su2_nimrep_from_graph(g, 1).mats == direct_sum(a2, a2).mats);
  CHECK(validate_graph(g).ok);
  CHECK_THROWS_AS(direct_sum(a2, regular_nimrep(su2_fusion_ring(2))), ShapeMismatch);
}
