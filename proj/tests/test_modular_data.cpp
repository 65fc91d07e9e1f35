#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "support.hpp"

using namespace fuselab;

namespace {

CycloNumber q(long n, long d = 1) { return CycloNumber(mpq_class(n, d)); }

FusionElement elem(std::vector<CycloNumber> c) { return FusionElement(std::move(c)); }

}  // namespace

TEST_CASE("su2 level 1, 2 and 0 data") {
  const auto& m1 = catalog("su2:1");
  CHECK(m1.S() == CycloMatrix::from_rows({{q(1), q(1)}, {q(1), q(-1)}}));
  CHECK(m1.global_dim() == q(2));
  const auto& m2 = catalog("su2:2");
  CHECK(m2.d() == std::vector<CycloNumber>{q(1), two_cos(1, 4), q(1)});
  CHECK(m2.global_dim() == q(4));
  const auto& m0 = catalog("su2:0");
  CHECK(m0.S() == CycloMatrix::from_rows({{q(1)}}));
  CHECK(m0.global_dim() == q(1));
}

TEST_CASE("su2 S matches the sine formula numerically") {
  for (int l = 0; l <= kMaxCatalogLevel; l += 3) {
    const auto& md = catalog("su2:" + std::to_string(l));
    const int h = l + 2;
    for (int a = 0; a <= l; ++a)
      for (int b = 0; b <= l; ++b) {
        const double ref = std::sin(std::numbers::pi * (a + 1) * (b + 1) / h) / std::sin(std::numbers::pi / h);
        CHECK(std::abs(md.S()(a, b).to_complex() - std::complex<double>(ref, 0)) < 1e-9);
      }
  }
}

TEST_CASE("su2 spins are conformal weights minus c/24") {
  for (int l = 0; l <= 12; ++l) {
    const auto& md = catalog("su2:" + std::to_string(l));
    const int h = l + 2;
    for (int a = 0; a <= l; ++a) {
      // h_a = a(a+2)/(4h), c = 3l/h
      const mpq_class ref = mpq_class(a * (a + 2), 4 * h) - mpq_class(3 * l, h) / 24;
      CHECK(md.t()[a] == RationalPhase(ref));
    }
  }
  CHECK(catalog("su2:1").t()[1] == RationalPhase(5, 24));
}

TEST_CASE("every catalog entry satisfies the modular-data identities") {
  for (const auto& id : testing::all_catalog_ids()) {
    INFO(id);
    const auto md = build_catalog_entry(id);
    const auto v = verify_modular_data(md);
    CHECK(v.ok);
    CHECK(md.d()[0] == q(1));
    CHECK(verify_axioms(md.ring()).ok);
  }
}

TEST_CASE("spectrum examples") {
  const auto& m1 = catalog("su2:1");
  CHECK(m1.spectrum()[1].values[1] == q(-1));
  CHECK(m1.spectrum()[1].values[1] == two_cos(2, 3));
  CHECK(catalog("su2:2").spectrum()[1].values[1] == q(0));
  for (const auto& id : testing::light_catalog_ids()) {
    const auto& md = catalog(id);
    for (int S = 0; S < md.rank(); ++S) CHECK(md.spectrum()[0].values[S] == md.d()[S]);
  }
}

TEST_CASE("spectrum points are homomorphisms with the expected norm") {
  for (const auto& id : testing::light_catalog_ids()) {
    INFO(id);
    const auto& md = catalog(id);
    const auto& R = md.ring();
    for (const auto& p : md.spectrum()) {
      CHECK(p.values[0] == q(1));
      CHECK(p.norm_sq == md.global_dim() / (md.d()[p.base_label] * md.d()[p.base_label]));
      for (int a = 0; a < R.rank(); ++a)
        for (int b = 0; b < R.rank(); ++b) {
          CycloNumber rhs;
          for (int c = 0; c < R.rank(); ++c)
            if (R.N(a, b, c)) rhs += CycloNumber(R.N(a, b, c)) * p.values[c];
          CHECK(p.values[a] * p.values[b] == rhs);
        }
    }
  }
}

TEST_CASE("inner product examples") {
  const auto& m1 = catalog("su2:1");
  const auto& s = m1.spectrum();
  CHECK(inner_product(m1.ring(), s[0].values, s[0].values) == q(2));
  CHECK(inner_product(m1.ring(), s[0].values, s[1].values) == q(0));
  const auto& m0 = catalog("su2:0");
  CHECK(inner_product(m0.ring(), m0.spectrum()[0].values, m0.spectrum()[0].values) == q(1));
  const std::vector<CycloNumber> short_vec{q(1)};
  CHECK_THROWS_AS(inner_product(m1.ring(), short_vec, s[0].values), ShapeMismatch);
}

TEST_CASE("<lambda_I, lambda_J> vanishes for J != I, not for J != I*") {
  bool dual_version_fails = false;
  for (const auto& id : testing::all_catalog_ids()) {
    if (id.starts_with("su2:") && std::stoi(id.substr(4)) > 12) continue;
    INFO(id);
    const auto& md = catalog(id);
    const auto& sp = md.spectrum();
    for (int I = 0; I < md.rank(); ++I)
      for (int J = 0; J < md.rank(); ++J) {
        const auto ip = inner_product(md.ring(), sp[I].values, sp[J].values);
        if (I != J) CHECK(ip.is_zero());
        if (J != md.ring().dual(I) && !ip.is_zero()) dual_version_fails = true;
      }
  }
  // Z/n with n >= 3 has I != I*, and there <lambda_I, lambda_I> = n.
  CHECK(dual_version_fails);
  const auto& z3 = catalog("zn:3");
  CHECK(inner_product(z3.ring(), z3.spectrum()[1].values, z3.spectrum()[1].values) == q(3));
  CHECK(inner_product(z3.ring(), z3.spectrum()[1].values, z3.spectrum()[2].values) == q(0));
}

TEST_CASE("spectral idempotent examples") {
  const auto& m1 = catalog("su2:1");
  CHECK(m1.spectral_idempotents()[0] == elem({q(1, 2), q(1, 2)}));
  CHECK(m1.spectral_idempotents()[1] == elem({q(1, 2), q(-1, 2)}));
  CHECK(catalog("su2:0").spectral_idempotents()[0] == elem({q(1)}));
}

TEST_CASE("tube idempotent examples") {
  const auto& m1 = catalog("su2:1");
  CHECK(tube_idempotent(m1, 0) == elem({q(1, 2), q(1, 2)}));
  const auto& m2 = catalog("su2:2");
  const auto t1 = tube_idempotent(m2, 1);
  CHECK(t1 == elem({q(1, 2), q(0), q(-1, 2)}));
  CHECK(t1 == m2.spectral_idempotents()[1]);
  CHECK(tube_idempotent(catalog("su2:0"), 0) == elem({q(1)}));
  CHECK_THROWS(tube_idempotent(m1, 2));
}

TEST_CASE("tube and spectral idempotents agree") {
  for (const auto& id : testing::light_catalog_ids()) {
    INFO(id);
    const auto& md = catalog(id);
    for (int I = 0; I < md.rank(); ++I) CHECK(tube_idempotent(md, I) == md.spectral_idempotents()[I]);
  }
}

TEST_CASE("spectral idempotents are a complete orthogonal family") {
  for (const auto& id : testing::light_catalog_ids()) {
    INFO(id);
    const auto& md = catalog(id);
    const auto& e = md.spectral_idempotents();
    FusionElement sum(std::vector<CycloNumber>(md.rank()));
    for (int I = 0; I < md.rank(); ++I) {
      sum = sum + e[I];
      for (int J = 0; J < md.rank(); ++J) {
        const auto p = multiply(md.ring(), e[I], e[J]);
        if (I == J) CHECK(p == e[I]);
        else CHECK(p.is_zero());
      }
      // mu(e_lambda) = delta
      for (int K = 0; K < md.rank(); ++K) {
        CycloNumber ev;
        for (int S = 0; S < md.rank(); ++S) ev += md.spectrum()[K].values[S] * e[I][S];
        CHECK(ev == (K == I ? q(1) : q(0)));
      }
    }
    CHECK(sum == FusionElement::unit(md.rank()));
  }
}

TEST_CASE("Verlinde examples") {
  const auto v2 = verlinde(catalog("su2:2"));
  CHECK(v2[1][1][0] == q(1));
  CHECK(v2[1][1][2] == q(1));
  CHECK(v2[1][1][1] == q(0));
  CHECK(verlinde(catalog("su2:0"))[0][0][0] == q(1));
  CHECK(verlinde(catalog("fibonacci"))[1][1][1] == q(1));
}

TEST_CASE("Verlinde recovers N on every catalog entry") {
  for (const auto& id : testing::all_catalog_ids()) {
    INFO(id);
    const auto& md = catalog(id);
    CHECK(verlinde_integer(md) == md.ring().tensor());
  }
}

TEST_CASE("inconsistent S is rejected") {
  const auto R = su2_fusion_ring(1);
  SECTION("non-integral Verlinde coefficient") {
    ModularData bad("bad", R, CycloMatrix::from_rows({{q(1), q(2)}, {q(2), q(-1)}}), {RationalPhase(0, 1), RationalPhase(1, 4)});
    CHECK_THROWS_AS(verlinde_integer(bad), NonIntegralVerlinde);
    CHECK_FALSE(verify_modular_data(bad).ok);
  }
  SECTION("vanishing dimension") {
    ModularData bad("bad", R, CycloMatrix::from_rows({{q(1), q(0)}, {q(0), q(1)}}), {RationalPhase(0, 1), RationalPhase(0, 1)});
    CHECK_THROWS_AS(compute_spectrum(bad), DegenerateScalar);
  }
  SECTION("asymmetric S") {
    ModularData bad("bad", R, CycloMatrix::from_rows({{q(1), q(1)}, {q(-1), q(-1)}}), {RationalPhase(0, 1), RationalPhase(0, 1)});
    const auto v = verify_modular_data(bad);
    CHECK(v.check == "S symmetric");
    CHECK(v.witness == std::vector<int>{0, 1});
  }
  SECTION("shape") {
    CHECK_THROWS_AS(ModularData("bad", R, CycloMatrix::from_rows({{q(1)}}), {RationalPhase(0, 1)}), ShapeMismatch);
    CHECK_THROWS_AS(ModularData("bad", R, catalog("su2:1").S(), {RationalPhase(0, 1)}), ShapeMismatch);
  }
}

TEST_CASE("Fibonacci, Ising and Z/n entries") {
  const auto& fib = catalog("fibonacci");
  CHECK(fib.global_dim() == q(2) + two_cos(1, 5));  // 1 + phi^2 = 2 + phi
  const auto& ising = catalog("ising");
  CHECK(ising.global_dim() == q(4));
  CHECK(ising.t()[1] == RationalPhase(1, 16));
  for (int n = 1; n <= 8; ++n) {
    const auto& zn = catalog("zn:" + std::to_string(n));
    CHECK(zn.global_dim() == q(n));
    for (int a = 0; a < n; ++a) CHECK(zn.ring().dual(a) == (n - a) % n);
  }
}

TEST_CASE("catalog ids") {
  CHECK_THROWS_AS(catalog("su2:29"), ParseError);
  CHECK_THROWS_AS(catalog("su2:x"), ParseError);
  CHECK_THROWS_AS(catalog("su2"), ParseError);
  CHECK_THROWS_AS(catalog("zn:0"), ParseError);
  CHECK_THROWS_AS(catalog("e8"), ParseError);
  CHECK(&catalog("su2:3") == &catalog("su2:3"));
  CHECK(catalog_entries().size() == 4);
}
