#include <doctest.h>

#include <random>
#include <set>

#include "dmg/reiner.hpp"
#include "oracles.hpp"
#include "sample_specs.hpp"

using namespace dmg;

TEST_CASE("sparse linear maps compose and invert") {
  auto F = Field::of_order(3);
  const SparseLinearMap m = fixtures::sparse(*F, {{1, "t^2+t"}, {2, "2t^2"}});
  const SparseLinearMap inv = m.inverted();
  for (unsigned i = 0; i < 5; ++i) {
    const Poly e = Poly::monomial(*F, i);
    CHECK(inv.apply(m.apply(e)) == e);
  }
  CHECK(m.compose(inv).is_identity());
  CHECK_FALSE(m.is_identity());
  CHECK(m.closed_support() == std::vector<unsigned>{1, 2});
  CHECK_THROWS(fixtures::sparse(*F, {{1, "t^2"}, {2, "2t^2"}}).inverted());
}

TEST_CASE("spec validation and json round-trip") {
  auto F = Field::of_order(2);
  for (const auto& s : fixtures::reiner_specs_f2()) {
    const auto back = LinearAutoSpec::from_json(s.to_json());
    CHECK(back.forward() == s.forward());
    CHECK(back.inverse() == s.inverse());
  }
  CHECK_THROWS_AS(LinearAutoSpec::with_computed_inverse(F, fixtures::sparse(*F, {{1, "t+1"}})), std::invalid_argument);
  CHECK_THROWS_AS(LinearAutoSpec::with_computed_inverse(F, fixtures::sparse(*F, {{0, "t"}})), std::invalid_argument);
  CHECK_THROWS_AS(LinearAutoSpec(F, fixtures::sparse(*F, {{1, "t^2"}, {2, "t"}}), fixtures::sparse(*F, {{1, "t^2"}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(LinearAutoSpec::from_json(nlohmann::json::parse(R"({"q":2,"forward":{"1":"t^2"}})")),
                  std::invalid_argument);
  const auto j = nlohmann::json::parse(R"({"q":2,"forward":{"1":[0,0,1],"2":"t"},"inverse":{"1":"t^2","2":[0,1]}})");
  CHECK(LinearAutoSpec::from_json(j).apply(Poly::parse(*F, "t")) == Poly::parse(*F, "t^2"));
}

TEST_CASE("action on the cusp stabilizer matches the defining formula") {
  std::mt19937_64 rng(6606);
  for (const auto& s : fixtures::reiner_specs_f2()) {
    const Field& F = s.field();
    for (int i = 0; i < 100; ++i) {
      const MatPoly m = oracle::random_upper(F, 6, rng);
      const Poly a0 = Poly::constant(m.b.constant_term());
      const MatPoly expect{m.a, a0 + s.forward().apply(m.b - a0), m.c, m.d};
      CHECK(reiner_on_cuspstab(s, m) == expect);
      CHECK(reiner_apply(s, m) == expect);
    }
  }
  auto F = Field::of_order(2);
  CHECK_THROWS(reiner_on_cuspstab(fixtures::reiner_specs_f2()[0], parse_poly_matrix(*F, "[[1,0],[t,1]]")));
}

TEST_CASE("automorphism laws on random pairs, seeded") {
  std::mt19937_64 rng(6607);
  auto F = Field::of_order(2);
  for (const auto& s : fixtures::reiner_specs_f2()) {
    const LinearAutoSpec inv = reiner_inverse(s);
    for (int i = 0; i < 100; ++i) {
      const MatPoly a = oracle::random_gl2(*F, 6, rng), b = oracle::random_gl2(*F, 6, rng);
      CHECK(reiner_apply(s, a * b) == reiner_apply(s, a) * reiner_apply(s, b));
      CHECK(reiner_apply(inv, reiner_apply(s, a)) == a);
      CHECK(reiner_apply(s, reiner_apply(inv, a)) == a);
    }
    for (unsigned code = 0; code < 16; ++code) {
      const MatFq g{F->elem(code & 1), F->elem((code >> 1) & 1), F->elem((code >> 2) & 1), F->elem(code >> 3)};
      if (g.det().is_zero()) continue;
      CHECK(reiner_apply(s, to_poly(g)) == to_poly(g));
    }
  }
}

TEST_CASE("congruence membership") {
  auto F = Field::of_order(3);
  const CongruenceIdeal m(Poly::parse(*F, "2t^2"));
  CHECK(m.modulus == Poly::parse(*F, "t^2"));
  CHECK(congruence_member(parse_poly_matrix(*F, "[[1,t^2],[0,1]]"), m));
  CHECK_FALSE(congruence_member(parse_poly_matrix(*F, "[[1,t],[0,1]]"), m));
  CHECK_FALSE(congruence_member(parse_poly_matrix(*F, "[[2,0],[0,2]]"), m));
  CHECK_THROWS(CongruenceIdeal(Poly(*F)));
}

TEST_CASE("identity spec: the fiber is the ideal itself") {
  for (unsigned q : {2u, 3u}) {
    auto F = Field::of_order(q);
    const auto id = LinearAutoSpec::identity(F);
    for (const char* m : {"t", "t^2", "t^2+1"}) {
      const CongruenceIdeal ideal(Poly::parse(*F, m));
      const auto fib = unipotent_fiber(id, ideal, 4);
      std::uint64_t expect = 1;
      for (int k = 0; k <= 4 - ideal.modulus.degree(); ++k) expect *= q;
      CHECK(fib.size() == expect);
      for (const Poly& a : fib) CHECK(ideal.modulus.divides(a));
    }
  }
}

TEST_CASE("fibers agree, form subspaces, and separate the specs at t^2") {
  auto F = Field::of_order(2);
  const auto specs = fixtures::fiber_specs_f2();
  std::set<std::vector<Poly>> distinct;
  for (const auto& s : specs) {
    for (const char* m : {"t", "t^2", "t^2+t+1"}) {
      const CongruenceIdeal ideal(Poly::parse(*F, m));
      for (int n = ideal.modulus.degree(); n <= 4; ++n) {
        const auto fib = unipotent_fiber(s, ideal, n);
        CHECK(is_subspace(fib));
      }
    }
    // Oracle for (t^2): a_0 = 0 and the t-coefficient of phi^{-1}(a) vanishes.
    const auto fib = unipotent_fiber(s, CongruenceIdeal(Poly::parse(*F, "t^2")), 4);
    std::vector<Poly> expect;
    for (const Poly& a : all_polys(*F, 4)) {
      if (!a.constant_term().is_zero()) continue;
      if (s.inverse().apply(a).coeff(1).is_zero()) expect.push_back(a);
    }
    CHECK(fib == expect);
    CHECK(fib.size() == 8);
    distinct.insert(fib);
  }
  CHECK(distinct.size() == specs.size());
  CHECK_THROWS(unipotent_fiber(specs[0], CongruenceIdeal(Poly::parse(*F, "t^3")), 2));
}
