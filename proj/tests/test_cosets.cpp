#include <doctest.h>

#include <random>

#include "dmg/cosets.hpp"
#include "oracles.hpp"

using namespace dmg;

namespace {

std::shared_ptr<const QuotRing> ring(unsigned q, const char* m) {
  auto F = Field::of_order(q);
  return std::make_shared<const QuotRing>(F, Poly::parse(*F, m));
}

std::size_t naive_count(const FiniteGroup& G, const Subgroup& h, const Subgroup& k) {
  return oracle::double_coset_count_naive(G.order(), h.elements, k.elements,
                                          [&](std::uint32_t x, std::uint32_t y) { return G.mul(x, y); });
}

}  // namespace

TEST_CASE("quotient ring arithmetic matches polynomial arithmetic, seeded") {
  std::mt19937_64 rng(7707);
  for (auto [q, m] : std::vector<std::pair<unsigned, const char*>>{{2, "t^2"}, {3, "t^2+1"}, {2, "t^3+t+1"}}) {
    const auto R = ring(q, m);
    const Field& F = R->field();
    CHECK(R->size() == q * q * (R->modulus().degree() == 3 ? q : 1));
    for (int i = 0; i < 300; ++i) {
      const Poly a = oracle::random_poly(F, 5, rng), b = oracle::random_poly(F, 5, rng);
      const auto ra = R->reduce(a), rb = R->reduce(b);
      CHECK(R->lift(ra) == a % R->modulus());
      CHECK(R->add(ra, rb) == R->reduce(a + b));
      CHECK(R->sub(ra, rb) == R->reduce(a - b));
      CHECK(R->mul(ra, rb) == R->reduce(a * b));
      CHECK(R->is_unit(ra) == gcd(a, R->modulus()).is_one());
    }
  }
}

TEST_CASE("group orders") {
  // GL2(F_q) for m = t; GL2(R) for R local with residue field F_q has order q^4 |GL2(F_q)|.
  CHECK(FiniteGroup::general_linear(ring(2, "t")).order() == oracle::gl2_order(2));
  CHECK(FiniteGroup::general_linear(ring(3, "t")).order() == oracle::gl2_order(3));
  CHECK(FiniteGroup::general_linear(ring(2, "t^2")).order() == 16 * oracle::gl2_order(2));
  CHECK(FiniteGroup::general_linear(ring(2, "t^2+t+1")).order() == oracle::gl2_order(4));
  CHECK(FiniteGroup::polynomial_image(ring(2, "t")).order() == 6);
  CHECK(FiniteGroup::polynomial_image(ring(3, "t")).order() == 48);
  // det lands in F_q^*, so the image is {det in F_q^*} inside GL2(R).
  CHECK(FiniteGroup::polynomial_image(ring(2, "t^2")).order() == 48);
  CHECK(FiniteGroup::polynomial_image(ring(2, "t^2+t+1")).order() == 60);
}

TEST_CASE("group tables are consistent") {
  const auto G = FiniteGroup::polynomial_image(ring(2, "t^2"));
  const QuotRing& R = G.ring();
  for (std::uint32_t i = 0; i < G.order(); ++i) {
    CHECK(G.index_of(G.element(i)) == static_cast<long>(i));
    CHECK(G.mul(i, G.inverse(i)) == 0);
    for (std::uint32_t j = 0; j < G.order(); j += 7)
      CHECK(G.element(G.mul(i, j)) == rmat_mul(G.element(i), G.element(j), R));
  }
  CHECK(G.index_of(RMat{0, 0, 0, 0}) == -1);
}

TEST_CASE("subgroups of GL2(F_2) are the six subgroups of S_3") {
  const auto G = FiniteGroup::polynomial_image(ring(2, "t"));
  const auto subs = all_subgroups(G);
  REQUIRE(subs.size() == 6);
  std::vector<std::size_t> orders;
  for (const auto& h : subs) orders.push_back(h.order());
  CHECK(orders == std::vector<std::size_t>{1, 2, 2, 2, 3, 6});
}

TEST_CASE("double cosets against the naive sweep") {
  for (auto [q, m] : std::vector<std::pair<unsigned, const char*>>{{2, "t"}, {2, "t^2"}, {3, "t"}, {2, "t^2+t+1"}}) {
    CAPTURE(m);
    const auto G = FiniteGroup::polynomial_image(ring(q, m));
    const Subgroup k = image_cusp_stab(G);
    for (const Subgroup& h : {trivial_subgroup(G), k, whole_group(G)}) {
      const auto dc = double_cosets(G, h, k);
      CHECK(dc.count() == naive_count(G, h, k));
      std::size_t total = 0;
      for (auto s : dc.sizes) total += s;
      CHECK(total == G.order());
    }
  }
}

TEST_CASE("cusp counts") {
  const auto G = FiniteGroup::polynomial_image(ring(2, "t"));
  CHECK(cusp_count(G, trivial_subgroup(G)) == 3);
  CHECK(cusp_count(G, image_cusp_stab(G)) == 2);
  CHECK(cusp_count(G, whole_group(G)) == 1);
  const auto G2 = FiniteGroup::polynomial_image(ring(2, "t^2"));
  CHECK(cusp_count(G2, trivial_subgroup(G2)) == 12);
  CHECK(cusp_count(G2, image_cusp_stab(G2)) == 5);
  const auto G3 = FiniteGroup::polynomial_image(ring(3, "t"));
  CHECK(cusp_count(G3, trivial_subgroup(G3)) == 4);
}

TEST_CASE("conjugation invariance over every subgroup") {
  for (const char* m : {"t", "t^2"}) {
    CAPTURE(m);
    const auto G = FiniteGroup::polynomial_image(ring(2, m));
    for (const Subgroup& h : all_subgroups(G)) {
      const auto rep = conj_invariance_check(G, h);
      CHECK(rep.invariant);
      CHECK(rep.counts.size() == G.order());
      CHECK(rep.base_count == naive_count(G, h, image_cusp_stab(G)));
      const Subgroup c = conjugate(G, h, G.order() - 1);
      CHECK(c.order() == h.order());
    }
  }
}
