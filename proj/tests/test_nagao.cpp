#include <doctest.h>

#include <random>

#include "dmg/nagao.hpp"
#include "oracles.hpp"

using namespace dmg;

namespace {

AmalgamWord random_letters(const Field& F, std::mt19937_64& rng, int length) {
  AmalgamWord w;
  for (int i = 0; i < length; ++i) {
    if (rng() % 2) {
      w.push_back({Factor::G, to_poly(oracle::random_gl2_fq(F, rng))});
    } else {
      w.push_back({Factor::B, oracle::random_upper(F, 3, rng)});
    }
  }
  return w;
}

// Shape check written against the representative definitions directly.
bool looks_canonical(const AmalgamWord& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    const MatPoly& m = w[i].m;
    if (i > 0 && w[i].factor == w[i - 1].factor) return false;
    if (i == 0) continue;
    if (w[i].factor == Factor::G) {
      if (!(m.a.is_zero() && m.b.is_one() && m.c.is_one() && m.d.is_constant())) return false;
    } else {
      if (!(m.a.is_one() && m.d.is_one() && m.c.is_zero() && m.b.constant_term().is_zero() && !m.b.is_zero()))
        return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("worked example over F_2") {
  auto F = Field::of_order(2);
  const MatPoly m = parse_poly_matrix(*F, "[[1,0],[t,1]]");
  const AmalgamWord w = decompose(m);
  CHECK(format_word(w) == "G:[[0,1],[1,0]];B:[[1,t],[0,1]];G:[[0,1],[1,0]]");
  CHECK(evaluate(w, *F) == m);
  CHECK(parse_word(*F, format_word(w)) == w);
  CHECK(decompose(MatPoly::identity(Poly::parse(*F, "1"))).empty());
  CHECK_THROWS(decompose(parse_poly_matrix(*F, "[[t,0],[0,1]]")));
}

TEST_CASE("factor membership and coset splitting") {
  auto F = Field::of_order(3);
  const MatPoly g = parse_poly_matrix(*F, "[[2,1],[1,1]]");
  const MatPoly b = parse_poly_matrix(*F, "[[2,t^2+1],[0,1]]");
  CHECK(in_factor(g, Factor::G));
  CHECK_FALSE(in_factor(g, Factor::B));
  CHECK(in_factor(b, Factor::B));
  CHECK_FALSE(in_finite_borel(b));
  for (auto [m, f] : {std::pair{g, Factor::G}, std::pair{b, Factor::B}}) {
    const auto [c, t] = split_coset(m, f);
    CHECK(in_finite_borel(c));
    CHECK(c * t == m);
  }
}

TEST_CASE("round trips over F_2, F_3, F_4, seeded") {
  std::mt19937_64 rng(5505);
  for (unsigned q : {2u, 3u, 4u}) {
    auto F = Field::of_order(q);
    for (int i = 0; i < 300; ++i) {
      const MatPoly m = oracle::random_gl2(*F, 8, rng);
      const AmalgamWord w = decompose(m);
      CHECK(evaluate(w, *F) == m);
      CHECK(is_canonical(w));
      CHECK(looks_canonical(w));
      CHECK(normalize(w) == w);
      CHECK(evaluate(inverse(w), *F) == m.inverse());
      CHECK(evaluate(euclid_word(m), *F) == m);
      CHECK(parse_word(*F, format_word(w)) == w);

      const AmalgamWord raw = random_letters(*F, rng, 1 + static_cast<int>(rng() % 7));
      const AmalgamWord nf = normalize(raw);
      CHECK(decompose(evaluate(raw, *F)) == nf);
      CHECK(evaluate(nf, *F) == evaluate(raw, *F));
    }
  }
}

TEST_CASE("normal form is unique: different words give different matrices") {
  std::mt19937_64 rng(5506);
  auto F = Field::of_order(2);
  std::vector<std::pair<std::string, MatPoly>> seen;
  for (int i = 0; i < 200; ++i) {
    const MatPoly m = oracle::random_gl2(*F, 4, rng);
    const std::string s = format_word(decompose(m));
    for (const auto& [t, n] : seen) CHECK((s == t) == (m == n));
    seen.emplace_back(s, m);
  }
}
