#include <doctest.h>

#include <random>

#include "dmg/curve.hpp"
#include "oracles.hpp"

using namespace dmg;

namespace {

// Every nonsingular Weierstrass curve over F_q.
std::vector<WeierstrassCurve> all_curves(unsigned q) {
  auto F = Field::of_order(q);
  const auto els = F->elements();
  std::vector<WeierstrassCurve> out;
  for (Fq a1 : els)
    for (Fq a2 : els)
      for (Fq a3 : els)
        for (Fq a4 : els)
          for (Fq a6 : els) {
            try {
              out.emplace_back(F, a1, a2, a3, a4, a6);
            } catch (const std::domain_error&) {
            }
          }
  return out;
}

}  // namespace

TEST_CASE("the two example curves over F_2") {
  const auto e1 = WeierstrassCurve::parse("q=2;y2+y=x3");
  const LPoly l1 = curve_lpoly(e1);
  CHECK(l1 == LPoly{{1, 0, 2}});
  CHECK(l1.str() == "1+2u^2");
  CHECK(ell_count(l1) == 3);
  CHECK(class_data(e1) == ClassData{3, 1, 1, 1, 2});

  const auto e2 = WeierstrassCurve::parse("q=2;y2+y=x3+x+1");
  const LPoly l2 = curve_lpoly(e2);
  CHECK(l2 == LPoly{{1, -2, 2}});
  CHECK(l2.str() == "1-2u+2u^2");
  CHECK(ell_count(l2) == 5);
  CHECK(class_data(e2) == ClassData{1, 1, 2, 1, 4});
}

TEST_CASE("curve text and json round-trip") {
  for (const char* s : {"q=2;y2+y=x3", "q=2;y2+y=x3+x+1", "q=3;y2=x3+2x+1", "q=2;y2+xy=x3+1"}) {
    const auto e = WeierstrassCurve::parse(s);
    CHECK(e.str() == s);
    CHECK(WeierstrassCurve::from_json(e.to_json()).str() == s);
  }
  CHECK_THROWS_AS(WeierstrassCurve::parse("q=2;y2=x3"), std::domain_error);
  CHECK_THROWS(WeierstrassCurve::parse("q=6;y2+y=x3"));
  CHECK_THROWS(WeierstrassCurve::parse("y2+y=x3"));
}

TEST_CASE("point counts and 2-torsion agree with brute force for all curves over F_2, F_3, F_4") {
  for (unsigned q : {2u, 3u, 4u}) {
    for (const auto& e : all_curves(q)) {
      CAPTURE(e.str());
      const auto pts = enumerate_points(e);
      CHECK(pts.size() == oracle::point_count_bruteforce(e));
      CHECK(two_torsion_count(pts, e) == oracle::two_torsion_bruteforce(e));
      const LPoly l = curve_lpoly(e);
      CHECK(l.eval(1) == static_cast<long long>(pts.size()));
      const ClassData d = class_data(e);
      CHECK(d.cl2 + 2 * d.r == ell_count(l));
      std::uint64_t prod = 1;
      for (auto k : group_structure(pts, e)) prod *= k;
      CHECK(prod == pts.size());
    }
  }
}

TEST_CASE("group law: identity, inverses, associativity, seeded") {
  std::mt19937_64 rng(3303);
  for (const char* s : {"q=5;y2=x3+x+1", "q=7;y2=x3+3x+2", "q=8;y2+xy=x3+(1,1,0)"}) {
    const auto e = WeierstrassCurve::parse(s);
    const auto pts = enumerate_points(e);
    const CurvePoint o = CurvePoint::at_infinity();
    for (int i = 0; i < 200; ++i) {
      const auto& p = pts[rng() % pts.size()];
      const auto& q = pts[rng() % pts.size()];
      const auto& r = pts[rng() % pts.size()];
      CHECK(on_curve(point_add(p, q, e), e));
      CHECK(point_add(p, o, e) == p);
      CHECK(point_add(p, point_neg(p, e), e) == o);
      CHECK(point_add(p, q, e) == point_add(q, p, e));
      CHECK(point_add(point_add(p, q, e), r, e) == point_add(p, point_add(q, r, e), e));
      CHECK(point_mul(pts.size(), p, e) == o);
      CHECK(pts.size() % point_order(p, e) == 0);
    }
  }
}

TEST_CASE("L-polynomial helpers") {
  CHECK(lpoly_from_count(5, 2) == LPoly{{1, 2, 2}});
  CHECK_THROWS_AS(lpoly_from_count(9, 2), std::domain_error);
  CHECK(LPoly{{1, -2, 2}}.eval(-1) == 5);
  CHECK_THROWS(class_data(LPoly{{1, 0, 2}}, 2));
}

TEST_CASE("cs_order is r! |A|^r") {
  CHECK(cs_order(1, 2) == 2);
  CHECK(cs_order(2, 2) == 8);
  CHECK(cs_order(3, 2) == 48);
  CHECK(cs_order(2, 3) == 2 * 16);
  CHECK(cs_order(0, 5) == 1);
}
