// Acceptance runner: one PASS/FAIL line per criterion, each with its time
// budget. Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "dmg/cosets.hpp"
#include "dmg/curve.hpp"
#include "dmg/graphs.hpp"
#include "dmg/nagao.hpp"
#include "dmg/reiner.hpp"
#include "dmg/words.hpp"
#include "oracles.hpp"
#include "random_words.hpp"
#include "sample_specs.hpp"

using namespace dmg;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void run(int n, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (out.ok && s > limit_s) out = {false, "over time budget"};
  if (!out.ok) ++failures;
  std::printf("%s %2d %-28s %7.3f s / %4.0f s  %s\n", out.ok ? "PASS" : "FAIL", n, name, s, limit_s,
              out.detail.c_str());
  std::fflush(stdout);
}

Outcome exponent_set() {
  Outcome o;
  int checked = 0;
  for (unsigned q = 2; q <= 49; ++q) {
    if (!is_prime_power(q)) continue;
    const auto formula = aut_rel_count(q), brute = oracle::aut_rel_bruteforce(q);
    o.require(formula == brute, "q=" + std::to_string(q) + ": formula " + std::to_string(formula) + " vs brute force " +
                                    std::to_string(brute));
    ++checked;
  }
  if (o.ok) o.detail = std::to_string(checked) + " prime powers";
  return o;
}

Outcome elliptic_counts() {
  Outcome o;
  struct Case {
    const char* curve;
    LPoly l;
    long long ell, h, cl2, r;
  };
  for (const Case& c : {Case{"q=2;y2+y=x3", LPoly{{1, 0, 2}}, 3, 3, 1, 1},
                        Case{"q=2;y2+y=x3+x+1", LPoly{{1, -2, 2}}, 5, 1, 1, 2}}) {
    const auto e = WeierstrassCurve::parse(c.curve);
    const LPoly l = curve_lpoly(e);
    const ClassData d = class_data(e);
    const std::string tag = std::string(c.curve) + ": ";
    o.require(l == c.l, tag + "L = " + l.str());
    o.require(l == lpoly_from_count(oracle::point_count_bruteforce(e), 2), tag + "L disagrees with brute-force count");
    o.require(ell_count(l) == c.ell, tag + "L(-1) = " + std::to_string(ell_count(l)));
    o.require(d.h == c.h, tag + "h = " + std::to_string(d.h));
    o.require(d.cl2 == c.cl2, tag + "cl2 = " + std::to_string(d.cl2));
    o.require(d.cl2 == static_cast<long long>(oracle::two_torsion_bruteforce(e)), tag + "cl2 disagrees with brute force");
    o.require(d.r == c.r, tag + "r = " + std::to_string(d.r));
    o.require(d.cl2 + 2 * d.r == ell_count(l), tag + "cl2 + 2r != L(-1)");
  }
  if (o.ok) o.detail = "L = 1+2u^2 and 1-2u+2u^2; L(-1) = 3, 5";
  return o;
}

Outcome wreath() {
  Outcome o;
  const auto r22 = cs_wreath_check(2, 2), r32 = cs_wreath_check(3, 2);
  o.require(r22.order == 8 && r22.expected == 8, "(2,2) order " + std::to_string(r22.order));
  o.require(r22.projection_onto, "(2,2) projection not onto S_2");
  o.require(r32.order == 48, "(3,2) order " + std::to_string(r32.order));
  o.require(r32.projection_onto, "(3,2) projection not onto S_3");
  if (o.ok) o.detail = "orders 8 and 48, projections onto";
  return o;
}

Outcome nagao_roundtrip() {
  Outcome o;
  std::mt19937_64 rng(20240401);
  for (unsigned q : {2u, 3u}) {
    auto F = Field::of_order(q);
    for (int i = 0; i < 1000 && o.ok; ++i) {
      const MatPoly m = oracle::random_gl2(*F, 8, rng);
      o.require(max_degree(m) <= 8, "generator exceeded degree 8");
      const AmalgamWord w = decompose(m);
      o.require(evaluate(w, *F) == m, "evaluate(decompose(M)) != M for " + format_matrix(m));
      o.require(decompose(evaluate(w, *F)) == normalize(w), "decompose(evaluate(w)) != normalize(w) on a normal form");

      AmalgamWord raw;
      const int len = 1 + static_cast<int>(rng() % 8);
      for (int k = 0; k < len; ++k) {
        if (rng() % 2) {
          raw.push_back({Factor::G, to_poly(oracle::random_gl2_fq(*F, rng))});
        } else {
          raw.push_back({Factor::B, oracle::random_upper(*F, 4, rng)});
        }
      }
      o.require(decompose(evaluate(raw, *F)) == normalize(raw), "decompose(evaluate(w)) != normalize(w)");
    }
  }
  if (o.ok) o.detail = "1000 matrices and 1000 words each over F_2, F_3";
  return o;
}

Outcome reiner_laws() {
  Outcome o;
  std::mt19937_64 rng(20240402);
  auto F = Field::of_order(2);
  std::vector<MatFq> gl2f2;
  for (unsigned code = 0; code < 16; ++code) {
    const MatFq g{F->elem(code & 1), F->elem((code >> 1) & 1), F->elem((code >> 2) & 1), F->elem(code >> 3)};
    if (!g.det().is_zero()) gl2f2.push_back(g);
  }
  const auto specs = fixtures::reiner_specs_f2();
  for (const auto& s : specs) {
    const LinearAutoSpec inv = reiner_inverse(s);
    for (int i = 0; i < 500 && o.ok; ++i) {
      const MatPoly a = oracle::random_gl2(*F, 6, rng), b = oracle::random_gl2(*F, 6, rng);
      o.require(reiner_apply(s, a * b) == reiner_apply(s, a) * reiner_apply(s, b),
                "not a homomorphism on " + format_matrix(a) + ", " + format_matrix(b));
      o.require(reiner_apply(inv, reiner_apply(s, a)) == a, "inverse does not undo on " + format_matrix(a));
      o.require(reiner_apply(s, reiner_apply(inv, b)) == b, "inverse does not undo on " + format_matrix(b));
      const MatPoly u = oracle::random_upper(*F, 6, rng);
      o.require(reiner_apply(s, u).is_upper_triangular(), "triangular image not triangular");
    }
    for (const MatFq& g : gl2f2) o.require(reiner_apply(s, to_poly(g)) == to_poly(g), "GL2(F_2) element moved");
  }
  if (o.ok) o.detail = std::to_string(specs.size()) + " specs x 500 pairs";
  return o;
}

Outcome fibers() {
  Outcome o;
  auto F = Field::of_order(2);
  const auto specs = fixtures::fiber_specs_f2();
  int comparisons = 0;
  for (const auto& s : specs) {
    for (const char* m : {"t", "t^2", "t^2+t+1"}) {
      const CongruenceIdeal ideal(Poly::parse(*F, m));
      for (int n = 0; n <= 4; ++n) {
        o.require(fiber_by_definition(s, ideal, n) == fiber_closed_form(s, ideal, n),
                  std::string("definition and closed form differ for ") + m + ", N=" + std::to_string(n));
        ++comparisons;
      }
    }
  }
  std::set<std::vector<Poly>> distinct;
  const CongruenceIdeal t2(Poly::parse(*F, "t^2"));
  for (const auto& s : specs) distinct.insert(unipotent_fiber(s, t2, 4));
  o.require(distinct.size() == specs.size(), "fibers for (t^2) are not pairwise distinct: " +
                                                 std::to_string(distinct.size()) + " of " +
                                                 std::to_string(specs.size()));
  if (o.ok) {
    o.detail = std::to_string(specs.size()) + " specs, " + std::to_string(comparisons) + " comparisons, " +
               std::to_string(distinct.size()) + " distinct (t^2) fibers";
  }
  return o;
}

Outcome cusps() {
  Outcome o;
  auto F = Field::of_order(2);
  auto Rt = std::make_shared<const QuotRing>(F, Poly::parse(*F, "t"));
  const auto G = FiniteGroup::polynomial_image(Rt);
  o.require(cusp_count(G, trivial_subgroup(G)) == 3, "trivial image");
  o.require(cusp_count(G, image_cusp_stab(G)) == 2, "Borel image");
  o.require(cusp_count(G, whole_group(G)) == 1, "full image");
  auto Rt2 = std::make_shared<const QuotRing>(F, Poly::parse(*F, "t^2"));
  std::size_t checked = 0;
  for (const FiniteGroup& grp : {G, FiniteGroup::polynomial_image(Rt2), FiniteGroup::general_linear(Rt2)}) {
    const Subgroup k = image_cusp_stab(grp);
    for (const Subgroup& h : all_subgroups(grp)) {
      const auto rep = conj_invariance_check(grp, h);
      o.require(rep.invariant, "conjugation changed a cusp count");
      const auto naive = oracle::double_coset_count_naive(grp.order(), h.elements, k.elements,
                                                          [&](std::uint32_t x, std::uint32_t y) { return grp.mul(x, y); });
      o.require(rep.base_count == naive, "double coset count disagrees with the naive sweep");
      ++checked;
    }
  }
  if (o.ok) o.detail = "3/2/1; " + std::to_string(checked) + " subgroups checked";
  return o;
}

Outcome elliptic_stabilizer() {
  Outcome o;
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    auto E = QuadExt::make(Field::of_order(q));
    const Fq2 eps = E->generator(), bar = frobenius(eps);
    const auto st = elliptic_stab(*E, eps);
    const std::string tag = "q=" + std::to_string(q) + ": ";
    o.require(element_order(st.g, 1000) == std::uint64_t{q} * q - 1, tag + "order of g");
    const auto fp = fixed_points(embed(st.g, *E), E->elements());
    std::set<Fq2> got;
    if (const auto* pts = std::get_if<std::vector<ProjPoint<Fq2>>>(&fp)) {
      for (const auto& p : *pts) got.insert(p.is_infinity() ? E->zero() : p.value());
      o.require(pts->size() == 2, tag + "fixed point count");
    } else {
      o.require(false, tag + "g is scalar");
    }
    o.require(got == std::set<Fq2>{eps, bar}, tag + "fixed points are not {eps, conj(eps)}");
    const auto gp = embed(st.g_prime, *E);
    o.require(mobius(gp, ProjPoint<Fq2>::finite(eps)) == ProjPoint<Fq2>::finite(bar), tag + "g'(eps)");
    o.require(mobius(gp, ProjPoint<Fq2>::finite(bar)) == ProjPoint<Fq2>::finite(eps), tag + "g'(conj eps)");
  }
  if (o.ok) o.detail = "q = 2, 3, 4, 5";
  return o;
}

Outcome dihedral() {
  Outcome o;
  const auto rep = dihedral_cohopf_demo(DihedralVariant::PartialConjugation, 12);
  o.require(rep.index == 3, "index " + std::to_string(rep.index));
  o.require(rep.injective, "not injective on words of length <= 12");
  // Affine model a: x -> -x, b: x -> 1 - x; two reflections x -> k - x
  // generate a subgroup of index |k1 - k2|.
  auto shift = [](const std::string& s) {
    int sign = 1;
    long k = 0;
    for (char c : s) {
      if (c == '1') continue;
      const long add = c == 'a' ? 0 : 1;
      k = -k + add;
      sign = -sign;
    }
    return std::pair{sign, k};
  };
  const auto [sa, ka] = shift(rep.image_a);
  const auto [sb, kb] = shift(rep.image_b);
  o.require(sa == -1 && sb == -1 && std::labs(ka - kb) == 3, "affine model disagrees on the index");
  if (o.ok) o.detail = "a -> " + rep.image_a + ", b -> " + rep.image_b + "; " + std::to_string(rep.words_checked) + " words";
  return o;
}

Outcome coherence() {
  Outcome o;
  const auto d1 = build_ex1cusp();
  o.require(d1.size() == 3, "ex1cusp factor count");
  const auto spikes = d1.spike_factors();
  o.require(spikes.size() == 2, "ex1cusp spike count");
  for (unsigned i : spikes) o.require(d1.factor(i).order == 3, "spike order");
  const auto r1 = class_data(WeierstrassCurve::parse("q=2;y2+y=x3+x+1")).r;
  const auto r3 = class_data(WeierstrassCurve::parse("q=2;y2+y=x3")).r;
  const auto g1 = build_graph_ex1(), g3 = build_graph_ex3();
  o.require(isolated_cyclic(g1).size() == 2 && r1 == 2, "ex1 isolated cyclic vertices vs r");
  o.require(static_cast<long long>(isolated_cyclic(g3).size()) == r3, "ex3 isolated cyclic vertices vs r");
  o.require(aut_cusp_orbit_report(build_ex3cusps()).orbits.size() == 2, "ex3cusps orbit count");
  o.require(validate_serre(g1).rays.size() == 1, "ex1 ray count");
  o.require(validate_serre(g3).rays.size() == 3, "ex3 ray count");
  if (o.ok) o.detail = "spikes 2, r = 2, orbits 2, rays 1 and 3";
  return o;
}

Outcome replacement_identity() {
  Outcome o;
  std::mt19937_64 rng(20240411);
  const auto d = build_ex1cusp();
  const Field& F = *d.factor(0).field;
  const auto spikes = d.spike_factors();
  for (int i = 0; i < 20 && o.ok; ++i) {
    const MatPoly h = oracle::random_gl2(F, 4, rng);
    const MatPoly hi = h.inverse();
    std::vector<AutoGen> gens;
    for (unsigned s : spikes) gens.push_back(PartialConj{0, s, hi});
    gens.push_back(Inner{FreeWord{{0, h}}});
    const Automorphism a = compose_autos(d, gens);
    for (int k = 0; k < 100 && o.ok; ++k) {
      const FreeWord w = fixtures::random_word(d, rng, 8);
      std::vector<Letter> expect;
      for (const Letter& l : w) {
        expect.push_back(l.factor == 0 ? Letter{0, h * std::get<MatPoly>(l.elem) * hi} : l);
      }
      o.require(a.apply(w) == word_reduce(d, expect), "mismatch on " + format_free_word(d, w));
    }
    for (unsigned s : spikes)
      for (std::uint64_t e = 1; e < d.factor(s).order; ++e) {
        const FreeWord x{{s, e}};
        o.require(a.apply(x) == x, "spike letter moved");
      }
  }
  if (o.ok) o.detail = "20 elements h x 100 words";
  return o;
}

}  // namespace

int main() {
  run(1, "exponent set formula", 1, exponent_set);
  run(2, "elliptic counts", 1, elliptic_counts);
  run(3, "wreath order", 5, wreath);
  run(4, "amalgam normal form", 30, nagao_roundtrip);
  run(5, "Reiner automorphism laws", 60, reiner_laws);
  run(6, "unipotent fiber", 10, fibers);
  run(7, "cusp counts", 60, cusps);
  run(8, "elliptic stabilizer", 1, elliptic_stabilizer);
  run(9, "D_inf index and injectivity", 5, dihedral);
  run(10, "example coherence", 1, coherence);
  run(11, "replacement identity", 30, replacement_identity);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
