#pragma once

// Independent brute-force reference computations and seeded generators shared
// by the unit tests and the acceptance runner.

#include <cstdint>
#include <random>
#include <vector>

#include "dmg/curve.hpp"
#include "dmg/ffield.hpp"
#include "dmg/matgroup.hpp"

namespace oracle {

using namespace dmg;

// Exponents a in [1, q^2-1) whose power map is a bijection of F_{q^2}^* that
// fixes F_q^* pointwise, tested on actual field elements.
inline std::uint64_t aut_rel_bruteforce(unsigned q) {
  auto E = QuadExt::make(Field::of_order(q));
  const std::uint64_t n = std::uint64_t{q} * q - 1;
  const Fq2 g = E->generator();
  const Fq2 base_gen = g.pow(static_cast<long long>(q + 1));
  std::uint64_t count = 0;
  for (std::uint64_t a = 1; a < n; ++a) {
    if (mult_order(g.pow(static_cast<long long>(a))) != n) continue;
    if (base_gen.pow(static_cast<long long>(a)) != base_gen) continue;
    ++count;
  }
  return count;
}

inline bool satisfies(const WeierstrassCurve& e, Fq x, Fq y) {
  return y * y + e.a1() * x * y + e.a3() * y == x * x * x + e.a2() * x * x + e.a4() * x + e.a6();
}

// Projective point count: affine solutions plus the point at infinity.
inline std::uint64_t point_count_bruteforce(const WeierstrassCurve& e) {
  std::uint64_t n = 1;
  for (Fq x : e.field().elements())
    for (Fq y : e.field().elements()) n += satisfies(e, x, y);
  return n;
}

// Points equal to their own negative (x, -y - a1 x - a3), plus infinity.
inline std::uint64_t two_torsion_bruteforce(const WeierstrassCurve& e) {
  std::uint64_t n = 1;
  for (Fq x : e.field().elements())
    for (Fq y : e.field().elements())
      if (satisfies(e, x, y) && y == -y - e.a1() * x - e.a3()) ++n;
  return n;
}

inline std::uint64_t gl2_order(std::uint64_t q) { return (q * q - 1) * (q * q - q); }

// |H \ G / K| by sweeping the orbit of each unvisited element.
template <class Mul>
std::size_t double_coset_count_naive(std::size_t group_order, const std::vector<std::uint32_t>& h,
                                     const std::vector<std::uint32_t>& k, Mul mul) {
  std::vector<bool> seen(group_order, false);
  std::size_t count = 0;
  for (std::uint32_t g = 0; g < group_order; ++g) {
    if (seen[g]) continue;
    ++count;
    for (std::uint32_t x : h)
      for (std::uint32_t y : k) seen[mul(mul(x, g), y)] = true;
  }
  return count;
}

// ---------------------------------------------------------------- generators

inline Fq random_fq(const Field& F, std::mt19937_64& rng) {
  return F.elem(static_cast<std::uint32_t>(rng() % F.q()));
}

inline Fq random_unit(const Field& F, std::mt19937_64& rng) {
  return F.elem(static_cast<std::uint32_t>(1 + rng() % (F.q() - 1)));
}

// Uniform over polynomials of degree <= max_degree.
inline Poly random_poly(const Field& F, int max_degree, std::mt19937_64& rng) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(max_degree + 1));
  for (auto& x : c) x = static_cast<std::uint32_t>(rng() % F.q());
  return Poly(F, c);
}

inline MatFq random_gl2_fq(const Field& F, std::mt19937_64& rng) {
  for (;;) {
    MatFq m{random_fq(F, rng), random_fq(F, rng), random_fq(F, rng), random_fq(F, rng)};
    if (!m.det().is_zero()) return m;
  }
}

// Random element of GL2(F_q[t]) with entries of degree <= degree_bound, built
// as a product of a constant invertible matrix and elementary matrices.
inline MatPoly random_gl2(const Field& F, int degree_bound, std::mt19937_64& rng) {
  MatPoly m = to_poly(random_gl2_fq(F, rng));
  const int steps = 1 + static_cast<int>(rng() % 8);
  for (int s = 0; s < steps; ++s) {
    const Poly p = random_poly(F, 1 + static_cast<int>(rng() % 3), rng);
    const MatPoly e = rng() % 2 ? elementary_upper(p) : elementary_lower(p);
    const MatPoly next = rng() % 2 ? m * e : e * m;
    if (max_degree(next) <= degree_bound) m = next;
  }
  return m;
}

inline MatPoly random_upper(const Field& F, int max_degree, std::mt19937_64& rng) {
  const Poly a = random_poly(F, max_degree, rng);
  return {Poly::constant(random_unit(F, rng)), a, Poly(F), Poly::constant(random_unit(F, rng))};
}

}  // namespace oracle
