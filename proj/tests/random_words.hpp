#pragma once

// Seeded random reduced words in a declared free product.

#include <random>

#include "dmg/words.hpp"
#include "oracles.hpp"

namespace fixtures {

using namespace dmg;

inline FactorElem random_elem(const CentralAmalgamDecl& d, unsigned f, std::mt19937_64& rng) {
  const FactorDecl& fd = d.factor(f);
  for (;;) {
    FactorElem x;
    switch (fd.kind) {
      case FactorKind::FiniteCyclic:
        x = rng() % fd.order;
        break;
      case FactorKind::MatrixBacked:
        x = fd.constant_entries ? to_poly(oracle::random_gl2_fq(*fd.field, rng)) : oracle::random_gl2(*fd.field, 3, rng);
        break;
      case FactorKind::Vector:
        x = oracle::random_poly(*fd.field, 3, rng);
        break;
    }
    if (!d.is_identity(f, x)) return x;
  }
}

inline FreeWord random_word(const CentralAmalgamDecl& d, std::mt19937_64& rng, int max_letters) {
  std::vector<Letter> letters;
  const int n = static_cast<int>(rng() % static_cast<std::uint64_t>(max_letters + 1));
  for (int i = 0; i < n; ++i) {
    const auto f = static_cast<unsigned>(rng() % d.size());
    letters.push_back({f, random_elem(d, f, rng)});
  }
  return word_reduce(d, letters);
}

}  // namespace fixtures
