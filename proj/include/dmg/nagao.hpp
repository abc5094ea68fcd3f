#pragma once

// Normal forms in GL2(F_q[t]) = GL2(F_q) *_{B2(F_q)} B2(F_q[t]).
//
// A canonical word is c * t_1 * ... * t_n with c in B2(F_q) and t_i
// nontrivial right-coset representatives of B2(F_q), alternating between the
// two factors. The representatives are
//   GL2(F_q):    w u(x) = [[0,1],[1,x]],  x in F_q
//   B2(F_q[t]):  u(a)   = [[1,a],[0,1]],  a(0) = 0
// In the printed word c is folded into the first letter; a word with no
// representatives is empty (identity) or the single G-letter c.

#include <string>
#include <string_view>
#include <vector>

#include "dmg/matgroup.hpp"

namespace dmg {

enum class Factor { G, B };

struct AmalgamLetter {
  Factor factor;
  MatPoly m;
  friend bool operator==(const AmalgamLetter&, const AmalgamLetter&) = default;
};

using AmalgamWord = std::vector<AmalgamLetter>;

bool in_finite_borel(const MatPoly& m);   // B2(F_q)
bool in_factor(const MatPoly& m, Factor f);

/// Splits an element of a factor as c * t with c in B2(F_q) and t the
/// coset representative (identity when m lies in B2(F_q)).
std::pair<MatPoly, MatPoly> split_coset(const MatPoly& m, Factor f);

/// Canonical word of a matrix of GL2(F_q[t]) via Euclidean reduction of the
/// first column followed by normalize().
AmalgamWord decompose(const MatPoly& m);
/// Raw Euclidean factorization B(x_1) w B(x_2) w ... w T, before normalization.
AmalgamWord euclid_word(const MatPoly& m);
/// Ordered product; `F` supplies the identity of the empty word.
MatPoly evaluate(const AmalgamWord& w, const Field& F);
/// Canonical form of an arbitrary letter sequence.
AmalgamWord normalize(const AmalgamWord& w);
AmalgamWord inverse(const AmalgamWord& w);
/// True when w has the shape normalize() produces.
bool is_canonical(const AmalgamWord& w);

/// "G:[[0,1],[1,0]];B:[[1,t],[0,1]]"; the empty word is "".
std::string format_word(const AmalgamWord& w);
AmalgamWord parse_word(const Field& F, std::string_view text);

}  // namespace dmg
