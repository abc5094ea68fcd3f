#pragma once

// Weierstrass curves over small F_q: rational points, the chord-tangent group
// law, group structure, L-polynomials and the elliptic-point / class-number
// bookkeeping derived from them.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dmg/ffield.hpp"

namespace dmg {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
class WeierstrassCurve {
 public:
  /// Throws std::domain_error for a singular curve.
  WeierstrassCurve(std::shared_ptr<const Field> F, Fq a1, Fq a2, Fq a3, Fq a4, Fq a6);

  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  Fq a1() const { return a1_; }
  Fq a2() const { return a2_; }
  Fq a3() const { return a3_; }
  Fq a4() const { return a4_; }
  Fq a6() const { return a6_; }
  Fq discriminant() const;

  /// Canonical mini-language form, e.g. "q=2;y2+y=x3+x+1".
  std::string str() const;
  static WeierstrassCurve parse(std::string_view text);

  nlohmann::ordered_json to_json() const;
  static WeierstrassCurve from_json(const nlohmann::json& j);

 private:
  std::shared_ptr<const Field> field_;
  Fq a1_, a2_, a3_, a4_, a6_;
};

struct CurvePoint {
  bool infinity = true;
  Fq x, y;

  static CurvePoint at_infinity() { return {}; }
  static CurvePoint affine(Fq x, Fq y) { return {false, x, y}; }
  friend bool operator==(const CurvePoint& p, const CurvePoint& q) {
    return p.infinity == q.infinity && (p.infinity || (p.x == q.x && p.y == q.y));
  }
  std::string str() const;
};

bool on_curve(const CurvePoint& p, const WeierstrassCurve& e);
/// Infinity first, then affine points ordered by (x, y) encodings.
std::vector<CurvePoint> enumerate_points(const WeierstrassCurve& e);
CurvePoint point_neg(const CurvePoint& p, const WeierstrassCurve& e);
CurvePoint point_add(const CurvePoint& p, const CurvePoint& q, const WeierstrassCurve& e);
CurvePoint point_mul(std::uint64_t k, const CurvePoint& p, const WeierstrassCurve& e);
std::uint64_t point_order(const CurvePoint& p, const WeierstrassCurve& e);

/// Invariant factors d_1 | d_2 | ... (each > 1); empty for the trivial group.
std::vector<std::uint64_t> group_structure(const std::vector<CurvePoint>& points, const WeierstrassCurve& e);

/// L(u) = sum coeffs[i] u^i with constant term 1.
struct LPoly {
  std::vector<long long> coeffs{1};

  int genus() const { return static_cast<int>(coeffs.size() - 1) / 2; }
  long long eval(long long u) const;
  std::string str() const;
  friend bool operator==(const LPoly&, const LPoly&) = default;
};

/// 1 + (N - q - 1) u + q u^2; throws if N violates the Hasse bound.
LPoly lpoly_from_count(std::uint64_t n_points, std::uint64_t q);
/// L(-1).
long long ell_count(const LPoly& l);

struct ClassData {
  long long h = 0;       // L(1) = |Cl(A)|
  long long cl2 = 0;     // |Cl(A)_2|
  long long r = 0;       // number of cyclic isolated vertices
  long long ell_eq = 0;  // = cl2
  long long ell_neq = 0; // = 2r

  nlohmann::ordered_json to_json() const;
  friend bool operator==(const ClassData&, const ClassData&) = default;
};

/// Class data from L and the size of the 2-torsion of Cl(A). Only genus <= 1.
ClassData class_data(const LPoly& l, std::uint64_t two_torsion);
/// Enumerates the curve's point group (Cl(A)) and counts its 2-torsion.
ClassData class_data(const WeierstrassCurve& e);
LPoly curve_lpoly(const WeierstrassCurve& e);
std::uint64_t two_torsion_count(const std::vector<CurvePoint>& points, const WeierstrassCurve& e);

/// r! |A|^r.
std::uint64_t cs_order(std::uint64_t r, std::uint64_t q);

}  // namespace dmg
