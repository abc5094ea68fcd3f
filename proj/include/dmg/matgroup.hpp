#pragma once

// 2x2 matrices over F_q, F_q[t], F_q(t) and F_{q^2}; their Moebius action on
// the projective line; stabilizers of points of P^1(F_q(t)).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dmg/ffield.hpp"
#include "dmg/poly.hpp"

namespace dmg {

inline Fq unit_inverse(Fq x) { return x.inverse(); }
inline Fq2 unit_inverse(Fq2 x) { return x.inverse(); }
inline Poly unit_inverse(const Poly& x) { return x.inverse(); }
inline RatFunc unit_inverse(const RatFunc& x) { return x.inverse(); }

template <class T>
struct Mat2 {
  T a, b, c, d;

  static Mat2 identity(const T& like) { return {like.one(), like.zero(), like.zero(), like.one()}; }
  static Mat2 scalar(const T& k) { return {k, k.zero(), k.zero(), k}; }

  T det() const { return a * d - b * c; }
  Mat2 inverse() const {
    const T k = unit_inverse(det());
    return {d * k, -b * k, -c * k, a * k};
  }
  bool is_upper_triangular() const { return c.is_zero(); }
  bool is_scalar() const { return b.is_zero() && c.is_zero() && a == d; }
  bool is_identity() const { return is_scalar() && a == a.one(); }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  Mat2& operator*=(const Mat2& y) { return *this = *this * y; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend auto operator<=>(const Mat2& x, const Mat2& y)
    requires std::three_way_comparable<T>
  {
    if (auto r = x.a <=> y.a; r != 0) return r;
    if (auto r = x.b <=> y.b; r != 0) return r;
    if (auto r = x.c <=> y.c; r != 0) return r;
    return x.d <=> y.d;
  }
};

using MatFq = Mat2<Fq>;
using MatPoly = Mat2<Poly>;

/// T(a) = I + a E_12.
MatPoly elementary_upper(const Poly& a);
MatPoly elementary_lower(const Poly& a);
MatPoly diag(const Poly& x, const Poly& y);
MatPoly to_poly(const MatFq& m);
/// Entries must be constants.
MatFq to_const(const MatPoly& m);
Mat2<RatFunc> to_ratfunc(const MatPoly& m);
Mat2<Fq2> embed(const MatFq& m, const QuadExt& E);
/// True when det is a nonzero constant.
bool in_gl2(const MatPoly& m);
int max_degree(const MatPoly& m);

template <class T>
std::uint64_t element_order(const Mat2<T>& m, std::uint64_t cap) {
  Mat2<T> x = m;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (x.is_identity()) return k;
    x = x * m;
  }
  throw std::domain_error("matrix order exceeds cap");
}

/// Canonical text "[[a,b],[c,d]]".
template <class T>
std::string format_matrix(const Mat2<T>& m) {
  return "[[" + m.a.str() + "," + m.b.str() + "],[" + m.c.str() + "," + m.d.str() + "]]";
}
/// Splits "[[a,b],[c,d]]" into its four entry texts.
std::vector<std::string> split_matrix_text(std::string_view text);
MatPoly parse_poly_matrix(const Field& F, std::string_view text);
MatFq parse_fq_matrix(const Field& F, std::string_view text);

// ---------------------------------------------------------------- P^1

/// Point [x : y] of the projective line over a field, stored canonically as
/// [x : 1] or [1 : 0].
template <class T>
class ProjPoint {
 public:
  ProjPoint(T x, T y) : x_(std::move(x)), y_(std::move(y)) { canonicalize(); }
  static ProjPoint finite(const T& x) { return ProjPoint(x, x.one()); }
  static ProjPoint infinity(const T& like) { return ProjPoint(like.one(), like.zero()); }

  bool is_infinity() const { return y_.is_zero(); }
  /// Affine coordinate; only meaningful when !is_infinity().
  const T& value() const { return x_; }
  const T& x() const { return x_; }
  const T& y() const { return y_; }
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

  std::string str() const { return is_infinity() ? std::string("inf") : x_.str(); }

 private:
  void canonicalize() {
    if (y_.is_zero()) {
      if (x_.is_zero()) throw std::domain_error("[0:0] is not a projective point");
      x_ = x_.one();
    } else {
      x_ = x_ / y_;
      y_ = y_.one();
    }
  }
  T x_, y_;
};

template <class T>
ProjPoint<T> mobius(const Mat2<T>& m, const ProjPoint<T>& p) {
  return ProjPoint<T>(m.a * p.x() + m.b * p.y(), m.c * p.x() + m.d * p.y());
}

struct AllPointsFixed {};

/// Fixed points of a matrix over a finite field, found as the roots of
/// c x^2 + (d - a) x - b together with infinity when c = 0. A scalar matrix
/// fixes every point and yields AllPointsFixed.
template <class T>
std::variant<AllPointsFixed, std::vector<ProjPoint<T>>> fixed_points(const Mat2<T>& m,
                                                                      const std::vector<T>& field_elements) {
  if (m.is_scalar()) return AllPointsFixed{};
  std::vector<ProjPoint<T>> out;
  for (const T& x : field_elements) {
    if ((m.c * x * x + (m.d - m.a) * x - m.b).is_zero()) out.push_back(ProjPoint<T>::finite(x));
  }
  if (m.c.is_zero()) out.push_back(ProjPoint<T>::infinity(m.a));
  return out;
}

// ---------------------------------------------------------------- stabilizers

using KPoint = ProjPoint<RatFunc>;

/// [alpha, beta, c]: for s != inf the matrix
///   [[alpha + c s, s(beta - alpha) - c s^2], [c, beta - c s]],
/// which is M_s [[beta, c], [0, alpha]] M_s^{-1} with M_s = [[s, 1], [1, 0]];
/// for s = inf the matrix [[alpha, c], [0, beta]].
struct StabParam {
  Fq alpha, beta;
  Poly c;
  friend bool operator==(const StabParam&, const StabParam&) = default;
};

/// Parameters of m in G(s), or nullopt when m does not fix s.
std::optional<StabParam> stab_membership(const MatPoly& m, const KPoint& s);
/// Rebuilds the matrix of a parameter triple by conjugating with M_s.
MatPoly stab_reconstruct(const StabParam& p, const KPoint& s);
/// Unipotent element u(c) = [1, 1, c] of G(s).
MatPoly unipotent(const Poly& c, const KPoint& s);

/// Members of q_s = A cap A s^{-1} cap A s^{-2} up to a degree bound.
struct IdealQs {
  Poly generator;  // monic, least degree nonzero member; zero if none found
  std::vector<Poly> members;
};
IdealQs qs_basis(const KPoint& s, int degree_bound);

/// g = [[0, lambda], [-1, mu]] and g' = [[0, lambda], [1, 0]] with
/// lambda = eps * conj(eps), mu = eps + conj(eps).
struct EllipticStab {
  MatFq g, g_prime;
  Fq lambda, mu;
};
EllipticStab elliptic_stab(const QuadExt& E, Fq2 eps);

}  // namespace dmg
