#pragma once

// Polynomials in F_q[t] and reduced fractions in F_q(t).

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dmg/ffield.hpp"

namespace dmg {

class Poly {
 public:
  Poly() = default;
  explicit Poly(const Field& F) : field_(&F) {}
  /// Coefficients are field encodings, constant term first.
  Poly(const Field& F, std::vector<std::uint32_t> coeffs);
  static Poly constant(Fq c);
  static Poly monomial(const Field& F, unsigned k);
  static Poly monomial(Fq c, unsigned k);
  /// Inverse of code(): the polynomial of degree < len whose base-q digits are `code`.
  static Poly from_code(const Field& F, std::uint64_t code, unsigned len);

  const Field& field() const { return *field_; }
  const Field* field_ptr() const { return field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Fq coeff(unsigned k) const { return {field_, k < c_.size() ? c_[k] : 0u}; }
  Fq lead() const { return coeff(c_.empty() ? 0 : static_cast<unsigned>(c_.size() - 1)); }
  Fq constant_term() const { return coeff(0); }
  const std::vector<std::uint32_t>& raw() const { return c_; }
  /// Base-q integer of the coefficients (constant term least significant).
  std::uint64_t code() const;

  Poly zero() const { return Poly(*field_); }
  Poly one() const { return constant(field_->one()); }
  Poly monic() const;
  Fq eval(Fq x) const;
  Poly inverse() const;  // unit of F_q[t] only
  Poly scaled(Fq k) const;
  Poly shifted(unsigned k) const;  // times t^k

  Poly operator-() const;
  Poly& operator+=(const Poly& b);
  Poly& operator-=(const Poly& b);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, Fq k) { return a.scaled(k); }
  friend Poly operator*(Fq k, const Poly& a) { return a.scaled(k); }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  /// Quotient and remainder; throws on division by zero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }
  bool divides(const Poly& a) const;  // *this | a

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  /// Orders by degree, then coefficients from the top.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

  /// Canonical text "t^2+t+1"; coefficients of non-prime fields are written
  /// in parentheses, e.g. "(0,1)t+1".
  std::string str() const;
  static Poly parse(const Field& F, std::string_view text);

 private:
  void trim();
  const Field* field_ = nullptr;
  std::vector<std::uint32_t> c_;
};

Poly gcd(Poly a, Poly b);  // monic, gcd(0,0) = 0
/// Every polynomial of degree <= max_degree, in code() order.
std::vector<Poly> all_polys(const Field& F, int max_degree);

/// Reduced fraction num/den in F_q(t), den monic.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const Field& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  RatFunc zero() const { return RatFunc(num_.zero()); }
  RatFunc one() const { return RatFunc(num_.one()); }
  RatFunc inverse() const;

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  std::string str() const;
  /// "f" or "f/g" with polynomial texts.
  static RatFunc parse(const Field& F, std::string_view text);

 private:
  void reduce();
  Poly num_, den_;
};

}  // namespace dmg
