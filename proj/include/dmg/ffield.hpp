#pragma once

// Exact arithmetic in small finite fields F_q (q = p^n <= 2^16) and in the
// quadratic extension F_{q^2}.
//
// A Field is an immutable context object shared through std::shared_ptr.
// Elements (Fq, Fq2) carry a raw pointer to their context, so the owning
// shared_ptr must outlive every element created from it.

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dmg {

class Field;
class QuadExt;

/// Element of F_q, stored as the integer encoding sum c_i p^i of its
/// polynomial-basis coefficients.
struct Fq {
  const Field* field = nullptr;
  std::uint32_t v = 0;

  bool is_zero() const { return v == 0; }
  bool is_one() const { return v == 1; }
  Fq zero() const { return {field, 0}; }
  Fq one() const { return {field, 1}; }

  Fq operator-() const;
  Fq inverse() const;
  Fq pow(long long e) const;
  std::string str() const;

  friend Fq operator+(Fq a, Fq b);
  friend Fq operator-(Fq a, Fq b);
  friend Fq operator*(Fq a, Fq b);
  friend Fq operator/(Fq a, Fq b);
  Fq& operator+=(Fq b) { return *this = *this + b; }
  Fq& operator-=(Fq b) { return *this = *this - b; }
  Fq& operator*=(Fq b) { return *this = *this * b; }

  friend bool operator==(Fq a, Fq b) { return a.v == b.v; }
  friend std::strong_ordering operator<=>(Fq a, Fq b) { return a.v <=> b.v; }
};

class Field {
 public:
  /// Builds F_{p^n}. The modulus is the monic irreducible of degree n whose
  /// lower coefficients, read as a base-p integer, are least.
  static std::shared_ptr<const Field> make(unsigned p, unsigned n);
  /// Builds F_q for a prime power q.
  static std::shared_ptr<const Field> of_order(unsigned q);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  unsigned p() const { return p_; }
  unsigned n() const { return n_; }
  unsigned q() const { return q_; }
  /// Coefficients of the modulus, constant term first, length n+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Fq zero() const { return {this, 0}; }
  Fq one() const { return {this, 1}; }
  Fq elem(std::uint32_t encoded) const;
  /// Image of an integer under Z -> F_p -> F_q.
  Fq from_int(long long k) const;
  /// Least-encoded generator of F_q^*.
  Fq generator() const { return {this, generator_}; }
  std::vector<Fq> elements() const;

  std::vector<std::uint32_t> coeffs(Fq x) const;
  Fq from_coeffs(const std::vector<std::uint32_t>& c) const;

  /// Canonical text: little-endian coefficient list, "1,0,1".
  std::string format(Fq x) const;
  Fq parse(std::string_view text) const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  std::uint32_t inv(std::uint32_t a) const;
  /// Discrete log base generator(); a must be nonzero.
  std::uint32_t log(std::uint32_t a) const { return log_[a]; }

 private:
  Field() = default;

  unsigned p_ = 0, n_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::uint32_t generator_ = 1;
};

/// Element a0 + a1*s of F_{q^2} = F_q[s]/(s^2 + b s + c).
struct Fq2 {
  const QuadExt* ext = nullptr;
  std::uint32_t a0 = 0, a1 = 0;

  bool is_zero() const { return a0 == 0 && a1 == 0; }
  Fq2 zero() const { return {ext, 0, 0}; }
  Fq2 one() const { return {ext, 1, 0}; }
  bool in_base() const { return a1 == 0; }

  Fq2 operator-() const;
  Fq2 inverse() const;
  Fq2 pow(long long e) const;
  std::string str() const;

  friend Fq2 operator+(Fq2 x, Fq2 y);
  friend Fq2 operator-(Fq2 x, Fq2 y);
  friend Fq2 operator*(Fq2 x, Fq2 y);
  friend Fq2 operator/(Fq2 x, Fq2 y) { return x * y.inverse(); }

  friend bool operator==(Fq2 x, Fq2 y) { return x.a0 == y.a0 && x.a1 == y.a1; }
  friend auto operator<=>(Fq2 x, Fq2 y) {
    if (auto c = x.a1 <=> y.a1; c != 0) return c;
    return x.a0 <=> y.a0;
  }
};

class QuadExt {
 public:
  static std::shared_ptr<const QuadExt> make(std::shared_ptr<const Field> base);

  QuadExt(const QuadExt&) = delete;
  QuadExt& operator=(const QuadExt&) = delete;

  const Field& base() const { return *base_; }
  const std::shared_ptr<const Field>& base_ptr() const { return base_; }
  unsigned q() const { return base_->q(); }
  /// s^2 + b s + c is the defining polynomial.
  Fq b() const { return base_->elem(b_); }
  Fq c() const { return base_->elem(c_); }

  Fq2 embed(Fq x) const { return {this, x.v, 0}; }
  Fq2 make(Fq a0, Fq a1) const { return {this, a0.v, a1.v}; }
  Fq2 zero() const { return {this, 0, 0}; }
  Fq2 one() const { return {this, 1, 0}; }
  /// Least generator of F_{q^2}^*, ordered by (a1, a0).
  Fq2 generator() const;
  std::vector<Fq2> elements() const;

  Fq coord0(Fq2 x) const { return base_->elem(x.a0); }
  Fq coord1(Fq2 x) const { return base_->elem(x.a1); }

 private:
  QuadExt() = default;
  std::shared_ptr<const Field> base_;
  std::uint32_t b_ = 0, c_ = 0;
};

/// x -> x^q.
Fq2 frobenius(Fq2 x);
Fq norm(Fq2 x);
Fq trace(Fq2 x);
/// Multiplicative order of a nonzero element.
std::uint64_t mult_order(Fq2 x);
std::uint64_t mult_order(Fq x);

bool is_prime(std::uint64_t n);
/// Returns (p, n) with q = p^n, or throws std::invalid_argument.
std::pair<unsigned, unsigned> prime_power_split(std::uint64_t q);
bool is_prime_power(std::uint64_t q);
std::uint64_t euler_phi(std::uint64_t n);

/// Exponents a mod q^2-1 with gcd(a, q^2-1) = 1 and a = 1 mod q-1, sorted.
/// These are the power maps of F_{q^2}^* fixing F_q^* pointwise.
std::vector<std::uint64_t> aut_rel_enumerate(std::uint64_t q);
/// 2 phi(q+1) for odd q, phi(q+1) for even q.
std::uint64_t aut_rel_count(std::uint64_t q);

}  // namespace dmg
