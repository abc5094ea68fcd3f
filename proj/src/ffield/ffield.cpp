#include "dmg/ffield.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dmg {

namespace {

constexpr std::uint64_t kMaxOrder = 1u << 16;

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Dense polynomials over F_p as coefficient vectors, constant term first.
using PPoly = std::vector<std::uint32_t>;

void trim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, unsigned p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

PPoly pmod(PPoly a, const PPoly& m, unsigned p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t f = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - f * m[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

PPoly decode(std::uint64_t code, unsigned p, unsigned len) {
  PPoly c(len);
  for (unsigned i = 0; i < len; ++i) {
    c[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return c;
}

bool irreducible(const PPoly& f, unsigned p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= n / 2; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      PPoly g = decode(code, p, d);
      g.push_back(1);
      if (pmod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<unsigned, unsigned> prime_power_split(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  unsigned n = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++n;
  }
  if (r != 1) throw std::invalid_argument("not a prime power: " + std::to_string(q));
  return {static_cast<unsigned>(p), n};
}

bool is_prime_power(std::uint64_t q) {
  try {
    prime_power_split(q);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint64_t> aut_rel_enumerate(std::uint64_t q) {
  prime_power_split(q);
  const std::uint64_t m = q * q - 1;
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 1; a < m; ++a) {
    if (std::gcd(a, m) == 1 && (a - 1) % (q - 1) == 0) out.push_back(a);
  }
  return out;
}

std::uint64_t aut_rel_count(std::uint64_t q) {
  prime_power_split(q);
  return q % 2 == 1 ? 2 * euler_phi(q + 1) : euler_phi(q + 1);
}

// ---------------------------------------------------------------- Field

std::shared_ptr<const Field> Field::make(unsigned p, unsigned n) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
  if (n == 0) throw std::invalid_argument("field degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field order exceeds 2^16");
  }

  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->n_ = n;
  f->q_ = static_cast<unsigned>(q);

  if (n == 1) {
    f->modulus_ = {0, 1};
  } else {
    for (std::uint64_t code = 0;; ++code) {
      PPoly cand = decode(code, p, n);
      cand.push_back(1);
      if (cand[0] != 0 && irreducible(cand, p)) {
        f->modulus_ = cand;
        break;
      }
    }
  }

  // Find the least element of order q-1 and build exp/log tables from it.
  const std::uint32_t order = f->q_ - 1;
  auto mul_slow = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (n == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    PPoly x = decode(a, p, n), y = decode(b, p, n), z(2 * n, 0);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j)
        z[i + j] = static_cast<std::uint32_t>((z[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p);
    z = pmod(z, f->modulus_, p);
    std::uint32_t code = 0;
    for (std::size_t i = z.size(); i-- > 0;) code = code * p + z[i];
    return code;
  };
  f->exp_.assign(order, 0);
  f->log_.assign(f->q_, 0);
  for (std::uint32_t g = 1; g < f->q_; ++g) {
    std::uint32_t x = 1;
    bool ok = true;
    for (std::uint32_t k = 0; k < order; ++k) {
      if (k > 0 && x == 1) {
        ok = false;
        break;
      }
      f->exp_[k] = x;
      x = mul_slow(x, g);
    }
    if (ok && x == 1) {
      f->generator_ = g;
      break;
    }
  }
  for (std::uint32_t k = 0; k < order; ++k) f->log_[f->exp_[k]] = k;
  return f;
}

std::shared_ptr<const Field> Field::of_order(unsigned q) {
  auto [p, n] = prime_power_split(q);
  return make(p, n);
}

Fq Field::elem(std::uint32_t encoded) const {
  if (encoded >= q_) throw std::invalid_argument("field element encoding out of range");
  return {this, encoded};
}

Fq Field::from_int(long long k) const {
  long long r = k % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return {this, static_cast<std::uint32_t>(r)};
}

std::vector<Fq> Field::elements() const {
  std::vector<Fq> out;
  out.reserve(q_);
  for (std::uint32_t v = 0; v < q_; ++v) out.push_back({this, v});
  return out;
}

std::vector<std::uint32_t> Field::coeffs(Fq x) const { return decode(x.v, p_, n_); }

Fq Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
  if (c.size() != n_) throw std::invalid_argument("field element needs exactly n coefficients");
  std::uint32_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
    code = code * p_ + c[i];
  }
  return {this, code};
}

std::string Field::format(Fq x) const {
  const auto c = coeffs(x);
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

Fq Field::parse(std::string_view text) const {
  std::vector<std::uint32_t> c;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw std::invalid_argument("malformed field element: '" + std::string(text) + "'");
    std::size_t pos = 0;
    unsigned long v = std::stoul(cur, &pos);
    if (pos != cur.size()) throw std::invalid_argument("malformed field element: '" + std::string(text) + "'");
    c.push_back(static_cast<std::uint32_t>(v));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ' ') continue;
    if (ch == ',') {
      flush();
    } else if (ch >= '0' && ch <= '9') {
      cur += ch;
    } else {
      throw std::invalid_argument("malformed field element: '" + std::string(text) + "'");
    }
  }
  flush();
  // A single integer is accepted as an element of the prime field.
  if (c.size() == 1 && n_ > 1) {
    if (c[0] >= p_) throw std::invalid_argument("coefficient out of range");
    c.resize(n_, 0);
  }
  return from_coeffs(c);
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (n_ == 1) {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t r = 0, scale = 1;
  for (unsigned i = 0; i < n_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (n_ == 1) return a >= b ? a - b : a + p_ - b;
  std::uint32_t r = 0, scale = 1;
  for (unsigned i = 0; i < n_; ++i) {
    r += ((a % p_ + p_ - b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("division by zero in F_q");
  const std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

// ---------------------------------------------------------------- Fq

Fq operator+(Fq a, Fq b) { return {a.field, a.field->add(a.v, b.v)}; }
Fq operator-(Fq a, Fq b) { return {a.field, a.field->sub(a.v, b.v)}; }
Fq operator*(Fq a, Fq b) { return {a.field, a.field->mul(a.v, b.v)}; }
Fq operator/(Fq a, Fq b) { return {a.field, a.field->mul(a.v, a.field->inv(b.v))}; }
Fq Fq::operator-() const { return {field, field->sub(0, v)}; }
Fq Fq::inverse() const { return {field, field->inv(v)}; }

Fq Fq::pow(long long e) const {
  if (v == 0) {
    if (e <= 0) throw std::domain_error("zero to a non-positive power");
    return *this;
  }
  const long long order = field->q() - 1;
  long long k = (static_cast<long long>(field->log(v)) * (e % order)) % order;
  if (k < 0) k += order;
  Fq g = field->generator();
  Fq r = one();
  // Exponentiate the generator; the exp table is private, so square-and-multiply.
  for (long long b = k; b; b >>= 1) {
    if (b & 1) r *= g;
    g *= g;
  }
  return r;
}

std::string Fq::str() const { return field->format(*this); }

std::uint64_t mult_order(Fq x) {
  if (x.is_zero()) throw std::domain_error("zero has no multiplicative order");
  const std::uint64_t n = x.field->q() - 1;
  return n / std::gcd<std::uint64_t>(n, x.field->log(x.v));
}

// ---------------------------------------------------------------- QuadExt

std::shared_ptr<const QuadExt> QuadExt::make(std::shared_ptr<const Field> base) {
  std::shared_ptr<QuadExt> e(new QuadExt());
  const Field& F = *base;
  const std::uint32_t q = F.q();
  for (std::uint64_t code = 0; code < static_cast<std::uint64_t>(q) * q; ++code) {
    const Fq c = F.elem(static_cast<std::uint32_t>(code % q));
    const Fq b = F.elem(static_cast<std::uint32_t>(code / q));
    bool has_root = false;
    for (Fq x : F.elements()) {
      if ((x * x + b * x + c).is_zero()) {
        has_root = true;
        break;
      }
    }
    if (!has_root) {
      e->b_ = b.v;
      e->c_ = c.v;
      break;
    }
  }
  e->base_ = std::move(base);
  return e;
}

Fq2 QuadExt::generator() const {
  const std::uint64_t order = static_cast<std::uint64_t>(q()) * q() - 1;
  for (Fq2 x : elements()) {
    if (!x.is_zero() && mult_order(x) == order) return x;
  }
  throw std::logic_error("F_{q^2} has no generator");
}

std::vector<Fq2> QuadExt::elements() const {
  std::vector<Fq2> out;
  const std::uint32_t q = this->q();
  out.reserve(static_cast<std::size_t>(q) * q);
  for (std::uint32_t a1 = 0; a1 < q; ++a1)
    for (std::uint32_t a0 = 0; a0 < q; ++a0) out.push_back({this, a0, a1});
  return out;
}

Fq2 operator+(Fq2 x, Fq2 y) {
  const Field& F = x.ext->base();
  return {x.ext, F.add(x.a0, y.a0), F.add(x.a1, y.a1)};
}

Fq2 operator-(Fq2 x, Fq2 y) {
  const Field& F = x.ext->base();
  return {x.ext, F.sub(x.a0, y.a0), F.sub(x.a1, y.a1)};
}

Fq2 Fq2::operator-() const { return zero() - *this; }

Fq2 operator*(Fq2 x, Fq2 y) {
  // (x0 + x1 s)(y0 + y1 s) with s^2 = -b s - c.
  const QuadExt& E = *x.ext;
  const Fq x0 = E.coord0(x), x1 = E.coord1(x), y0 = E.coord0(y), y1 = E.coord1(y);
  const Fq hi = x1 * y1;
  const Fq r0 = x0 * y0 - hi * E.c();
  const Fq r1 = x0 * y1 + x1 * y0 - hi * E.b();
  return E.make(r0, r1);
}

Fq2 Fq2::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in F_{q^2}");
  // x^{-1} = conj(x) / N(x).
  const Fq2 c = frobenius(*this);
  const Fq n = norm(*this);
  return c * ext->embed(n.inverse());
}

Fq2 Fq2::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Fq2 r = one(), b = *this;
  for (; e; e >>= 1) {
    if (e & 1) r = r * b;
    b = b * b;
  }
  return r;
}

std::string Fq2::str() const {
  const QuadExt& E = *ext;
  return "(" + E.coord0(*this).str() + ")+(" + E.coord1(*this).str() + ")s";
}

Fq2 frobenius(Fq2 x) { return x.pow(x.ext->q()); }

Fq norm(Fq2 x) {
  const Fq2 n = x * frobenius(x);
  if (!n.in_base()) throw std::logic_error("norm left F_q");
  return x.ext->coord0(n);
}

Fq trace(Fq2 x) {
  const Fq2 t = x + frobenius(x);
  if (!t.in_base()) throw std::logic_error("trace left F_q");
  return x.ext->coord0(t);
}

std::uint64_t mult_order(Fq2 x) {
  if (x.is_zero()) throw std::domain_error("zero has no multiplicative order");
  const std::uint64_t n = static_cast<std::uint64_t>(x.ext->q()) * x.ext->q() - 1;
  std::uint64_t best = n;
  // Strip prime factors of n while x^(best/p) stays 1.
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m || m > 1; ++p) {
    if (p * p > m) p = m;
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    while (best % p == 0 && x.pow(static_cast<long long>(best / p)) == x.one()) best /= p;
  }
  return best;
}

}  // namespace dmg
