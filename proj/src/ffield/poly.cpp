#include "dmg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace dmg {

Poly::Poly(const Field& F, std::vector<std::uint32_t> coeffs) : field_(&F), c_(std::move(coeffs)) {
  for (auto v : c_)
    if (v >= F.q()) throw std::invalid_argument("polynomial coefficient out of range");
  trim();
}

Poly Poly::constant(Fq c) {
  Poly r(*c.field);
  if (!c.is_zero()) r.c_.push_back(c.v);
  return r;
}

Poly Poly::monomial(const Field& F, unsigned k) { return monomial(F.one(), k); }

Poly Poly::monomial(Fq c, unsigned k) {
  Poly r(*c.field);
  if (!c.is_zero()) {
    r.c_.assign(k + 1, 0);
    r.c_[k] = c.v;
  }
  return r;
}

Poly Poly::from_code(const Field& F, std::uint64_t code, unsigned len) {
  Poly r(F);
  r.c_.resize(len);
  for (unsigned i = 0; i < len; ++i) {
    r.c_[i] = static_cast<std::uint32_t>(code % F.q());
    code /= F.q();
  }
  r.trim();
  return r;
}

std::uint64_t Poly::code() const {
  std::uint64_t r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * field_->q() + c_[i];
  return r;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inverse());
}

Fq Poly::eval(Fq x) const {
  Fq r = field_->zero();
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + Fq{field_, c_[i]};
  return r;
}

Poly Poly::inverse() const {
  if (degree() != 0) throw std::domain_error("polynomial " + str() + " is not a unit of F_q[t]");
  return constant(lead().inverse());
}

Poly Poly::scaled(Fq k) const {
  if (k.is_zero()) return zero();
  Poly r = *this;
  for (auto& v : r.c_) v = field_->mul(v, k.v);
  return r;
}

Poly Poly::shifted(unsigned k) const {
  if (is_zero()) return *this;
  Poly r = *this;
  r.c_.insert(r.c_.begin(), k, 0);
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& v : r.c_) v = field_->sub(0, v);
  return r;
}

Poly& Poly::operator+=(const Poly& b) {
  if (!field_) field_ = b.field_;
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), 0);
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = field_->add(c_[i], b.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& b) {
  if (!field_) field_ = b.field_;
  if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), 0);
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = field_->sub(c_[i], b.c_[i]);
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  const Field* F = a.field_ ? a.field_ : b.field_;
  Poly r(*F);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      r.c_[i + j] = F->add(r.c_[i + j], F->mul(a.c_[i], b.c_[j]));
    }
  }
  r.trim();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly quot(*field_), rem = *this;
  if (rem.degree() < d.degree()) return {quot, rem};
  quot.c_.assign(static_cast<std::size_t>(rem.degree() - d.degree() + 1), 0);
  const std::uint32_t lead_inv = field_->inv(d.c_.back());
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree() - d.degree());
    const std::uint32_t f = field_->mul(rem.c_.back(), lead_inv);
    quot.c_[shift] = f;
    for (std::size_t i = 0; i < d.c_.size(); ++i) {
      rem.c_[shift + i] = field_->sub(rem.c_[shift + i], field_->mul(f, d.c_[i]));
    }
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

bool Poly::divides(const Poly& a) const {
  if (is_zero()) return a.is_zero();
  return (a % *this).is_zero();
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string s;
  const bool prime_field = field_->n() == 1;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const std::uint32_t v = c_[k];
    if (v == 0) continue;
    if (!s.empty()) s += '+';
    const bool unit_coeff = v == 1 && k > 0;
    if (!unit_coeff) {
      s += prime_field ? std::to_string(v) : "(" + field_->format({field_, v}) + ")";
    }
    if (k >= 1) s += 't';
    if (k >= 2) s += '^' + std::to_string(k);
  }
  return s;
}

Poly Poly::parse(const Field& F, std::string_view text) {
  std::string src;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) src += ch;
  auto fail = [&]() -> Poly { throw std::invalid_argument("malformed polynomial: '" + std::string(text) + "'"); };
  if (src.empty()) fail();

  Poly result(F);
  std::size_t i = 0;
  bool first = true;
  while (i < src.size()) {
    bool negate = false;
    if (src[i] == '+' || src[i] == '-') {
      negate = src[i] == '-';
      ++i;
    } else if (!first) {
      fail();
    }
    first = false;

    Fq coeff = F.one();
    bool have_coeff = false;
    if (i < src.size() && src[i] == '(') {
      const std::size_t close = src.find(')', i);
      if (close == std::string::npos) fail();
      coeff = F.parse(src.substr(i + 1, close - i - 1));
      i = close + 1;
      have_coeff = true;
    } else if (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      coeff = F.from_int(std::stoll(src.substr(i, j - i)));
      i = j;
      have_coeff = true;
    }
    if (i < src.size() && src[i] == '*') {
      if (!have_coeff) fail();
      ++i;
      if (i >= src.size() || src[i] != 't') fail();
    }
    unsigned k = 0;
    if (i < src.size() && src[i] == 't') {
      ++i;
      k = 1;
      if (i < src.size() && src[i] == '^') {
        ++i;
        std::size_t j = i;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
        if (j == i) fail();
        k = static_cast<unsigned>(std::stoul(src.substr(i, j - i)));
        i = j;
      }
    } else if (!have_coeff) {
      fail();
    }
    Poly term = Poly::monomial(coeff, k);
    result += negate ? -term : term;
  }
  return result;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<Poly> all_polys(const Field& F, int max_degree) {
  std::vector<Poly> out;
  if (max_degree < 0) {
    out.emplace_back(F);
    return out;
  }
  std::uint64_t count = 1;
  for (int i = 0; i <= max_degree; ++i) count *= F.q();
  out.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code)
    out.push_back(Poly::from_code(F, code, static_cast<unsigned>(max_degree + 1)));
  return out;
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(num_.one()) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = num_.one();
    return;
  }
  const Poly g = gcd(num_, den_);
  num_ = num_ / g;
  den_ = den_ / g;
  const Fq l = den_.lead();
  if (!l.is_one()) {
    num_ = num_.scaled(l.inverse());
    den_ = den_.scaled(l.inverse());
  }
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero in F_q(t)");
  return RatFunc(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc RatFunc::parse(const Field& F, std::string_view text) {
  // Split at a top-level '/', ignoring parentheses used for grouping.
  int depth = 0;
  std::size_t slash = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '/' && depth == 0) slash = i;
  }
  auto strip = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
      // Only strip if the parentheses enclose the whole group and the inner
      // text is not a bare field-element literal like "(0,1)".
      int d = 0;
      bool encloses = true;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++d;
        if (s[i] == ')') --d;
        if (d == 0 && i + 1 < s.size()) encloses = false;
      }
      if (encloses && s.find_first_of("t+-", 1) < s.size() - 1) s = s.substr(1, s.size() - 2);
    }
    return s;
  };
  if (slash == std::string_view::npos) return RatFunc(Poly::parse(F, strip(text)));
  return RatFunc(Poly::parse(F, strip(text.substr(0, slash))), Poly::parse(F, strip(text.substr(slash + 1))));
}

}  // namespace dmg
