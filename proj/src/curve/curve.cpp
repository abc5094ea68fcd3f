#include "dmg/curve.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace dmg {

WeierstrassCurve::WeierstrassCurve(std::shared_ptr<const Field> F, Fq a1, Fq a2, Fq a3, Fq a4, Fq a6)
    : field_(std::move(F)), a1_(a1), a2_(a2), a3_(a3), a4_(a4), a6_(a6) {
  for (Fq* c : {&a1_, &a2_, &a3_, &a4_, &a6_}) c->field = field_.get();
  if (discriminant().is_zero()) throw std::domain_error("singular curve " + str());
}

Fq WeierstrassCurve::discriminant() const {
  const Field& F = *field_;
  auto k = [&](long long n) { return F.from_int(n); };
  const Fq b2 = a1_ * a1_ + k(4) * a2_;
  const Fq b4 = k(2) * a4_ + a1_ * a3_;
  const Fq b6 = a3_ * a3_ + k(4) * a6_;
  const Fq b8 = a1_ * a1_ * a6_ + k(4) * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
  return -(b2 * b2 * b8) - k(8) * b4 * b4 * b4 - k(27) * b6 * b6 + k(9) * b2 * b4 * b6;
}

namespace {

std::string coeff_text(Fq c) {
  if (c.field->n() == 1) return std::to_string(c.v);
  return "(" + c.str() + ")";
}

void append_term(std::string& s, Fq c, const char* mono) {
  if (c.is_zero()) return;
  if (!s.empty()) s += '+';
  if (!c.is_one() || *mono == '\0') s += coeff_text(c);
  s += mono;
}

}  // namespace

std::string WeierstrassCurve::str() const {
  std::string lhs = "y2", rhs = "x3";
  append_term(lhs, a1_, "xy");
  append_term(lhs, a3_, "y");
  append_term(rhs, a2_, "x2");
  append_term(rhs, a4_, "x");
  append_term(rhs, a6_, "");
  return "q=" + std::to_string(field_->q()) + ";" + lhs + "=" + rhs;
}

WeierstrassCurve WeierstrassCurve::parse(std::string_view text) {
  std::string src;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) src += ch;
  auto fail = [&](const std::string& why) -> WeierstrassCurve {
    throw std::invalid_argument("malformed curve '" + std::string(text) + "': " + why);
  };
  if (src.rfind("q=", 0) != 0) fail("expected leading q=<prime power>");
  const std::size_t semi = src.find(';');
  if (semi == std::string::npos) fail("expected ';' after q");
  unsigned long q = 0;
  try {
    std::size_t pos = 0;
    q = std::stoul(src.substr(2, semi - 2), &pos);
    if (pos != semi - 2) fail("bad q");
  } catch (const std::logic_error&) {
    fail("bad q");
  }
  if (!is_prime_power(q) || q > (1u << 16)) fail("q must be a prime power <= 2^16");
  auto F = Field::of_order(static_cast<unsigned>(q));

  const std::string eq = src.substr(semi + 1);
  const std::size_t eqpos = eq.find('=');
  if (eqpos == std::string::npos || eq.find('=', eqpos + 1) != std::string::npos) fail("expected one '='");

  // Collects monomial -> coefficient for one side of the equation.
  auto parse_side = [&](const std::string& side) {
    std::map<std::string, Fq> terms;
    std::size_t i = 0;
    if (side.empty()) fail("empty side");
    while (i < side.size()) {
      bool neg = false;
      if (side[i] == '+' || side[i] == '-') {
        neg = side[i] == '-';
        ++i;
      } else if (i != 0) {
        fail("expected '+' between terms");
      }
      Fq c = F->one();
      bool have_coeff = false;
      if (i < side.size() && side[i] == '(') {
        const std::size_t close = side.find(')', i);
        if (close == std::string::npos) fail("unclosed '('");
        c = F->parse(side.substr(i + 1, close - i - 1));
        i = close + 1;
        have_coeff = true;
      } else if (i < side.size() && std::isdigit(static_cast<unsigned char>(side[i]))) {
        std::size_t j = i;
        while (j < side.size() && std::isdigit(static_cast<unsigned char>(side[j]))) ++j;
        c = F->from_int(std::stoll(side.substr(i, j - i)));
        i = j;
        have_coeff = true;
      }
      std::size_t j = i;
      while (j < side.size() && side[j] != '+' && side[j] != '-') ++j;
      std::string mono = side.substr(i, j - i);
      if (mono.empty() && !have_coeff) fail("empty term");
      if (!(mono.empty() || mono == "x" || mono == "y" || mono == "xy" || mono == "x2" || mono == "x3" ||
            mono == "y2")) {
        fail("unknown monomial '" + mono + "'");
      }
      if (neg) c = -c;
      auto [it, inserted] = terms.emplace(mono, c);
      if (!inserted) it->second += c;
      i = j;
    }
    return terms;
  };
  auto lhs = parse_side(eq.substr(0, eqpos));
  auto rhs = parse_side(eq.substr(eqpos + 1));
  for (const auto& [m, c] : lhs)
    if (m != "y2" && m != "xy" && m != "y") fail("term '" + m + "' not allowed on the left");
  for (const auto& [m, c] : rhs)
    if (m != "x3" && m != "x2" && m != "x" && !m.empty()) fail("term '" + m + "' not allowed on the right");
  if (!lhs.count("y2") || !lhs.at("y2").is_one()) fail("left side must contain y2 with coefficient 1");
  if (!rhs.count("x3") || !rhs.at("x3").is_one()) fail("right side must contain x3 with coefficient 1");
  auto get = [&](const std::map<std::string, Fq>& t, const std::string& m) {
    auto it = t.find(m);
    return it == t.end() ? F->zero() : it->second;
  };
  return WeierstrassCurve(F, get(lhs, "xy"), get(rhs, "x2"), get(lhs, "y"), get(rhs, "x"), get(rhs, ""));
}

nlohmann::ordered_json WeierstrassCurve::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = field_->p();
  j["n"] = field_->n();
  j["a1"] = a1_.str();
  j["a2"] = a2_.str();
  j["a3"] = a3_.str();
  j["a4"] = a4_.str();
  j["a6"] = a6_.str();
  return j;
}

WeierstrassCurve WeierstrassCurve::from_json(const nlohmann::json& j) {
  try {
    auto F = Field::make(j.at("p").get<unsigned>(), j.at("n").get<unsigned>());
    auto coef = [&](const char* key) {
      if (!j.contains(key)) return F->zero();
      const auto& v = j.at(key);
      return v.is_number() ? F->from_int(v.get<long long>()) : F->parse(v.get<std::string>());
    };
    return WeierstrassCurve(F, coef("a1"), coef("a2"), coef("a3"), coef("a4"), coef("a6"));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed curve record: ") + e.what());
  }
}

std::string CurvePoint::str() const {
  if (infinity) return "inf";
  return "(" + x.str() + "," + y.str() + ")";
}

bool on_curve(const CurvePoint& p, const WeierstrassCurve& e) {
  if (p.infinity) return true;
  const Fq x = p.x, y = p.y;
  return y * y + e.a1() * x * y + e.a3() * y == x * x * x + e.a2() * x * x + e.a4() * x + e.a6();
}

std::vector<CurvePoint> enumerate_points(const WeierstrassCurve& e) {
  std::vector<CurvePoint> out{CurvePoint::at_infinity()};
  const auto elems = e.field().elements();
  for (Fq x : elems)
    for (Fq y : elems) {
      const auto p = CurvePoint::affine(x, y);
      if (on_curve(p, e)) out.push_back(p);
    }
  return out;
}

CurvePoint point_neg(const CurvePoint& p, const WeierstrassCurve& e) {
  if (p.infinity) return p;
  return CurvePoint::affine(p.x, -p.y - e.a1() * p.x - e.a3());
}

CurvePoint point_add(const CurvePoint& p, const CurvePoint& q, const WeierstrassCurve& e) {
  if (!on_curve(p, e) || !on_curve(q, e)) throw std::invalid_argument("point not on curve");
  if (p.infinity) return q;
  if (q.infinity) return p;
  const Field& F = e.field();
  const Fq x1 = p.x, y1 = p.y, x2 = q.x, y2 = q.y;
  Fq lambda, nu;
  if (x1 == x2) {
    if ((y1 + y2 + e.a1() * x2 + e.a3()).is_zero()) return CurvePoint::at_infinity();
    const Fq den = F.from_int(2) * y1 + e.a1() * x1 + e.a3();
    lambda = (F.from_int(3) * x1 * x1 + F.from_int(2) * e.a2() * x1 + e.a4() - e.a1() * y1) / den;
    nu = (-(x1 * x1 * x1) + e.a4() * x1 + F.from_int(2) * e.a6() - e.a3() * y1) / den;
  } else {
    lambda = (y2 - y1) / (x2 - x1);
    nu = (y1 * x2 - y2 * x1) / (x2 - x1);
  }
  const Fq x3 = lambda * lambda + e.a1() * lambda - e.a2() - x1 - x2;
  const Fq y3 = -(lambda + e.a1()) * x3 - nu - e.a3();
  return CurvePoint::affine(x3, y3);
}

CurvePoint point_mul(std::uint64_t k, const CurvePoint& p, const WeierstrassCurve& e) {
  CurvePoint r = CurvePoint::at_infinity(), b = p;
  for (; k; k >>= 1) {
    if (k & 1) r = point_add(r, b, e);
    b = point_add(b, b, e);
  }
  return r;
}

std::uint64_t point_order(const CurvePoint& p, const WeierstrassCurve& e) {
  std::uint64_t k = 1;
  for (CurvePoint x = p; !x.infinity; x = point_add(x, p, e)) ++k;
  return k;
}

std::vector<std::uint64_t> group_structure(const std::vector<CurvePoint>& points, const WeierstrassCurve& e) {
  const std::uint64_t n = points.size();
  // For each prime p | n, |G[p^k]| = p^{s_k}; parts of size >= k number s_k - s_{k-1}.
  std::vector<std::vector<unsigned>> parts_by_prime;
  std::vector<std::uint64_t> primes;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; m > 1; ++p) {
    if (m % p != 0) continue;
    unsigned e_p = 0;
    while (m % p == 0) {
      m /= p;
      ++e_p;
    }
    std::vector<unsigned> at_least;  // at_least[k-1] = number of parts >= k
    unsigned prev = 0;
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e_p; ++k) {
      pk *= p;
      std::uint64_t count = 0;
      for (const auto& pt : points)
        if (point_mul(pk, pt, e).infinity) ++count;
      unsigned s = 0;
      while (count > 1) {
        count /= p;
        ++s;
      }
      at_least.push_back(s - prev);
      prev = s;
    }
    // Conjugate partition: part j has size #{k : at_least[k] >= j}.
    std::vector<unsigned> parts;
    for (unsigned j = 1; !at_least.empty() && j <= at_least.front(); ++j) {
      unsigned size = 0;
      for (unsigned a : at_least)
        if (a >= j) ++size;
      parts.push_back(size);
    }
    primes.push_back(p);
    parts_by_prime.push_back(parts);
  }
  std::size_t len = 0;
  for (const auto& parts : parts_by_prime) len = std::max(len, parts.size());
  std::vector<std::uint64_t> factors(len, 1);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    // parts are descending; the largest go into the last invariant factor.
    for (std::size_t j = 0; j < parts_by_prime[i].size(); ++j) {
      for (unsigned k = 0; k < parts_by_prime[i][j]; ++k) factors[len - 1 - j] *= primes[i];
    }
  }
  return factors;
}

long long LPoly::eval(long long u) const {
  long long r = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) r = r * u + coeffs[i];
  return r;
}

std::string LPoly::str() const {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const long long c = coeffs[i];
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? "-" : "+";
    else if (c < 0) s += "-";
    const long long a = c < 0 ? -c : c;
    if (a != 1 || i == 0) s += std::to_string(a);
    if (i >= 1) s += "u";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

LPoly lpoly_from_count(std::uint64_t n_points, std::uint64_t q) {
  const long long a = static_cast<long long>(n_points) - static_cast<long long>(q) - 1;
  if (a * a > 4 * static_cast<long long>(q)) {
    throw std::domain_error("point count " + std::to_string(n_points) + " violates the Hasse bound for q=" +
                            std::to_string(q));
  }
  return LPoly{{1, a, static_cast<long long>(q)}};
}

long long ell_count(const LPoly& l) { return l.eval(-1); }

nlohmann::ordered_json ClassData::to_json() const {
  nlohmann::ordered_json j;
  j["h"] = h;
  j["cl2"] = cl2;
  j["r"] = r;
  j["ell_eq"] = ell_eq;
  j["ell_neq"] = ell_neq;
  return j;
}

ClassData class_data(const LPoly& l, std::uint64_t two_torsion) {
  if (l.coeffs.empty() || l.coeffs.front() != 1) throw std::invalid_argument("L-polynomial must have constant term 1");
  if (l.genus() > 1) throw std::domain_error("class data is only supported for genus <= 1");
  ClassData d;
  d.h = l.eval(1);
  d.cl2 = static_cast<long long>(two_torsion);
  const long long ell = ell_count(l);
  if ((ell - d.cl2) % 2 != 0 || ell < d.cl2) {
    throw std::domain_error("L(-1) - |Cl(A)_2| = " + std::to_string(ell - d.cl2) + " is not a non-negative even number");
  }
  d.r = (ell - d.cl2) / 2;
  d.ell_eq = d.cl2;
  d.ell_neq = 2 * d.r;
  return d;
}

std::uint64_t two_torsion_count(const std::vector<CurvePoint>& points, const WeierstrassCurve& e) {
  std::uint64_t n = 0;
  for (const auto& p : points)
    if (point_add(p, p, e).infinity) ++n;
  return n;
}

LPoly curve_lpoly(const WeierstrassCurve& e) { return lpoly_from_count(enumerate_points(e).size(), e.field().q()); }

ClassData class_data(const WeierstrassCurve& e) {
  const auto pts = enumerate_points(e);
  const LPoly l = lpoly_from_count(pts.size(), e.field().q());
  return class_data(l, two_torsion_count(pts, e));
}

std::uint64_t cs_order(std::uint64_t r, std::uint64_t q) {
  const std::uint64_t a = aut_rel_count(q);
  std::uint64_t out = 1;
  for (std::uint64_t i = 2; i <= r; ++i) out *= i;
  for (std::uint64_t i = 0; i < r; ++i) out *= a;
  return out;
}

}  // namespace dmg
