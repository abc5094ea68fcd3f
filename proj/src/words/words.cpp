#include "dmg/words.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dmg {

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t n) {
  a %= n;
  for (std::uint64_t x = 1; x < n; ++x)
    if (a * x % n == 1) return x;
  if (n == 1) return 0;
  throw std::invalid_argument("exponent " + std::to_string(a) + " is not invertible mod " + std::to_string(n));
}

void check_index(const CentralAmalgamDecl& d, unsigned f) {
  if (f >= d.size()) {
    throw std::invalid_argument("factor index " + std::to_string(f) + " out of range for " + d.name());
  }
}

void require_kind(const CentralAmalgamDecl& d, unsigned f, FactorKind k, const char* what) {
  check_index(d, f);
  if (d.factor(f).kind != k) {
    throw std::invalid_argument(std::string(what) + " needs a different kind of factor than f" + std::to_string(f) +
                                " (" + d.factor(f).kind_str() + ")");
  }
}

bool in_exponent_set(const CentralAmalgamDecl& d, std::uint64_t a) {
  const auto set = aut_rel_enumerate(d.q());
  return std::find(set.begin(), set.end(), a) != set.end();
}

void require_spike(const CentralAmalgamDecl& d, unsigned f) {
  const auto spikes = d.spike_factors();
  if (std::find(spikes.begin(), spikes.end(), f) == spikes.end()) {
    throw std::invalid_argument("f" + std::to_string(f) + " is not a cyclic spike factor of order q^2-1");
  }
}

std::uint64_t cyclic_exp(const FactorElem& e) { return std::get<std::uint64_t>(e); }

// Isomorphism used by swaps: factor i -> factor j with parameter a (forward)
// or its inverse (backward).
FactorElem swap_iso(const CentralAmalgamDecl& d, unsigned from, const FactorElem& x, std::uint64_t a, bool backward) {
  const FactorDecl& fd = d.factor(from);
  switch (fd.kind) {
    case FactorKind::FiniteCyclic: {
      const std::uint64_t k = backward ? mod_inverse(a, fd.order) : a % fd.order;
      return cyclic_exp(x) * k % fd.order;
    }
    case FactorKind::Vector: {
      Fq s = fd.field->elem(static_cast<std::uint32_t>(a));
      if (backward) s = s.inverse();
      return std::get<Poly>(x).scaled(s);
    }
    case FactorKind::MatrixBacked:
      return x;
  }
  return x;
}

}  // namespace

// ---------------------------------------------------------------- declarations

FactorDecl FactorDecl::cyclic(std::string name, std::uint64_t n) {
  FactorDecl f;
  f.kind = FactorKind::FiniteCyclic;
  f.name = std::move(name);
  f.order = n;
  return f;
}

FactorDecl FactorDecl::matrix(std::string name, std::shared_ptr<const Field> F, bool constant_entries) {
  FactorDecl f;
  f.kind = FactorKind::MatrixBacked;
  f.name = std::move(name);
  f.field = std::move(F);
  f.constant_entries = constant_entries;
  return f;
}

FactorDecl FactorDecl::vector(std::string name, std::shared_ptr<const Field> F) {
  FactorDecl f;
  f.kind = FactorKind::Vector;
  f.name = std::move(name);
  f.field = std::move(F);
  return f;
}

std::string FactorDecl::kind_str() const {
  switch (kind) {
    case FactorKind::FiniteCyclic:
      return "cyclic(" + std::to_string(order) + ")";
    case FactorKind::MatrixBacked:
      return std::string(constant_entries ? "GL2(F_" : "GL2(F_") + std::to_string(field->q()) +
             (constant_entries ? ")" : "[t])");
    case FactorKind::Vector:
      return "vector(F_" + std::to_string(field->q()) + ")";
  }
  return "?";
}

bool FactorDecl::isomorphic_to(const FactorDecl& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case FactorKind::FiniteCyclic:
      return order == o.order;
    case FactorKind::MatrixBacked:
      return field->q() == o.field->q() && constant_entries == o.constant_entries;
    case FactorKind::Vector:
      return field->q() == o.field->q();
  }
  return false;
}

CentralAmalgamDecl::CentralAmalgamDecl(std::string name, unsigned q, std::vector<FactorDecl> factors,
                                       std::uint64_t centre_order)
    : name_(std::move(name)), q_(q), factors_(std::move(factors)), centre_order_(centre_order) {
  if (!is_prime_power(q)) throw std::invalid_argument("declaration field order must be a prime power");
  if (centre_order_ == 0) throw std::invalid_argument("centre order must be positive");
  for (const auto& f : factors_) {
    if (f.kind == FactorKind::FiniteCyclic && f.order < 2) throw std::invalid_argument("cyclic factor of order < 2");
    if (f.kind != FactorKind::FiniteCyclic && !f.field) throw std::invalid_argument("factor " + f.name + " has no field");
  }
}

const FactorDecl& CentralAmalgamDecl::factor(unsigned i) const {
  check_index(*this, i);
  return factors_[i];
}

std::vector<unsigned> CentralAmalgamDecl::spike_factors() const {
  std::vector<unsigned> out;
  const std::uint64_t n = std::uint64_t{q_} * q_ - 1;
  for (unsigned i = 0; i < factors_.size(); ++i)
    if (factors_[i].kind == FactorKind::FiniteCyclic && factors_[i].order == n) out.push_back(i);
  return out;
}

FactorElem CentralAmalgamDecl::identity(unsigned f) const {
  const FactorDecl& fd = factor(f);
  switch (fd.kind) {
    case FactorKind::FiniteCyclic:
      return std::uint64_t{0};
    case FactorKind::MatrixBacked:
      return MatPoly::identity(Poly::constant(fd.field->one()));
    case FactorKind::Vector:
      return Poly(*fd.field);
  }
  return std::uint64_t{0};
}

FactorElem CentralAmalgamDecl::mul(unsigned f, const FactorElem& x, const FactorElem& y) const {
  const FactorDecl& fd = factor(f);
  switch (fd.kind) {
    case FactorKind::FiniteCyclic:
      return (cyclic_exp(x) + cyclic_exp(y)) % fd.order;
    case FactorKind::MatrixBacked:
      return std::get<MatPoly>(x) * std::get<MatPoly>(y);
    case FactorKind::Vector:
      return std::get<Poly>(x) + std::get<Poly>(y);
  }
  return x;
}

FactorElem CentralAmalgamDecl::inv(unsigned f, const FactorElem& x) const {
  const FactorDecl& fd = factor(f);
  switch (fd.kind) {
    case FactorKind::FiniteCyclic:
      return (fd.order - cyclic_exp(x) % fd.order) % fd.order;
    case FactorKind::MatrixBacked:
      return std::get<MatPoly>(x).inverse();
    case FactorKind::Vector:
      return -std::get<Poly>(x);
  }
  return x;
}

bool CentralAmalgamDecl::is_identity(unsigned f, const FactorElem& x) const {
  switch (factor(f).kind) {
    case FactorKind::FiniteCyclic:
      return cyclic_exp(x) == 0;
    case FactorKind::MatrixBacked:
      return std::get<MatPoly>(x).is_identity();
    case FactorKind::Vector:
      return std::get<Poly>(x).is_zero();
  }
  return false;
}

void CentralAmalgamDecl::check(unsigned f, const FactorElem& x) const {
  const FactorDecl& fd = factor(f);
  const std::string where = "element of f" + std::to_string(f) + " (" + fd.name + ")";
  switch (fd.kind) {
    case FactorKind::FiniteCyclic:
      if (!std::holds_alternative<std::uint64_t>(x) || cyclic_exp(x) >= fd.order) {
        throw std::invalid_argument(where + " must be an exponent below " + std::to_string(fd.order));
      }
      return;
    case FactorKind::MatrixBacked: {
      if (!std::holds_alternative<MatPoly>(x)) throw std::invalid_argument(where + " must be a matrix");
      const MatPoly& m = std::get<MatPoly>(x);
      if (&m.a.field() != fd.field.get() && m.a.field().q() != fd.field->q()) {
        throw std::invalid_argument(where + " has entries over the wrong field");
      }
      if (!in_gl2(m)) throw std::invalid_argument(where + " " + format_matrix(m) + " is not invertible");
      if (fd.constant_entries && max_degree(m) > 0) {
        throw std::invalid_argument(where + " must have constant entries");
      }
      return;
    }
    case FactorKind::Vector:
      if (!std::holds_alternative<Poly>(x)) throw std::invalid_argument(where + " must be a vector");
      if (std::get<Poly>(x).field().q() != fd.field->q()) throw std::invalid_argument(where + " is over the wrong field");
      return;
  }
}

std::string CentralAmalgamDecl::elem_str(unsigned f, const FactorElem& x) const {
  switch (factor(f).kind) {
    case FactorKind::FiniteCyclic:
      return std::to_string(cyclic_exp(x));
    case FactorKind::MatrixBacked:
      return format_matrix(std::get<MatPoly>(x));
    case FactorKind::Vector: {
      const Poly& p = std::get<Poly>(x);
      return p.is_zero() ? "0" : p.str();
    }
  }
  return "?";
}

FactorElem CentralAmalgamDecl::parse_elem(unsigned f, std::string_view text) const {
  const FactorDecl& fd = factor(f);
  switch (fd.kind) {
    case FactorKind::FiniteCyclic: {
      const std::string s(text);
      std::size_t pos = 0;
      long long v = 0;
      try {
        v = std::stoll(s, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos == 0 || pos != s.size()) throw std::invalid_argument("bad cyclic exponent '" + s + "'");
      const auto n = static_cast<long long>(fd.order);
      return static_cast<std::uint64_t>(((v % n) + n) % n);
    }
    case FactorKind::MatrixBacked: {
      FactorElem e = parse_poly_matrix(*fd.field, text);
      check(f, e);
      return e;
    }
    case FactorKind::Vector:
      return Poly::parse(*fd.field, text);
  }
  return std::uint64_t{0};
}

// ---------------------------------------------------------------- words

FreeWord word_reduce(const CentralAmalgamDecl& d, const std::vector<Letter>& letters) {
  if (d.centre_order() != 1) {
    throw std::invalid_argument("word operations need a trivial centre (declared order " +
                                std::to_string(d.centre_order()) + ")");
  }
  FreeWord out;
  for (const Letter& l : letters) {
    d.check(l.factor, l.elem);
    if (d.is_identity(l.factor, l.elem)) continue;
    if (!out.empty() && out.back().factor == l.factor) {
      FactorElem merged = d.mul(l.factor, out.back().elem, l.elem);
      out.pop_back();
      if (!d.is_identity(l.factor, merged)) out.push_back({l.factor, std::move(merged)});
    } else {
      out.push_back(l);
    }
  }
  return out;
}

FreeWord word_mul(const CentralAmalgamDecl& d, const FreeWord& u, const FreeWord& v) {
  std::vector<Letter> all(u);
  all.insert(all.end(), v.begin(), v.end());
  return word_reduce(d, all);
}

FreeWord word_inverse(const CentralAmalgamDecl& d, const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->factor, d.inv(it->factor, it->elem)});
  return out;
}

std::string format_free_word(const CentralAmalgamDecl& d, const FreeWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "·";
    s += "f" + std::to_string(w[i].factor) + ":" + d.elem_str(w[i].factor, w[i].elem);
  }
  return s;
}

FreeWord parse_free_word(const CentralAmalgamDecl& d, std::string_view text) {
  static constexpr std::string_view kDot = "·";
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size();) {
    if (i == text.size()) {
      parts.push_back(text.substr(start));
      break;
    }
    if (text.substr(i, kDot.size()) == kDot) {
      parts.push_back(text.substr(start, i - start));
      i += kDot.size();
      start = i;
    } else if (text[i] == '*' && i + 1 < text.size() && text[i + 1] == 'f') {
      parts.push_back(text.substr(start, i - start));
      start = ++i;
    } else {
      ++i;
    }
  }
  std::vector<Letter> letters;
  for (std::string_view p : parts) {
    while (!p.empty() && p.front() == ' ') p.remove_prefix(1);
    while (!p.empty() && p.back() == ' ') p.remove_suffix(1);
    if (p.empty()) {
      if (parts.size() == 1) break;
      throw std::invalid_argument("empty letter in word '" + std::string(text) + "'");
    }
    const auto colon = p.find(':');
    if (p.front() != 'f' || colon == std::string_view::npos || colon == 1) {
      throw std::invalid_argument("malformed letter '" + std::string(p) + "' (expected f<i>:<element>)");
    }
    unsigned f = 0;
    for (char c : p.substr(1, colon - 1)) {
      if (c < '0' || c > '9') throw std::invalid_argument("malformed factor index in '" + std::string(p) + "'");
      f = f * 10 + static_cast<unsigned>(c - '0');
    }
    check_index(d, f);
    letters.push_back({f, d.parse_elem(f, p.substr(colon + 1))});
  }
  return word_reduce(d, letters);
}

// ---------------------------------------------------------------- generators

void validate_gen(const CentralAmalgamDecl& d, const AutoGen& g) {
  if (const auto* t = std::get_if<Type1>(&g)) {
    check_index(d, t->factor);
    const FactorDecl& fd = d.factor(t->factor);
    if (const auto* c = std::get_if<CyclicPower>(&t->aut)) {
      require_kind(d, t->factor, FactorKind::FiniteCyclic, "power map");
      if (std::gcd(c->exponent, fd.order) != 1) throw std::invalid_argument("power map exponent not coprime to order");
    } else if (const auto* r = std::get_if<ReinerTwist>(&t->aut)) {
      require_kind(d, t->factor, FactorKind::MatrixBacked, "Reiner twist");
      if (fd.constant_entries || r->spec.field().q() != fd.field->q()) {
        throw std::invalid_argument("Reiner twist needs a GL2(F_q[t]) factor over the field of its linear map");
      }
    } else if (const auto* l = std::get_if<LinearVectorMap>(&t->aut)) {
      require_kind(d, t->factor, FactorKind::Vector, "linear map");
      std::set<unsigned> idx;
      for (const SparseLinearMap* m : {&l->forward, &l->inverse})
        for (unsigned i : m->closed_support()) idx.insert(i);
      for (unsigned i : idx) {
        const Poly e = Poly::monomial(*fd.field, i);
        if (l->inverse.apply(l->forward.apply(e)) != e || l->forward.apply(l->inverse.apply(e)) != e) {
          throw std::invalid_argument("linear map inverse is inconsistent at e" + std::to_string(i));
        }
      }
    } else if (const auto* m = std::get_if<MatrixConjugation>(&t->aut)) {
      require_kind(d, t->factor, FactorKind::MatrixBacked, "matrix conjugation");
      d.check(t->factor, m->h);
    }
  } else if (const auto* p = std::get_if<PartialConj>(&g)) {
    check_index(d, p->from);
    check_index(d, p->to);
    if (p->from == p->to) throw std::invalid_argument("partial conjugation needs two distinct factors");
    d.check(p->from, p->element);
  } else if (const auto* s = std::get_if<Swap>(&g)) {
    check_index(d, s->i);
    check_index(d, s->j);
    if (s->i == s->j) throw std::invalid_argument("swap needs two distinct factors");
    const FactorDecl& a = d.factor(s->i);
    if (!a.isomorphic_to(d.factor(s->j))) {
      throw std::invalid_argument("cannot swap non-isomorphic factors f" + std::to_string(s->i) + " (" + a.kind_str() +
                                  ") and f" + std::to_string(s->j) + " (" + d.factor(s->j).kind_str() + ")");
    }
    if (a.kind == FactorKind::FiniteCyclic && std::gcd(s->exponent, a.order) != 1) {
      throw std::invalid_argument("swap exponent not coprime to the factor order");
    }
    if (a.kind == FactorKind::Vector && (s->exponent == 0 || s->exponent >= a.field->q())) {
      throw std::invalid_argument("vector swap scalar must be a nonzero field element");
    }
    if (a.kind == FactorKind::MatrixBacked && s->exponent != 1) {
      throw std::invalid_argument("matrix factor swaps use the identity isomorphism (exponent 1)");
    }
  } else if (const auto* ps = std::get_if<PsiSingle>(&g)) {
    require_spike(d, ps->factor);
    if (!in_exponent_set(d, ps->exponent)) throw std::invalid_argument("psi exponent not in the exponent set");
  } else if (const auto* pw = std::get_if<PsiSwap>(&g)) {
    require_spike(d, pw->i);
    require_spike(d, pw->j);
    if (pw->i == pw->j) throw std::invalid_argument("psi swap needs two distinct spikes");
    if (!in_exponent_set(d, pw->exponent)) throw std::invalid_argument("psi exponent not in the exponent set");
  } else if (const auto* in = std::get_if<Inner>(&g)) {
    (void)word_reduce(d, in->conjugator);
  }
}

FreeWord apply_gen(const CentralAmalgamDecl& d, const AutoGen& g, const FreeWord& w) {
  if (const auto* in = std::get_if<Inner>(&g)) {
    return word_mul(d, in->conjugator, word_mul(d, w, word_inverse(d, in->conjugator)));
  }
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (const auto* t = std::get_if<Type1>(&g)) {
      if (l.factor != t->factor) {
        out.push_back(l);
      } else if (const auto* c = std::get_if<CyclicPower>(&t->aut)) {
        out.push_back({l.factor, cyclic_exp(l.elem) * c->exponent % d.factor(l.factor).order});
      } else if (const auto* r = std::get_if<ReinerTwist>(&t->aut)) {
        out.push_back({l.factor, reiner_apply(r->spec, std::get<MatPoly>(l.elem))});
      } else if (const auto* lm = std::get_if<LinearVectorMap>(&t->aut)) {
        out.push_back({l.factor, lm->forward.apply(std::get<Poly>(l.elem))});
      } else if (const auto* m = std::get_if<MatrixConjugation>(&t->aut)) {
        out.push_back({l.factor, m->h * std::get<MatPoly>(l.elem) * m->h.inverse()});
      }
    } else if (const auto* p = std::get_if<PartialConj>(&g)) {
      if (l.factor == p->to) {
        out.push_back({p->from, p->element});
        out.push_back(l);
        out.push_back({p->from, d.inv(p->from, p->element)});
      } else {
        out.push_back(l);
      }
    } else if (const auto* s = std::get_if<Swap>(&g)) {
      if (l.factor == s->i) {
        out.push_back({s->j, swap_iso(d, s->i, l.elem, s->exponent, false)});
      } else if (l.factor == s->j) {
        out.push_back({s->i, swap_iso(d, s->j, l.elem, s->exponent, true)});
      } else {
        out.push_back(l);
      }
    } else if (const auto* ps = std::get_if<PsiSingle>(&g)) {
      if (l.factor == ps->factor) {
        out.push_back({l.factor, cyclic_exp(l.elem) * ps->exponent % d.factor(l.factor).order});
      } else {
        out.push_back(l);
      }
    } else if (const auto* pw = std::get_if<PsiSwap>(&g)) {
      if (l.factor == pw->i) {
        out.push_back({pw->j, swap_iso(d, pw->i, l.elem, pw->exponent, false)});
      } else if (l.factor == pw->j) {
        out.push_back({pw->i, swap_iso(d, pw->j, l.elem, pw->exponent, true)});
      } else {
        out.push_back(l);
      }
    }
  }
  return word_reduce(d, out);
}

AutoGen inverse_gen(const CentralAmalgamDecl& d, const AutoGen& g) {
  if (const auto* t = std::get_if<Type1>(&g)) {
    if (const auto* c = std::get_if<CyclicPower>(&t->aut)) {
      return Type1{t->factor, CyclicPower{mod_inverse(c->exponent, d.factor(t->factor).order)}};
    }
    if (const auto* r = std::get_if<ReinerTwist>(&t->aut)) return Type1{t->factor, ReinerTwist{reiner_inverse(r->spec)}};
    if (const auto* l = std::get_if<LinearVectorMap>(&t->aut)) return Type1{t->factor, LinearVectorMap{l->inverse, l->forward}};
    const auto& m = std::get<MatrixConjugation>(t->aut);
    return Type1{t->factor, MatrixConjugation{m.h.inverse()}};
  }
  if (const auto* p = std::get_if<PartialConj>(&g)) return PartialConj{p->from, p->to, d.inv(p->from, p->element)};
  if (const auto* ps = std::get_if<PsiSingle>(&g)) {
    return PsiSingle{ps->factor, mod_inverse(ps->exponent, d.factor(ps->factor).order)};
  }
  if (const auto* in = std::get_if<Inner>(&g)) return Inner{word_inverse(d, in->conjugator)};
  return g;  // swaps are involutions
}

std::string gen_str(const CentralAmalgamDecl& d, const AutoGen& g) {
  auto f = [](unsigned i) { return "f" + std::to_string(i); };
  if (const auto* t = std::get_if<Type1>(&g)) {
    if (const auto* c = std::get_if<CyclicPower>(&t->aut)) return "type1(" + f(t->factor) + ",power " + std::to_string(c->exponent) + ")";
    if (const auto* r = std::get_if<ReinerTwist>(&t->aut)) return "type1(" + f(t->factor) + ",reiner " + r->spec.to_json().dump() + ")";
    if (const auto* l = std::get_if<LinearVectorMap>(&t->aut)) {
      return "type1(" + f(t->factor) + ",linear " + sparse_map_to_json(l->forward).dump() + ")";
    }
    return "type1(" + f(t->factor) + ",conjugate " + format_matrix(std::get<MatrixConjugation>(t->aut).h) + ")";
  }
  if (const auto* p = std::get_if<PartialConj>(&g)) {
    return "partial_conj(" + f(p->from) + "->" + f(p->to) + "," + d.elem_str(p->from, p->element) + ")";
  }
  if (const auto* s = std::get_if<Swap>(&g)) return "swap(" + f(s->i) + "," + f(s->j) + "," + std::to_string(s->exponent) + ")";
  if (const auto* ps = std::get_if<PsiSingle>(&g)) return "psi(" + f(ps->factor) + "," + std::to_string(ps->exponent) + ")";
  if (const auto* pw = std::get_if<PsiSwap>(&g)) {
    return "psi_swap(" + f(pw->i) + "," + f(pw->j) + "," + std::to_string(pw->exponent) + ")";
  }
  return "inner(" + format_free_word(d, std::get<Inner>(g).conjugator) + ")";
}

Automorphism::Automorphism(const CentralAmalgamDecl& d, std::vector<AutoGen> gens) : decl_(&d), gens_(std::move(gens)) {
  for (const auto& g : gens_) validate_gen(d, g);
}

FreeWord Automorphism::apply(const FreeWord& w) const {
  FreeWord cur = w;
  for (const auto& g : gens_) cur = apply_gen(*decl_, g, cur);
  return cur;
}

Automorphism Automorphism::inverse() const {
  std::vector<AutoGen> inv;
  for (auto it = gens_.rbegin(); it != gens_.rend(); ++it) inv.push_back(inverse_gen(*decl_, *it));
  return Automorphism(*decl_, std::move(inv));
}

Automorphism compose_autos(const CentralAmalgamDecl& d, std::vector<AutoGen> gens) {
  return Automorphism(d, std::move(gens));
}

std::vector<AutoGen> parse_script(const CentralAmalgamDecl& d, const nlohmann::json& script) {
  if (!script.is_array()) throw std::invalid_argument("automorphism script must be a JSON array");
  std::vector<AutoGen> out;
  try {
    for (const auto& rec : script) {
      const std::string type = rec.at("type").get<std::string>();
      AutoGen g = Inner{};
      if (type == "type1") {
        const unsigned f = rec.at("factor").get<unsigned>();
        check_index(d, f);
        if (rec.contains("power")) {
          g = Type1{f, CyclicPower{rec.at("power").get<std::uint64_t>()}};
        } else if (rec.contains("reiner")) {
          g = Type1{f, ReinerTwist{LinearAutoSpec::from_json(rec.at("reiner"))}};
        } else if (rec.contains("linear")) {
          const Field& F = *d.factor(f).field;
          const auto& lin = rec.at("linear");
          SparseLinearMap fwd = sparse_map_from_json(F, lin.at("forward"));
          SparseLinearMap inv = lin.contains("inverse") ? sparse_map_from_json(F, lin.at("inverse")) : fwd.inverted();
          g = Type1{f, LinearVectorMap{std::move(fwd), std::move(inv)}};
        } else if (rec.contains("conjugate")) {
          g = Type1{f, MatrixConjugation{std::get<MatPoly>(d.parse_elem(f, rec.at("conjugate").get<std::string>()))}};
        } else {
          throw std::invalid_argument("type1 record needs one of power, reiner, linear, conjugate");
        }
      } else if (type == "partial_conj") {
        const unsigned from = rec.at("from").get<unsigned>();
        check_index(d, from);
        g = PartialConj{from, rec.at("to").get<unsigned>(), d.parse_elem(from, rec.at("element").get<std::string>())};
      } else if (type == "swap") {
        g = Swap{rec.at("i").get<unsigned>(), rec.at("j").get<unsigned>(), rec.value("exponent", std::uint64_t{1})};
      } else if (type == "psi") {
        g = PsiSingle{rec.at("factor").get<unsigned>(), rec.at("exponent").get<std::uint64_t>()};
      } else if (type == "psi_swap") {
        g = PsiSwap{rec.at("i").get<unsigned>(), rec.at("j").get<unsigned>(), rec.at("exponent").get<std::uint64_t>()};
      } else if (type == "inner") {
        g = Inner{parse_free_word(d, rec.at("word").get<std::string>())};
      } else {
        throw std::invalid_argument("unknown generator type '" + type + "'");
      }
      validate_gen(d, g);
      out.push_back(std::move(g));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed automorphism script: ") + e.what());
  }
  return out;
}

// ---------------------------------------------------------------- wreath check

nlohmann::ordered_json WreathReport::to_json() const {
  nlohmann::ordered_json j;
  j["r"] = r;
  j["q"] = q;
  j["exponent_count"] = exponent_count;
  j["order"] = order;
  j["expected"] = expected;
  j["projection_onto"] = projection_onto;
  j["ok"] = ok();
  return j;
}

WreathReport cs_wreath_check(unsigned r, unsigned q) {
  if (r < 1 || r > 5) throw std::invalid_argument("cs_wreath_check supports 1 <= r <= 5");
  if (!is_prime_power(q) || q > 16) throw std::invalid_argument("cs_wreath_check needs a prime power q <= 16");
  const std::uint64_t n = std::uint64_t{q} * q - 1;
  std::vector<FactorDecl> factors;
  for (unsigned i = 0; i < r; ++i) factors.push_back(FactorDecl::cyclic("C" + std::to_string(i), n));
  const CentralAmalgamDecl d("spikes", q, factors);
  const auto exps = aut_rel_enumerate(q);

  std::vector<AutoGen> gens;
  for (unsigned i = 0; i < r; ++i)
    for (auto a : exps) gens.push_back(PsiSingle{i, a});
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = i + 1; j < r; ++j)
      for (auto a : exps) gens.push_back(PsiSwap{i, j, a});

  // An element is determined by the images of the generators x_i = f_i:1.
  using State = std::vector<std::pair<unsigned, std::uint64_t>>;
  State id;
  for (unsigned i = 0; i < r; ++i) id.emplace_back(i, 1);
  std::set<State> seen{id};
  std::vector<State> queue{id};
  std::set<std::vector<unsigned>> perms;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const State s = queue[k];
    std::vector<unsigned> perm;
    for (const auto& [f, e] : s) perm.push_back(f);
    perms.insert(perm);
    for (const auto& g : gens) {
      State next;
      for (const auto& [f, e] : s) {
        const FreeWord img = apply_gen(d, g, FreeWord{{f, e}});
        if (img.size() != 1) throw std::logic_error("spike generator did not map a letter to a letter");
        next.emplace_back(img[0].factor, std::get<std::uint64_t>(img[0].elem));
      }
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  WreathReport rep;
  rep.r = r;
  rep.q = q;
  rep.exponent_count = exps.size();
  rep.order = seen.size();
  std::uint64_t fact = 1, pw = 1;
  for (unsigned i = 2; i <= r; ++i) fact *= i;
  for (unsigned i = 0; i < r; ++i) pw *= exps.size();
  rep.expected = fact * pw;
  rep.projection_onto = perms.size() == fact;
  return rep;
}

// ---------------------------------------------------------------- examples

CentralAmalgamDecl build_ex1cusp() {
  auto F = Field::of_order(2);
  FactorDecl h = FactorDecl::matrix("H", F);
  h.cusp = "inf";
  return CentralAmalgamDecl("ex1cusp", 2, {h, FactorDecl::cyclic("M0", 3), FactorDecl::cyclic("M1", 3)});
}

CentralAmalgamDecl build_ex3cusps() {
  auto F = Field::of_order(2);
  FactorDecl h = FactorDecl::matrix("H", F);
  h.cusp = "inf";
  FactorDecl a0 = FactorDecl::vector("A0", F);
  a0.cusp = "(0,0)";
  FactorDecl a1 = FactorDecl::vector("A1", F);
  a1.cusp = "(0,1)";
  return CentralAmalgamDecl("ex3cusps", 2, {h, FactorDecl::cyclic("M1", 3), a0, a1});
}

CentralAmalgamDecl build_decl(std::string_view name) {
  if (name == "ex1cusp") return build_ex1cusp();
  if (name == "ex3cusps") return build_ex3cusps();
  throw std::invalid_argument("unknown declaration '" + std::string(name) + "' (expected ex1cusp or ex3cusps)");
}

nlohmann::ordered_json OrbitReport::to_json() const {
  nlohmann::ordered_json j;
  j["orbit_count"] = orbits.size();
  j["orbits"] = orbits;
  return j;
}

OrbitReport aut_cusp_orbit_report(const CentralAmalgamDecl& d) {
  std::vector<unsigned> cusp_factors;
  for (unsigned i = 0; i < d.size(); ++i)
    if (!d.factor(i).cusp.empty()) cusp_factors.push_back(i);
  std::vector<unsigned> parent(d.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](unsigned x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (unsigned a : cusp_factors) {
    for (unsigned b : cusp_factors) {
      if (a >= b) continue;
      const AutoGen g = Swap{a, b, 1};
      try {
        validate_gen(d, g);
      } catch (const std::invalid_argument&) {
        continue;
      }
      parent[find(b)] = find(a);
    }
  }
  std::map<unsigned, std::vector<std::string>> groups;
  for (unsigned f : cusp_factors) groups[find(f)].push_back(d.factor(f).cusp);
  OrbitReport rep;
  for (auto& [root, labels] : groups) rep.orbits.push_back(std::move(labels));
  return rep;
}

}  // namespace dmg
