#include "dmg/matgroup.hpp"

#include <algorithm>

namespace dmg {

MatPoly elementary_upper(const Poly& a) { return {a.one(), a, a.zero(), a.one()}; }
MatPoly elementary_lower(const Poly& a) { return {a.one(), a.zero(), a, a.one()}; }
MatPoly diag(const Poly& x, const Poly& y) { return {x, x.zero(), x.zero(), y}; }

MatPoly to_poly(const MatFq& m) {
  return {Poly::constant(m.a), Poly::constant(m.b), Poly::constant(m.c), Poly::constant(m.d)};
}

MatFq to_const(const MatPoly& m) {
  for (const Poly* e : {&m.a, &m.b, &m.c, &m.d})
    if (!e->is_constant()) throw std::domain_error("matrix " + format_matrix(m) + " has non-constant entries");
  return {m.a.constant_term(), m.b.constant_term(), m.c.constant_term(), m.d.constant_term()};
}

Mat2<RatFunc> to_ratfunc(const MatPoly& m) { return {RatFunc(m.a), RatFunc(m.b), RatFunc(m.c), RatFunc(m.d)}; }

Mat2<Fq2> embed(const MatFq& m, const QuadExt& E) { return {E.embed(m.a), E.embed(m.b), E.embed(m.c), E.embed(m.d)}; }

bool in_gl2(const MatPoly& m) { return m.det().degree() == 0; }

int max_degree(const MatPoly& m) { return std::max({m.a.degree(), m.b.degree(), m.c.degree(), m.d.degree()}); }

std::vector<std::string> split_matrix_text(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t' && ch != '\n') s += ch;
  auto fail = [&] { throw std::invalid_argument("malformed matrix text: '" + std::string(text) + "'"); };
  if (s.size() < 4 || s.substr(0, 2) != "[[" || s.substr(s.size() - 2) != "]]") fail();

  // Split on commas at nesting depth 1 (rows) and 2 (entries); parentheses
  // inside entries protect field-element literals like "(0,1)".
  std::vector<std::string> entries;
  std::string cur;
  int bracket = 0, paren = 0;
  int rows = 0;
  for (char ch : s) {
    if (ch == '(') ++paren;
    if (ch == ')') --paren;
    if (paren > 0 || ch == '(' || ch == ')') {
      if (bracket == 2) cur += ch;
      continue;
    }
    if (ch == '[') {
      ++bracket;
      if (bracket > 2) fail();
      continue;
    }
    if (ch == ']') {
      if (bracket == 2) {
        entries.push_back(cur);
        cur.clear();
        ++rows;
      }
      --bracket;
      continue;
    }
    if (ch == ',') {
      if (bracket == 2) {
        entries.push_back(cur);
        cur.clear();
      } else if (bracket != 1) {
        fail();
      }
      continue;
    }
    if (bracket != 2) fail();
    cur += ch;
  }
  if (bracket != 0 || rows != 2 || entries.size() != 4) fail();
  for (const auto& e : entries)
    if (e.empty()) fail();
  return entries;
}

MatPoly parse_poly_matrix(const Field& F, std::string_view text) {
  const auto e = split_matrix_text(text);
  return {Poly::parse(F, e[0]), Poly::parse(F, e[1]), Poly::parse(F, e[2]), Poly::parse(F, e[3])};
}

MatFq parse_fq_matrix(const Field& F, std::string_view text) { return to_const(parse_poly_matrix(F, text)); }

// ---------------------------------------------------------------- stabilizers

std::optional<StabParam> stab_membership(const MatPoly& m, const KPoint& s) {
  if (!in_gl2(m)) throw std::domain_error("matrix " + format_matrix(m) + " is not in GL2(F_q[t])");
  if (!(mobius(to_ratfunc(m), s) == s)) return std::nullopt;
  if (s.is_infinity()) return StabParam{m.a.constant_term(), m.d.constant_term(), m.b};

  // (s, 1) is an eigenvector with eigenvalue c s + d = beta; alpha = a - c s.
  const RatFunc& sv = s.value();
  const RatFunc alpha = RatFunc(m.a) - RatFunc(m.c) * sv;
  const RatFunc beta = RatFunc(m.d) + RatFunc(m.c) * sv;
  if (!alpha.is_polynomial() || !beta.is_polynomial() || alpha.num().degree() != 0 || beta.num().degree() != 0) {
    throw std::logic_error("stabilizer eigenvalues are not constants");
  }
  return StabParam{alpha.num().constant_term(), beta.num().constant_term(), m.c};
}

MatPoly stab_reconstruct(const StabParam& p, const KPoint& s) {
  const Field& F = p.c.field();
  if (s.is_infinity()) return {Poly::constant(p.alpha), p.c, Poly(F), Poly::constant(p.beta)};
  const RatFunc sv = s.value();
  const RatFunc al(Poly::constant(p.alpha)), be(Poly::constant(p.beta)), c(p.c);
  const Mat2<RatFunc> ms{sv, sv.one(), sv.one(), sv.zero()};
  const Mat2<RatFunc> inner{be, c, c.zero(), al};
  const Mat2<RatFunc> x = ms * inner * ms.inverse();
  for (const RatFunc* e : {&x.a, &x.b, &x.c, &x.d}) {
    if (!e->is_polynomial()) {
      throw std::domain_error("parameters do not give a matrix over F_q[t] for s = " + s.str());
    }
  }
  return {x.a.num(), x.b.num(), x.c.num(), x.d.num()};
}

MatPoly unipotent(const Poly& c, const KPoint& s) {
  const Field& F = c.field();
  return stab_reconstruct(StabParam{F.one(), F.one(), c}, s);
}

IdealQs qs_basis(const KPoint& s, int degree_bound) {
  const Field& F = s.x().field();
  IdealQs out{Poly(F), {}};
  for (const Poly& c : all_polys(F, degree_bound)) {
    if (!s.is_infinity()) {
      const RatFunc cs = RatFunc(c) * s.value();
      const RatFunc css = cs * s.value();
      if (!cs.is_polynomial() || !css.is_polynomial()) continue;
    }
    out.members.push_back(c);
    if (!c.is_zero() && c.lead().is_one() && (out.generator.is_zero() || c.degree() < out.generator.degree())) {
      out.generator = c;
    }
  }
  return out;
}

EllipticStab elliptic_stab(const QuadExt& E, Fq2 eps) {
  const std::uint64_t q = E.q();
  if (eps.is_zero() || mult_order(eps) != q * q - 1) {
    throw std::invalid_argument("epsilon " + eps.str() + " does not generate F_{q^2}^*");
  }
  const Fq lambda = norm(eps), mu = trace(eps);
  const Field& F = E.base();
  EllipticStab out{{F.zero(), lambda, -F.one(), mu}, {F.zero(), lambda, F.one(), F.zero()}, lambda, mu};
  return out;
}

}  // namespace dmg
