#include "dmg/nagao.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace dmg {

namespace {

MatPoly weyl(const Field& F) { return {Poly(F), Poly::constant(F.one()), Poly::constant(F.one()), Poly(F)}; }

char factor_char(Factor f) { return f == Factor::G ? 'G' : 'B'; }

}  // namespace

bool in_finite_borel(const MatPoly& m) {
  return m.a.is_constant() && m.b.is_constant() && m.c.is_zero() && m.d.is_constant() && !m.a.is_zero() &&
         !m.d.is_zero();
}

bool in_factor(const MatPoly& m, Factor f) {
  if (f == Factor::G) {
    const bool constant = m.a.is_constant() && m.b.is_constant() && m.c.is_constant() && m.d.is_constant();
    return constant && !m.det().is_zero();
  }
  return m.c.is_zero() && m.a.degree() == 0 && m.d.degree() == 0;
}

std::pair<MatPoly, MatPoly> split_coset(const MatPoly& m, Factor f) {
  if (!in_factor(m, f)) {
    throw std::invalid_argument("matrix " + format_matrix(m) + " is not in factor " + factor_char(f));
  }
  const Field& F = m.a.field_ptr() ? m.a.field() : m.d.field();
  const MatPoly id = MatPoly::identity(Poly::constant(F.one()));
  if (f == Factor::G) {
    if (m.c.is_zero()) return {m, id};
    const Fq y11 = m.a.constant_term(), y12 = m.b.constant_term();
    const Fq y21 = m.c.constant_term(), y22 = m.d.constant_term();
    const Fq x = y22 / y21;
    const MatPoly c{Poly::constant(y12 - y11 * x), Poly::constant(y11), Poly(F), Poly::constant(y21)};
    const MatPoly t{Poly(F), Poly::constant(F.one()), Poly::constant(F.one()), Poly::constant(x)};
    return {c, t};
  }
  const Poly a0 = Poly::constant(m.b.constant_term());
  const MatPoly c{m.a, a0, Poly(F), m.d};
  const MatPoly t = elementary_upper((m.b - a0) * m.a.constant_term().inverse());
  return {c, t};
}

AmalgamWord euclid_word(const MatPoly& m) {
  if (!in_gl2(m)) throw std::invalid_argument("matrix " + format_matrix(m) + " is not in GL2(F_q[t])");
  const Field& F = m.a.field_ptr() ? m.a.field() : m.c.field();
  const MatPoly w = weyl(F);
  AmalgamWord word;
  MatPoly cur = m;
  while (!cur.c.is_zero()) {
    // First column (a, c): a = x c + r, then swap rows so the new lower entry is r.
    const Poly x = cur.a.divmod(cur.c).first;
    if (!x.is_zero()) {
      word.push_back({Factor::B, elementary_upper(x)});
      cur = elementary_upper(-x) * cur;
    }
    word.push_back({Factor::G, w});
    cur = w * cur;
  }
  word.push_back({Factor::B, cur});
  return word;
}

AmalgamWord normalize(const AmalgamWord& w) {
  if (w.empty()) return {};
  const Field& F = w.front().m.a.field_ptr() ? w.front().m.a.field() : w.front().m.d.field();
  MatPoly c = MatPoly::identity(Poly::constant(F.one()));
  std::deque<AmalgamLetter> reps;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (!in_factor(it->m, it->factor)) {
      throw std::invalid_argument("letter " + format_matrix(it->m) + " is not in factor " + factor_char(it->factor));
    }
    MatPoly y = it->m * c;
    if (!reps.empty() && reps.front().factor == it->factor) {
      y = y * reps.front().m;
      reps.pop_front();
    }
    auto [c2, t] = split_coset(y, it->factor);
    c = std::move(c2);
    if (!t.is_identity()) reps.push_front({it->factor, std::move(t)});
  }
  AmalgamWord out;
  if (reps.empty()) {
    if (!c.is_identity()) out.push_back({Factor::G, c});
    return out;
  }
  out.assign(reps.begin(), reps.end());
  out.front().m = c * out.front().m;
  return out;
}

AmalgamWord decompose(const MatPoly& m) { return normalize(euclid_word(m)); }

MatPoly evaluate(const AmalgamWord& w, const Field& F) {
  MatPoly r = MatPoly::identity(Poly::constant(F.one()));
  for (const auto& l : w) r = r * l.m;
  return r;
}

AmalgamWord inverse(const AmalgamWord& w) {
  AmalgamWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->factor, it->m.inverse()});
  return out;
}

bool is_canonical(const AmalgamWord& w) { return normalize(w) == w; }

std::string format_word(const AmalgamWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ';';
    s += factor_char(w[i].factor);
    s += ':';
    s += format_matrix(w[i].m);
  }
  return s;
}

AmalgamWord parse_word(const Field& F, std::string_view text) {
  AmalgamWord out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(start, end - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (!part.empty()) {
      if (part.size() < 3 || part[1] != ':' || (part[0] != 'G' && part[0] != 'B')) {
        throw std::invalid_argument("malformed amalgam letter: '" + std::string(part) + "'");
      }
      const Factor f = part[0] == 'G' ? Factor::G : Factor::B;
      MatPoly m = parse_poly_matrix(F, part.substr(2));
      if (!in_factor(m, f)) {
        throw std::invalid_argument("letter " + std::string(part) + " is not in its factor");
      }
      out.push_back({f, std::move(m)});
    } else if (end != text.size()) {
      throw std::invalid_argument("empty amalgam letter in '" + std::string(text) + "'");
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace dmg
