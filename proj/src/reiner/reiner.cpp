#include "dmg/reiner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dmg {

// ---------------------------------------------------------------- SparseLinearMap

void SparseLinearMap::set(unsigned index, Poly image) {
  if (!field_) field_ = image.field_ptr();
  if (image == Poly::monomial(*field_, index)) {
    images_.erase(index);
  } else {
    images_[index] = std::move(image);
  }
}

Poly SparseLinearMap::image(unsigned index) const {
  auto it = images_.find(index);
  return it == images_.end() ? Poly::monomial(*field_, index) : it->second;
}

Poly SparseLinearMap::apply(const Poly& v) const {
  if (images_.empty()) return v;
  Poly out(v.field());
  const auto& raw = v.raw();
  for (unsigned i = 0; i < raw.size(); ++i) {
    if (raw[i] == 0) continue;
    const Fq c{&v.field(), raw[i]};
    auto it = images_.find(i);
    out += it == images_.end() ? Poly::monomial(c, i) : it->second.scaled(c);
  }
  return out;
}

std::vector<unsigned> SparseLinearMap::closed_support() const {
  std::set<unsigned> s;
  for (const auto& [i, img] : images_) {
    s.insert(i);
    for (unsigned k = 0; k < img.raw().size(); ++k)
      if (img.raw()[k] != 0) s.insert(k);
  }
  return {s.begin(), s.end()};
}

bool SparseLinearMap::is_identity() const { return images_.empty(); }

SparseLinearMap SparseLinearMap::compose(const SparseLinearMap& inner) const {
  const Field* F = field_ ? field_ : inner.field_;
  SparseLinearMap out(*F);
  std::set<unsigned> idx;
  for (const auto& [i, img] : inner.images_) idx.insert(i);
  for (const auto& [i, img] : images_) idx.insert(i);
  for (unsigned i : idx) out.set(i, apply(inner.image(i)));
  return out;
}

SparseLinearMap SparseLinearMap::inverted() const {
  if (images_.empty()) return *this;
  const Field& F = *field_;
  const auto support = closed_support();
  const std::size_t n = support.size();
  auto pos = [&](unsigned index) {
    return static_cast<std::size_t>(std::lower_bound(support.begin(), support.end(), index) - support.begin());
  };
  // Column j of `a` is the image of basis vector support[j]; solve a x = e_i
  // for every i by row-reducing [a | I].
  std::vector<std::vector<Fq>> aug(n, std::vector<Fq>(2 * n, F.zero()));
  for (std::size_t j = 0; j < n; ++j) {
    const Poly img = image(support[j]);
    for (unsigned k = 0; k < img.raw().size(); ++k) {
      if (img.raw()[k] == 0) continue;
      aug[pos(k)][j] = F.elem(img.raw()[k]);
    }
    aug[j][n + j] = F.one();
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && aug[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::invalid_argument("linear map is not invertible on its support");
    std::swap(aug[piv], aug[col]);
    const Fq inv = aug[col][col].inverse();
    for (auto& x : aug[col]) x = x * inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col].is_zero()) continue;
      const Fq f = aug[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) aug[r][k] = aug[r][k] - f * aug[col][k];
    }
  }
  SparseLinearMap out(F);
  for (std::size_t j = 0; j < n; ++j) {
    Poly img(F);
    for (std::size_t r = 0; r < n; ++r) img += Poly::monomial(aug[r][n + j], support[r]);
    out.set(support[j], img);
  }
  return out;
}

bool operator==(const SparseLinearMap& a, const SparseLinearMap& b) { return a.images_ == b.images_; }

// ---------------------------------------------------------------- LinearAutoSpec

LinearAutoSpec::LinearAutoSpec(std::shared_ptr<const Field> F, SparseLinearMap forward, SparseLinearMap inverse)
    : field_(std::move(F)), forward_(std::move(forward)), inverse_(std::move(inverse)) {
  for (const SparseLinearMap* m : {&forward_, &inverse_}) {
    for (const auto& [i, img] : m->images()) {
      if (i == 0) throw std::invalid_argument("linear spec must fix V_0 = F_q (index 0 given)");
      if (!img.constant_term().is_zero()) {
        throw std::invalid_argument("image of t^" + std::to_string(i) + " leaves t F_q[t]");
      }
    }
  }
  std::set<unsigned> idx;
  for (const SparseLinearMap* m : {&forward_, &inverse_})
    for (unsigned i : m->closed_support()) idx.insert(i);
  for (unsigned i : idx) {
    const Poly e = Poly::monomial(*field_, i);
    if (inverse_.apply(forward_.apply(e)) != e || forward_.apply(inverse_.apply(e)) != e) {
      throw std::invalid_argument("stored inverse is inconsistent with the forward map at t^" + std::to_string(i));
    }
  }
}

LinearAutoSpec LinearAutoSpec::identity(std::shared_ptr<const Field> F) {
  const Field& f = *F;
  return LinearAutoSpec(std::move(F), SparseLinearMap(f), SparseLinearMap(f));
}

LinearAutoSpec LinearAutoSpec::with_computed_inverse(std::shared_ptr<const Field> F, SparseLinearMap forward) {
  SparseLinearMap inv = forward.inverted();
  return LinearAutoSpec(std::move(F), std::move(forward), std::move(inv));
}

Poly LinearAutoSpec::apply(const Poly& v) const {
  if (!v.constant_term().is_zero()) throw std::invalid_argument("phi is applied to t F_q[t] only");
  return forward_.apply(v);
}

SparseLinearMap sparse_map_from_json(const Field& F, const nlohmann::json& j) {
  SparseLinearMap m(F);
  if (!j.is_object()) throw std::invalid_argument("linear map must be a JSON object");
  for (const auto& [key, val] : j.items()) {
    std::size_t pos = 0;
    const unsigned long idx = std::stoul(key, &pos);
    if (pos != key.size()) throw std::invalid_argument("bad monomial index '" + key + "'");
    Poly img(F);
    if (val.is_string()) {
      img = Poly::parse(F, val.get<std::string>());
    } else if (val.is_array()) {
      std::vector<std::uint32_t> c;
      for (const auto& x : val) c.push_back(x.is_string() ? F.parse(x.get<std::string>()).v : F.from_int(x.get<long long>()).v);
      img = Poly(F, c);
    } else {
      throw std::invalid_argument("image of t^" + key + " must be a coefficient list or polynomial text");
    }
    m.set(static_cast<unsigned>(idx), img);
  }
  return m;
}

nlohmann::ordered_json sparse_map_to_json(const SparseLinearMap& m) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [i, img] : m.images()) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (unsigned k = 0; k <= static_cast<unsigned>(img.degree()); ++k) coeffs.push_back(img.coeff(k).str());
    j[std::to_string(i)] = coeffs;
  }
  return j;
}

LinearAutoSpec LinearAutoSpec::from_json(const nlohmann::json& j) {
  try {
    auto F = Field::of_order(j.at("q").get<unsigned>());
    SparseLinearMap fwd = sparse_map_from_json(*F, j.at("forward"));
    if (!j.contains("inverse")) throw std::invalid_argument("linear spec needs an explicit \"inverse\" map");
    SparseLinearMap inv = sparse_map_from_json(*F, j.at("inverse"));
    return LinearAutoSpec(F, std::move(fwd), std::move(inv));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed linear spec: ") + e.what());
  }
}

nlohmann::ordered_json LinearAutoSpec::to_json() const {
  nlohmann::ordered_json j;
  j["q"] = field_->q();
  j["forward"] = sparse_map_to_json(forward_);
  j["inverse"] = sparse_map_to_json(inverse_);
  return j;
}

LinearAutoSpec reiner_inverse(const LinearAutoSpec& spec) {
  return LinearAutoSpec(spec.field_ptr(), spec.inverse(), spec.forward());
}

// ---------------------------------------------------------------- action

MatPoly reiner_on_cuspstab(const LinearAutoSpec& spec, const MatPoly& m) {
  if (!in_factor(m, Factor::B)) {
    throw std::invalid_argument("matrix " + format_matrix(m) + " is not in the cusp stabilizer G(inf)");
  }
  const Poly a0 = Poly::constant(m.b.constant_term());
  return {m.a, a0 + spec.apply(m.b - a0), m.c, m.d};
}

MatPoly reiner_apply(const LinearAutoSpec& spec, const MatPoly& m) {
  AmalgamWord w = decompose(m);
  for (auto& letter : w) {
    if (letter.factor == Factor::B) letter.m = reiner_on_cuspstab(spec, letter.m);
  }
  return evaluate(w, spec.field());
}

CongruenceIdeal::CongruenceIdeal(Poly m) : modulus(std::move(m)) {
  if (modulus.is_zero()) throw std::invalid_argument("congruence modulus must be nonzero");
  modulus = modulus.monic();
}

bool congruence_member(const MatPoly& m, const CongruenceIdeal& ideal) {
  if (!m.det().is_one()) return false;
  const Poly& q = ideal.modulus;
  const Poly one = q.one();
  return q.divides(m.a - one) && q.divides(m.b) && q.divides(m.c) && q.divides(m.d - one);
}

std::vector<Poly> fiber_by_definition(const LinearAutoSpec& spec, const CongruenceIdeal& ideal, int degree_bound) {
  const LinearAutoSpec inv = reiner_inverse(spec);
  std::vector<Poly> out;
  for (const Poly& a : all_polys(spec.field(), degree_bound)) {
    if (congruence_member(reiner_apply(inv, elementary_upper(a)), ideal)) out.push_back(a);
  }
  return out;
}

std::vector<Poly> fiber_closed_form(const LinearAutoSpec& spec, const CongruenceIdeal& ideal, int degree_bound) {
  std::vector<Poly> out;
  for (const Poly& a : all_polys(spec.field(), degree_bound)) {
    const Poly a0 = Poly::constant(a.constant_term());
    if (ideal.modulus.divides(a0 + spec.inverse().apply(a - a0))) out.push_back(a);
  }
  return out;
}

std::vector<Poly> unipotent_fiber(const LinearAutoSpec& spec, const CongruenceIdeal& ideal, int degree_bound) {
  if (degree_bound < ideal.modulus.degree()) {
    throw std::invalid_argument("degree bound must be at least the degree of the modulus");
  }
  auto by_def = fiber_by_definition(spec, ideal, degree_bound);
  auto closed = fiber_closed_form(spec, ideal, degree_bound);
  if (by_def != closed) throw std::logic_error("unipotent fiber: definition and closed form disagree");
  return by_def;
}

bool is_subspace(const std::vector<Poly>& set) {
  if (set.empty()) return false;
  const Field& F = set.front().field();
  std::set<Poly> s(set.begin(), set.end());
  if (!s.count(Poly(F))) return false;
  for (const Poly& x : set) {
    for (const Poly& y : set)
      if (!s.count(x + y)) return false;
    for (Fq k : F.elements())
      if (!s.count(x.scaled(k))) return false;
  }
  return true;
}

}  // namespace dmg
