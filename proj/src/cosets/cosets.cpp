#include "dmg/cosets.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace dmg {

namespace {

constexpr std::uint32_t kTableLimit = 729;

std::uint64_t pack(const RMat& m) {
  return (std::uint64_t{m[0]} << 48) | (std::uint64_t{m[1]} << 32) | (std::uint64_t{m[2]} << 16) | m[3];
}

}  // namespace

// ---------------------------------------------------------------- QuotRing

QuotRing::QuotRing(std::shared_ptr<const Field> F, Poly modulus) : field_(std::move(F)), modulus_(std::move(modulus)) {
  if (modulus_.degree() < 1) throw std::invalid_argument("quotient modulus must have degree >= 1");
  modulus_ = modulus_.monic();
  len_ = static_cast<unsigned>(modulus_.degree());
  std::uint64_t sz = 1;
  for (unsigned i = 0; i < len_; ++i) {
    sz *= field_->q();
    if (sz > 65536) throw std::invalid_argument("quotient ring too large (more than 65536 residues)");
  }
  size_ = static_cast<std::uint32_t>(sz);
  unit_.resize(size_);
  for (std::uint32_t x = 0; x < size_; ++x) unit_[x] = gcd(lift(x), modulus_).is_one();
  if (size_ <= kTableLimit) {
    add_.resize(std::size_t{size_} * size_);
    mul_.resize(std::size_t{size_} * size_);
    for (std::uint32_t x = 0; x < size_; ++x) {
      const Poly px = lift(x);
      for (std::uint32_t y = 0; y < size_; ++y) {
        const Poly py = lift(y);
        add_[std::size_t{x} * size_ + y] = static_cast<std::uint16_t>(reduce(px + py));
        mul_[std::size_t{x} * size_ + y] = static_cast<std::uint16_t>(reduce(px * py));
      }
    }
  }
}

std::uint32_t QuotRing::reduce(const Poly& p) const { return static_cast<std::uint32_t>((p % modulus_).code()); }

Poly QuotRing::lift(std::uint32_t x) const { return Poly::from_code(*field_, x, len_); }

std::uint32_t QuotRing::add(std::uint32_t x, std::uint32_t y) const {
  if (!add_.empty()) return add_[std::size_t{x} * size_ + y];
  return reduce(lift(x) + lift(y));
}

std::uint32_t QuotRing::sub(std::uint32_t x, std::uint32_t y) const { return reduce(lift(x) - lift(y)); }

std::uint32_t QuotRing::mul(std::uint32_t x, std::uint32_t y) const {
  if (!mul_.empty()) return mul_[std::size_t{x} * size_ + y];
  return reduce(lift(x) * lift(y));
}

RMat reduce(const MatPoly& m, const QuotRing& R) {
  return {R.reduce(m.a), R.reduce(m.b), R.reduce(m.c), R.reduce(m.d)};
}

std::string format_rmat(const RMat& m, const QuotRing& R) {
  return "[[" + R.str(m[0]) + "," + R.str(m[1]) + "],[" + R.str(m[2]) + "," + R.str(m[3]) + "]]";
}

RMat rmat_mul(const RMat& x, const RMat& y, const QuotRing& R) {
  return {R.add(R.mul(x[0], y[0]), R.mul(x[1], y[2])), R.add(R.mul(x[0], y[1]), R.mul(x[1], y[3])),
          R.add(R.mul(x[2], y[0]), R.mul(x[3], y[2])), R.add(R.mul(x[2], y[1]), R.mul(x[3], y[3]))};
}

std::uint32_t rmat_det(const RMat& x, const QuotRing& R) { return R.sub(R.mul(x[0], x[3]), R.mul(x[1], x[2])); }

// ---------------------------------------------------------------- FiniteGroup

std::uint32_t FiniteGroup::insert(const RMat& m) {
  auto [it, fresh] = index_.try_emplace(pack(m), static_cast<std::uint32_t>(elems_.size()));
  if (fresh) elems_.push_back(m);
  return it->second;
}

long FiniteGroup::index_of(const RMat& m) const {
  auto it = index_.find(pack(m));
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

std::uint32_t FiniteGroup::mul(std::uint32_t i, std::uint32_t j) const {
  const long k = index_of(rmat_mul(elems_[i], elems_[j], *ring_));
  if (k < 0) throw std::logic_error("finite group is not closed under multiplication");
  return static_cast<std::uint32_t>(k);
}

void FiniteGroup::finish() {
  const QuotRing& R = *ring_;
  inv_.assign(elems_.size(), 0);
  std::vector<std::uint32_t> unit_inv(R.size(), 0);
  for (std::uint32_t x = 0; x < R.size(); ++x)
    if (R.is_unit(x))
      for (std::uint32_t y = 0; y < R.size(); ++y)
        if (R.mul(x, y) == 1) unit_inv[x] = y;
  for (std::uint32_t i = 0; i < elems_.size(); ++i) {
    const RMat& m = elems_[i];
    const std::uint32_t di = unit_inv[rmat_det(m, R)];
    const std::uint32_t zero = 0;
    const RMat inv{R.mul(m[3], di), R.mul(R.sub(zero, m[1]), di), R.mul(R.sub(zero, m[2]), di), R.mul(m[0], di)};
    const long k = index_of(inv);
    if (k < 0) throw std::logic_error("finite group is not closed under inversion");
    inv_[i] = static_cast<std::uint32_t>(k);
  }
}

FiniteGroup FiniteGroup::general_linear(std::shared_ptr<const QuotRing> R) {
  const std::uint64_t n = R->size();
  if (n > 64) throw std::invalid_argument("GL2(R) enumeration limited to |R| <= 64");
  FiniteGroup G(R);
  G.insert({1, 0, 0, 1});
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        for (std::uint32_t d = 0; d < n; ++d) {
          const RMat m{a, b, c, d};
          if (R->is_unit(rmat_det(m, *R))) G.insert(m);
        }
  G.finish();
  return G;
}

FiniteGroup FiniteGroup::generated(std::shared_ptr<const QuotRing> R, const std::vector<RMat>& gens) {
  for (const RMat& g : gens) {
    if (!R->is_unit(rmat_det(g, *R))) throw std::invalid_argument("generator " + format_rmat(g, *R) + " is not invertible");
  }
  FiniteGroup G(R);
  G.insert({1, 0, 0, 1});
  for (std::size_t i = 0; i < G.elems_.size(); ++i) {
    for (const RMat& g : gens) {
      const RMat m = rmat_mul(G.elems_[i], g, *R);
      G.insert(m);
    }
  }
  G.finish();
  return G;
}

FiniteGroup FiniteGroup::polynomial_image(std::shared_ptr<const QuotRing> R) {
  const Field& F = R->field();
  const Poly& m = R->modulus();
  std::vector<RMat> gens;
  for (unsigned k = 0; k < static_cast<unsigned>(m.degree()); ++k) {
    for (Fq c : F.elements()) {
      if (c.is_zero()) continue;
      const std::uint32_t x = R->reduce(Poly::monomial(c, k));
      gens.push_back({1, x, 0, 1});
      gens.push_back({1, 0, x, 1});
    }
  }
  const std::uint32_t g = R->reduce(Poly::constant(F.generator()));
  gens.push_back({g, 0, 0, 1});
  gens.push_back({1, 0, 0, g});
  return generated(std::move(R), gens);
}

// ---------------------------------------------------------------- subgroups

bool Subgroup::contains(std::uint32_t i) const { return std::binary_search(elements.begin(), elements.end(), i); }

Subgroup closure(const FiniteGroup& G, const std::vector<std::uint32_t>& gens) {
  std::vector<bool> seen(G.order(), false);
  std::vector<std::uint32_t> elems{0};
  seen[0] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::uint32_t g : gens) {
      const std::uint32_t x = G.mul(elems[i], g);
      if (!seen[x]) {
        seen[x] = true;
        elems.push_back(x);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return {std::move(elems), gens};
}

Subgroup trivial_subgroup(const FiniteGroup& G) { return closure(G, {}); }

Subgroup whole_group(const FiniteGroup& G) {
  // Greedy generating set: add the first element outside the current closure.
  Subgroup s = trivial_subgroup(G);
  for (std::uint32_t i = 0; i < G.order() && s.order() < G.order(); ++i) {
    if (s.contains(i)) continue;
    auto gens = s.generators;
    gens.push_back(i);
    s = closure(G, gens);
  }
  return s;
}

Subgroup conjugate(const FiniteGroup& G, const Subgroup& H, std::uint32_t g) {
  const std::uint32_t gi = G.inverse(g);
  auto conj = [&](std::uint32_t h) { return G.mul(G.mul(g, h), gi); };
  Subgroup out;
  for (std::uint32_t h : H.elements) out.elements.push_back(conj(h));
  for (std::uint32_t h : H.generators) out.generators.push_back(conj(h));
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<Subgroup> result;
  std::vector<std::uint32_t> cyclic_gens;
  for (std::uint32_t g = 0; g < G.order(); ++g) {
    Subgroup c = closure(G, {g});
    if (seen.insert(c.elements).second) {
      cyclic_gens.push_back(g);
      result.push_back(std::move(c));
    }
  }
  for (std::size_t i = 0; i < result.size(); ++i) {
    for (std::uint32_t g : cyclic_gens) {
      if (result[i].contains(g)) continue;
      std::vector<std::uint32_t> gens = result[i].generators;
      gens.push_back(g);
      Subgroup j = closure(G, gens);
      if (seen.insert(j.elements).second) result.push_back(std::move(j));
    }
  }
  std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.elements < b.elements;
  });
  return result;
}

Subgroup image_cusp_stab(const FiniteGroup& G) {
  const QuotRing& R = G.ring();
  const Field& F = R.field();
  std::vector<std::uint32_t> gens;
  auto add = [&](const RMat& m) {
    const long k = G.index_of(m);
    if (k < 0) throw std::invalid_argument("cusp stabilizer image is not contained in the ambient group");
    gens.push_back(static_cast<std::uint32_t>(k));
  };
  for (unsigned k = 0; k < static_cast<unsigned>(R.modulus().degree()); ++k)
    for (Fq c : F.elements())
      if (!c.is_zero()) add({1, R.reduce(Poly::monomial(c, k)), 0, 1});
  const std::uint32_t g = R.reduce(Poly::constant(F.generator()));
  add({g, 0, 0, 1});
  add({1, 0, 0, g});
  return closure(G, gens);
}

DoubleCosets double_cosets(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
  const auto& hg = H.generators.empty() && H.order() > 1 ? H.elements : H.generators;
  const auto& kg = K.generators.empty() && K.order() > 1 ? K.elements : K.generators;
  DoubleCosets out;
  std::vector<bool> seen(G.order(), false);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t g = 0; g < G.order(); ++g) {
    if (seen[g]) continue;
    std::size_t size = 0;
    seen[g] = true;
    queue.push_back(g);
    while (!queue.empty()) {
      const std::uint32_t x = queue.front();
      queue.pop_front();
      ++size;
      for (std::uint32_t h : hg) {
        const std::uint32_t y = G.mul(h, x);
        if (!seen[y]) seen[y] = true, queue.push_back(y);
      }
      for (std::uint32_t k : kg) {
        const std::uint32_t y = G.mul(x, k);
        if (!seen[y]) seen[y] = true, queue.push_back(y);
      }
    }
    out.representatives.push_back(g);
    out.sizes.push_back(size);
  }
  return out;
}

std::size_t double_coset_count(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
  return double_cosets(G, H, K).count();
}

std::size_t cusp_count(const FiniteGroup& image, const Subgroup& hbar) {
  return double_coset_count(image, hbar, image_cusp_stab(image));
}

ConjugationReport conj_invariance_check(const FiniteGroup& G, const Subgroup& hbar) {
  const Subgroup K = image_cusp_stab(G);
  ConjugationReport rep;
  rep.base_count = double_coset_count(G, hbar, K);
  for (std::uint32_t g = 0; g < G.order(); ++g) {
    const std::size_t c = double_coset_count(G, conjugate(G, hbar, g), K);
    rep.counts.push_back(c);
    if (c != rep.base_count) rep.invariant = false;
  }
  return rep;
}

}  // namespace dmg
