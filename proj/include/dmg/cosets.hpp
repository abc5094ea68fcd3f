#pragma once

// Finite quotients R = F_q[t]/(m) and 2x2 matrix groups over them, used to
// count cusps of congruence-type subgroups through double cosets.

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "dmg/matgroup.hpp"

namespace dmg {

/// Residues are encoded by Poly::code() of the representative of degree < deg m.
class QuotRing {
 public:
  QuotRing(std::shared_ptr<const Field> F, Poly modulus);

  const Field& field() const { return *field_; }
  const Poly& modulus() const { return modulus_; }
  std::uint32_t size() const { return size_; }

  std::uint32_t reduce(const Poly& p) const;
  Poly lift(std::uint32_t x) const;
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;
  bool is_unit(std::uint32_t x) const { return unit_[x]; }
  std::string str(std::uint32_t x) const { return lift(x).str(); }

 private:
  std::shared_ptr<const Field> field_;
  Poly modulus_;
  std::uint32_t size_;
  unsigned len_;
  std::vector<std::uint16_t> add_, mul_;  // size_^2 tables when small
  std::vector<bool> unit_;
};

using RMat = std::array<std::uint32_t, 4>;  // a, b, c, d residue codes

RMat reduce(const MatPoly& m, const QuotRing& R);
std::string format_rmat(const RMat& m, const QuotRing& R);

/// An explicit finite group of invertible 2x2 matrices over R; element 0 is I.
class FiniteGroup {
 public:
  /// All of GL2(R).
  static FiniteGroup general_linear(std::shared_ptr<const QuotRing> R);
  /// Image of GL2(F_q[t]) under reduction, generated by elementary and
  /// F_q^*-diagonal matrices.
  static FiniteGroup polynomial_image(std::shared_ptr<const QuotRing> R);
  static FiniteGroup generated(std::shared_ptr<const QuotRing> R, const std::vector<RMat>& gens);

  const QuotRing& ring() const { return *ring_; }
  const std::shared_ptr<const QuotRing>& ring_ptr() const { return ring_; }
  std::size_t order() const { return elems_.size(); }
  const RMat& element(std::uint32_t i) const { return elems_[i]; }
  /// Index of m, or -1 if m is not in the group.
  long index_of(const RMat& m) const;
  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const;
  std::uint32_t inverse(std::uint32_t i) const { return inv_[i]; }

 private:
  explicit FiniteGroup(std::shared_ptr<const QuotRing> R) : ring_(std::move(R)) {}
  std::uint32_t insert(const RMat& m);
  void finish();

  std::shared_ptr<const QuotRing> ring_;
  std::vector<RMat> elems_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::uint32_t> inv_;
};

RMat rmat_mul(const RMat& x, const RMat& y, const QuotRing& R);
std::uint32_t rmat_det(const RMat& x, const QuotRing& R);

/// A subgroup of a FiniteGroup: sorted element indices plus generators.
struct Subgroup {
  std::vector<std::uint32_t> elements;
  std::vector<std::uint32_t> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(std::uint32_t i) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements == b.elements; }
};

Subgroup closure(const FiniteGroup& G, const std::vector<std::uint32_t>& gens);
Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup whole_group(const FiniteGroup& G);
Subgroup conjugate(const FiniteGroup& G, const Subgroup& H, std::uint32_t g);  // g H g^-1
/// Every subgroup of G, built as joins of cyclic subgroups, sorted by (order, elements).
std::vector<Subgroup> all_subgroups(const FiniteGroup& G);

/// {[alpha a; 0 beta] : alpha, beta in F_q^*, a in R} inside G.
Subgroup image_cusp_stab(const FiniteGroup& G);

struct DoubleCosets {
  std::vector<std::uint32_t> representatives;
  std::vector<std::size_t> sizes;
  std::size_t count() const { return representatives.size(); }
};
DoubleCosets double_cosets(const FiniteGroup& G, const Subgroup& H, const Subgroup& K);
std::size_t double_coset_count(const FiniteGroup& G, const Subgroup& H, const Subgroup& K);

/// |Hbar \ Gbar / image(G(inf))| with Gbar = the reduction image of GL2(F_q[t]).
std::size_t cusp_count(const FiniteGroup& image, const Subgroup& hbar);

struct ConjugationReport {
  bool invariant = true;
  std::size_t base_count = 0;
  std::vector<std::size_t> counts;  // one per conjugating element, in index order
};
/// Double-coset count of every conjugate g Hbar g^-1 (g in G) against image_cusp_stab(G).
ConjugationReport conj_invariance_check(const FiniteGroup& G, const Subgroup& hbar);

}  // namespace dmg
