#pragma once

// Reiner automorphisms of GL2(F_q[t]) at the cusp infinity.
//
// A linear automorphism phi of V* = t F_q[t] (identity on V_0 = F_q) acts on
// the cusp stabilizer by [[alpha, a], [0, beta]] -> [[alpha, a_0 + phi(a - a_0)],
// [0, beta]]. Because it fixes B2(F_q) pointwise it extends to the amalgam
// GL2(F_q) *_{B2(F_q)} B2(F_q[t]) as the identity on GL2(F_q).

#include <map>
#include <memory>
#include <vector>

#include <json.hpp>

#include "dmg/nagao.hpp"

namespace dmg {

/// Linear map on finite-support coefficient vectors (stored as polynomials,
/// basis vector i <-> t^i) which is the identity outside a finite support.
class SparseLinearMap {
 public:
  SparseLinearMap() = default;
  explicit SparseLinearMap(const Field& F) : field_(&F) {}

  void set(unsigned index, Poly image);
  Poly apply(const Poly& v) const;
  Poly image(unsigned index) const;
  const std::map<unsigned, Poly>& images() const { return images_; }
  /// Support indices together with every index their images touch.
  std::vector<unsigned> closed_support() const;
  bool is_identity() const;
  SparseLinearMap compose(const SparseLinearMap& inner) const;  // this o inner
  /// Inverse by Gaussian elimination on closed_support(); throws if singular.
  SparseLinearMap inverted() const;

  friend bool operator==(const SparseLinearMap& a, const SparseLinearMap& b);

 private:
  const Field* field_ = nullptr;
  std::map<unsigned, Poly> images_;
};

/// {"i": image, ...} with images as little-endian coefficient lists or polynomial text.
SparseLinearMap sparse_map_from_json(const Field& F, const nlohmann::json& j);
nlohmann::ordered_json sparse_map_to_json(const SparseLinearMap& m);

/// phi on V* = t F_q[t] together with its stored inverse.
class LinearAutoSpec {
 public:
  /// Throws std::invalid_argument if an index or image touches t^0, or if the
  /// stored inverse does not invert the forward map.
  LinearAutoSpec(std::shared_ptr<const Field> F, SparseLinearMap forward, SparseLinearMap inverse);
  static LinearAutoSpec identity(std::shared_ptr<const Field> F);
  static LinearAutoSpec with_computed_inverse(std::shared_ptr<const Field> F, SparseLinearMap forward);

  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  const SparseLinearMap& forward() const { return forward_; }
  const SparseLinearMap& inverse() const { return inverse_; }
  /// phi(v) for v with zero constant term.
  Poly apply(const Poly& v) const;

  /// {"q": 2, "forward": {"1": ["0","0","1"]}, "inverse": {...}}; images are
  /// little-endian coefficient lists (strings or integers) or polynomial text.
  static LinearAutoSpec from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;

 private:
  std::shared_ptr<const Field> field_;
  SparseLinearMap forward_, inverse_;
};

LinearAutoSpec reiner_inverse(const LinearAutoSpec& spec);

/// Action on G(inf); throws for non-triangular input.
MatPoly reiner_on_cuspstab(const LinearAutoSpec& spec, const MatPoly& m);
/// Extension to GL2(F_q[t]) through the amalgam normal form.
MatPoly reiner_apply(const LinearAutoSpec& spec, const MatPoly& m);

struct CongruenceIdeal {
  Poly modulus;  // monic, nonzero
  explicit CongruenceIdeal(Poly m);
};

/// det = 1 and m - I = 0 mod the ideal.
bool congruence_member(const MatPoly& m, const CongruenceIdeal& ideal);

/// {a : deg a <= N, T(a) in tau(Gamma(q))} where tau = reiner_apply(spec).
std::vector<Poly> fiber_by_definition(const LinearAutoSpec& spec, const CongruenceIdeal& ideal, int degree_bound);
/// {a : a_0 + phi^{-1}(a - a_0) = 0 mod q}.
std::vector<Poly> fiber_closed_form(const LinearAutoSpec& spec, const CongruenceIdeal& ideal, int degree_bound);
/// Both routes; throws std::logic_error if they disagree.
std::vector<Poly> unipotent_fiber(const LinearAutoSpec& spec, const CongruenceIdeal& ideal, int degree_bound);
/// Closure under addition and F_q-scaling.
bool is_subspace(const std::vector<Poly>& set);

}  // namespace dmg
