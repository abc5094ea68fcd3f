#pragma once

// Free products of declared factors as reduced words, and the automorphisms
// generated by factor automorphisms (Type1), partial conjugations, factor
// swaps, the cyclic spike maps psi^i and psi^{i<->j}, and inner automorphisms.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "dmg/reiner.hpp"

namespace dmg {

enum class FactorKind { FiniteCyclic, MatrixBacked, Vector };

struct FactorDecl {
  FactorKind kind = FactorKind::FiniteCyclic;
  std::string name;
  std::uint64_t order = 0;               // FiniteCyclic
  std::shared_ptr<const Field> field;    // MatrixBacked, Vector
  bool constant_entries = false;         // MatrixBacked over F_q rather than F_q[t]
  std::string cusp;                      // cusp whose stabilizer this factor houses, if any

  static FactorDecl cyclic(std::string name, std::uint64_t n);
  static FactorDecl matrix(std::string name, std::shared_ptr<const Field> F, bool constant_entries = false);
  static FactorDecl vector(std::string name, std::shared_ptr<const Field> F);

  std::string kind_str() const;
  bool isomorphic_to(const FactorDecl& other) const;
};

/// Cyclic: exponent of the fixed generator. Matrix: the matrix. Vector: a
/// finite-support vector stored as a polynomial (basis e_i <-> t^i).
using FactorElem = std::variant<std::uint64_t, MatPoly, Poly>;

struct Letter {
  unsigned factor = 0;
  FactorElem elem;
  friend bool operator==(const Letter&, const Letter&) = default;
};
using FreeWord = std::vector<Letter>;

/// Factors amalgamated over a common central subgroup Z. Only |Z| = 1 (a
/// plain free product) is supported by the word operations.
class CentralAmalgamDecl {
 public:
  CentralAmalgamDecl(std::string name, unsigned q, std::vector<FactorDecl> factors, std::uint64_t centre_order = 1);

  const std::string& name() const { return name_; }
  unsigned q() const { return q_; }
  std::uint64_t centre_order() const { return centre_order_; }
  std::size_t size() const { return factors_.size(); }
  const FactorDecl& factor(unsigned i) const;
  const std::vector<FactorDecl>& factors() const { return factors_; }
  /// FiniteCyclic factors of order q^2 - 1.
  std::vector<unsigned> spike_factors() const;

  FactorElem identity(unsigned f) const;
  FactorElem mul(unsigned f, const FactorElem& x, const FactorElem& y) const;
  FactorElem inv(unsigned f, const FactorElem& x) const;
  bool is_identity(unsigned f, const FactorElem& x) const;
  /// Throws std::invalid_argument if x is not an element of factor f.
  void check(unsigned f, const FactorElem& x) const;
  std::string elem_str(unsigned f, const FactorElem& x) const;
  FactorElem parse_elem(unsigned f, std::string_view text) const;

 private:
  std::string name_;
  unsigned q_;
  std::vector<FactorDecl> factors_;
  std::uint64_t centre_order_;
};

FreeWord word_reduce(const CentralAmalgamDecl& d, const std::vector<Letter>& letters);
FreeWord word_mul(const CentralAmalgamDecl& d, const FreeWord& u, const FreeWord& v);
FreeWord word_inverse(const CentralAmalgamDecl& d, const FreeWord& w);
/// "f0:[[1,t],[0,1]]·f1:2"; the identity is "".
std::string format_free_word(const CentralAmalgamDecl& d, const FreeWord& w);
/// Letters separated by "·" or "*"; the result is reduced.
FreeWord parse_free_word(const CentralAmalgamDecl& d, std::string_view text);

// ---------------------------------------------------------------- generators

struct CyclicPower { std::uint64_t exponent = 1; };
struct ReinerTwist { LinearAutoSpec spec; };
struct LinearVectorMap { SparseLinearMap forward, inverse; };
struct MatrixConjugation { MatPoly h; };
using FactorAuto = std::variant<CyclicPower, ReinerTwist, LinearVectorMap, MatrixConjugation>;

struct Type1 { unsigned factor; FactorAuto aut; };
/// Letters of factor `to` are conjugated by `element` of factor `from`.
struct PartialConj { unsigned from, to; FactorElem element; };
/// Interchanges isomorphic factors i and j: x in i -> iso(x) in j, y in j -> iso^-1(y) in i.
/// The isomorphism is x -> x^exponent (cyclic), v -> exponent * v (vector, exponent
/// a field element code) or the identity (matrix, exponent 1).
struct Swap { unsigned i, j; std::uint64_t exponent = 1; };
/// psi^i: x -> x^a on spike factor i, a in the exponent set of the field.
struct PsiSingle { unsigned factor; std::uint64_t exponent; };
/// psi^{i<->j}: exponent a from C_i to C_j and a^-1 back.
struct PsiSwap { unsigned i, j; std::uint64_t exponent; };
struct Inner { FreeWord conjugator; };

using AutoGen = std::variant<Type1, PartialConj, Swap, PsiSingle, PsiSwap, Inner>;

/// Throws std::invalid_argument for an ill-formed generator (bad index, wrong
/// factor kind, non-invertible exponent, swap of non-isomorphic factors).
void validate_gen(const CentralAmalgamDecl& d, const AutoGen& g);
FreeWord apply_gen(const CentralAmalgamDecl& d, const AutoGen& g, const FreeWord& w);
AutoGen inverse_gen(const CentralAmalgamDecl& d, const AutoGen& g);
std::string gen_str(const CentralAmalgamDecl& d, const AutoGen& g);

/// Generators applied in listed order.
class Automorphism {
 public:
  Automorphism(const CentralAmalgamDecl& d, std::vector<AutoGen> gens);
  FreeWord apply(const FreeWord& w) const;
  Automorphism inverse() const;
  const std::vector<AutoGen>& generators() const { return gens_; }

 private:
  const CentralAmalgamDecl* decl_;
  std::vector<AutoGen> gens_;
};

Automorphism compose_autos(const CentralAmalgamDecl& d, std::vector<AutoGen> gens);

/// Script format: array of {"type": "type1"|"partial_conj"|"swap"|"psi"|"psi_swap"|"inner", ...}.
std::vector<AutoGen> parse_script(const CentralAmalgamDecl& d, const nlohmann::json& script);

// ---------------------------------------------------------------- reports

struct WreathReport {
  unsigned r = 0, q = 0;
  std::uint64_t exponent_count = 0;  // |A|
  std::uint64_t order = 0;           // closure size
  std::uint64_t expected = 0;        // r! |A|^r
  bool projection_onto = false;      // permutation part covers S_r
  bool ok() const { return order == expected && projection_onto; }
  nlohmann::ordered_json to_json() const;
};
/// Closure of all psi^i and psi^{i<->j} on r spike factors of order q^2 - 1.
WreathReport cs_wreath_check(unsigned r, unsigned q);

/// Factors H, <M0>, <M1> (one cusp).
CentralAmalgamDecl build_ex1cusp();
/// Factors H, <M1>, A0, A1 (cusps inf, (0,0), (0,1)).
CentralAmalgamDecl build_ex3cusps();
CentralAmalgamDecl build_decl(std::string_view name);

struct OrbitReport {
  std::vector<std::vector<std::string>> orbits;  // cusp labels
  nlohmann::ordered_json to_json() const;
};
/// Cusp-housing factors joined whenever an implemented generator can swap them.
OrbitReport aut_cusp_orbit_report(const CentralAmalgamDecl& d);

// ---------------------------------------------------------------- D_inf

/// Index of the subgroup generated by `subgroup` in the group with the given
/// relators, by Todd-Coxeter coset enumeration. Words use letters 2k (generator
/// k) and 2k+1 (its inverse). Throws std::runtime_error past `cap` cosets.
std::size_t subgroup_index(unsigned generators, const std::vector<std::vector<unsigned>>& relators,
                           const std::vector<std::vector<unsigned>>& subgroup, std::size_t cap = 10000);

enum class DihedralVariant { PartialConjugation, FullInner, ConjugateAByB };

struct DihedralReport {
  std::string variant;
  std::string image_a, image_b;
  std::size_t index = 0;
  int max_length = 0;
  std::size_t words_checked = 0;
  bool injective = false;
  nlohmann::ordered_json to_json() const;
};
/// D_inf = <a> * <b> with a^2 = b^2 = 1 and an endomorphism fixing b.
DihedralReport dihedral_cohopf_demo(DihedralVariant v = DihedralVariant::PartialConjugation, int max_length = 12);
DihedralVariant parse_dihedral_variant(std::string_view s);

}  // namespace dmg
