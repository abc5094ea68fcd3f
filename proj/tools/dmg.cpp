// Command-line front end. Every subcommand prints deterministic JSON (DOT for
// graph-export) and exits 0 on success, 2 on malformed input.

#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "dmg/cosets.hpp"
#include "dmg/curve.hpp"
#include "dmg/graphs.hpp"
#include "dmg/nagao.hpp"
#include "dmg/reiner.hpp"
#include "dmg/words.hpp"

using namespace dmg;
using ojson = nlohmann::ordered_json;

namespace {

void emit(const ojson& j) { std::cout << j.dump(2) << "\n"; }

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::shared_ptr<const Field> field_of(unsigned q) {
  if (!is_prime_power(q)) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return Field::of_order(q);
}

ojson poly_list(const std::vector<Poly>& ps) {
  ojson a = ojson::array();
  for (const auto& p : ps) a.push_back(p.is_zero() ? "0" : p.str());
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drinfeld modular group toolkit"};
  app.require_subcommand(1);

  // aut-count
  unsigned ac_q = 0;
  bool ac_list = false;
  auto* aut_count = app.add_subcommand("aut-count", "|A| for the exponent set of F_{q^2}");
  aut_count->add_option("--q", ac_q, "field order")->required();
  aut_count->add_flag("--list", ac_list, "print the exponents instead of the count");

  // ell-count / class-data / cs-order
  std::string curve_text;
  auto* ell = app.add_subcommand("ell-count", "L(-1) for an elliptic curve");
  ell->add_option("--curve", curve_text, "curve, e.g. \"q=2;y2+y=x3\"")->required();
  auto* cls = app.add_subcommand("class-data", "h, |Cl_2|, r and elliptic point counts");
  cls->add_option("--curve", curve_text, "curve")->required();
  unsigned cso_r = 0, cso_q = 0;
  auto* cso = app.add_subcommand("cs-order", "r! |A|^r");
  auto* cso_curve = cso->add_option("--curve", curve_text, "curve (r and q taken from it)");
  auto* cso_ropt = cso->add_option("--r", cso_r, "number of cyclic spikes");
  cso->add_option("--q", cso_q, "field order")->needs(cso_ropt);
  cso_ropt->excludes(cso_curve);

  // nagao-decompose
  unsigned nd_q = 0;
  std::string matrix_text;
  auto* nd = app.add_subcommand("nagao-decompose", "normal form in GL2(F_q) *_B B2(F_q[t])");
  nd->add_option("--q", nd_q, "field order")->required();
  nd->add_option("--matrix", matrix_text, "matrix over F_q[t]")->required();

  // reiner-image
  std::string spec_path;
  bool ri_inverse = false;
  auto* ri = app.add_subcommand("reiner-image", "image of a matrix under a Reiner automorphism");
  ri->add_option("--spec", spec_path, "linear spec JSON file")->required();
  ri->add_option("--matrix", matrix_text, "matrix over F_q[t]")->required();
  ri->add_flag("--inverse", ri_inverse, "apply the inverse automorphism");

  // unipotent-fiber
  std::string modulus_text;
  int uf_degree = 4;
  auto* uf = app.add_subcommand("unipotent-fiber", "{a : T(a) in tau(Gamma(m))} up to a degree bound");
  uf->add_option("--spec", spec_path, "linear spec JSON file")->required();
  uf->add_option("--modulus", modulus_text, "congruence modulus m(t)")->required();
  uf->add_option("--degree", uf_degree, "degree bound N")->capture_default_str();

  // cusp-count
  unsigned cc_q = 0;
  std::string subgroup_path, preset;
  auto* cc = app.add_subcommand("cusp-count", "cusps of the preimage of a subgroup of the finite image");
  cc->add_option("--q", cc_q, "field order")->required();
  cc->add_option("--modulus", modulus_text, "modulus m(t)")->required();
  auto* cc_sub = cc->add_option("--subgroup", subgroup_path, "JSON array of generator matrices");
  cc->add_option("--preset", preset, "trivial | borel | full")->excludes(cc_sub);

  // cs-wreath-check
  unsigned wr_r = 0, wr_q = 0;
  auto* wr = app.add_subcommand("cs-wreath-check", "closure of the cyclic spike generators");
  wr->add_option("--r", wr_r, "number of spikes")->required();
  wr->add_option("--q", wr_q, "field order")->required();

  // dihedral-demo
  std::string variant = "partial";
  int max_len = 12;
  auto* dd = app.add_subcommand("dihedral-demo", "index of the partial conjugation image in D_inf");
  dd->add_option("--variant", variant, "partial | inner | conj-a-by-b")->capture_default_str();
  dd->add_option("--max-length", max_len, "injectivity word length bound")->capture_default_str();

  // graph-export
  std::string graph_name, format = "dot";
  unsigned depth = 3;
  auto* ge = app.add_subcommand("graph-export", "quotient graph of an example");
  ge->add_option("--graph", graph_name, "ex1 | ex3")->required();
  ge->add_option("--depth", depth, "ray truncation depth")->capture_default_str();
  ge->add_option("--format", format, "dot | json | serre")->capture_default_str();

  // aut-apply
  std::string decl_name, script_path, word_text;
  bool aa_inverse = false;
  auto* aa = app.add_subcommand("aut-apply", "apply an automorphism script to a word");
  aa->add_option("--decl", decl_name, "ex1cusp | ex3cusps")->required();
  aa->add_option("--script", script_path, "JSON array of generator records")->required();
  aa->add_option("--word", word_text, "word, letters f<i>:<elem> joined by '*'")->required();
  aa->add_flag("--inverse", aa_inverse, "apply the inverse automorphism");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (aut_count->parsed()) {
      if (ac_q < 2 || !is_prime_power(ac_q)) throw std::invalid_argument("q must be a prime power");
      if (ac_list) {
        emit(aut_rel_enumerate(ac_q));
      } else {
        emit(aut_rel_count(ac_q));
      }
    } else if (ell->parsed()) {
      emit(ell_count(curve_lpoly(WeierstrassCurve::parse(curve_text))));
    } else if (cls->parsed()) {
      const auto e = WeierstrassCurve::parse(curve_text);
      const LPoly l = curve_lpoly(e);
      ojson j;
      j["curve"] = e.str();
      j["lpoly"] = l.str();
      j["ell"] = ell_count(l);
      const ojson cd = class_data(e).to_json();
      for (auto& [k, v] : cd.items()) j[k] = v;
      emit(j);
    } else if (cso->parsed()) {
      if (!curve_text.empty()) {
        const auto e = WeierstrassCurve::parse(curve_text);
        emit(cs_order(static_cast<std::uint64_t>(class_data(e).r), e.field().q()));
      } else {
        if (*cso_ropt && cso_q == 0) throw std::invalid_argument("--r needs --q");
        if (!*cso_ropt) throw std::invalid_argument("give --curve or --r with --q");
        if (!is_prime_power(cso_q)) throw std::invalid_argument("q must be a prime power");
        emit(cs_order(cso_r, cso_q));
      }
    } else if (nd->parsed()) {
      auto F = field_of(nd_q);
      emit(format_word(decompose(parse_poly_matrix(*F, matrix_text))));
    } else if (ri->parsed()) {
      LinearAutoSpec spec = LinearAutoSpec::from_json(read_json_file(spec_path));
      if (ri_inverse) spec = reiner_inverse(spec);
      emit(format_matrix(reiner_apply(spec, parse_poly_matrix(spec.field(), matrix_text))));
    } else if (uf->parsed()) {
      const LinearAutoSpec spec = LinearAutoSpec::from_json(read_json_file(spec_path));
      if (uf_degree < 0 || uf_degree > 12) throw std::invalid_argument("--degree must be in [0, 12]");
      const CongruenceIdeal ideal(Poly::parse(spec.field(), modulus_text));
      const auto fib = unipotent_fiber(spec, ideal, uf_degree);
      ojson j;
      j["modulus"] = ideal.modulus.str();
      j["degree"] = uf_degree;
      j["size"] = fib.size();
      j["subspace"] = is_subspace(fib);
      j["members"] = poly_list(fib);
      emit(j);
    } else if (cc->parsed()) {
      auto F = field_of(cc_q);
      auto R = std::make_shared<const QuotRing>(F, Poly::parse(*F, modulus_text));
      const FiniteGroup image = FiniteGroup::polynomial_image(R);
      Subgroup h;
      if (!subgroup_path.empty()) {
        const auto gens_json = read_json_file(subgroup_path);
        if (!gens_json.is_array()) throw std::invalid_argument("subgroup file must be a JSON array of matrices");
        std::vector<std::uint32_t> gens;
        for (const auto& g : gens_json) {
          if (!g.is_string()) throw std::invalid_argument("subgroup generators must be matrix strings");
          const RMat m = reduce(parse_poly_matrix(*F, g.get<std::string>()), *R);
          const long k = image.index_of(m);
          if (k < 0) {
            throw std::invalid_argument("generator " + g.get<std::string>() +
                                        " is not in the image of GL2(F_q[t]) mod m");
          }
          gens.push_back(static_cast<std::uint32_t>(k));
        }
        h = closure(image, gens);
      } else if (preset.empty() || preset == "trivial") {
        h = trivial_subgroup(image);
      } else if (preset == "borel") {
        h = image_cusp_stab(image);
      } else if (preset == "full") {
        h = whole_group(image);
      } else {
        throw std::invalid_argument("unknown preset '" + preset + "'");
      }
      emit(cusp_count(image, h));
    } else if (wr->parsed()) {
      emit(cs_wreath_check(wr_r, wr_q).to_json());
    } else if (dd->parsed()) {
      emit(dihedral_cohopf_demo(parse_dihedral_variant(variant), max_len).to_json());
    } else if (ge->parsed()) {
      const QuotientGraph g = build_graph(graph_name, depth);
      if (format == "dot") {
        std::cout << export_dot(g);
      } else if (format == "json") {
        emit(export_json(g));
      } else if (format == "serre") {
        emit(validate_serre(g).to_json());
      } else {
        throw std::invalid_argument("unknown format '" + format + "'");
      }
    } else if (aa->parsed()) {
      const CentralAmalgamDecl d = build_decl(decl_name);
      Automorphism a = compose_autos(d, parse_script(d, read_json_file(script_path)));
      if (aa_inverse) a = a.inverse();
      emit(format_free_word(d, a.apply(parse_free_word(d, word_text))));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
