#pragma once

// Quotient graphs G\T with stabilizer descriptors, builders for the two
// elliptic examples over F_2, Serre core/ray decomposition and export.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace dmg {

enum class StabKind { GL2, CyclicQsqMinus1, UnipotentDim, BType, Trivial };

struct StabDescriptor {
  StabKind kind = StabKind::Trivial;
  unsigned q = 2;
  unsigned n = 0;  // UnipotentDim, BType

  static StabDescriptor gl2(unsigned q) { return {StabKind::GL2, q, 0}; }
  static StabDescriptor cyclic(unsigned q) { return {StabKind::CyclicQsqMinus1, q, 0}; }
  static StabDescriptor unipotent(unsigned q, unsigned n) { return {StabKind::UnipotentDim, q, n}; }
  static StabDescriptor btype(unsigned q, unsigned n) { return {StabKind::BType, q, n}; }
  static StabDescriptor trivial(unsigned q) { return {StabKind::Trivial, q, 0}; }

  /// (q^2-1)(q^2-q), q^2-1, q^n, (q-1)^2 q^(n+1), 1.
  std::uint64_t order() const;
  std::string str() const;
  static StabDescriptor parse(std::string_view s, unsigned q);
  friend bool operator==(const StabDescriptor&, const StabDescriptor&) = default;
};

struct GraphVertex {
  int id = 0;
  std::string label;
  StabDescriptor stab;
  friend bool operator==(const GraphVertex&, const GraphVertex&) = default;
};

struct GraphEdge {
  int u = 0, v = 0;
  StabDescriptor stab;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// The ray toward `cusp` continues past `vertex`, where the graph is cut off.
struct RayMarker {
  std::string cusp;
  int vertex = 0;
  unsigned depth = 0;
  friend bool operator==(const RayMarker&, const RayMarker&) = default;
};

struct QuotientGraph {
  std::string name;
  unsigned q = 2;
  std::vector<GraphVertex> vertices;  // sorted by id
  std::vector<GraphEdge> edges;
  std::vector<RayMarker> rays;

  const GraphVertex& vertex(int id) const;
  std::size_t degree(int id) const;
  std::vector<int> neighbours(int id) const;
  friend bool operator==(const QuotientGraph&, const QuotientGraph&) = default;
};

/// Vertices 1..10 (e(inf), c(inf,1..3), v(inf), o, v(1), v(0),
/// c((0,0),1), c((0,1),1)) plus ray vertices c(s,n) up to n = depth (>= 3).
QuotientGraph build_graph_ex3(unsigned depth = 3);
/// The same graph without the cusps (0,0), (0,1); v(0) terminal and cyclic.
QuotientGraph build_graph_ex1(unsigned depth = 3);
QuotientGraph build_graph(std::string_view name, unsigned depth = 3);

struct SerreRay {
  std::string cusp;
  std::vector<int> vertices;  // from the core outward
};

struct SerreDecomposition {
  std::vector<int> core;
  std::vector<SerreRay> rays;
  nlohmann::ordered_json to_json() const;
};

/// Splits the graph into a finite core and one valency-2 tail per ray marker.
/// Throws std::invalid_argument if the graph is malformed (dangling edge,
/// disconnected, edge stabilizer not dividing an endpoint, bad ray).
SerreDecomposition validate_serre(const QuotientGraph& g);

/// Terminal core vertices with descriptor CyclicQsqMinus1.
std::vector<int> isolated_cyclic(const QuotientGraph& g);
/// Terminal core vertices with descriptor GL2.
std::vector<int> isolated_gl2(const QuotientGraph& g);

std::string export_dot(const QuotientGraph& g);
nlohmann::ordered_json export_json(const QuotientGraph& g);
QuotientGraph parse_graph_json(const nlohmann::json& j);

}  // namespace dmg
