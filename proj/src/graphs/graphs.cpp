#include "dmg/graphs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dmg {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

void add_vertex(QuotientGraph& g, int id, std::string label, StabDescriptor s) {
  g.vertices.push_back({id, std::move(label), s});
}

void add_edge(QuotientGraph& g, int u, int v, StabDescriptor s) { g.edges.push_back({u, v, s}); }

// Ray vertices c(cusp, n) for n = from..depth hanging off `anchor`; returns the last id.
int extend_ray(QuotientGraph& g, int& next_id, int anchor, unsigned from, unsigned depth, const std::string& cusp) {
  int prev = anchor;
  for (unsigned n = from; n <= depth; ++n) {
    const int id = next_id++;
    add_vertex(g, id, "c(" + cusp + "," + std::to_string(n) + ")", StabDescriptor::unipotent(g.q, n));
    add_edge(g, prev, id, StabDescriptor::unipotent(g.q, n - 1));
    prev = id;
  }
  return prev;
}

// Core of both examples: e(inf) - c(inf,1) - c(inf,2) - c(inf,3), c(inf,1) - v(inf) - o, o - v(1), o - v(0).
QuotientGraph common_core(std::string name, bool v0_cyclic) {
  QuotientGraph g;
  g.name = std::move(name);
  g.q = 2;
  const unsigned q = g.q;
  add_vertex(g, 1, "e(inf)", StabDescriptor::gl2(q));
  add_vertex(g, 2, "c(inf,1)", StabDescriptor::unipotent(q, 1));
  add_vertex(g, 3, "c(inf,2)", StabDescriptor::unipotent(q, 2));
  add_vertex(g, 4, "c(inf,3)", StabDescriptor::unipotent(q, 3));
  add_vertex(g, 5, "v(inf)", StabDescriptor::unipotent(q, 1));
  add_vertex(g, 6, "o", StabDescriptor::trivial(q));
  add_vertex(g, 7, "v(1)", StabDescriptor::cyclic(q));
  add_vertex(g, 8, "v(0)", v0_cyclic ? StabDescriptor::cyclic(q) : StabDescriptor::trivial(q));
  add_edge(g, 1, 2, StabDescriptor::unipotent(q, 1));
  add_edge(g, 2, 3, StabDescriptor::unipotent(q, 1));
  add_edge(g, 3, 4, StabDescriptor::unipotent(q, 2));
  add_edge(g, 2, 5, StabDescriptor::unipotent(q, 1));
  add_edge(g, 5, 6, StabDescriptor::trivial(q));
  add_edge(g, 6, 7, StabDescriptor::trivial(q));
  add_edge(g, 6, 8, StabDescriptor::trivial(q));
  return g;
}

void check_depth(unsigned depth) {
  if (depth < 3) throw std::invalid_argument("ray depth must be at least 3 so that c(inf,3) is kept");
  if (depth > 1000) throw std::invalid_argument("ray depth too large");
}

}  // namespace

// ---------------------------------------------------------------- descriptors

std::uint64_t StabDescriptor::order() const {
  const std::uint64_t Q = q;
  switch (kind) {
    case StabKind::GL2:
      return (Q * Q - 1) * (Q * Q - Q);
    case StabKind::CyclicQsqMinus1:
      return Q * Q - 1;
    case StabKind::UnipotentDim:
      return ipow(Q, n);
    case StabKind::BType:
      return (Q - 1) * (Q - 1) * ipow(Q, n + 1);
    case StabKind::Trivial:
      return 1;
  }
  return 1;
}

std::string StabDescriptor::str() const {
  switch (kind) {
    case StabKind::GL2:
      return "GL2(" + std::to_string(q) + ")";
    case StabKind::CyclicQsqMinus1:
      return "CyclicQsqMinus1";
    case StabKind::UnipotentDim:
      return "UnipotentDim(" + std::to_string(n) + ")";
    case StabKind::BType:
      return "BType(" + std::to_string(n) + ")";
    case StabKind::Trivial:
      return "Trivial";
  }
  return "?";
}

StabDescriptor StabDescriptor::parse(std::string_view s, unsigned q) {
  auto arg = [&](std::string_view prefix) -> unsigned {
    std::string_view rest = s.substr(prefix.size());
    if (rest.size() < 3 || rest.front() != '(' || rest.back() != ')') {
      throw std::invalid_argument("malformed stabilizer descriptor '" + std::string(s) + "'");
    }
    rest = rest.substr(1, rest.size() - 2);
    unsigned v = 0;
    for (char c : rest) {
      if (c < '0' || c > '9') throw std::invalid_argument("malformed stabilizer descriptor '" + std::string(s) + "'");
      v = v * 10 + static_cast<unsigned>(c - '0');
    }
    return v;
  };
  if (s == "Trivial") return trivial(q);
  if (s == "CyclicQsqMinus1") return cyclic(q);
  if (s.starts_with("GL2")) {
    if (arg("GL2") != q) throw std::invalid_argument("descriptor '" + std::string(s) + "' disagrees with graph q");
    return gl2(q);
  }
  if (s.starts_with("UnipotentDim")) return unipotent(q, arg("UnipotentDim"));
  if (s.starts_with("BType")) return btype(q, arg("BType"));
  throw std::invalid_argument("unknown stabilizer descriptor '" + std::string(s) + "'");
}

// ---------------------------------------------------------------- graphs

const GraphVertex& QuotientGraph::vertex(int id) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), id,
                             [](const GraphVertex& v, int x) { return v.id < x; });
  if (it == vertices.end() || it->id != id) throw std::invalid_argument("no vertex with id " + std::to_string(id));
  return *it;
}

std::size_t QuotientGraph::degree(int id) const {
  std::size_t d = 0;
  for (const auto& e : edges) d += (e.u == id) + (e.v == id);
  return d;
}

std::vector<int> QuotientGraph::neighbours(int id) const {
  std::vector<int> out;
  for (const auto& e : edges) {
    if (e.u == id) out.push_back(e.v);
    if (e.v == id) out.push_back(e.u);
  }
  return out;
}

QuotientGraph build_graph_ex3(unsigned depth) {
  check_depth(depth);
  QuotientGraph g = common_core("ex3", false);
  const unsigned q = g.q;
  add_vertex(g, 9, "c((0,0),1)", StabDescriptor::unipotent(q, 1));
  add_vertex(g, 10, "c((0,1),1)", StabDescriptor::unipotent(q, 1));
  add_edge(g, 8, 9, StabDescriptor::trivial(q));
  add_edge(g, 8, 10, StabDescriptor::trivial(q));
  int next = 11;
  const int end_inf = extend_ray(g, next, 4, 4, depth, "inf");
  const int end_00 = extend_ray(g, next, 9, 2, depth, "(0,0)");
  const int end_01 = extend_ray(g, next, 10, 2, depth, "(0,1)");
  g.rays = {{"inf", end_inf, depth}, {"(0,0)", end_00, depth}, {"(0,1)", end_01, depth}};
  return g;
}

QuotientGraph build_graph_ex1(unsigned depth) {
  check_depth(depth);
  QuotientGraph g = common_core("ex1", true);
  int next = 9;
  const int end_inf = extend_ray(g, next, 4, 4, depth, "inf");
  g.rays = {{"inf", end_inf, depth}};
  return g;
}

QuotientGraph build_graph(std::string_view name, unsigned depth) {
  if (name == "ex1") return build_graph_ex1(depth);
  if (name == "ex3") return build_graph_ex3(depth);
  throw std::invalid_argument("unknown graph '" + std::string(name) + "' (expected ex1 or ex3)");
}

// ---------------------------------------------------------------- Serre structure

nlohmann::ordered_json SerreDecomposition::to_json() const {
  nlohmann::ordered_json j;
  j["core"] = core;
  j["ray_count"] = rays.size();
  nlohmann::ordered_json rs = nlohmann::ordered_json::array();
  for (const auto& r : rays) rs.push_back({{"cusp", r.cusp}, {"vertices", r.vertices}});
  j["rays"] = rs;
  return j;
}

SerreDecomposition validate_serre(const QuotientGraph& g) {
  std::set<int> ids;
  for (const auto& v : g.vertices) {
    if (!ids.insert(v.id).second) throw std::invalid_argument("duplicate vertex id " + std::to_string(v.id));
  }
  if (!std::is_sorted(g.vertices.begin(), g.vertices.end(),
                      [](const GraphVertex& a, const GraphVertex& b) { return a.id < b.id; })) {
    throw std::invalid_argument("vertices must be sorted by id");
  }
  for (const auto& e : g.edges) {
    if (!ids.count(e.u) || !ids.count(e.v)) throw std::invalid_argument("edge refers to a missing vertex");
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    const std::uint64_t eo = e.stab.order();
    if (g.vertex(e.u).stab.order() % eo != 0 || g.vertex(e.v).stab.order() % eo != 0) {
      throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " stabilizer " +
                                  e.stab.str() + " does not embed in both endpoint stabilizers");
    }
  }
  SerreDecomposition out;
  if (g.vertices.empty()) return out;

  // Connectedness.
  std::set<int> seen{g.vertices.front().id};
  std::vector<int> stack{g.vertices.front().id};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : g.neighbours(x))
      if (seen.insert(y).second) stack.push_back(y);
  }
  if (seen.size() != ids.size()) throw std::invalid_argument("quotient graph is not connected");

  std::set<int> marked;
  std::set<std::string> cusps;
  for (const auto& r : g.rays) {
    if (!ids.count(r.vertex)) throw std::invalid_argument("ray marker on missing vertex " + std::to_string(r.vertex));
    if (!marked.insert(r.vertex).second || !cusps.insert(r.cusp).second) {
      throw std::invalid_argument("two ray markers share a vertex or a cusp");
    }
  }
  // A marked vertex has one virtual neighbour beyond the cut.
  auto valency = [&](int id) { return g.degree(id) + marked.count(id); };

  std::set<int> in_rays;
  for (const auto& r : g.rays) {
    if (g.degree(r.vertex) != 1) {
      throw std::invalid_argument("ray marker vertex " + std::to_string(r.vertex) + " must have one neighbour");
    }
    SerreRay ray{r.cusp, {}};
    int prev = 0, cur = r.vertex;
    bool first = true;
    while (valency(cur) == 2) {
      if (!in_rays.insert(cur).second) throw std::invalid_argument("rays toward different cusps overlap");
      ray.vertices.push_back(cur);
      int next = 0;
      for (int y : g.neighbours(cur))
        if (first || y != prev) next = y;
      prev = cur;
      cur = next;
      first = false;
      if (ray.vertices.size() > g.vertices.size()) throw std::invalid_argument("ray does not reach the core");
    }
    if (ray.vertices.empty()) throw std::invalid_argument("ray toward " + r.cusp + " has no valency-2 tail");
    std::reverse(ray.vertices.begin(), ray.vertices.end());
    out.rays.push_back(std::move(ray));
  }
  for (const auto& v : g.vertices)
    if (!in_rays.count(v.id)) out.core.push_back(v.id);
  if (out.core.empty()) throw std::invalid_argument("graph has no finite core");
  return out;
}

namespace {

std::vector<int> terminal_core(const QuotientGraph& g, StabKind kind) {
  const SerreDecomposition s = validate_serre(g);
  std::vector<int> out;
  for (int id : s.core)
    if (g.degree(id) == 1 && g.vertex(id).stab.kind == kind) out.push_back(id);
  return out;
}

}  // namespace

std::vector<int> isolated_cyclic(const QuotientGraph& g) { return terminal_core(g, StabKind::CyclicQsqMinus1); }

std::vector<int> isolated_gl2(const QuotientGraph& g) { return terminal_core(g, StabKind::GL2); }

// ---------------------------------------------------------------- export

std::string export_dot(const QuotientGraph& g) {
  std::string s = "graph \"" + g.name + "\" {\n";
  for (const auto& v : g.vertices) {
    s += "  " + std::to_string(v.id) + " [label=\"" + v.label + "\\n" + v.stab.str() + "\"];\n";
  }
  for (const auto& e : g.edges) {
    s += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + " [label=\"" + e.stab.str() + "\"];\n";
  }
  for (std::size_t i = 0; i < g.rays.size(); ++i) {
    const auto& r = g.rays[i];
    const std::string node = "ray" + std::to_string(i);
    s += "  " + node + " [shape=point, label=\"\", xlabel=\"" + r.cusp + "\"];\n";
    s += "  " + std::to_string(r.vertex) + " -- " + node + " [style=dashed, label=\"cusp " + r.cusp + "\"];\n";
  }
  s += "}\n";
  return s;
}

nlohmann::ordered_json export_json(const QuotientGraph& g) {
  nlohmann::ordered_json j;
  j["name"] = g.name;
  j["q"] = g.q;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : g.vertices) j["vertices"].push_back({{"id", v.id}, {"label", v.label}, {"stab", v.stab.str()}});
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"stab", e.stab.str()}});
  j["rays"] = nlohmann::ordered_json::array();
  for (const auto& r : g.rays) j["rays"].push_back({{"cusp", r.cusp}, {"depth", r.depth}, {"vertex", r.vertex}});
  return j;
}

QuotientGraph parse_graph_json(const nlohmann::json& j) {
  try {
    QuotientGraph g;
    g.name = j.value("name", std::string{});
    g.q = j.at("q").get<unsigned>();
    for (const auto& v : j.at("vertices")) {
      g.vertices.push_back({v.at("id").get<int>(), v.at("label").get<std::string>(),
                            StabDescriptor::parse(v.at("stab").get<std::string>(), g.q)});
    }
    std::sort(g.vertices.begin(), g.vertices.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (const auto& e : j.at("edges")) {
      g.edges.push_back({e.at("u").get<int>(), e.at("v").get<int>(), StabDescriptor::parse(e.at("stab").get<std::string>(), g.q)});
    }
    for (const auto& r : j.at("rays")) {
      g.rays.push_back({r.at("cusp").get<std::string>(), r.at("vertex").get<int>(), r.at("depth").get<unsigned>()});
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
  }
}

}  // namespace dmg
