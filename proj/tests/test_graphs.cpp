#include <doctest.h>

#include <set>

#include "dmg/graphs.hpp"

using namespace dmg;

TEST_CASE("stabilizer descriptors") {
  CHECK(StabDescriptor::gl2(2).order() == 6);
  CHECK(StabDescriptor::cyclic(3).order() == 8);
  CHECK(StabDescriptor::unipotent(2, 3).order() == 8);
  CHECK(StabDescriptor::btype(3, 1).order() == 4 * 9);
  CHECK(StabDescriptor::trivial(5).order() == 1);
  for (const auto& s : {StabDescriptor::gl2(2), StabDescriptor::cyclic(2), StabDescriptor::unipotent(2, 4),
                        StabDescriptor::btype(2, 2), StabDescriptor::trivial(2)}) {
    CHECK(StabDescriptor::parse(s.str(), 2) == s);
  }
  CHECK_THROWS(StabDescriptor::parse("Sym(3)", 2));
}

TEST_CASE("one-cusp example: core, ray and spikes") {
  const QuotientGraph g = build_graph_ex1();
  const auto s = validate_serre(g);
  CHECK(s.core == std::vector<int>{1, 2, 5, 6, 7, 8});
  REQUIRE(s.rays.size() == 1);
  CHECK(s.rays[0].cusp == "inf");
  CHECK(s.rays[0].vertices == std::vector<int>{3, 4});
  CHECK(isolated_cyclic(g) == std::vector<int>{7, 8});
  CHECK(isolated_gl2(g) == std::vector<int>{1});
}

TEST_CASE("three-cusp example: figure vertices and three rays") {
  const QuotientGraph g = build_graph_ex3();
  for (int id = 1; id <= 10; ++id) CHECK(g.vertex(id).id == id);
  CHECK(g.vertex(7).stab == StabDescriptor::cyclic(2));
  CHECK(g.vertex(4).stab == StabDescriptor::unipotent(2, 3));
  const auto s = validate_serre(g);
  CHECK(s.rays.size() == 3);
  std::set<std::string> cusps;
  for (const auto& r : s.rays) cusps.insert(r.cusp);
  CHECK(cusps == std::set<std::string>{"inf", "(0,0)", "(0,1)"});
  CHECK(isolated_cyclic(g) == std::vector<int>{7});
  CHECK(s.to_json()["ray_count"] == 3);
}

TEST_CASE("edge stabilizers embed in both endpoints, at every depth") {
  for (unsigned depth : {3u, 4u, 7u}) {
    for (const auto& g : {build_graph_ex1(depth), build_graph_ex3(depth)}) {
      for (const auto& e : g.edges) {
        CHECK(g.vertex(e.u).stab.order() % e.stab.order() == 0);
        CHECK(g.vertex(e.v).stab.order() % e.stab.order() == 0);
      }
      const auto s = validate_serre(g);
      std::size_t total = s.core.size();
      for (const auto& r : s.rays) total += r.vertices.size();
      CHECK(total == g.vertices.size());
    }
  }
  CHECK(validate_serre(build_graph_ex1(7)).core == validate_serre(build_graph_ex1(3)).core);
  CHECK_THROWS(build_graph_ex1(2));
  CHECK_THROWS(build_graph("ex2"));
}

TEST_CASE("malformed graphs are rejected") {
  const QuotientGraph good = build_graph_ex1();
  {
    QuotientGraph g = good;
    g.edges.erase(g.edges.begin() + 4);  // 5 - 6 disconnects o, v(1), v(0)
    CHECK_THROWS_AS(validate_serre(g), std::invalid_argument);
  }
  {
    QuotientGraph g = good;
    g.edges[0].stab = StabDescriptor::unipotent(2, 2);
    CHECK_THROWS_AS(validate_serre(g), std::invalid_argument);
  }
  {
    QuotientGraph g = good;
    g.edges.push_back({6, 6, StabDescriptor::trivial(2)});
    CHECK_THROWS_AS(validate_serre(g), std::invalid_argument);
  }
  {
    QuotientGraph g = good;
    g.vertices.push_back(g.vertices.front());
    CHECK_THROWS_AS(validate_serre(g), std::invalid_argument);
  }
  {
    QuotientGraph g = good;
    g.rays[0].vertex = 2;
    CHECK_THROWS_AS(validate_serre(g), std::invalid_argument);
  }
}

TEST_CASE("export formats") {
  const QuotientGraph g = build_graph_ex3(4);
  CHECK(parse_graph_json(export_json(g)) == g);
  const std::string dot = export_dot(g);
  CHECK(dot.rfind("graph \"ex3\" {", 0) == 0);
  CHECK(dot.find("7 [label=\"v(1)\\nCyclicQsqMinus1\"];") != std::string::npos);
  CHECK(dot.find("1 -- 2 [label=\"UnipotentDim(1)\"];") != std::string::npos);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK_THROWS(parse_graph_json(nlohmann::json::parse(R"({"vertices":[]})")));
}
