#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "hecke/calibration.hpp"
#include "hecke/rational.hpp"
#include "hecke/root_system.hpp"
#include "hecke/weight.hpp"

using namespace hecke;

TEST_CASE("generic orbit graph is a single component") {
  RootSystem rs(Family::A, 2);
  const Weight t = Weight::real(rs, {Rational(1, 5), Rational(1, 7)});
  const CalibrationGraph g = build_calibration_graph(t);

  CHECK(g.vertices.size() == 6);
  CHECK(g.components.size() == 1);
  CHECK(g.partition_match);
  CHECK(g.zp.zero.empty());
  CHECK(g.zp.pole.empty());
  for (const auto& v : g.vertices) CHECK(v.J.empty());

  const auto shapes = placed_shapes(g);
  REQUIRE(shapes.size() == 1);
  CHECK(shapes[0].J.empty());
  CHECK(shapes[0].vertex_indices.size() == 6);
}

TEST_CASE("split orbit graph with three singleton components") {
  RootSystem rs(Family::A, 2);
  const Weight t = Weight::real(rs, {Rational(2, 3), Rational(1, 3)});
  const CalibrationGraph g = build_calibration_graph(t);

  CHECK(g.vertices.size() == 3);
  CHECK(g.edges.empty());
  CHECK(g.components.size() == 3);
  CHECK(g.partition_match);
  CHECK(g.zp.zero == std::vector<int>{1});
  CHECK(g.zp.pole == std::vector<int>{0, 2});

  std::set<std::vector<int>> js;
  for (const auto& v : g.vertices) js.insert(v.J);
  CHECK(js == std::set<std::vector<int>>{{}, {0}, {0, 2}});

  // Shapes come back ordered by (|J|, lex).
  const auto shapes = placed_shapes(g);
  REQUIRE(shapes.size() == 3);
  CHECK(shapes[0].J == std::vector<int>{});
  CHECK(shapes[1].J == std::vector<int>{0});
  CHECK(shapes[2].J == std::vector<int>{0, 2});
  for (const auto& s : shapes) CHECK(s.vertex_indices.size() == 1);
}

TEST_CASE("tableau sets for the split orbit") {
  RootSystem rs(Family::A, 2);
  const Weight t = Weight::real(rs, {Rational(2, 3), Rational(1, 3)});

  const TableauSet empty_j = tableaux(t, {});
  REQUIRE(empty_j.words.size() == 1);
  CHECK(empty_j.words[0].empty());

  const TableauSet j0 = tableaux(t, {0});
  REQUIRE(j0.words.size() == 1);
  CHECK(j0.words[0] == std::vector<int>{0});

  const TableauSet j02 = tableaux(t, {0, 2});
  REQUIRE(j02.words.size() == 1);
  CHECK(j02.words[0] == std::vector<int>{1, 0});

  // Index 1 lies in the zero set, not the pole set.
  CHECK_THROWS_AS(tableaux(t, {1}), std::invalid_argument);
}

TEST_CASE("generic rank three orbit is connected") {
  RootSystem rs(Family::A, 3);
  const Weight t = Weight::real(rs, {Rational(1, 5), Rational(1, 7), Rational(1, 11)});
  const CalibrationGraph g = build_calibration_graph(t);

  CHECK(g.vertices.size() == 24);
  CHECK(g.components.size() == 1);
  CHECK(g.partition_match);

  const TableauSet ts = tableaux(t, {});
  CHECK(ts.words.size() == 24);
}

TEST_CASE("orbit with a stabilized point") {
  RootSystem rs(Family::G, 2);
  const Weight t = Weight::real(rs, {Rational(0), Rational(1)});
  const CalibrationGraph g = build_calibration_graph(t);

  CHECK(g.vertices.size() == 6);
  CHECK(g.partition_match);

  const TableauSet ts = tableaux(t, {});
  REQUIRE(ts.words.size() == 2);
  CHECK(ts.words[0].empty());
  CHECK(ts.words[1] == std::vector<int>{1});
}

TEST_CASE("vertex words are minimal coset representatives") {
  RootSystem rs(Family::C, 2);
  const Weight t = Weight::real(rs, {Rational(1, 2), Rational(0)});
  const CalibrationGraph g = build_calibration_graph(t);

  for (const auto& v : g.vertices) {
    CHECK(v.word.size() == weyl_length(rs, v.rep));
    CHECK(v.weight == t.acted(v.rep));
  }
  // Distinct weights, one vertex each.
  std::set<Weight> seen;
  for (const auto& v : g.vertices) CHECK(seen.insert(v.weight).second);
}

TEST_CASE("edge endpoints differ by the labeled reflection") {
  RootSystem rs(Family::A, 2);
  const Weight t = Weight::real(rs, {Rational(1, 5), Rational(1, 7)});
  const CalibrationGraph g = build_calibration_graph(t);

  CHECK(!g.edges.empty());
  for (const auto& e : g.edges) {
    CHECK(e.a < e.b);
    CHECK(g.vertices[e.a].weight.reflected(e.i) == g.vertices[e.b].weight);
  }
}

TEST_CASE("dot rendering lists every vertex and labeled edge") {
  RootSystem rs(Family::A, 2);
  const Weight t = Weight::real(rs, {Rational(1, 5), Rational(1, 7)});
  const CalibrationGraph g = build_calibration_graph(t);
  const std::string dot = graph_to_dot(g);

  CHECK(dot.find("v0") != std::string::npos);
  CHECK(dot.find("v5") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
  CHECK(dot.find("label=\"1\"") != std::string::npos);
  CHECK(dot.find("label=\"2\"") != std::string::npos);
}
