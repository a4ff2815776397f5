#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "hecke/json_io.hpp"
#include "hecke/rational.hpp"

using namespace hecke;

TEST_CASE("field elements round trip") {
  QContext ctx{3};
  const FieldElem u = q_power(ctx, Rational(1, 3));  // bare u
  const FieldElem f = (u * u - FieldElem::constant(Rational(1, 2))) / (u + FieldElem::one());

  const FieldElem back = field_from_json(field_to_json(f, ctx), ctx);
  CHECK(back == f);

  CHECK(field_from_json(field_to_json(FieldElem::zero(), ctx), ctx) == FieldElem::zero());

  QContext other{5};
  CHECK_THROWS_AS(field_from_json(field_to_json(f, ctx), other), std::invalid_argument);
}

TEST_CASE("field reader rejects malformed rationals") {
  QContext ctx{1};
  Json j = field_to_json(FieldElem::one(), ctx);
  j["num"][0][1] = "2/0";
  CHECK_THROWS_AS(field_from_json(j, ctx), std::invalid_argument);
  j["num"][0][1] = "abc";
  CHECK_THROWS_AS(field_from_json(j, ctx), std::invalid_argument);
}

TEST_CASE("words round trip through one-based indices") {
  const std::vector<int> w{0, 1, 0, 2};
  const Json j = word_to_json(w);
  CHECK(j == Json::array({1, 2, 1, 3}));
  CHECK(word_from_json(j, 3) == w);
  CHECK_THROWS_AS(word_from_json(Json::array({4}), 3), std::invalid_argument);
  CHECK_THROWS_AS(word_from_json(Json::array({0}), 3), std::invalid_argument);
}

TEST_CASE("root system summary carries conventions") {
  RootSystem rs(Family::B, 3);
  const Json j = root_system_to_json(rs);
  CHECK(j["schema"] == kSchemaVersion);
  CHECK(j["type"] == "B3");
  CHECK(j["rank"] == 3);
  CHECK(j["weyl_order"] == 48);
  CHECK(j["positive_roots"].size() == 9);
  CHECK(j["symmetrizer"] == Json::array({2, 2, 1}));
  CHECK(j["cartan"][2][1] == -2);
}

TEST_CASE("weights round trip in both flavours") {
  RootSystem rs(Family::A, 2);
  const Weight t = Weight::real(rs, {Rational(2, 3), Rational(1, 3)});
  const Json j = weight_to_json(t);
  CHECK(j["real"] == true);
  CHECK(weight_from_json(j, rs) == t);

  const QContext& ctx = t.context();
  const Weight g = Weight::general(rs, ctx, {q_power(ctx, 1) + FieldElem::one(), q_power(ctx, 2)});
  const Json jg = weight_to_json(g);
  CHECK(jg["real"] == false);
  const Weight gback = weight_from_json(jg, rs);
  CHECK(gback == g);
  CHECK_FALSE(gback.is_real());

  RootSystem rs3(Family::A, 3);
  CHECK_THROWS_AS(weight_from_json(j, rs3), std::invalid_argument);
}

TEST_CASE("matrices round trip") {
  QContext ctx{1};
  Matrix m(2, 3);
  m.at(0, 0) = q_power(ctx, 1);
  m.at(1, 2) = FieldElem::constant(Rational(-7, 3));
  const Json j = matrix_to_json(m, ctx);
  CHECK(j["rows"] == 2);
  CHECK(j["cols"] == 3);
  const Matrix back = matrix_from_json(j, ctx);
  CHECK(back == m);
}

TEST_CASE("modules round trip with weights and verification intact") {
  RootSystem rs(Family::C, 2);
  const Weight t = Weight::real(rs, {Rational(1, 5), Rational(1, 7)});
  const MatrixRep m = principal_series(rs, t);

  const Json j = rep_to_json(m);
  const MatrixRep back = rep_from_json(j, rs);
  CHECK(back.dim() == m.dim());
  CHECK(back.basis_words() == m.basis_words());
  for (int i = 0; i < 2; ++i) {
    CHECK(back.t_matrix(i) == m.t_matrix(i));
    CHECK(back.x_matrix(i) == m.x_matrix(i));
  }
  CHECK(verify_defining_relations(back).all_pass());
}

TEST_CASE("skew payload round trips") {
  RootSystem rs(Family::G, 2);
  const Weight t = Weight::real(rs, {Rational(0), Rational(1)});
  const SkewModule sm = build_skew_module(t, {});

  const Json j = skew_to_json(sm);
  const SkewModule back = skew_from_json(j, rs);
  CHECK(back.rep.dim() == sm.rep.dim());
  CHECK(back.J == sm.J);
  CHECK(back.base == sm.base);
  CHECK(back.tableau_set.words == sm.tableau_set.words);
  for (int i = 0; i < 2; ++i) CHECK(back.rep.t_matrix(i) == sm.rep.t_matrix(i));
  CHECK(back.verification.all_pass());
}

TEST_CASE("schema mismatches are rejected") {
  RootSystem rs(Family::A, 2);
  const Weight t = Weight::real(rs, {Rational(1, 5), Rational(1, 7)});
  Json j = weight_to_json(t);
  j["schema"] = kSchemaVersion + 1;
  CHECK_THROWS_AS(weight_from_json(j, rs), std::invalid_argument);
  j.erase("schema");
  CHECK_THROWS_AS(weight_from_json(j, rs), std::invalid_argument);
}

TEST_CASE("dumps are deterministic and newline terminated") {
  RootSystem rs(Family::A, 2);
  const Weight t = Weight::real(rs, {Rational(2, 3), Rational(1, 3)});
  const CalibrationGraph g = build_calibration_graph(t);

  const std::string a = dump_json(graph_to_json(g));
  const std::string b = dump_json(graph_to_json(build_calibration_graph(t)));
  CHECK(a == b);
  CHECK(!a.empty());
  CHECK(a.back() == '\n');
}

TEST_CASE("graph and tableau payload shapes") {
  RootSystem rs(Family::A, 2);
  const Weight t = Weight::real(rs, {Rational(2, 3), Rational(1, 3)});
  const CalibrationGraph g = build_calibration_graph(t);
  const Json jg = graph_to_json(g);
  CHECK(jg["vertices"].size() == 3);
  CHECK(jg["edges"].size() == 0);
  CHECK(jg["components"].size() == 3);
  CHECK(jg["partition_match"] == true);

  const Json jt = tableaux_to_json(tableaux(t, {0, 2}));
  CHECK(jt["count"] == 1);
  CHECK(jt["tableaux"][0] == Json::array({2, 1}));

  const Json js = classified_shapes_to_json(rs, classify_calibrated(t));
  CHECK(js.size() == 3);
  for (const auto& row : js) {
    CHECK(row["skew"] == false);
    CHECK(row.contains("reason"));
  }
}
