#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "hecke/field.hpp"
#include "hecke/matrix_rep.hpp"
#include "hecke/rational.hpp"
#include "hecke/root_system.hpp"
#include "hecke/skew.hpp"
#include "hecke/weight.hpp"

using namespace hecke;

TEST_CASE("generic principal series passes the full local-operator suite") {
  for (auto fam : {Family::A, Family::C, Family::G}) {
    const RootSystem rs(fam, 2);
    const Weight t = Weight::real(rs, {Rational(1, 5), Rational(1, 7)});
    const MatrixRep m = principal_series(rs, t);
    const TauReport r = verify_tau_properties(m);
    CHECK(r.all_pass());
    CHECK(r.count("undefined") == 0);
    CHECK(r.count("fail") == 0);
    CHECK(r.count("pass") == r.entries.size());
  }
}

TEST_CASE("value-one weights mark checks undefined without failing them") {
  RootSystem rs(Family::A, 2);
  const Weight t = Weight::real(rs, {Rational(2, 3), Rational(1, 3)});
  const MatrixRep m = principal_series(rs, t);

  const TauReport r = verify_tau_properties(m);
  CHECK(r.all_pass());
  CHECK(r.count("undefined") > 0);
  CHECK(r.count("fail") == 0);
}

TEST_CASE("square degenerates exactly at the pole values") {
  RootSystem rs(Family::A, 2);
  const Weight t = Weight::real(rs, {Rational(1, 2), Rational(0)});
  const MatrixRep m = principal_series(rs, t);
  const WeightAnalysis wa = weight_space_analysis(m);
  REQUIRE(wa.calibrated);

  const TauReport r = verify_tau_properties(m);
  CHECK(r.all_pass());
  CHECK(r.count("undefined") == 0);

  const QContext& ctx = m.context();
  const FieldElem q2 = q_power(ctx, 2);
  const FieldElem qm2 = q_power(ctx, -2);

  for (const auto& s : wa.spaces) {
    for (int i = 0; i < 2; ++i) {
      const FieldElem val = s.weight.simple_root_value(i);
      const TauOperator fwd = tau_matrix(m, wa, i, s.weight);
      const TauOperator bwd = tau_matrix(m, wa, i, s.weight.reflected(i));
      const Matrix square = bwd.matrix * fwd.matrix;
      const bool pole = (val == q2) || (val == qm2);
      CHECK(square.is_zero() == pole);
      if (!pole) {
        CHECK(matrix_rank(fwd.matrix) == fwd.matrix.cols());
      }
    }
  }
}

TEST_CASE("operator endpoints and shapes") {
  RootSystem rs(Family::C, 2);
  const Weight t = Weight::real(rs, {Rational(1, 5), Rational(1, 7)});
  const MatrixRep m = principal_series(rs, t);
  const WeightAnalysis wa = weight_space_analysis(m);

  const TauOperator op = tau_matrix(m, wa, 1, t);
  CHECK(op.i == 1);
  CHECK(op.source == t);
  CHECK(op.target == t.reflected(1));
  CHECK(op.matrix.rows() == 1);
  CHECK(op.matrix.cols() == 1);
}

TEST_CASE("operator construction rejects bad input") {
  RootSystem rs(Family::A, 2);
  const Weight t = Weight::real(rs, {Rational(1, 5), Rational(1, 7)});
  const MatrixRep m = principal_series(rs, t);
  const WeightAnalysis wa = weight_space_analysis(m);

  // A weight outside the orbit is not in the support.
  const Weight outside = Weight::real(rs, {Rational(1, 2), Rational(1, 3)});
  CHECK_THROWS_AS(tau_matrix(m, wa, 0, outside), std::invalid_argument);

  // Value 1 on the chosen root leaves the operator undefined.
  RootSystem rs_g(Family::G, 2);
  const Weight tg = Weight::real(rs_g, {Rational(0), Rational(1)});
  const MatrixRep mg = principal_series(rs_g, tg);
  const WeightAnalysis wag = weight_space_analysis(mg);
  bool threw = false;
  for (const auto& s : wag.spaces) {
    if (s.weight.simple_root_value(0) == FieldElem::one()) {
      CHECK_THROWS_AS(tau_matrix(mg, wag, 0, s.weight), std::invalid_argument);
      threw = true;
      break;
    }
    if (s.weight.simple_root_value(1) == FieldElem::one()) {
      CHECK_THROWS_AS(tau_matrix(mg, wag, 1, s.weight), std::invalid_argument);
      threw = true;
      break;
    }
  }
  CHECK(threw);
}
