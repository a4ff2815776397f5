#include <doctest.h>

#include <stdexcept>

#include "hecke/field.hpp"
#include "hecke/laurent.hpp"
#include "hecke/rational.hpp"

using namespace hecke;

TEST_CASE("rational parsing round trips") {
  CHECK(parse_rational("2/3") == Rational(2, 3));
  CHECK(parse_rational("-5") == Rational(-5));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(rational_to_string(Rational(2, 3)) == "2/3");
  CHECK(rational_to_string(Rational(-4)) == "-4");
  CHECK(parse_rational(rational_to_string(Rational(-7, 12))) == Rational(-7, 12));
}

TEST_CASE("rational parsing rejects malformed text") {
  CHECK_THROWS_AS(parse_rational("2/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("denominator lcm") {
  CHECK(denominator_lcm({}) == 1);
  CHECK(denominator_lcm({Rational(2, 3), Rational(1, 2)}) == 6);
  CHECK(denominator_lcm({Rational(1), Rational(3)}) == 1);
}

TEST_CASE("laurent arithmetic") {
  const LaurentPoly u = LaurentPoly::monomial(1, 1);
  const LaurentPoly one = LaurentPoly::one();
  CHECK((u - one) * (u + one) == LaurentPoly::from_terms({{2, 1}, {0, -1}}));
  CHECK((u * u).degree() == 2);
  CHECK(LaurentPoly::monomial(-3, Rational(1, 2)).valuation() == -3);
  CHECK(LaurentPoly::from_terms({{1, 1}, {1, -1}}).is_zero());
}

TEST_CASE("laurent exact division and evaluation") {
  const LaurentPoly u = LaurentPoly::monomial(1, 1);
  const LaurentPoly p = (u - LaurentPoly::one()) * (u + LaurentPoly::one());
  CHECK(p.divide_exact(u - LaurentPoly::one()) == u + LaurentPoly::one());
  CHECK_THROWS_AS(p.divide_exact(u + u - LaurentPoly::one()), std::domain_error);
  CHECK(p.evaluate(Rational(3)) == Rational(8));
  CHECK(LaurentPoly::monomial(-2, 1).evaluate(Rational(1, 2)) == Rational(4));
}

TEST_CASE("field elements canonicalize") {
  const LaurentPoly u = LaurentPoly::monomial(1, 1);
  const LaurentPoly one = LaurentPoly::one();
  const FieldElem a = FieldElem::ratio((u - one) * (u + one), u - one);
  CHECK(a == FieldElem::from_poly(u + one));
  CHECK(a.is_polynomial());
  const FieldElem b = FieldElem::ratio(one, u - one);
  CHECK_FALSE(b.is_polynomial());
  CHECK(b * (a - FieldElem::constant(2)) == FieldElem::one());
}

TEST_CASE("field inverse and power") {
  const FieldElem q = FieldElem::monomial(1);
  CHECK(q.inverse() == FieldElem::monomial(-1));
  CHECK(q.pow(3) == FieldElem::monomial(3));
  CHECK(q.pow(-2) == FieldElem::monomial(-2));
  CHECK((q + FieldElem::one()).pow(0) == FieldElem::one());
  CHECK_THROWS_AS(FieldElem::zero().inverse(), std::domain_error);
}

TEST_CASE("q powers respect the context") {
  const QContext ctx = make_context({Rational(1, 2), Rational(1, 3)});
  CHECK(ctx.D == 6);
  CHECK(q_power(ctx, Rational(1, 2)) == FieldElem::monomial(3));
  CHECK(q_power(ctx, 2) == FieldElem::monomial(12));
  CHECK_THROWS_AS(q_power(ctx, Rational(1, 4)), std::invalid_argument);
  const QContext plain{1};
  CHECK(q_minus_qinv(plain) == FieldElem::monomial(1) - FieldElem::monomial(-1));
}

TEST_CASE("field evaluation at a rational point") {
  const QContext ctx{1};
  const FieldElem f = q_minus_qinv(ctx);
  CHECK(f.evaluate(Rational(2)) == Rational(3, 2));
  const FieldElem g = FieldElem::one() / (FieldElem::monomial(2) - FieldElem::one());
  CHECK(g.evaluate(Rational(2)) == Rational(1, 3));
}

TEST_CASE("field to string is stable") {
  const QContext ctx{2};
  CHECK_FALSE(field_to_string(q_power(ctx, Rational(1, 2)), ctx).empty());
  CHECK(field_to_string(FieldElem::zero(), ctx) == "0");
}
