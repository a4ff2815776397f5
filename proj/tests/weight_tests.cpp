#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "hecke/field.hpp"
#include "hecke/root_system.hpp"
#include "hecke/weight.hpp"
#include "hecke/weyl.hpp"

using namespace hecke;

TEST_CASE("real weight exponents and values") {
  const RootSystem rs(Family::A, 2);
  const Weight t = Weight::real(rs, {Rational(2, 3), Rational(1, 3)});
  CHECK(t.context().D == 3);
  CHECK(t.simple_root_exponent(0) == Rational(1));
  CHECK(t.simple_root_exponent(1) == Rational(0));
  CHECK(t.exponent({1, 1}) == Rational(1));
  CHECK(t.simple_root_value(0) == q_power(t.context(), 2));
  CHECK(t.simple_root_value(1) == FieldElem::one());
  CHECK(t.value({1, 0}) == q_power(t.context(), Rational(4, 3)));
}

TEST_CASE("zero and pole sets of the running example") {
  const RootSystem rs(Family::A, 2);
  const Weight t = Weight::real(rs, {Rational(2, 3), Rational(1, 3)});
  const ZeroPoleSets zp = zero_pole_sets(t);
  CHECK(zp.zero == std::vector<int>{1});
  CHECK(zp.pole == std::vector<int>{0, 2});
}

TEST_CASE("reflection moves only one coordinate value") {
  const RootSystem rs(Family::C, 2);
  const Weight t = Weight::real(rs, {Rational(1, 2), Rational(0)});
  const Weight r = t.reflected(0);
  CHECK(r.gamma()[0] == Rational(-1, 2));
  CHECK(r.gamma()[1] == t.gamma()[1]);
  CHECK(r.coordinate_values()[1] == t.coordinate_values()[1]);
  CHECK(r.value({1, 0}) == t.value({1, 0}) * t.simple_root_value(0).inverse());
  const Weight back = r.reflected(0);
  CHECK(back == t);
}

TEST_CASE("acted matches iterated reflections") {
  const RootSystem rs(Family::G, 2);
  const Weight t = Weight::real(rs, {Rational(1, 5), Rational(1, 7)});
  const std::vector<int> word{0, 1, 0, 1};
  Weight step = t;
  for (auto it = word.rbegin(); it != word.rend(); ++it) step = step.reflected(*it);
  CHECK(t.acted(from_word(rs, word)) == step);
}

TEST_CASE("general weights agree with their real counterparts") {
  const RootSystem rs(Family::A, 2);
  const Weight real = Weight::real(rs, {Rational(2, 3), Rational(1, 3)});
  const Weight general =
      Weight::general(rs, real.context(),
                      {real.coordinate_values()[0], real.coordinate_values()[1]});
  CHECK_FALSE(general.is_real());
  CHECK(general.value({1, 1}) == real.value({1, 1}));
  const ZeroPoleSets a = zero_pole_sets(real);
  const ZeroPoleSets b = zero_pole_sets(general);
  CHECK(a.zero == b.zero);
  CHECK(a.pole == b.pole);
  CHECK_THROWS_AS(general.gamma(), std::logic_error);
  CHECK_THROWS_AS(
      Weight::general(rs, real.context(), {FieldElem::zero(), FieldElem::one()}),
      std::invalid_argument);
}

TEST_CASE("orbit of a stabilized weight") {
  const RootSystem rs(Family::A, 2);
  const Weight t = Weight::real(rs, {Rational(2, 3), Rational(1, 3)});
  const auto orbit = weight_orbit(t);
  REQUIRE(orbit.size() == 3);
  CHECK(orbit[0].word.empty());
  CHECK(orbit[1].word == std::vector<int>{0});
  CHECK(orbit[2].word == std::vector<int>{1, 0});
  std::set<Weight> distinct;
  for (const auto& e : orbit) {
    distinct.insert(e.weight);
    CHECK(t.acted(e.rep) == e.weight);
    CHECK(reduced_word(rs, e.rep) == e.word);
  }
  CHECK(distinct.size() == 3);
  CHECK(weight_stabilizer_order(t) == 2);
  CHECK(orbit.size() * weight_stabilizer_order(t) == rs.weyl_order());
}

TEST_CASE("generic orbit fills the group") {
  const RootSystem rs(Family::C, 2);
  const Weight t = Weight::real(rs, {Rational(1, 5), Rational(1, 7)});
  CHECK(weight_orbit(t).size() == 8);
  CHECK(weight_stabilizer_order(t) == 1);
}

TEST_CASE("orbit respects the cap") {
  const RootSystem rs(Family::B, 3);
  const Weight t = Weight::real(rs, {Rational(1, 5), Rational(1, 7), Rational(1, 11)});
  CHECK_THROWS_AS(weight_orbit(t, 5), std::length_error);
}

TEST_CASE("dominant representative") {
  const RootSystem rs(Family::A, 2);
  const Weight t = Weight::real(rs, {Rational(-2, 3), Rational(1, 3)});
  const auto [dom, word] = dominant_rep(t);
  for (int i = 0; i < 2; ++i) CHECK(dom.simple_root_exponent(i) >= 0);
  CHECK(t.acted(from_word(rs, word)) == dom);
  const auto [already, empty_word] = dominant_rep(dom);
  CHECK(already == dom);
  CHECK(empty_word.empty());
}

TEST_CASE("weights order and compare by values") {
  const RootSystem rs(Family::A, 2);
  const Weight a = Weight::real(rs, {Rational(1, 2), Rational(0)});
  const Weight b = Weight::real(rs, {Rational(0), Rational(1, 2)});
  CHECK(a != b);
  CHECK((a < b || b < a));
  CHECK_FALSE(a < a);
}
