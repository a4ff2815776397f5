#include <doctest.h>

#include <random>
#include <vector>

#include "hecke/field.hpp"
#include "hecke/hecke_algebra.hpp"
#include "hecke/json_io.hpp"
#include "hecke/matrix.hpp"
#include "hecke/rational.hpp"
#include "hecke/root_system.hpp"
#include "hecke/weight.hpp"
#include "hecke/weyl.hpp"

using namespace hecke;

namespace {

std::vector<int> random_word(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> d(0, rank - 1);
  std::vector<int> w(len);
  for (auto& x : w) x = d(rng);
  return w;
}

FieldElem random_field(std::mt19937& rng, const QContext& ctx) {
  std::uniform_int_distribution<int> e(-4, 4);
  std::uniform_int_distribution<int> c(-5, 5);
  FieldElem num = FieldElem::zero();
  for (int k = 0; k < 3; ++k) {
    num = num + q_power(ctx, e(rng)) * FieldElem::constant(Rational(c(rng)));
  }
  FieldElem den = FieldElem::zero();
  while (den == FieldElem::zero()) {
    den = q_power(ctx, e(rng)) + FieldElem::constant(Rational(c(rng)));
  }
  return num / den;
}

}  // namespace

TEST_CASE("group words compose and invert consistently") {
  std::mt19937 rng(20260818);
  for (auto spec : {std::pair{Family::A, 3}, std::pair{Family::B, 3}}) {
    RootSystem rs(spec.first, spec.second);
    for (int trial = 0; trial < 40; ++trial) {
      const auto wa = random_word(rng, spec.second, 8);
      const auto wb = random_word(rng, spec.second, 8);
      const WeylElement a = from_word(rs, wa);
      const WeylElement b = from_word(rs, wb);

      std::vector<int> cat = wa;
      cat.insert(cat.end(), wb.begin(), wb.end());
      CHECK(from_word(rs, cat) == a * b);
      CHECK(a * a.inverse() == WeylElement::identity(spec.second));
      CHECK((a * b).inverse() == b.inverse() * a.inverse());

      const auto red = reduced_word(rs, a);
      CHECK(red.size() == weyl_length(rs, a));
      CHECK(from_word(rs, red) == a);
    }
  }
}

TEST_CASE("orbit size times stabilizer order is the group order") {
  RootSystem rs(Family::A, 2);
  for (int p = 0; p <= 4; ++p) {
    for (int r = 0; r <= 4; ++r) {
      const Weight t = Weight::real(rs, {Rational(p, 2), Rational(r, 2)});
      const auto orbit = weight_orbit(t);
      CHECK(orbit.size() * weight_stabilizer_order(t) == rs.weyl_order());
    }
  }
}

TEST_CASE("acting by a word matches iterated reflection") {
  std::mt19937 rng(7);
  RootSystem rs(Family::G, 2);
  const Weight t = Weight::real(rs, {Rational(1, 3), Rational(2, 5)});
  for (int trial = 0; trial < 20; ++trial) {
    const auto word = random_word(rng, 2, 6);
    Weight stepped = t;
    // acted applies the word right to left.
    for (auto it = word.rbegin(); it != word.rend(); ++it) stepped = stepped.reflected(*it);
    CHECK(t.acted(from_word(rs, word)) == stepped);
  }
}

TEST_CASE("algebra multiplication is associative") {
  std::mt19937 rng(99);
  for (auto fam : {Family::A, Family::C}) {
    RootSystem rs(fam, 2);
    QContext ctx{1};
    HeckeAlgebra h(rs, ctx);

    std::uniform_int_distribution<int> coord(-2, 2);
    auto random_elem = [&] {
      HeckeElem e = HeckeElem::zero();
      for (int k = 0; k < 2; ++k) {
        const auto word = random_word(rng, 2, 3);
        e.add_term(from_word(rs, word), {coord(rng), coord(rng)}, q_power(ctx, coord(rng)));
      }
      return e;
    };

    for (int trial = 0; trial < 10; ++trial) {
      const HeckeElem a = random_elem(), b = random_elem(), c = random_elem();
      CHECK(h.multiply(h.multiply(a, b), c) == h.multiply(a, h.multiply(b, c)));
    }
  }
}

TEST_CASE("single-step products agree with general multiplication") {
  std::mt19937 rng(5);
  RootSystem rs(Family::C, 2);
  QContext ctx{1};
  HeckeAlgebra h(rs, ctx);
  std::uniform_int_distribution<int> coord(-2, 2);

  for (int trial = 0; trial < 15; ++trial) {
    HeckeElem a = HeckeElem::zero();
    a.add_term(from_word(rs, random_word(rng, 2, 4)), {coord(rng), coord(rng)},
               q_power(ctx, coord(rng)) + FieldElem::one());
    for (int i = 0; i < 2; ++i) {
      CHECK(h.times_t(a, i) == h.multiply(a, h.t_generator(i)));
    }
    const std::vector<int> lambda{coord(rng), coord(rng)};
    CHECK(h.times_x(a, lambda) == h.multiply(a, h.x_monomial(lambda)));
  }
}

TEST_CASE("commutation rule holds for signed fundamental and simple weights") {
  for (auto fam : {Family::A, Family::C, Family::G}) {
    RootSystem rs(fam, 2);
    QContext ctx{1};
    HeckeAlgebra h(rs, ctx);
    const FieldElem qq = q_minus_qinv(ctx);

    std::vector<std::vector<int>> lambdas = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (int i = 0; i < 2; ++i) {
      std::vector<int> alpha = rs.simple_root_omega(i);
      lambdas.push_back(alpha);
      for (auto& x : alpha) x = -x;
      lambdas.push_back(alpha);
    }

    for (const auto& lambda : lambdas) {
      for (int i = 0; i < 2; ++i) {
        const HeckeElem lhs = h.times_t(h.x_monomial(lambda), i);
        const HeckeElem rhs = h.multiply(h.t_generator(i), h.x_monomial(rs.reflect_weight(i, lambda))) +
                              h.geometric_factor(lambda, i).scaled(qq);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("field serialization round trips on random elements") {
  std::mt19937 rng(424242);
  QContext ctx{4};
  for (int trial = 0; trial < 30; ++trial) {
    const FieldElem f = random_field(rng, ctx);
    CHECK(field_from_json(field_to_json(f, ctx), ctx) == f);
  }
}

TEST_CASE("row reduction is idempotent and kernels really annihilate") {
  std::mt19937 rng(1234);
  QContext ctx{1};
  std::uniform_int_distribution<int> c(-3, 3);

  for (int trial = 0; trial < 12; ++trial) {
    Matrix m(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t k = 0; k < 4; ++k)
        m.at(r, k) = FieldElem::constant(Rational(c(rng))) +
                     q_power(ctx, c(rng)) * FieldElem::constant(Rational(c(rng) % 2));

    const Matrix r1 = rref(m);
    CHECK(rref(r1) == r1);
    CHECK(matrix_rank(r1) == matrix_rank(m));

    const auto kernel = kernel_basis(m);
    CHECK(kernel.size() + matrix_rank(m) == 4);
    for (const auto& v : kernel) {
      bool nonzero = false;
      for (const auto& x : v)
        if (!(x == FieldElem::zero())) nonzero = true;
      CHECK(nonzero);
      const auto image = m.apply(v);
      for (const auto& x : image) CHECK(x == FieldElem::zero());
    }
  }
}
