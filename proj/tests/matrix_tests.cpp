#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "hecke/field.hpp"
#include "hecke/matrix.hpp"

using namespace hecke;

namespace {

FieldElem c(int v) { return FieldElem::constant(Rational(v)); }

Matrix from_rows(const std::vector<std::vector<int>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = c(rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("matrix arithmetic") {
  const Matrix a = from_rows({{1, 2}, {3, 4}});
  const Matrix b = from_rows({{0, 1}, {1, 0}});
  CHECK(a * b == from_rows({{2, 1}, {4, 3}}));
  CHECK(a + b == from_rows({{1, 3}, {4, 4}}));
  CHECK(a - a == Matrix(2, 2));
  CHECK((a - a).is_zero());
  CHECK(Matrix::identity(3).is_identity());
  CHECK(a.scaled(c(2)) == from_rows({{2, 4}, {6, 8}}));
  CHECK(a.apply({c(1), c(0)}) == std::vector<FieldElem>{c(1), c(3)});
  CHECK(a.column(1) == std::vector<FieldElem>{c(2), c(4)});
}

TEST_CASE("rank and rref") {
  CHECK(matrix_rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(matrix_rank(from_rows({{1, 2}, {3, 4}})) == 2);
  CHECK(matrix_rank(Matrix(3, 3)) == 0);
  const Matrix e = rref(from_rows({{2, 4}, {1, 2}}));
  CHECK(e.at(0, 0) == c(1));
  CHECK(e.at(0, 1) == c(2));
  CHECK(e.at(1, 0).is_zero());
}

TEST_CASE("kernel basis solves the system") {
  const Matrix m = from_rows({{1, 2, 3}, {2, 4, 6}});
  const auto kernel = kernel_basis(m);
  REQUIRE(kernel.size() == 2);
  for (const auto& v : kernel) {
    const auto image = m.apply(v);
    for (const auto& x : image) CHECK(x.is_zero());
  }
  CHECK(kernel_basis(Matrix::identity(2)).empty());
}

TEST_CASE("inverse") {
  const Matrix a = from_rows({{1, 2}, {3, 4}});
  CHECK(a * a.inverse() == Matrix::identity(2));
  CHECK_THROWS_AS(from_rows({{1, 2}, {2, 4}}).inverse(), std::domain_error);
  const FieldElem q = FieldElem::monomial(1);
  Matrix d(2, 2);
  d.at(0, 0) = q;
  d.at(1, 1) = q.inverse();
  CHECK(d.is_diagonal());
  CHECK(d.inverse().at(0, 0) == q.inverse());
}

TEST_CASE("coordinates in span") {
  const std::vector<std::vector<FieldElem>> basis{{c(1), c(0), c(1)}, {c(0), c(1), c(1)}};
  const auto in = coordinates_in_span(basis, {c(2), c(3), c(5)});
  REQUIRE(in.has_value());
  CHECK((*in)[0] == c(2));
  CHECK((*in)[1] == c(3));
  CHECK_FALSE(coordinates_in_span(basis, {c(1), c(0), c(0)}).has_value());
  CHECK(coordinates_in_span({}, {c(0), c(0)}).has_value());
  CHECK_FALSE(coordinates_in_span({}, {c(1), c(0)}).has_value());
}

TEST_CASE("map restricted to invariant bases") {
  Matrix d(2, 2);
  d.at(0, 0) = c(2);
  d.at(1, 1) = c(3);
  const std::vector<std::vector<FieldElem>> e0{{c(1), c(0)}};
  const auto r = map_in_bases(d, e0, e0);
  REQUIRE(r.has_value());
  CHECK(r->at(0, 0) == c(2));
  const Matrix swap = from_rows({{0, 1}, {1, 0}});
  CHECK_FALSE(map_in_bases(swap, e0, e0).has_value());
  const auto zero_target = map_in_bases(Matrix(2, 2), e0, {});
  REQUIRE(zero_target.has_value());
  CHECK(zero_target->rows() == 0);
}

TEST_CASE("span builder reduces incrementally") {
  SpanBuilder sb(3);
  CHECK(sb.insert({c(1), c(1), c(0)}));
  CHECK(sb.insert({c(0), c(1), c(1)}));
  CHECK_FALSE(sb.insert({c(1), c(2), c(1)}));
  CHECK(sb.rank() == 2);
  CHECK(sb.contains({c(1), c(0), c(-1)}));
  CHECK_FALSE(sb.contains({c(0), c(0), c(1)}));
  CHECK(sb.insert({c(0), c(0), c(1)}));
  CHECK(sb.rank() == 3);
}
