#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "hecke/field.hpp"

namespace hecke {

// Dense matrix over the scalar field. Sizes here stay small (module
// dimensions), so clarity beats packing; the multiply skips zero entries,
// which is where the actual sparsity lives.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, FieldElem::zero()) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::vector<FieldElem> d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const FieldElem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<FieldElem> column(std::size_t j) const;
  std::vector<FieldElem> apply(const std::vector<FieldElem>& v) const;  // M v

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const FieldElem& c) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_diagonal() const;
  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix inverse() const;  // throws std::domain_error when singular

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElem> a_;
};

// Reduced row echelon form, pivots normalized to 1.
Matrix rref(Matrix m);
std::size_t matrix_rank(const Matrix& m);

// Basis of {v : M v = 0}, one vector per free column, deterministic order.
std::vector<std::vector<FieldElem>> kernel_basis(const Matrix& m);

// Solves sum_k c_k basis_k = v; nothing when v is outside the span. With an
// independent basis the solution is unique; otherwise free coefficients are 0.
std::optional<std::vector<FieldElem>> coordinates_in_span(
    const std::vector<std::vector<FieldElem>>& basis, const std::vector<FieldElem>& v);

// Matrix of v |-> A v as a map span(source) -> span(target), in the given
// bases. Nothing when some image leaves the target span.
std::optional<Matrix> map_in_bases(const Matrix& a,
                                   const std::vector<std::vector<FieldElem>>& source,
                                   const std::vector<std::vector<FieldElem>>& target);

// Incremental row-space accumulator: an echelonized dictionary keyed by pivot
// column. insert() reports whether the vector enlarged the span.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  bool insert(std::vector<FieldElem> v);
  bool contains(std::vector<FieldElem> v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  void reduce(std::vector<FieldElem>& v) const;

  std::size_t dim_;
  std::map<std::size_t, std::vector<FieldElem>> rows_;  // pivot column -> row, pivot entry 1
};

}  // namespace hecke
