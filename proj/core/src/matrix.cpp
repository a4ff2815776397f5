#include "hecke/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hecke {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElem::one();
  return m;
}

Matrix Matrix::diagonal(std::vector<FieldElem> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = std::move(d[i]);
  return m;
}

std::vector<FieldElem> Matrix::column(std::size_t j) const {
  std::vector<FieldElem> v(rows_, FieldElem::zero());
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

std::vector<FieldElem> Matrix::apply(const std::vector<FieldElem>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
  std::vector<FieldElem> r(rows_, FieldElem::zero());
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (at(i, j).is_zero()) continue;
      r[i] += at(i, j) * v[j];
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  Matrix r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  Matrix r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix size mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElem& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  return r;
}

Matrix Matrix::scaled(const FieldElem& c) const {
  Matrix r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

bool Matrix::is_diagonal() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  return true;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::domain_error("only square matrices invert");
  const std::size_t n = rows_;
  if (is_diagonal()) {
    std::vector<FieldElem> d(n, FieldElem::zero());
    for (std::size_t i = 0; i < n; ++i) {
      if (at(i, i).is_zero()) throw std::domain_error("singular matrix");
      d[i] = at(i, i).inverse();
    }
    return diagonal(std::move(d));
  }
  Matrix a = *this;
  Matrix b = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col).is_zero()) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(b.at(piv, j), b.at(col, j));
      }
    FieldElem inv = a.at(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) *= inv;
      b.at(col, j) *= inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      FieldElem f = a.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        b.at(i, j) -= f * b.at(col, j);
      }
    }
  }
  return b;
}

Matrix rref(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && m.at(piv, col).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    FieldElem inv = m.at(r, col).inverse();
    for (std::size_t j = col; j < cols; ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m.at(i, col).is_zero()) continue;
      FieldElem f = m.at(i, col);
      for (std::size_t j = col; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return m;
}

std::size_t matrix_rank(const Matrix& m) {
  Matrix e = rref(m);
  std::size_t r = 0;
  for (std::size_t i = 0; i < e.rows(); ++i) {
    bool nonzero = false;
    for (std::size_t j = 0; j < e.cols(); ++j)
      if (!e.at(i, j).is_zero()) { nonzero = true; break; }
    if (nonzero) ++r;
  }
  return r;
}

std::vector<std::vector<FieldElem>> kernel_basis(const Matrix& m) {
  const std::size_t cols = m.cols();
  Matrix e = rref(m);
  std::vector<long> pivot_row(cols, -1);
  std::size_t r = 0;
  for (std::size_t i = 0; i < e.rows(); ++i) {
    std::size_t j = 0;
    while (j < cols && e.at(i, j).is_zero()) ++j;
    if (j == cols) break;
    pivot_row[j] = static_cast<long>(i);
    ++r;
  }
  std::vector<std::vector<FieldElem>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_row[free] >= 0) continue;
    std::vector<FieldElem> v(cols, FieldElem::zero());
    v[free] = FieldElem::one();
    for (std::size_t j = 0; j < cols; ++j) {
      if (pivot_row[j] < 0) continue;
      v[j] = -e.at(static_cast<std::size_t>(pivot_row[j]), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<FieldElem>> coordinates_in_span(
    const std::vector<std::vector<FieldElem>>& basis, const std::vector<FieldElem>& v) {
  const std::size_t r = basis.size();
  const std::size_t n = v.size();
  Matrix aug(n, r + 1);
  for (std::size_t k = 0; k < r; ++k) {
    if (basis[k].size() != n) throw std::invalid_argument("basis vector has wrong dimension");
    for (std::size_t i = 0; i < n; ++i) aug.at(i, k) = basis[k][i];
  }
  for (std::size_t i = 0; i < n; ++i) aug.at(i, r) = v[i];
  Matrix e = rref(std::move(aug));
  std::vector<FieldElem> c(r, FieldElem::zero());
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = 0;
    while (j <= r && e.at(i, j).is_zero()) ++j;
    if (j > r) break;          // zero rows only below this point
    if (j == r) return std::nullopt;  // pivot in the augmented column
    c[j] = e.at(i, r);
  }
  return c;
}

std::optional<Matrix> map_in_bases(const Matrix& a,
                                   const std::vector<std::vector<FieldElem>>& source,
                                   const std::vector<std::vector<FieldElem>>& target) {
  Matrix m(target.size(), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    std::vector<FieldElem> img = a.apply(source[j]);
    if (target.empty()) {
      for (const FieldElem& x : img)
        if (!x.is_zero()) return std::nullopt;
      continue;
    }
    auto c = coordinates_in_span(target, img);
    if (!c) return std::nullopt;
    for (std::size_t i = 0; i < target.size(); ++i) m.at(i, j) = std::move((*c)[i]);
  }
  return m;
}

void SpanBuilder::reduce(std::vector<FieldElem>& v) const {
  for (const auto& [p, row] : rows_) {
    if (v[p].is_zero()) continue;
    FieldElem f = v[p];
    for (std::size_t j = 0; j < dim_; ++j) {
      if (row[j].is_zero()) continue;
      v[j] -= f * row[j];
    }
  }
}

bool SpanBuilder::insert(std::vector<FieldElem> v) {
  if (v.size() != dim_) throw std::invalid_argument("span vector has wrong dimension");
  reduce(v);
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  FieldElem inv = v[p].inverse();
  for (auto& x : v) x *= inv;
  rows_.emplace(p, std::move(v));
  return true;
}

bool SpanBuilder::contains(std::vector<FieldElem> v) const {
  if (v.size() != dim_) throw std::invalid_argument("span vector has wrong dimension");
  reduce(v);
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace hecke
