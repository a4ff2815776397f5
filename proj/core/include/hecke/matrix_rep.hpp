#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hecke/field.hpp"
#include "hecke/matrix.hpp"
#include "hecke/root_system.hpp"
#include "hecke/weight.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

// Finite-dimensional module given by one matrix per generator: T_1..T_n and
// X^{omega_1}..X^{omega_n}. Basis vectors are labeled by reduced words and,
// when the module came with one, by a weight each (the candidate eigenvalue
// tuple of the X-action on that vector). Holds a pointer to the root system,
// which must outlive the representation.
class MatrixRep {
 public:
  MatrixRep(const RootSystem& rs, const QContext& ctx,
            std::vector<std::vector<int>> basis_words, std::vector<Matrix> t_mats,
            std::vector<Matrix> x_mats, std::vector<Weight> weights = {});

  const RootSystem& root_system() const { return *rs_; }
  const QContext& context() const { return ctx_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::vector<int>>& basis_words() const { return basis_words_; }
  const Matrix& t_matrix(int i) const { return t_.at(i); }
  const Matrix& x_matrix(int k) const { return x_.at(k); }
  bool has_weights() const { return !weights_.empty(); }
  const std::vector<Weight>& weights() const { return weights_; }

  const Matrix& x_inverse(int k) const;  // memoized; throws if singular
  // Product over coordinates of X^{omega_k} powers: the action of X^lambda.
  Matrix x_lambda(const std::vector<int>& lambda) const;

 private:
  const RootSystem* rs_;
  QContext ctx_;
  std::size_t dim_;
  std::vector<std::vector<int>> basis_words_;
  std::vector<Matrix> t_, x_;
  std::vector<Weight> weights_;
  mutable std::vector<Matrix> xinv_;
  mutable std::vector<bool> xinv_ready_;
};

// M(t) on the basis {T_w (x) v_t}, w over the whole group in enumeration
// order. T_i acts by left multiplication; X^lambda is pushed through T_w by
// the commutation rule and evaluated at t on the right.
MatrixRep principal_series(const RootSystem& rs, const Weight& t,
                           std::size_t cap = kDefaultWeylCap);

struct CheckEntry {
  std::string name;
  bool pass = false;
};

struct RelationReport {
  std::vector<CheckEntry> entries;
  bool all_pass() const;
  std::vector<std::string> failures() const;
};

// Exact matrix checks: quadratic relation per T_i, braid relation per pair,
// X-commutativity per pair, X-invertibility, and the commutation rule for
// every lambda = omega_k. Failures become report entries, never exceptions.
RelationReport verify_defining_relations(const MatrixRep& m);

struct WeightSpaceInfo {
  Weight weight;
  std::size_t genuine_dim = 0;
  std::size_t generalized_dim = 0;
  std::vector<std::vector<FieldElem>> genuine_basis;
  std::vector<std::vector<FieldElem>> generalized_basis;
};

struct WeightAnalysis {
  std::vector<WeightSpaceInfo> spaces;  // support only (generalized_dim > 0)
  bool calibrated = false;              // every space genuine, and complete
  bool complete = false;                // generalized dims sum to dim
};

// Simultaneous eigen-analysis of the X-matrices at the candidate weights from
// the basis weight map (required). Generalized spaces are grown by exact
// kernel lifting until they stabilize; the limit equals the kernel of the
// dim-th power, which is the textbook definition. When the X-matrices are
// simultaneously triangular the generalized dimensions are instead read off
// as diagonal multiplicities, which is the same number. Dimensions and flags
// are always exact; with_bases = false skips materializing basis vectors and
// leaves both basis fields empty.
WeightAnalysis weight_space_analysis(const MatrixRep& m, bool with_bases = true);

// Dimension of the smallest subspace containing v stable under all generator
// matrices, by incremental exact row reduction.
std::size_t cyclic_closure(const MatrixRep& m, const std::vector<FieldElem>& v);

}  // namespace hecke
