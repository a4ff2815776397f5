#include "hecke/matrix_rep.hpp"

#include <cstdlib>
#include <deque>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "hecke/hecke_algebra.hpp"
#include "modarith.hpp"

namespace hecke {

namespace {

std::vector<FieldElem> basis_vector(std::size_t dim, std::size_t j) {
  std::vector<FieldElem> e(dim, FieldElem::zero());
  e[j] = FieldElem::one();
  return e;
}

Matrix stack_rows(const std::vector<Matrix>& mats) {
  std::size_t rows = 0;
  for (const Matrix& m : mats) rows += m.rows();
  Matrix out(rows, mats.empty() ? 0 : mats.front().cols());
  std::size_t r = 0;
  for (const Matrix& m : mats) {
    for (std::size_t i = 0; i < m.rows(); ++i, ++r)
      for (std::size_t j = 0; j < m.cols(); ++j) out.at(r, j) = m.at(i, j);
  }
  return out;
}

Matrix rows_to_matrix(const std::vector<std::vector<FieldElem>>& rows, std::size_t cols) {
  Matrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = rows[i][j];
  return out;
}

using modarith::u64;

constexpr u64 kCheckPrime = 2305843009213693951ULL;

bool eval_matrix_mod(const Matrix& m, u64 x, std::vector<std::vector<u64>>& out) {
  out.assign(m.rows(), std::vector<u64>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const FieldElem& f = m.at(i, j);
      if (f.is_zero()) continue;
      if (!f.evaluate_mod(x, kCheckPrime, out[i][j])) return false;
    }
  return true;
}

// Row-echelon span over Z/p, pivot position -> normalized row.
class ModSpan {
 public:
  explicit ModSpan(std::size_t dim) : rows_(dim), has_(dim, false) {}

  bool insert(std::vector<u64> w) {
    const u64 p = kCheckPrime;
    for (std::size_t c = 0; c < w.size(); ++c) {
      if (w[c] == 0) continue;
      if (!has_[c]) {
        u64 inv = modarith::invmod(w[c], p);
        for (auto& v : w) v = modarith::mulmod(v, inv, p);
        rows_[c] = std::move(w);
        has_[c] = true;
        return true;
      }
      const u64 f = w[c];
      const auto& r = rows_[c];
      for (std::size_t j = c; j < w.size(); ++j) {
        u64 s = modarith::mulmod(f, r[j], p);
        w[j] = w[j] >= s ? w[j] - s : w[j] + p - s;
      }
    }
    return false;
  }

  std::size_t rank() const {
    std::size_t r = 0;
    for (bool h : has_) r += h ? 1 : 0;
    return r;
  }

 private:
  std::vector<std::vector<u64>> rows_;
  std::vector<bool> has_;
};

std::vector<u64> apply_mod(const std::vector<std::vector<u64>>& m, const std::vector<u64>& v) {
  std::vector<u64> r(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    u64 acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (m[i][j] == 0 || v[j] == 0) continue;
      acc = (acc + modarith::mulmod(m[i][j], v[j], kCheckPrime)) % kCheckPrime;
    }
    r[i] = acc;
  }
  return r;
}

// Closure rank at one evaluation point. Ranks only drop under evaluation, so
// a full answer here certifies the symbolic one.
std::size_t closure_rank_mod(const std::vector<std::vector<std::vector<u64>>>& gens,
                             const std::vector<u64>& v0) {
  ModSpan span(v0.size());
  std::deque<std::vector<u64>> queue;
  if (span.insert(v0)) queue.push_back(v0);
  while (!queue.empty()) {
    std::vector<u64> u = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      std::vector<u64> img = apply_mod(g, u);
      std::vector<u64> copy = img;
      if (span.insert(std::move(img))) queue.push_back(std::move(copy));
    }
  }
  return span.rank();
}

bool all_upper_triangular(const std::vector<Matrix>& mats) {
  for (const Matrix& m : mats)
    for (std::size_t i = 1; i < m.rows(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (!m.at(i, j).is_zero()) return false;
  return true;
}

// Simultaneous kernel of upper-triangular shifts by back-substitution. A
// kernel vector's topmost support index j forces zero diagonals there, and
// each lower component is determined by any row with a nonzero diagonal.
// Returns nullopt on a free lower component (zero diagonals below the top),
// which only the generic elimination resolves.
std::optional<std::vector<std::vector<FieldElem>>> triangular_kernel(
    const std::vector<Matrix>& shifted) {
  const std::size_t dim = shifted.front().rows();
  const std::size_t n = shifted.size();
  std::vector<std::vector<FieldElem>> basis;
  for (std::size_t j = 0; j < dim; ++j) {
    bool zero_diag = true;
    for (std::size_t k = 0; k < n && zero_diag; ++k) zero_diag = shifted[k].at(j, j).is_zero();
    if (!zero_diag) continue;
    std::vector<FieldElem> v(dim, FieldElem::zero());
    v[j] = FieldElem::one();
    bool ok = true;
    for (std::size_t i = j; ok && i-- > 0;) {
      std::vector<FieldElem> r(n, FieldElem::zero());
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = i + 1; l <= j; ++l) {
          if (v[l].is_zero() || shifted[k].at(i, l).is_zero()) continue;
          r[k] += shifted[k].at(i, l) * v[l];
        }
      std::size_t k_nz = n;
      for (std::size_t k = 0; k < n; ++k)
        if (!shifted[k].at(i, i).is_zero()) { k_nz = k; break; }
      if (k_nz == n) {
        for (std::size_t k = 0; k < n; ++k)
          if (!r[k].is_zero()) { ok = false; break; }
        if (ok) return std::nullopt;
        break;
      }
      v[i] = -(r[k_nz] / shifted[k_nz].at(i, i));
      for (std::size_t k = 0; k < n && ok; ++k) {
        if (k == k_nz) continue;
        ok = (shifted[k].at(i, i) * v[i] + r[k]).is_zero();
      }
    }
    if (ok) basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

MatrixRep::MatrixRep(const RootSystem& rs, const QContext& ctx,
                     std::vector<std::vector<int>> basis_words, std::vector<Matrix> t_mats,
                     std::vector<Matrix> x_mats, std::vector<Weight> weights)
    : rs_(&rs),
      ctx_(ctx),
      dim_(basis_words.size()),
      basis_words_(std::move(basis_words)),
      t_(std::move(t_mats)),
      x_(std::move(x_mats)),
      weights_(std::move(weights)) {
  const std::size_t n = static_cast<std::size_t>(rs.rank());
  if (t_.size() != n || x_.size() != n)
    throw std::invalid_argument("need one T and one X matrix per simple index");
  for (const Matrix& m : t_)
    if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("T matrix size mismatch");
  for (const Matrix& m : x_)
    if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("X matrix size mismatch");
  if (!weights_.empty() && weights_.size() != dim_)
    throw std::invalid_argument("weight map must label every basis vector");
  xinv_.resize(n);
  xinv_ready_.assign(n, false);
}

const Matrix& MatrixRep::x_inverse(int k) const {
  if (!xinv_ready_.at(k)) {
    xinv_[k] = x_[k].inverse();
    xinv_ready_[k] = true;
  }
  return xinv_[k];
}

Matrix MatrixRep::x_lambda(const std::vector<int>& lambda) const {
  Matrix out = Matrix::identity(dim_);
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    const Matrix& base = lambda[k] > 0 ? x_matrix(static_cast<int>(k)) : x_inverse(static_cast<int>(k));
    for (int p = 0; p < std::abs(lambda[k]); ++p) out = out * base;
  }
  return out;
}

MatrixRep principal_series(const RootSystem& rs, const Weight& t, std::size_t cap) {
  const int n = rs.rank();
  WeylGroup group = WeylGroup::enumerate(rs, cap);
  const std::size_t dim = group.size();
  HeckeAlgebra alg(rs, t.context());
  const FieldElem qq = q_minus_qinv(t.context());

  std::vector<Matrix> tm(n, Matrix(dim, dim));
  for (int i = 0; i < n; ++i) {
    WeylElement si = WeylElement::simple_reflection(rs, i);
    for (std::size_t col = 0; col < dim; ++col) {
      const WeylElement& w = group.element(col);
      std::size_t target = group.index_of(si * w);
      tm[i].at(target, col) = FieldElem::one();
      // Left descent adds the quadratic correction on the diagonal.
      auto cls = rs.classify_root(w.act_inverse(rs.simple_root_omega(i)));
      if (cls->second < 0) tm[i].at(col, col) += qq;
    }
  }

  std::vector<Matrix> xm(n, Matrix(dim, dim));
  for (int k = 0; k < n; ++k) {
    std::vector<int> omega(n, 0);
    omega[k] = 1;
    for (std::size_t col = 0; col < dim; ++col) {
      HeckeElem e = alg.x_monomial(omega);
      for (int i : group.word(col)) e = alg.times_t(e, i);
      for (const HeckeTerm& term : e.terms())
        xm[k].at(group.index_of(term.w), col) += term.coeff * t.value(term.lambda);
    }
  }

  std::vector<std::vector<int>> words;
  std::vector<Weight> weights;
  words.reserve(dim);
  weights.reserve(dim);
  for (std::size_t kk = 0; kk < dim; ++kk) {
    words.push_back(group.word(kk));
    weights.push_back(t.acted(group.element(kk)));
  }
  return MatrixRep(rs, t.context(), std::move(words), std::move(tm), std::move(xm),
                   std::move(weights));
}

bool RelationReport::all_pass() const {
  for (const CheckEntry& e : entries)
    if (!e.pass) return false;
  return true;
}

std::vector<std::string> RelationReport::failures() const {
  std::vector<std::string> out;
  for (const CheckEntry& e : entries)
    if (!e.pass) out.push_back(e.name);
  return out;
}

RelationReport verify_defining_relations(const MatrixRep& m) {
  const RootSystem& rs = m.root_system();
  const int n = rs.rank();
  const std::size_t dim = m.dim();
  const FieldElem qq = q_minus_qinv(m.context());
  RelationReport report;

  auto apply_word = [&](const std::vector<int>& gens, std::vector<FieldElem> v) {
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) v = m.t_matrix(*it).apply(v);
    return v;
  };

  for (int i = 0; i < n; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < dim && ok; ++j) {
      std::vector<FieldElem> tv = m.t_matrix(i).column(j);
      std::vector<FieldElem> ttv = m.t_matrix(i).apply(tv);
      for (std::size_t r = 0; r < dim && ok; ++r) {
        FieldElem expect = qq * tv[r];
        if (r == j) expect += FieldElem::one();
        ok = ttv[r] == expect;
      }
    }
    report.entries.push_back({"T" + std::to_string(i + 1) + " quadratic", ok});
  }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int order = rs.braid_order(i, j);
      std::vector<int> lhs, rhs;
      for (int k = 0; k < order; ++k) {
        lhs.push_back(k % 2 == 0 ? i : j);
        rhs.push_back(k % 2 == 0 ? j : i);
      }
      bool ok = true;
      for (std::size_t col = 0; col < dim && ok; ++col) {
        std::vector<FieldElem> e = basis_vector(dim, col);
        ok = apply_word(lhs, e) == apply_word(rhs, e);
      }
      report.entries.push_back({"T" + std::to_string(i + 1) + "/T" + std::to_string(j + 1) +
                                    " braid (m=" + std::to_string(order) + ")",
                                ok});
    }

  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      bool ok = true;
      for (std::size_t col = 0; col < dim && ok; ++col) {
        std::vector<FieldElem> e = m.x_matrix(l).column(col);
        std::vector<FieldElem> f = m.x_matrix(k).column(col);
        ok = m.x_matrix(k).apply(e) == m.x_matrix(l).apply(f);
      }
      report.entries.push_back(
          {"X" + std::to_string(k + 1) + "/X" + std::to_string(l + 1) + " commute", ok});
    }

  for (int k = 0; k < n; ++k) {
    bool ok = true;
    try {
      m.x_inverse(k);
    } catch (const std::domain_error&) {
      ok = false;
    }
    report.entries.push_back({"X" + std::to_string(k + 1) + " invertible", ok});
  }

  // Commutation rule at lambda = omega_k. Only k = i needs a correction term:
  // X^{omega_i} T_i = T_i X^{omega_i - alpha_i} + (q - q^-1) X^{omega_i}.
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      bool ok = true;
      try {
        Matrix shifted;
        if (k == i) {
          std::vector<int> mu(n, 0);
          mu[i] = 1;
          const std::vector<int> alpha = rs.simple_root_omega(i);
          for (int a = 0; a < n; ++a) mu[a] -= alpha[a];
          shifted = m.x_lambda(mu);
        }
        for (std::size_t col = 0; col < dim && ok; ++col) {
          std::vector<FieldElem> tcol = m.t_matrix(i).column(col);
          std::vector<FieldElem> lhsv = m.x_matrix(k).apply(tcol);
          std::vector<FieldElem> rhsv;
          if (k == i) {
            rhsv = m.t_matrix(i).apply(shifted.column(col));
            std::vector<FieldElem> xcol = m.x_matrix(k).column(col);
            for (std::size_t r = 0; r < dim; ++r) rhsv[r] += qq * xcol[r];
          } else {
            rhsv = m.t_matrix(i).apply(m.x_matrix(k).column(col));
          }
          ok = lhsv == rhsv;
        }
      } catch (const std::domain_error&) {
        ok = false;  // singular X; already reported above
      }
      report.entries.push_back(
          {"X" + std::to_string(k + 1) + " through T" + std::to_string(i + 1), ok});
    }

  return report;
}

WeightAnalysis weight_space_analysis(const MatrixRep& m, bool with_bases) {
  if (!m.has_weights())
    throw std::invalid_argument("weight space analysis needs the basis weight map");
  const int n = m.root_system().rank();
  const std::size_t dim = m.dim();

  std::vector<Weight> candidates;
  for (const Weight& w : m.weights()) {
    bool known = false;
    for (const Weight& c : candidates)
      if (c == w) { known = true; break; }
    if (!known) candidates.push_back(w);
  }

  bool all_diagonal = true;
  for (int k = 0; k < n && all_diagonal; ++k) all_diagonal = m.x_matrix(k).is_diagonal();

  std::vector<Matrix> xs;
  xs.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) xs.push_back(m.x_matrix(k));
  const bool triangular = !all_diagonal && all_upper_triangular(xs);

  auto make_shifted = [&](const std::vector<FieldElem>& c) {
    std::vector<Matrix> shifted;
    shifted.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      Matrix a = xs[static_cast<std::size_t>(k)];
      for (std::size_t j = 0; j < dim; ++j) a.at(j, j) -= c[k];
      shifted.push_back(std::move(a));
    }
    return shifted;
  };

  // Kernel lifting: V <- {v : (X_k - c_k) v in V for all k} until stable.
  // The limit is the simultaneous generalized eigenspace.
  auto lift = [&](std::vector<std::vector<FieldElem>> v, const std::vector<Matrix>& shifted) {
    for (std::size_t round = 0; round < dim; ++round) {
      if (v.size() == dim) break;
      Matrix ann = rows_to_matrix(kernel_basis(rows_to_matrix(v, dim)), dim);
      std::vector<Matrix> constraints;
      constraints.reserve(shifted.size());
      for (const Matrix& a : shifted) constraints.push_back(ann * a);
      std::vector<std::vector<FieldElem>> next = kernel_basis(stack_rows(constraints));
      if (next.size() == v.size()) break;
      v = std::move(next);
    }
    return v;
  };

  WeightAnalysis out;
  if (triangular) {
    // Simultaneously triangular X act along a flag with one-dimensional
    // quotients, each carrying the character on the diagonal. The generalized
    // multiplicity of a weight is therefore its diagonal count, and count one
    // pins the genuine space to the whole of it.
    for (const Weight& cand : candidates) {
      const std::vector<FieldElem>& c = cand.coordinate_values();
      std::size_t mult = 0;
      for (std::size_t j = 0; j < dim; ++j) {
        bool match = true;
        for (int k = 0; k < n && match; ++k)
          match = xs[static_cast<std::size_t>(k)].at(j, j) == c[k];
        if (match) ++mult;
      }
      if (mult == 0) continue;
      WeightSpaceInfo info{cand, 0, 0, {}, {}};
      info.generalized_dim = mult;
      if (mult == 1 && !with_bases) {
        info.genuine_dim = 1;
        out.spaces.push_back(std::move(info));
        continue;
      }
      const std::vector<Matrix> shifted = make_shifted(c);
      std::optional<std::vector<std::vector<FieldElem>>> fast = triangular_kernel(shifted);
      info.genuine_basis = fast ? std::move(*fast) : kernel_basis(stack_rows(shifted));
      info.genuine_dim = info.genuine_basis.size();
      if (info.genuine_dim == mult) {
        info.generalized_basis = info.genuine_basis;
      } else {
        info.generalized_basis = lift(info.genuine_basis, shifted);
        info.generalized_dim = info.generalized_basis.size();
      }
      out.spaces.push_back(std::move(info));
    }
  } else {
    std::vector<std::vector<Matrix>> shifts;
    std::size_t total_genuine = 0;
    for (const Weight& cand : candidates) {
      WeightSpaceInfo info{cand, 0, 0, {}, {}};
      const std::vector<FieldElem>& c = cand.coordinate_values();
      std::vector<Matrix> shifted;
      if (all_diagonal) {
        for (std::size_t j = 0; j < dim; ++j) {
          bool match = true;
          for (int k = 0; k < n && match; ++k)
            match = xs[static_cast<std::size_t>(k)].at(j, j) == c[k];
          if (match) info.genuine_basis.push_back(basis_vector(dim, j));
        }
      } else {
        shifted = make_shifted(c);
        info.genuine_basis = kernel_basis(stack_rows(shifted));
      }
      info.genuine_dim = info.genuine_basis.size();
      total_genuine += info.genuine_dim;
      out.spaces.push_back(std::move(info));
      shifts.push_back(std::move(shifted));
    }

    for (std::size_t s = 0; s < out.spaces.size(); ++s) {
      WeightSpaceInfo& info = out.spaces[s];
      if (all_diagonal || total_genuine == dim) {
        // Weight spaces of distinct weights are independent, so genuine spaces
        // that already exhaust the dimension leave no room for nilpotent parts.
        info.generalized_basis = info.genuine_basis;
      } else {
        info.generalized_basis = lift(info.genuine_basis, shifts[s]);
      }
      info.generalized_dim = info.generalized_basis.size();
    }
  }
  std::erase_if(out.spaces, [](const WeightSpaceInfo& s) { return s.generalized_dim == 0; });

  std::size_t total = 0;
  for (const WeightSpaceInfo& s : out.spaces) total += s.generalized_dim;
  out.complete = total == dim;
  out.calibrated = out.complete;
  for (const WeightSpaceInfo& s : out.spaces)
    if (s.genuine_dim != s.generalized_dim) out.calibrated = false;

  if (!with_bases)
    for (WeightSpaceInfo& s : out.spaces) {
      s.genuine_basis.clear();
      s.generalized_basis.clear();
    }
  return out;
}

std::size_t cyclic_closure(const MatrixRep& m, const std::vector<FieldElem>& v) {
  if (v.size() != m.dim()) throw std::invalid_argument("vector dimension mismatch");
  bool nonzero = false;
  for (const FieldElem& x : v)
    if (!x.is_zero()) { nonzero = true; break; }
  if (!nonzero) throw std::invalid_argument("cyclic closure of the zero vector");

  const int n = m.root_system().rank();

  // A full-rank closure at one evaluation point settles the question; only a
  // short answer needs the exact elimination below.
  u64 seed = 0x5eedULL;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const u64 x = modarith::splitmix64(seed) % (kCheckPrime - 2) + 2;
    std::vector<std::vector<std::vector<u64>>> gens(2 * static_cast<std::size_t>(n));
    std::vector<u64> v0(m.dim(), 0);
    bool good = true;
    for (int i = 0; i < 2 * n && good; ++i)
      good = eval_matrix_mod(i < n ? m.t_matrix(i) : m.x_matrix(i - n), x,
                             gens[static_cast<std::size_t>(i)]);
    for (std::size_t j = 0; j < m.dim() && good; ++j)
      if (!v[j].is_zero()) good = v[j].evaluate_mod(x, kCheckPrime, v0[j]);
    if (!good) continue;
    if (closure_rank_mod(gens, v0) == m.dim()) return m.dim();
    break;
  }

  SpanBuilder span(m.dim());
  std::deque<std::vector<FieldElem>> queue;
  span.insert(v);
  queue.push_back(v);
  while (!queue.empty()) {
    std::vector<FieldElem> u = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < 2 * n; ++i) {
      const Matrix& gen = i < n ? m.t_matrix(i) : m.x_matrix(i - n);
      std::vector<FieldElem> img = gen.apply(u);
      if (span.insert(img)) queue.push_back(std::move(img));
    }
  }
  return span.rank();
}

}  // namespace hecke
