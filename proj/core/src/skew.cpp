#include "hecke/skew.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

#include "hecke/matrix.hpp"

namespace hecke {

namespace {

std::string pair_tag(const RootSystem& rs, int i, int j) {
  return "pair (" + rs.root_name(rs.simple_root_index(i)) + ", " +
         rs.root_name(rs.simple_root_index(j)) + ")";
}

// Elements of the subgroup generated by s_i and s_j; dihedral, at most
// 2 * braid_order of them.
std::vector<WeylElement> pair_subgroup(const RootSystem& rs, int i, int j) {
  const WeylElement si = WeylElement::simple_reflection(rs, i);
  const WeylElement sj = WeylElement::simple_reflection(rs, j);
  std::vector<WeylElement> out{WeylElement::identity(rs.rank())};
  std::set<std::vector<int>> seen{out.front().matrix()};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const WeylElement* g : {&si, &sj}) {
      WeylElement next = *g * out[k];
      if (seen.insert(next.matrix()).second) out.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace

ConditionCheck calibratable_rank2_check(const Weight& t, int i, int j) {
  const RootSystem& rs = t.root_system();
  const int n = rs.rank();
  if (i < 0 || j < 0 || i >= n || j >= n || i == j)
    throw std::invalid_argument("calibratable_rank2_check needs two distinct simple indices");

  int unital = -1;
  for (int r : rs.rank2_subsystem(i, j)) {
    if (t.value(rs.root(r).omega).is_one()) {
      unital = r;
      break;
    }
  }
  if (unital < 0) return {true, ""};

  const int m = rs.braid_order(i, j);
  if (m != 4 && m != 6)
    return {false, pair_tag(rs, i, j) + ": value 1 at " + rs.root_name(unital)};

  const int lng = rs.symmetrizer()[i] > rs.symmetrizer()[j] ? i : j;
  const int sht = lng == i ? j : i;
  if (t.simple_root_value(lng).is_one() || t.simple_root_value(sht).is_one())
    return {false, pair_tag(rs, i, j) + ": value 1 at " +
                       rs.root_name(rs.simple_root_index(
                           t.simple_root_value(lng).is_one() ? lng : sht))};

  const FieldElem q2 = q_power(t.context(), 2);
  const FieldElem one = FieldElem::one();
  const std::vector<int> long_omega = rs.simple_root_omega(lng);
  const std::vector<int> short_omega = rs.simple_root_omega(sht);
  for (const WeylElement& u : pair_subgroup(rs, i, j)) {
    if (t.value(u.act_inverse(long_omega)) == q2 &&
        t.value(u.act_inverse(short_omega)) == one)
      return {true, ""};
  }
  return {false, pair_tag(rs, i, j) + ": value 1 at " + rs.root_name(unital) +
                     " and no subgroup element places (q^2, 1) on (" +
                     rs.root_name(rs.simple_root_index(lng)) + ", " +
                     rs.root_name(rs.simple_root_index(sht)) + ")"};
}

bool is_calibratable_rank2(const Weight& t, int i, int j) {
  return calibratable_rank2_check(t, i, j).ok;
}

namespace {

ConditionCheck skew_check_impl(const Weight& t, const TableauSet& tb) {
  const RootSystem& rs = t.root_system();
  const int n = rs.rank();
  for (std::size_t k = 0; k < tb.elements.size(); ++k) {
    const Weight wt = t.acted(tb.elements[k]);
    if (n == 1) {
      if (wt.simple_root_value(0).is_one())
        return {false, "tableau " + word_to_string(tb.words[k]) + ": value 1 at " +
                           rs.root_name(rs.simple_root_index(0))};
      continue;
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        ConditionCheck c = calibratable_rank2_check(wt, i, j);
        if (!c.ok)
          return {false, "tableau " + word_to_string(tb.words[k]) + ": " + c.reason};
      }
    }
  }
  return {true, ""};
}

}  // namespace

ConditionCheck placed_skew_check(const Weight& t, const std::vector<int>& J, std::size_t cap) {
  TableauSet tb = tableaux(t, J, cap);
  if (tb.elements.empty()) throw std::invalid_argument("shape has no standard tableaux");
  return skew_check_impl(t, tb);
}

bool is_placed_skew_shape(const Weight& t, const std::vector<int>& J, std::size_t cap) {
  return placed_skew_check(t, J, cap).ok;
}

SkewModule build_skew_module(const Weight& t, const std::vector<int>& J, std::size_t cap,
                             bool force) {
  TableauSet tb = tableaux(t, J, cap);
  if (tb.elements.empty()) throw std::invalid_argument("shape has no standard tableaux");
  if (!force) {
    ConditionCheck chk = skew_check_impl(t, tb);
    if (!chk.ok) throw std::invalid_argument("not a placed skew shape: " + chk.reason);
  }

  const RootSystem& rs = t.root_system();
  const QContext& ctx = t.context();
  const int n = rs.rank();
  const std::size_t dim = tb.elements.size();

  std::vector<Weight> weights;
  weights.reserve(dim);
  std::map<std::vector<int>, std::size_t> index_by_matrix;
  for (std::size_t k = 0; k < dim; ++k) {
    weights.push_back(t.acted(tb.elements[k]));
    index_by_matrix.emplace(tb.elements[k].matrix(), k);
  }

  std::vector<Matrix> x_mats(static_cast<std::size_t>(n), Matrix(dim, dim));
  for (int k = 0; k < n; ++k)
    for (std::size_t b = 0; b < dim; ++b)
      x_mats[k].at(b, b) = weights[b].coordinate_values()[k];

  const FieldElem qq = q_minus_qinv(ctx);
  const FieldElem qinv = q_power(ctx, -1);
  std::vector<Matrix> t_mats(static_cast<std::size_t>(n), Matrix(dim, dim));
  for (int i = 0; i < n; ++i) {
    const WeylElement si = WeylElement::simple_reflection(rs, i);
    for (std::size_t b = 0; b < dim; ++b) {
      const FieldElem minus = weights[b].simple_root_value(i).inverse();
      if (minus.is_one())
        throw std::domain_error("construction formula undefined: value 1 on " +
                                rs.root_name(rs.simple_root_index(i)) + " at tableau " +
                                word_to_string(tb.words[b]));
      const FieldElem diag = qq / (FieldElem::one() - minus);
      t_mats[i].at(b, b) = diag;
      auto it = index_by_matrix.find((si * tb.elements[b]).matrix());
      if (it != index_by_matrix.end()) t_mats[i].at(it->second, b) = qinv + diag;
    }
  }

  MatrixRep rep(rs, ctx, tb.words, std::move(t_mats), std::move(x_mats), std::move(weights));
  RelationReport report = verify_defining_relations(rep);
  if (!force && !report.all_pass())
    throw std::logic_error("skew module failed verification: " + report.failures().front());
  return SkewModule{std::move(rep), t, tb.J, std::move(tb), std::move(report)};
}

namespace {

struct SpaceTable {
  std::map<Weight, const WeightSpaceInfo*> by_weight;
  static const std::vector<std::vector<FieldElem>> kEmpty;

  const std::vector<std::vector<FieldElem>>& basis(const Weight& w) const {
    auto it = by_weight.find(w);
    return it == by_weight.end() ? kEmpty : it->second->generalized_basis;
  }
};

const std::vector<std::vector<FieldElem>> SpaceTable::kEmpty{};

SpaceTable space_table(const WeightAnalysis& analysis) {
  SpaceTable tbl;
  for (const WeightSpaceInfo& s : analysis.spaces) tbl.by_weight.emplace(s.weight, &s);
  return tbl;
}

Matrix restricted(const Matrix& full, const std::vector<std::vector<FieldElem>>& basis,
                  const char* what) {
  auto r = map_in_bases(full, basis, basis);
  if (!r) throw std::logic_error(std::string(what) + " does not preserve the weight space");
  return std::move(*r);
}

std::vector<FieldElem> lift(const std::vector<std::vector<FieldElem>>& basis,
                            const Matrix& coords, std::size_t col, std::size_t ambient) {
  std::vector<FieldElem> v(ambient, FieldElem::zero());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const FieldElem& c = coords.at(k, col);
    if (c.is_zero()) continue;
    for (std::size_t a = 0; a < ambient; ++a) v[a] += c * basis[k][a];
  }
  return v;
}

// tau_i from the space of `source`, tolerating an absent (zero) source or
// target space. Matrix shape is target dim x source dim.
TauOperator tau_step(const MatrixRep& m, const SpaceTable& tbl, int i, const Weight& source) {
  const FieldElem val = source.simple_root_value(i);
  if (val.is_one())
    throw std::invalid_argument("tau undefined: weight takes value 1 on " +
                                m.root_system().root_name(m.root_system().simple_root_index(i)));
  const Weight target = source.reflected(i);
  const auto& src = tbl.basis(source);
  const auto& tgt = tbl.basis(target);
  Matrix out(tgt.size(), src.size());
  if (!src.empty()) {
    std::vector<int> neg_alpha = m.root_system().simple_root_omega(i);
    for (int& c : neg_alpha) c = -c;
    const Matrix geom = restricted(
        Matrix::identity(m.dim()) - m.x_lambda(neg_alpha), src, "1 - X^{-alpha_i}");
    const Matrix geom_inv = geom.inverse();
    const FieldElem qq = q_minus_qinv(m.context());
    for (std::size_t c = 0; c < src.size(); ++c) {
      std::vector<FieldElem> y = m.t_matrix(i).apply(src[c]);
      const std::vector<FieldElem> z = lift(src, geom_inv, c, m.dim());
      for (std::size_t a = 0; a < m.dim(); ++a) y[a] -= qq * z[a];
      auto coords = coordinates_in_span(tgt, y);
      if (!coords) throw std::logic_error("tau image escapes the target weight space");
      for (std::size_t r = 0; r < tgt.size(); ++r) out.at(r, c) = std::move((*coords)[r]);
    }
  }
  return TauOperator{source, target, i, std::move(out)};
}

}  // namespace

TauOperator tau_matrix(const MatrixRep& m, const WeightAnalysis& analysis, int i,
                       const Weight& source) {
  SpaceTable tbl = space_table(analysis);
  if (tbl.by_weight.find(source) == tbl.by_weight.end())
    throw std::invalid_argument("weight is not in the support of the module");
  return tau_step(m, tbl, i, source);
}

bool TauReport::all_pass() const {
  for (const auto& e : entries)
    if (e.status == "fail") return false;
  return true;
}

std::size_t TauReport::count(const std::string& status) const {
  std::size_t c = 0;
  for (const auto& e : entries)
    if (e.status == status) ++c;
  return c;
}

namespace {

// Composite along the written word, rightmost factor applied first. Nothing
// when some step is undefined.
std::optional<Matrix> gallery(const MatrixRep& m, const SpaceTable& tbl,
                              const std::vector<int>& written, const Weight& start) {
  Weight cur = start;
  Matrix acc = Matrix::identity(tbl.basis(start).size());
  for (auto it = written.rbegin(); it != written.rend(); ++it) {
    if (cur.simple_root_value(*it).is_one()) return std::nullopt;
    TauOperator step = tau_step(m, tbl, *it, cur);
    acc = step.matrix * acc;
    cur = step.target;
  }
  return acc;
}

}  // namespace

TauReport verify_tau_properties(const MatrixRep& m) {
  const RootSystem& rs = m.root_system();
  const QContext& ctx = m.context();
  const int n = rs.rank();
  const WeightAnalysis analysis = weight_space_analysis(m);
  const SpaceTable tbl = space_table(analysis);

  const FieldElem q1 = q_power(ctx, 1);
  const FieldElem qinv = q_power(ctx, -1);
  const FieldElem q2 = q_power(ctx, 2);
  const FieldElem qm2 = q_power(ctx, -2);

  auto label_of = [&](const Weight& w) {
    for (std::size_t k = 0; k < m.dim(); ++k)
      if (m.weights()[k] == w) return word_to_string(m.basis_words()[k]);
    return std::string("?");
  };

  TauReport rep;
  auto add = [&](std::string name, bool pass) {
    rep.entries.push_back({std::move(name), pass ? "pass" : "fail"});
  };

  for (const WeightSpaceInfo& s : analysis.spaces) {
    const std::string label = label_of(s.weight);
    const auto& src = s.generalized_basis;
    for (int i = 0; i < n; ++i) {
      const std::string head = "tau" + std::to_string(i + 1) + " at " + label;
      const FieldElem val = s.weight.simple_root_value(i);
      if (val.is_one()) {
        rep.entries.push_back({head, "undefined"});
        continue;
      }
      const TauOperator fwd = tau_step(m, tbl, i, s.weight);
      const auto& tgt = tbl.basis(fwd.target);

      bool inter = true;
      for (int k = 0; k < n && inter; ++k) {
        std::vector<int> unit(static_cast<std::size_t>(n), 0);
        unit[static_cast<std::size_t>(k)] = 1;
        const Matrix lhs =
            restricted(m.x_matrix(k), tgt, "X^{omega_k}") * fwd.matrix;
        const Matrix rhs =
            fwd.matrix * restricted(m.x_lambda(rs.reflect_weight(i, unit)), src,
                                    "X^{s_i omega_k}");
        inter = lhs == rhs;
      }
      add(head + ": intertwines X", inter);

      const TauOperator bwd = tau_step(m, tbl, i, fwd.target);
      const Matrix square = bwd.matrix * fwd.matrix;
      std::vector<int> alpha = rs.simple_root_omega(i);
      const Matrix a = restricted(m.x_lambda(alpha), src, "X^{alpha_i}");
      const Matrix ai = a.inverse();
      const Matrix id = Matrix::identity(src.size());
      const Matrix expected =
          (id.scaled(q1) - a.scaled(qinv)) * (id.scaled(q1) - ai.scaled(qinv)) *
          ((id - a) * (id - ai)).inverse();
      add(head + ": square formula", square == expected);

      const bool expect_invertible = val != q2 && val != qm2;
      const bool fwd_invertible =
          src.size() == tgt.size() && matrix_rank(fwd.matrix) == src.size();
      const bool bwd_invertible =
          src.size() == tgt.size() && matrix_rank(bwd.matrix) == tgt.size();
      add(head + ": invertible iff value off q^{+-2}",
          (fwd_invertible && bwd_invertible) == expect_invertible);
    }

    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const int mij = rs.braid_order(i, j);
        std::vector<int> side_a, side_b;
        for (int k = 0; k < mij; ++k) {
          side_a.push_back(k % 2 == 0 ? i : j);
          side_b.push_back(k % 2 == 0 ? j : i);
        }
        const std::string name = "braid gallery at " + label + ": tau" +
                                 std::to_string(i + 1) + "/tau" + std::to_string(j + 1);
        auto lhs = gallery(m, tbl, side_a, s.weight);
        auto rhs = gallery(m, tbl, side_b, s.weight);
        if (!lhs || !rhs) {
          rep.entries.push_back({name, "undefined"});
          continue;
        }
        add(name, *lhs == *rhs);
      }
    }
  }
  return rep;
}

bool irreducibility_certificate(const MatrixRep& m, const CalibrationGraph& g) {
  const WeightAnalysis analysis = weight_space_analysis(m);
  if (!analysis.complete || !analysis.calibrated) return false;
  for (const WeightSpaceInfo& s : analysis.spaces)
    if (s.generalized_dim != 1) return false;

  std::set<Weight> support;
  for (const WeightSpaceInfo& s : analysis.spaces) support.insert(s.weight);
  bool matched = false;
  for (const auto& comp : g.components) {
    std::set<Weight> comp_weights;
    for (int v : comp) comp_weights.insert(g.vertices[static_cast<std::size_t>(v)].weight);
    if (comp_weights == support) {
      matched = true;
      break;
    }
  }
  if (!matched) return false;

  for (std::size_t j = 0; j < m.dim(); ++j) {
    std::vector<FieldElem> e(m.dim(), FieldElem::zero());
    e[j] = FieldElem::one();
    if (cyclic_closure(m, e) != m.dim()) return false;
  }
  return true;
}

std::vector<ClassifiedShape> classify_calibrated(const Weight& t, std::size_t cap) {
  CalibrationGraph g = build_calibration_graph(t, cap);
  std::vector<ClassifiedShape> out;
  for (PlacedShape& shape : placed_shapes(g)) {
    TableauSet tb = tableaux(t, shape.J, cap);
    ConditionCheck chk = skew_check_impl(t, tb);
    out.push_back(
        ClassifiedShape{std::move(shape), chk.ok, std::move(chk.reason), tb.elements.size()});
  }
  return out;
}

bool ForcedStructureReport::all_pass() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

ForcedStructureReport verify_forced_structure(const MatrixRep& m) {
  if (!m.has_weights())
    throw std::invalid_argument("forced structure check needs a weight-labeled basis");
  std::map<Weight, std::size_t> index;
  for (std::size_t k = 0; k < m.dim(); ++k)
    if (!index.emplace(m.weights()[k], k).second)
      throw std::invalid_argument("weight labels must be distinct");

  const RootSystem& rs = m.root_system();
  const QContext& ctx = m.context();
  const int n = rs.rank();
  const FieldElem qq = q_minus_qinv(ctx);
  const FieldElem q1 = q_power(ctx, 1);
  const FieldElem qinv = q_power(ctx, -1);

  ForcedStructureReport rep;
  for (int k = 0; k < n; ++k)
    rep.entries.push_back(
        {"X" + std::to_string(k + 1) + " diagonal", m.x_matrix(k).is_diagonal()});

  for (int i = 0; i < n; ++i) {
    const std::string ti = "T" + std::to_string(i + 1);
    const Matrix& t_mat = m.t_matrix(i);
    const Matrix x_alpha = m.x_lambda(rs.simple_root_omega(i));

    bool support_ok = true;
    for (std::size_t b = 0; b < m.dim(); ++b) {
      const std::string label = word_to_string(m.basis_words()[b]);
      const FieldElem val = m.weights()[b].simple_root_value(i);
      if (val.is_one()) {
        rep.entries.push_back({ti + " diagonal at " + label, false});
        continue;
      }
      const FieldElem diag = qq / (FieldElem::one() - val.inverse());
      rep.entries.push_back({ti + " diagonal at " + label, t_mat.at(b, b) == diag});

      const Weight partner = m.weights()[b].reflected(i);
      auto it = index.find(partner);
      for (std::size_t r = 0; r < m.dim() && support_ok; ++r) {
        if (r == b || t_mat.at(r, b).is_zero()) continue;
        if (it == index.end() || it->second != r) support_ok = false;
      }
      if (it == index.end()) {
        const bool eig = t_mat.at(b, b) == q1 || t_mat.at(b, b) == -qinv;
        rep.entries.push_back({ti + " eigenvalue at " + label, eig});
      } else if (b < it->second) {
        const std::size_t r = it->second;
        const bool product = t_mat.at(r, b) * t_mat.at(b, r) ==
                             (qinv + t_mat.at(b, b)) * (qinv + t_mat.at(r, r));
        const bool involution = x_alpha.at(b, b) * x_alpha.at(r, r) == FieldElem::one();
        rep.entries.push_back({ti + " pair block at " + label, product && involution});
      }
    }
    rep.entries.push_back({ti + " off-diagonal support", support_ok});
  }
  return rep;
}

}  // namespace hecke
