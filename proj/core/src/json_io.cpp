#include "hecke/json_io.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "hecke/laurent.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

namespace {

void check_schema(const Json& j) {
  if (!j.is_object() || !j.contains("schema"))
    throw std::invalid_argument("missing schema version");
  if (j.at("schema").get<int>() != kSchemaVersion)
    throw std::invalid_argument("unsupported schema version " + j.at("schema").dump());
}

Json poly_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, rational_to_string(c)}));
  return terms;
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a term array");
  std::vector<LaurentPoly::Term> terms;
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 2)
      throw std::invalid_argument("polynomial term must be [exponent, coefficient]");
    terms.emplace_back(t.at(0).get<std::int64_t>(),
                       parse_rational(t.at(1).get<std::string>()));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json field_to_json(const FieldElem& f, const QContext& ctx) {
  return Json{{"D", ctx.D}, {"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

FieldElem field_from_json(const Json& j, const QContext& ctx) {
  if (j.at("D").get<std::int64_t>() != ctx.D)
    throw std::invalid_argument("field element context mismatch: D=" + j.at("D").dump());
  return FieldElem::ratio(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

Json word_to_json(const std::vector<int>& word) {
  Json out = Json::array();
  for (int i : word) out.push_back(i + 1);
  return out;
}

std::vector<int> word_from_json(const Json& j, int rank) {
  if (!j.is_array()) throw std::invalid_argument("word must be an index array");
  std::vector<int> out;
  for (const Json& e : j) {
    const int i = e.get<int>();
    if (i < 1 || i > rank) throw std::invalid_argument("word index out of range: " + e.dump());
    out.push_back(i - 1);
  }
  return out;
}

Json root_system_to_json(const RootSystem& rs) {
  Json roots = Json::array();
  for (std::size_t r = 0; r < rs.positive_count(); ++r) {
    const Root& root = rs.root(static_cast<int>(r));
    roots.push_back(Json{{"name", rs.root_name(static_cast<int>(r))},
                         {"simple", root.simple},
                         {"omega", root.omega},
                         {"height", root.height},
                         {"long", root.long_root}});
  }
  return Json{{"schema", kSchemaVersion},
              {"type", rs.type_name()},
              {"rank", rs.rank()},
              {"cartan", rs.cartan()},
              {"symmetrizer", rs.symmetrizer()},
              {"positive_roots", std::move(roots)},
              {"weyl_order", rs.weyl_order()}};
}

Json weight_to_json(const Weight& t) {
  Json out{{"schema", kSchemaVersion},
           {"type", t.root_system().type_name()},
           {"D", t.context().D},
           {"real", t.is_real()}};
  if (t.is_real()) {
    Json gamma = Json::array();
    for (const Rational& g : t.gamma()) gamma.push_back(rational_to_string(g));
    out["gamma"] = std::move(gamma);
  } else {
    Json values = Json::array();
    for (const FieldElem& v : t.coordinate_values())
      values.push_back(field_to_json(v, t.context()));
    out["values"] = std::move(values);
  }
  return out;
}

Weight weight_from_json(const Json& j, const RootSystem& rs) {
  check_schema(j);
  if (j.at("type").get<std::string>() != rs.type_name())
    throw std::invalid_argument("weight type mismatch: " + j.at("type").dump());
  if (j.at("real").get<bool>()) {
    std::vector<Rational> gamma;
    for (const Json& g : j.at("gamma")) gamma.push_back(parse_rational(g.get<std::string>()));
    if (static_cast<int>(gamma.size()) != rs.rank())
      throw std::invalid_argument("gamma length does not match the rank");
    Weight t = Weight::real(rs, std::move(gamma));
    if (t.context().D != j.at("D").get<std::int64_t>())
      throw std::invalid_argument("weight D does not match its gamma");
    return t;
  }
  const QContext ctx{j.at("D").get<std::int64_t>()};
  std::vector<FieldElem> values;
  for (const Json& v : j.at("values")) values.push_back(field_from_json(v, ctx));
  if (static_cast<int>(values.size()) != rs.rank())
    throw std::invalid_argument("value list does not match the rank");
  return Weight::general(rs, ctx, std::move(values));
}

Json matrix_to_json(const Matrix& m, const QContext& ctx) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(field_to_json(m.at(i, j), ctx));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Json& j, const QContext& ctx) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const Json& entries = j.at("entries");
  if (entries.size() != rows * cols)
    throw std::invalid_argument("matrix entry count does not match its shape");
  Matrix m(rows, cols);
  std::size_t k = 0;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = field_from_json(entries[k++], ctx);
  return m;
}

Json rep_to_json(const MatrixRep& m) {
  Json basis = Json::array();
  for (const auto& w : m.basis_words()) basis.push_back(word_to_json(w));
  Json gens = Json::object();
  for (int i = 0; i < m.root_system().rank(); ++i) {
    gens["T" + std::to_string(i + 1)] = matrix_to_json(m.t_matrix(i), m.context());
    gens["X" + std::to_string(i + 1)] = matrix_to_json(m.x_matrix(i), m.context());
  }
  Json out{{"schema", kSchemaVersion},
           {"type", m.root_system().type_name()},
           {"rank", m.root_system().rank()},
           {"D", m.context().D},
           {"dim", m.dim()},
           {"basis", std::move(basis)},
           {"generators", std::move(gens)}};
  if (m.has_weights()) {
    Json ws = Json::array();
    for (const Weight& w : m.weights()) ws.push_back(weight_to_json(w));
    out["weights"] = std::move(ws);
  }
  return out;
}

MatrixRep rep_from_json(const Json& j, const RootSystem& rs) {
  check_schema(j);
  if (j.at("type").get<std::string>() != rs.type_name() ||
      j.at("rank").get<int>() != rs.rank())
    throw std::invalid_argument("module type does not match the root system");
  const QContext ctx{j.at("D").get<std::int64_t>()};
  std::vector<std::vector<int>> basis;
  for (const Json& w : j.at("basis")) basis.push_back(word_from_json(w, rs.rank()));
  std::vector<Matrix> t_mats, x_mats;
  for (int i = 0; i < rs.rank(); ++i) {
    t_mats.push_back(matrix_from_json(j.at("generators").at("T" + std::to_string(i + 1)), ctx));
    x_mats.push_back(matrix_from_json(j.at("generators").at("X" + std::to_string(i + 1)), ctx));
  }
  std::vector<Weight> weights;
  if (j.contains("weights"))
    for (const Json& w : j.at("weights")) weights.push_back(weight_from_json(w, rs));
  return MatrixRep(rs, ctx, std::move(basis), std::move(t_mats), std::move(x_mats),
                   std::move(weights));
}

Json relation_report_to_json(const RelationReport& r) {
  Json entries = Json::array();
  for (const CheckEntry& e : r.entries) entries.push_back(Json{{"name", e.name}, {"pass", e.pass}});
  return Json{{"all_pass", r.all_pass()}, {"checks", std::move(entries)}};
}

Json tau_report_to_json(const TauReport& r) {
  Json entries = Json::array();
  for (const TauCheckEntry& e : r.entries)
    entries.push_back(Json{{"name", e.name}, {"status", e.status}});
  return Json{{"all_pass", r.all_pass()},
              {"undefined", r.count("undefined")},
              {"checks", std::move(entries)}};
}

Json graph_to_json(const CalibrationGraph& g) {
  Json vertices = Json::array();
  for (const GraphVertex& v : g.vertices)
    vertices.push_back(Json{{"word", word_to_json(v.word)}, {"J", v.J}});
  Json edges = Json::array();
  for (const GraphEdge& e : g.edges)
    edges.push_back(Json{{"a", e.a}, {"b", e.b}, {"i", e.i + 1}});
  return Json{{"schema", kSchemaVersion},
              {"base", weight_to_json(g.base)},
              {"zero", g.zp.zero},
              {"pole", g.zp.pole},
              {"vertices", std::move(vertices)},
              {"edges", std::move(edges)},
              {"components", g.components},
              {"partition_match", g.partition_match}};
}

Json tableaux_to_json(const TableauSet& tb) {
  Json words = Json::array();
  for (const auto& w : tb.words) words.push_back(word_to_json(w));
  Json names = Json::array();
  for (int r : tb.J) names.push_back(tb.weight.root_system().root_name(r));
  return Json{{"schema", kSchemaVersion},
              {"J", tb.J},
              {"J_names", std::move(names)},
              {"count", tb.words.size()},
              {"tableaux", std::move(words)}};
}

Json classified_shapes_to_json(const RootSystem& rs, const std::vector<ClassifiedShape>& shapes) {
  Json out = Json::array();
  for (const ClassifiedShape& s : shapes) {
    Json names = Json::array();
    for (int r : s.shape.J) names.push_back(rs.root_name(r));
    Json row{{"J", s.shape.J},
             {"J_names", std::move(names)},
             {"vertices", s.shape.vertex_indices},
             {"skew", s.skew},
             {"dim", s.dim}};
    if (!s.skew) row["reason"] = s.reason;
    out.push_back(std::move(row));
  }
  return out;
}

Json skew_to_json(const SkewModule& s) {
  return Json{{"schema", kSchemaVersion},
              {"base", weight_to_json(s.base)},
              {"J", s.J},
              {"tableaux", tableaux_to_json(s.tableau_set)},
              {"module", rep_to_json(s.rep)},
              {"verification", relation_report_to_json(s.verification)}};
}

SkewModule skew_from_json(const Json& j, const RootSystem& rs) {
  check_schema(j);
  Weight base = weight_from_json(j.at("base"), rs);
  std::vector<int> J = j.at("J").get<std::vector<int>>();
  const Json& tj = j.at("tableaux");
  TableauSet tb{base, tj.at("J").get<std::vector<int>>(), {}, {}};
  for (const Json& w : tj.at("tableaux")) {
    tb.words.push_back(word_from_json(w, rs.rank()));
    tb.elements.push_back(from_word(rs, tb.words.back()));
  }
  MatrixRep rep = rep_from_json(j.at("module"), rs);
  RelationReport report;
  for (const Json& e : j.at("verification").at("checks"))
    report.entries.push_back({e.at("name").get<std::string>(), e.at("pass").get<bool>()});
  return SkewModule{std::move(rep), std::move(base), std::move(J), std::move(tb),
                    std::move(report)};
}

}  // namespace hecke
