#include "hecke/sweep.hpp"

#include <chrono>
#include <set>
#include <stdexcept>

#include "hecke/calibration.hpp"
#include "hecke/matrix_rep.hpp"
#include "hecke/weight.hpp"

namespace hecke {

std::vector<Rational> grid_values(int max_den, const Rational& low, const Rational& high) {
  if (max_den < 1) throw std::invalid_argument("max denominator must be positive");
  if (high < low) throw std::invalid_argument("empty grid range");
  std::set<Rational> vals;
  for (int d = 1; d <= max_den; ++d) {
    BigInt p = num(low) * d;
    // ceil(low * d)
    BigInt lo = p / den(low);
    if (lo * den(low) < p) lo += 1;
    for (BigInt k = lo; Rational(k, d) <= high; k += 1) vals.insert(Rational(k, d));
  }
  return {vals.begin(), vals.end()};
}

namespace {

std::string case_tag(const Weight& t, const std::vector<int>* J) {
  Json j{{"weight", weight_to_json(t)}};
  if (J) j["J"] = *J;
  return j.dump();
}

void run_case(const RootSystem& rs, const std::vector<Rational>& gamma, std::size_t cap,
              RunReport& report) {
  const auto start = std::chrono::steady_clock::now();
  CaseResult cr;
  cr.type = rs.type_name();
  cr.gamma = gamma;

  const Weight t = Weight::real(rs, gamma);
  const CalibrationGraph g = build_calibration_graph(t, cap);
  cr.vertices = g.vertices.size();
  cr.edges = g.edges.size();
  cr.components = g.components.size();
  cr.partition_match = g.partition_match;
  if (!g.partition_match)
    cr.failures.push_back("component partitions disagree: " + case_tag(t, nullptr));

  for (const PlacedShape& shape : placed_shapes(g)) {
    ShapeOutcome out;
    out.J = shape.J;
    const ConditionCheck chk = placed_skew_check(t, shape.J, cap);
    out.skew = chk.ok;
    out.reason = chk.reason;
    const TableauSet tb = tableaux(t, shape.J, cap);
    out.dim = tb.elements.size();
    if (chk.ok) {
      try {
        SkewModule m = build_skew_module(t, shape.J, cap);
        out.built = true;
        out.verified = m.verification.all_pass();
        if (!out.verified)
          cr.failures.push_back("relation check failed: " + case_tag(t, &shape.J));
        if (m.rep.dim() != out.dim)
          cr.failures.push_back("dimension mismatch: " + case_tag(t, &shape.J));
        out.irreducible = irreducibility_certificate(m.rep, g);
        if (!out.irreducible)
          cr.failures.push_back("irreducibility certificate failed: " + case_tag(t, &shape.J));
      } catch (const std::exception& e) {
        cr.failures.push_back(std::string("build failed: ") + e.what() + " at " +
                              case_tag(t, &shape.J));
      }
    }
    report.shape_count += 1;
    if (out.skew) report.skew_count += 1;
    cr.shapes.push_back(std::move(out));
  }

  cr.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  report.failure_count += cr.failures.size();
  report.cases.push_back(std::move(cr));
}

}  // namespace

RunReport run_sweep(const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  const std::vector<Rational> values = grid_values(config.max_denominator, config.low, config.high);
  for (const auto& [family, rank] : config.types) {
    const RootSystem rs(family, rank);
    std::vector<Rational> gamma(static_cast<std::size_t>(rank), Rational(0));
    std::vector<std::size_t> idx(static_cast<std::size_t>(rank), 0);
    while (true) {
      for (int k = 0; k < rank; ++k) gamma[static_cast<std::size_t>(k)] = values[idx[static_cast<std::size_t>(k)]];
      run_case(rs, gamma, config.weyl_cap, report);
      int pos = rank - 1;
      while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == values.size()) {
        idx[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  report.case_count = report.cases.size();
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

Json run_report_to_json(const RunReport& r, bool include_cases) {
  Json out{{"schema", kSchemaVersion},
           {"cases", r.case_count},
           {"shapes", r.shape_count},
           {"skew_shapes", r.skew_count},
           {"failures", r.failure_count},
           {"all_pass", r.all_pass()},
           {"elapsed_ms", r.elapsed_ms}};
  Json failures = Json::array();
  for (const CaseResult& c : r.cases)
    for (const std::string& f : c.failures) failures.push_back(f);
  out["failure_details"] = std::move(failures);
  if (!include_cases) return out;

  Json cases = Json::array();
  for (const CaseResult& c : r.cases) {
    Json gamma = Json::array();
    for (const Rational& g : c.gamma) gamma.push_back(rational_to_string(g));
    Json shapes = Json::array();
    for (const ShapeOutcome& s : c.shapes) {
      Json row{{"J", s.J}, {"skew", s.skew}, {"dim", s.dim}};
      if (s.skew) {
        row["built"] = s.built;
        row["verified"] = s.verified;
        row["irreducible"] = s.irreducible;
      } else {
        row["reason"] = s.reason;
      }
      shapes.push_back(std::move(row));
    }
    cases.push_back(Json{{"type", c.type},
                         {"gamma", std::move(gamma)},
                         {"vertices", c.vertices},
                         {"edges", c.edges},
                         {"components", c.components},
                         {"partition_match", c.partition_match},
                         {"shapes", std::move(shapes)},
                         {"failures", c.failures},
                         {"elapsed_ms", c.elapsed_ms}});
  }
  out["case_details"] = std::move(cases);
  return out;
}

RelationReport corrupted_fixture_report(const SkewModule& m, int i) {
  std::vector<Matrix> t_mats, x_mats;
  for (int k = 0; k < m.rep.root_system().rank(); ++k) {
    t_mats.push_back(m.rep.t_matrix(k));
    x_mats.push_back(m.rep.x_matrix(k));
  }
  t_mats.at(static_cast<std::size_t>(i)).at(0, 0) += FieldElem::one();
  MatrixRep corrupted(m.rep.root_system(), m.rep.context(), m.rep.basis_words(),
                      std::move(t_mats), std::move(x_mats), m.rep.weights());
  return verify_defining_relations(corrupted);
}

}  // namespace hecke
