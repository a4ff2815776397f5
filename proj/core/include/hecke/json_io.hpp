#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "hecke/calibration.hpp"
#include "hecke/field.hpp"
#include "hecke/matrix.hpp"
#include "hecke/matrix_rep.hpp"
#include "hecke/root_system.hpp"
#include "hecke/skew.hpp"
#include "hecke/weight.hpp"

namespace hecke {

// Object-backed (key-sorted) json, so dump() is deterministic byte for byte.
using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Two-space indent plus trailing newline; the canonical output form.
std::string dump_json(const Json& j);

// {"D": .., "num": [[exp, "p/q"], ..], "den": [[exp, "p/q"], ..]}, terms by
// increasing exponent. Readers re-canonicalize, so any num/den pair with the
// right D is accepted.
Json field_to_json(const FieldElem& f, const QContext& ctx);
FieldElem field_from_json(const Json& j, const QContext& ctx);

// Words serialize as 1-based simple-reflection indices.
Json word_to_json(const std::vector<int>& word);
std::vector<int> word_from_json(const Json& j, int rank);

Json root_system_to_json(const RootSystem& rs);

Json weight_to_json(const Weight& t);
Weight weight_from_json(const Json& j, const RootSystem& rs);

// Row-major entry list.
Json matrix_to_json(const Matrix& m, const QContext& ctx);
Matrix matrix_from_json(const Json& j, const QContext& ctx);

// {"basis": [words], "generators": {"T1": .., "X1": ..}, ..} with the weight
// labels when the module carries them.
Json rep_to_json(const MatrixRep& m);
MatrixRep rep_from_json(const Json& j, const RootSystem& rs);

Json relation_report_to_json(const RelationReport& r);
Json tau_report_to_json(const TauReport& r);

Json graph_to_json(const CalibrationGraph& g);
Json tableaux_to_json(const TableauSet& tb);
Json classified_shapes_to_json(const RootSystem& rs, const std::vector<ClassifiedShape>& shapes);

Json skew_to_json(const SkewModule& s);
SkewModule skew_from_json(const Json& j, const RootSystem& rs);

}  // namespace hecke
