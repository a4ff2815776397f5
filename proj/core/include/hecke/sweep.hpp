#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hecke/json_io.hpp"
#include "hecke/rational.hpp"
#include "hecke/root_system.hpp"
#include "hecke/skew.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

struct SweepConfig {
  std::vector<std::pair<Family, int>> types;
  int max_denominator = 3;
  Rational low = 0;
  Rational high = 2;
  std::size_t weyl_cap = kDefaultWeylCap;
  std::string output_dir;  // consumed by the CLI; empty means stdout only
};

// All reduced rationals with denominator <= max_den inside [low, high],
// ascending.
std::vector<Rational> grid_values(int max_den, const Rational& low, const Rational& high);

struct ShapeOutcome {
  std::vector<int> J;
  bool skew = false;
  std::string reason;  // first failed condition when non-skew
  std::size_t dim = 0;
  bool built = false;
  bool verified = false;
  bool irreducible = false;
};

struct CaseResult {
  std::string type;
  std::vector<Rational> gamma;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  bool partition_match = false;
  std::vector<ShapeOutcome> shapes;
  std::vector<std::string> failures;  // each carries the serialized case input
  std::int64_t elapsed_ms = 0;
};

struct RunReport {
  std::vector<CaseResult> cases;
  std::size_t case_count = 0;
  std::size_t shape_count = 0;
  std::size_t skew_count = 0;
  std::size_t failure_count = 0;
  std::int64_t elapsed_ms = 0;
  bool all_pass() const { return failure_count == 0; }
};

// For every type and every gamma on the grid: builds the orbit graph, checks
// the two component partitions against each other, then builds and verifies
// the module of every placed skew shape and runs the irreducibility
// certificate on it. Non-skew shapes are recorded and skipped.
RunReport run_sweep(const SweepConfig& config);

Json run_report_to_json(const RunReport& r, bool include_cases = true);

// Negative control: returns the verification report of the module with 1
// added to the (0, 0) entry of T_{i+1}. The report must fail, and only on
// checks naming that generator.
RelationReport corrupted_fixture_report(const SkewModule& m, int i = 0);

}  // namespace hecke
