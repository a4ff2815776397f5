#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hecke/calibration.hpp"
#include "hecke/matrix_rep.hpp"
#include "hecke/weight.hpp"

namespace hecke {

struct ConditionCheck {
  bool ok = false;
  std::string reason;  // empty when ok; names the first failed condition
};

// Local rank-2 test on the pair (i, j): either no root of the subsystem takes
// value 1, or, for a doubled or tripled bond, some subgroup element places
// (q^2, 1) on the (long, short) simple pair while the weight itself avoids 1
// on both simples.
ConditionCheck calibratable_rank2_check(const Weight& t, int i, int j);
bool is_calibratable_rank2(const Weight& t, int i, int j);

// The shape (t, J) passes when wt clears the rank-2 test for every standard
// tableau w and every simple pair. Rank 1 has no pairs; there the test is
// that no (wt)(X^{alpha_1}) is 1, which is what the construction formula
// needs. Throws when the shape has no tableaux at all.
ConditionCheck placed_skew_check(const Weight& t, const std::vector<int>& J,
                                 std::size_t cap = kDefaultWeylCap);
bool is_placed_skew_shape(const Weight& t, const std::vector<int>& J,
                          std::size_t cap = kDefaultWeylCap);

// The explicit module on basis {v_w : w standard tableau}: X^{omega_k} acts
// diagonally by (wt)(X^{omega_k}), and
//   T_i v_w = d_w v_w + (q^-1 + d_w) v_{s_iw},   d_w = (q - q^-1)/(1 - (wt)(X^{-alpha_i})),
// with v_{s_iw} = 0 when s_iw is not a tableau. All defining relations are
// verified on the result; under the skew precondition a failure is a bug and
// throws, under force the report is returned as-is for inspection.
struct SkewModule {
  MatrixRep rep;
  Weight base;
  std::vector<int> J;
  TableauSet tableau_set;
  RelationReport verification;
};

SkewModule build_skew_module(const Weight& t, const std::vector<int>& J,
                             std::size_t cap = kDefaultWeylCap, bool force = false);

// T_i - (q - q^-1)(1 - X^{-alpha_i})^-1 as a map between generalized weight
// spaces, in the analysis bases. The inverse is taken on the source space,
// where it exists precisely when the source value on alpha_i is not 1.
struct TauOperator {
  Weight source;
  Weight target;
  int i = 0;
  Matrix matrix;  // target dim x source dim
};

TauOperator tau_matrix(const MatrixRep& m, const WeightAnalysis& analysis, int i,
                       const Weight& source);

// Per-check status: "pass", "fail", or "undefined" (domain condition not met,
// check skipped).
struct TauCheckEntry {
  std::string name;
  std::string status;
};

struct TauReport {
  std::vector<TauCheckEntry> entries;
  bool all_pass() const;  // no entry failed; undefined entries are fine
  std::size_t count(const std::string& status) const;
};

// Exercises the local operators over the whole support of the module:
// intertwining with every X^{omega_k}, the two-step product scalar,
// invertibility iff the value is off q^{+-2}, and equality of composites
// along opposite galleries wherever every step is defined.
TauReport verify_tau_properties(const MatrixRep& m);

// The module is irreducible iff its support is a single component of the
// graph, every weight space is a genuine line, and the closure of every
// basis vector is the whole module.
bool irreducibility_certificate(const MatrixRep& m, const CalibrationGraph& g);

struct ClassifiedShape {
  PlacedShape shape;
  bool skew = false;
  std::string reason;  // first failed condition when non-skew
  std::size_t dim = 0;  // tableau count
};

// Every placed shape of t, tagged by the skew test.
std::vector<ClassifiedShape> classify_calibrated(const Weight& t,
                                                 std::size_t cap = kDefaultWeylCap);

// Structure forced on any calibrated module with one-dimensional weight
// spaces: diagonal T entries follow the construction formula, off-diagonal
// entries connect only w to s_iw, adjacent off-diagonal products match
// (q^-1 + d_w)(q^-1 + d_{s_iw}), and the X^{alpha_i} eigenvalues at w and
// s_iw are mutually inverse.
struct ForcedStructureReport {
  std::vector<CheckEntry> entries;
  bool all_pass() const;
};

ForcedStructureReport verify_forced_structure(const MatrixRep& m);

}  // namespace hecke
