#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hecke/field.hpp"
#include "hecke/rational.hpp"
#include "hecke/root_system.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

// A character of the lattice part: the assignment X^lambda -> t(X^lambda),
// determined by its (nonzero) values on the fundamental coordinates. Holds a
// pointer to the root system, which must outlive the weight.
//
// Two flavours share the type. A real weight is given by a rational vector
// gamma with t(X^{omega_i}) = q^{2 gamma_i}; its values are monomials and it
// additionally supports exact exponent arithmetic. A general weight is given
// by arbitrary nonzero field values on the coordinates.
class Weight {
 public:
  // Picks the context so every q^{2 gamma_i} (and hence every t(X^lambda))
  // is a u-monomial: D = lcm of the gamma denominators.
  static Weight real(const RootSystem& rs, std::vector<Rational> gamma);
  static Weight general(const RootSystem& rs, const QContext& ctx, std::vector<FieldElem> values);

  const RootSystem& root_system() const { return *rs_; }
  const QContext& context() const { return ctx_; }
  bool is_real() const { return real_; }
  const std::vector<Rational>& gamma() const;  // real weights only
  const std::vector<FieldElem>& coordinate_values() const { return values_; }

  // t(X^lambda), lambda in omega-coordinates.
  FieldElem value(const std::vector<int>& lambda) const;
  FieldElem simple_root_value(int i) const;  // t(X^{alpha_i})

  // Real weights only: t(X^lambda) = q^{2 * exponent(lambda)}.
  Rational exponent(const std::vector<int>& lambda) const;
  Rational simple_root_exponent(int i) const;

  // s_i . t, where (w t)(X^lambda) = t(X^{w^-1 lambda}). Only coordinate i
  // changes: it picks up a factor t(X^{alpha_i})^-1.
  Weight reflected(int i) const;
  Weight acted(const WeylElement& w) const;

  // Characters are compared by their coordinate values (contexts must match).
  bool operator==(const Weight& o) const;
  bool operator!=(const Weight& o) const { return !(*this == o); }
  bool operator<(const Weight& o) const;  // map key order

 private:
  Weight() = default;

  const RootSystem* rs_ = nullptr;
  QContext ctx_;
  bool real_ = false;
  std::vector<Rational> gamma_;     // real weights only
  std::vector<FieldElem> values_;   // always populated
};

// Indices (into positive_roots()) of the roots where the weight takes value 1
// respectively q^{+-2}. For real weights both the exponent test and the field
// evaluation are run and must agree.
struct ZeroPoleSets {
  std::vector<int> zero;
  std::vector<int> pole;
};

ZeroPoleSets zero_pole_sets(const Weight& t);

// One W-orbit point: weight == rep . start, word the reduced word of rep.
// rep is the minimal-length representative of its coset modulo the stabilizer
// (its inversion set misses the zero set), and the word is lex-least among
// the minimal-length ones.
struct OrbitEntry {
  Weight weight;
  WeylElement rep;
  std::vector<int> word;
};

std::vector<OrbitEntry> weight_orbit(const Weight& t, std::size_t cap = kDefaultWeylCap);

// Walks the orbit of a real weight to the point with all simple-root
// exponents >= 0. Returns it with the word of the w moving t there.
std::pair<Weight, std::vector<int>> dominant_rep(const Weight& t);

// Order of the subgroup generated by the reflections through the roots where
// t is 1. Equals the full stabilizer order.
std::size_t weight_stabilizer_order(const Weight& t, std::size_t cap = kDefaultWeylCap);

}  // namespace hecke
