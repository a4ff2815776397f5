#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hecke/field.hpp"
#include "hecke/root_system.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

struct HeckeTerm {
  WeylElement w;
  std::vector<int> lambda;  // omega-coordinates
  FieldElem coeff;
};

// Element in the normal form sum of coeff * T_w X^lambda, keyed by
// (action matrix of w, lambda). Zero coefficients never survive a merge, so
// structural equality of the maps is equality in the algebra.
class HeckeElem {
 public:
  static HeckeElem zero() { return HeckeElem(); }

  void add_term(const WeylElement& w, std::vector<int> lambda, FieldElem c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::vector<HeckeTerm> terms() const;  // key order

  HeckeElem operator+(const HeckeElem& o) const;
  HeckeElem operator-(const HeckeElem& o) const;
  HeckeElem scaled(const FieldElem& c) const;

  bool operator==(const HeckeElem& o) const;
  bool operator!=(const HeckeElem& o) const { return !(*this == o); }

 private:
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  std::map<Key, std::pair<WeylElement, FieldElem>> terms_;
};

// The algebra fixes the root system and the scalar context. Generators:
// T_i subject to the quadratic relation T_i^2 = (q - q^-1) T_i + 1 and the
// braid relations, X^lambda multiplying like the lattice, and the two glued
// by the commutation rule
//   X^lambda T_i = T_i X^{s_i lambda} + (q - q^-1) (X^lambda - X^{s_i lambda}) / (1 - X^{-alpha_i}),
// whose right factor expands to a finite geometric sum.
class HeckeAlgebra {
 public:
  HeckeAlgebra(const RootSystem& rs, const QContext& ctx) : rs_(&rs), ctx_(ctx) {}

  const RootSystem& root_system() const { return *rs_; }
  const QContext& context() const { return ctx_; }

  HeckeElem one() const;
  HeckeElem t_generator(int i) const;
  // Product of generators along the word; equals T_w when the word is reduced.
  HeckeElem t_word(const std::vector<int>& word) const;
  HeckeElem x_monomial(const std::vector<int>& lambda, const FieldElem& c) const;
  HeckeElem x_monomial(const std::vector<int>& lambda) const;

  HeckeElem times_t(const HeckeElem& a, int i) const;  // a * T_i
  HeckeElem times_x(const HeckeElem& a, const std::vector<int>& lambda) const;
  HeckeElem multiply(const HeckeElem& a, const HeckeElem& b) const;

  // The geometric-sum factor of the commutation rule, as a bare X-polynomial:
  // (X^lambda - X^{s_i lambda}) / (1 - X^{-alpha_i}).
  HeckeElem geometric_factor(const std::vector<int>& lambda, int i) const;

  // Sum of X^mu over the W-orbit of lambda. Orbits are finite even when the
  // cap rejects listing W itself.
  HeckeElem orbit_sum(const std::vector<int>& lambda, std::size_t cap = kDefaultWeylCap) const;

  // Commutes with every T_i and every X^{omega_k}.
  bool is_central(const HeckeElem& a) const;

  std::string to_string(const HeckeElem& a) const;

 private:
  const RootSystem* rs_;
  QContext ctx_;
};

}  // namespace hecke
