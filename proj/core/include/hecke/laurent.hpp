#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

// Laurent polynomial in one variable u with rational coefficients, stored as
// (exponent, coefficient) pairs sorted by strictly increasing exponent and
// holding no zero coefficient. Exponents may be negative; u is invertible.
class LaurentPoly {
 public:
  using Term = std::pair<std::int64_t, Rational>;

  LaurentPoly() = default;
  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(0, 1); }
  static LaurentPoly monomial(std::int64_t exp, Rational coeff);
  // Terms in any order, repeats allowed; they are merged and zeros dropped.
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Smallest and largest exponent; both require a nonzero polynomial.
  std::int64_t valuation() const;
  std::int64_t degree() const;
  const Rational& leading_coeff() const;

  Rational coeff(std::int64_t exp) const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly shifted(std::int64_t k) const;    // multiply by u^k
  LaurentPoly scaled(const Rational& c) const;  // multiply by a scalar

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  std::strong_ordering operator<=>(const LaurentPoly& o) const;

  // Exact division; throws std::domain_error when the division leaves a
  // remainder or the divisor is zero.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  // Substitutes u = x. Negative exponents require x != 0.
  Rational evaluate(const Rational& x) const;

  // Substitutes u = x in Z/p for prime p and nonzero x. False when some
  // coefficient has a denominator divisible by p.
  bool evaluate_mod(std::uint64_t x, std::uint64_t p, std::uint64_t& out) const;

  std::string to_string(const std::string& var = "u") const;

 private:
  std::vector<Term> terms_;
};

// Up-to-units gcd of the underlying polynomials: the result has valuation 0,
// integer coefficients with content 1 and positive leading coefficient.
// gcd(0, 0) = 0; a monomial argument forces gcd 1 (monomials are units).
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace hecke
