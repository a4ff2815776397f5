#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hecke/laurent.hpp"
#include "hecke/rational.hpp"

namespace hecke {

// All scalars live in the field of fractions of Laurent polynomials in u,
// where q = u^D for a context-wide positive integer D. D is chosen once per
// computation so that every rational q-exponent that can appear becomes an
// integer exponent of u; q itself stays formal throughout.
struct QContext {
  std::int64_t D = 1;

  bool operator==(const QContext&) const = default;
};

// D = lcm of the denominators of the given exponents (>= 1). The list states
// up front which rational q-powers the computation must represent.
QContext make_context(const std::vector<Rational>& exponents);

// Element of the fraction field, stored as num/den with
//   - den nonzero, and never a non-trivial monomial (units fold into num),
//   - zero stored as 0/1.
// A reduced element additionally has coprime num and den, with den monic of
// valuation 0. Arithmetic leaves results unreduced below a size threshold so
// short factored forms are not inflated by gcd quotients; every observer of
// the canonical pair (num(), den(), ordering, evaluation, serialization)
// reduces on demand. Equality is value equality in the field either way.
class FieldElem {
 public:
  FieldElem() : num_(LaurentPoly::zero()), den_(LaurentPoly::one()) {}

  static FieldElem zero() { return FieldElem(); }
  static FieldElem one() { return from_poly(LaurentPoly::one()); }
  static FieldElem constant(const Rational& c) { return from_poly(LaurentPoly::monomial(0, c)); }
  static FieldElem monomial(std::int64_t e, const Rational& c = 1) {
    return from_poly(LaurentPoly::monomial(e, c));
  }
  static FieldElem from_poly(LaurentPoly p);
  static FieldElem ratio(LaurentPoly n, LaurentPoly d);

  const LaurentPoly& num() const {
    reduce();
    return num_;
  }
  const LaurentPoly& den() const {
    reduce();
    return den_;
  }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_polynomial() const {
    reduce();
    return den_.is_one();
  }

  FieldElem operator-() const;
  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;  // throws on zero divisor
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }

  FieldElem inverse() const;  // throws on zero
  FieldElem pow(std::int64_t k) const;

  bool operator==(const FieldElem& o) const {
    if (reduced_ && o.reduced_) return num_ == o.num_ && den_ == o.den_;
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_ == o.num_ * den_;
  }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }
  std::strong_ordering operator<=>(const FieldElem& o) const;

  // Substitutes u = x; throws std::domain_error at a pole of the denominator.
  Rational evaluate(const Rational& x) const;

  // Substitutes u = x in Z/p for prime p and nonzero x, without reducing the
  // stored pair. False when the denominator image (or a coefficient
  // denominator) vanishes mod p; such points prove nothing either way.
  bool evaluate_mod(std::uint64_t x, std::uint64_t p, std::uint64_t& out) const;

 private:
  void canonicalize() const;
  void reduce() const {
    if (!reduced_) canonicalize();
  }
  void shrink();

  mutable LaurentPoly num_;
  mutable LaurentPoly den_;
  mutable bool reduced_ = true;
};

// q^e in the given context; e*D must be an integer, otherwise the error names
// the D that would be required.
FieldElem q_power(const QContext& ctx, const Rational& e);

// The recurring constant q - q^-1.
FieldElem q_minus_qinv(const QContext& ctx);

// Renders with q-exponents (u-exponent divided by ctx.D, fractional powers as
// q^(p/r)), highest power first.
std::string field_to_string(const FieldElem& f, const QContext& ctx);

}  // namespace hecke
