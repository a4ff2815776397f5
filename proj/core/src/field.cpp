#include "hecke/field.hpp"

#include <sstream>
#include <stdexcept>

#include "modarith.hpp"

namespace hecke {

namespace {

// Unit part of the canonical form: denominator monic with valuation 0.
void normalize_units(LaurentPoly& num, LaurentPoly& den) {
  if (num.is_zero()) {
    den = LaurentPoly::one();
    return;
  }
  if (den.is_monomial()) {
    if (!den.is_one()) {
      num = num.shifted(-den.valuation()).scaled(Rational(1) / den.leading_coeff());
      den = LaurentPoly::one();
    }
    return;
  }
  std::int64_t v = den.valuation();
  if (v != 0) {
    den = den.shifted(-v);
    num = num.shifted(-v);
  }
  const Rational& lc = den.leading_coeff();
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    den = den.scaled(inv);
    num = num.scaled(inv);
  }
}

}  // namespace

QContext make_context(const std::vector<Rational>& exponents) {
  if (exponents.empty()) throw std::invalid_argument("make_context: empty exponent list");
  return QContext{to_int64(denominator_lcm(exponents))};
}

FieldElem FieldElem::from_poly(LaurentPoly p) {
  FieldElem f;
  f.num_ = std::move(p);
  f.den_ = LaurentPoly::one();
  return f;
}

FieldElem FieldElem::ratio(LaurentPoly n, LaurentPoly d) {
  if (d.is_zero()) throw std::domain_error("zero denominator");
  FieldElem f;
  f.num_ = std::move(n);
  f.den_ = std::move(d);
  f.canonicalize();
  return f;
}

void FieldElem::canonicalize() const {
  reduced_ = true;
  if (num_.is_zero()) {
    den_ = LaurentPoly::one();
    return;
  }
  // Monomials are units: fold them into the numerator.
  if (den_.is_monomial()) {
    if (!den_.is_one()) {
      num_ = num_.shifted(-den_.valuation()).scaled(Rational(1) / den_.leading_coeff());
      den_ = LaurentPoly::one();
    }
    return;
  }
  LaurentPoly g = laurent_gcd(num_, den_);
  if (!g.is_one() && !g.is_zero()) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  normalize_units(num_, den_);
}

// Unreduced forms stay cheap while they are small; past this many term pairs
// a gcd pass costs less than dragging the product forward.
void FieldElem::shrink() {
  if (reduced_ || den_.is_one()) return;
  if (num_.term_count() * den_.term_count() > 1024) canonicalize();
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  r.num_ = -r.num_;
  return r;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  FieldElem r;
  if (den_ == o.den_) {
    r.num_ = num_ + o.num_;
    r.den_ = den_;
    r.reduced_ = den_.is_one();
  } else {
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
    r.reduced_ = false;
  }
  normalize_units(r.num_, r.den_);
  if (r.den_.is_one()) r.reduced_ = true;
  r.shrink();
  return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
  if (is_zero() || o.is_zero()) return zero();
  FieldElem r;
  r.num_ = num_ * o.num_;
  if (den_.is_one() && o.den_.is_one()) {
    r.den_ = LaurentPoly::one();
    return r;
  }
  r.den_ = den_ * o.den_;
  r.reduced_ = false;
  normalize_units(r.num_, r.den_);
  if (r.den_.is_one()) r.reduced_ = true;
  r.shrink();
  return r;
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverting zero field element");
  FieldElem r;
  r.num_ = den_;
  r.den_ = num_;
  normalize_units(r.num_, r.den_);
  // Swapping a reduced pair keeps it coprime; units were just restored.
  r.reduced_ = reduced_ || r.den_.is_one();
  return r;
}

FieldElem FieldElem::pow(std::int64_t k) const {
  if (k == 0) return one();
  FieldElem base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  FieldElem acc = one();
  while (e > 0) {
    if (e & 1) acc *= base;
    base = (e >>= 1) ? base * base : base;
  }
  return acc;
}

std::strong_ordering FieldElem::operator<=>(const FieldElem& o) const {
  reduce();
  o.reduce();
  if (auto c = num_ <=> o.num_; c != 0) return c;
  return den_ <=> o.den_;
}

Rational FieldElem::evaluate(const Rational& x) const {
  reduce();
  Rational d = den_.evaluate(x);
  if (d == 0) throw std::domain_error("pole at u = " + rational_to_string(x));
  return num_.evaluate(x) / d;
}

bool FieldElem::evaluate_mod(std::uint64_t x, std::uint64_t p, std::uint64_t& out) const {
  std::uint64_t n = 0, d = 0;
  if (!num_.evaluate_mod(x, p, n) || !den_.evaluate_mod(x, p, d) || d == 0) return false;
  out = modarith::mulmod(n, modarith::invmod(d, p), p);
  return true;
}

FieldElem q_power(const QContext& ctx, const Rational& e) {
  Rational scaled = e * ctx.D;
  if (!is_integer(scaled)) {
    throw std::invalid_argument("q^" + rational_to_string(e) + " needs context denominator divisible by " +
                                den(e).str() + ", have D = " + std::to_string(ctx.D));
  }
  return FieldElem::monomial(to_int64(scaled));
}

FieldElem q_minus_qinv(const QContext& ctx) {
  return FieldElem::from_poly(LaurentPoly::from_terms({{ctx.D, 1}, {-ctx.D, -1}}));
}

namespace {

void append_q_power(std::ostream& os, std::int64_t e, std::int64_t D) {
  Rational r(e, D);
  os << "q";
  if (r == 1) return;
  if (is_integer(r)) {
    os << "^" << rational_to_string(r);
  } else {
    os << "^(" << rational_to_string(r) << ")";
  }
}

void append_poly_in_q(std::ostream& os, const LaurentPoly& p, std::int64_t D) {
  if (p.is_zero()) {
    os << "0";
    return;
  }
  bool first = true;
  const auto& ts = p.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    Rational c = it->second;
    if (first) {
      if (c < 0) os << "-", c = -c;
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (it->first == 0) {
      os << rational_to_string(c);
    } else {
      if (c != 1) os << rational_to_string(c) << "*";
      append_q_power(os, it->first, D);
    }
  }
}

}  // namespace

std::string field_to_string(const FieldElem& f, const QContext& ctx) {
  std::ostringstream os;
  if (f.is_polynomial()) {
    append_poly_in_q(os, f.num(), ctx.D);
    return os.str();
  }
  os << "(";
  append_poly_in_q(os, f.num(), ctx.D);
  os << ")/(";
  append_poly_in_q(os, f.den(), ctx.D);
  os << ")";
  return os.str();
}

}  // namespace hecke
