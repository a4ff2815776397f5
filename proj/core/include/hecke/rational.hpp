#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace hecke {

// Arbitrary-precision scalars. Rational is kept in lowest terms with a
// positive denominator by the backing type; everything downstream relies on
// that canonical form for equality.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return den(r) == 1; }

// Accepts "p", "-p" or "p/q"; rejects zero denominators and malformed text.
Rational parse_rational(const std::string& text);

// "p" when integral, "p/q" otherwise; the inverse of parse_rational.
std::string rational_to_string(const Rational& r);

// lcm of the denominators, >= 1. Empty input yields 1.
BigInt denominator_lcm(const std::vector<Rational>& rs);

// Exact conversion; throws when the value does not fit or is not integral.
std::int64_t to_int64(const Rational& r);
std::int64_t to_int64(const BigInt& z);

}  // namespace hecke
