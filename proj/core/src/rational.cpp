#include "hecke/rational.hpp"

#include <limits>
#include <stdexcept>

namespace hecke {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt p(text.substr(0, slash));
    BigInt q(text.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(p, q);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  }
}

std::string rational_to_string(const Rational& r) {
  std::string s = num(r).str();
  if (!is_integer(r)) {
    s += "/";
    s += den(r).str();
  }
  return s;
}

BigInt denominator_lcm(const std::vector<Rational>& rs) {
  BigInt l = 1;
  for (const auto& r : rs) l = boost::multiprecision::lcm(l, den(r));
  return l;
}

std::int64_t to_int64(const BigInt& z) {
  if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer out of 64-bit range: " + z.str());
  return static_cast<std::int64_t>(z);
}

std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("not an integer: " + rational_to_string(r));
  return to_int64(num(r));
}

}  // namespace hecke
