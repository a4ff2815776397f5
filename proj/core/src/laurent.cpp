#include "hecke/laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "modarith.hpp"

namespace hecke {

namespace {

// Integer-coefficient polynomial with the same term layout, used only inside
// the gcd routine. Valuation is always 0 there.
using ZTerm = std::pair<std::int64_t, BigInt>;
using ZPoly = std::vector<ZTerm>;

std::int64_t zdeg(const ZPoly& p) { return p.back().first; }
const BigInt& zlc(const ZPoly& p) { return p.back().second; }

ZPoly zscale(const ZPoly& p, const BigInt& c) {
  ZPoly r = p;
  for (auto& t : r) t.second *= c;
  return r;
}

// r - s * c * u^k, merged.
ZPoly zsub_shifted_scaled(const ZPoly& r, const ZPoly& s, const BigInt& c, std::int64_t k) {
  ZPoly out;
  out.reserve(r.size() + s.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < s.size()) {
    std::int64_t er = i < r.size() ? r[i].first : INT64_MAX;
    std::int64_t es = j < s.size() ? s[j].first + k : INT64_MAX;
    if (er < es) {
      out.push_back(r[i++]);
    } else if (es < er) {
      out.emplace_back(es, -s[j++].second * c);
    } else {
      BigInt v = r[i].second - s[j].second * c;
      if (v != 0) out.emplace_back(er, std::move(v));
      ++i, ++j;
    }
  }
  return out;
}

BigInt zcontent(const ZPoly& p) {
  BigInt g = 0;
  for (const auto& t : p) {
    g = boost::multiprecision::gcd(g, t.second);
    if (g == 1) break;
  }
  return g;
}

void zmake_primitive(ZPoly& p) {
  if (p.empty()) return;
  BigInt g = zcontent(p);
  if (zlc(p) < 0) g = -g;
  if (g != 1)
    for (auto& t : p) t.second /= g;
}

// Clears denominators and content, shifts valuation to 0.
ZPoly to_primitive_int(const LaurentPoly& p) {
  std::vector<Rational> cs;
  cs.reserve(p.term_count());
  for (const auto& t : p.terms()) cs.push_back(t.second);
  BigInt l = denominator_lcm(cs);
  std::int64_t v = p.valuation();
  ZPoly r;
  r.reserve(p.term_count());
  for (const auto& t : p.terms()) r.emplace_back(t.first - v, num(t.second * Rational(l)));
  zmake_primitive(r);
  return r;
}

// Pseudo-remainder of a by b, correct up to content.
ZPoly zprem(ZPoly a, const ZPoly& b) {
  const BigInt& c = zlc(b);
  int steps = 0;
  while (!a.empty() && zdeg(a) >= zdeg(b)) {
    BigInt top = zlc(a);
    std::int64_t k = zdeg(a) - zdeg(b);
    a = zsub_shifted_scaled(zscale(a, c), b, top, k);
    if (++steps % 8 == 0) zmake_primitive(a);
  }
  return a;
}

using modarith::u64;
using modarith::invmod;
using modarith::mulmod;

// Two fixed word-size primes; a second chance before the pseudo-remainder fallback.
constexpr u64 kPrimes[2] = {2305843009213693951ULL, 9223372036854775783ULL};

u64 big_mod(const BigInt& v, u64 p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r.convert_to<u64>();
}

// Dense image mod p, index = exponent. Fails when p kills the leading coefficient.
bool to_mod(const ZPoly& z, u64 p, std::vector<u64>& out) {
  out.assign(static_cast<std::size_t>(zdeg(z)) + 1, 0);
  for (const auto& t : z) out[static_cast<std::size_t>(t.first)] = big_mod(t.second, p);
  return out.back() != 0;
}

void ptrim(std::vector<u64>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void pmod_inplace(std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
  const u64 inv = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    u64 c = mulmod(a.back(), inv, p);
    if (c != 0) {
      std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        if (b[i] == 0) continue;
        u64 s = mulmod(b[i], c, p);
        u64& t = a[off + i];
        t = t >= s ? t - s : t + p - s;
      }
    }
    a.pop_back();
    ptrim(a);
  }
}

// Monic gcd over GF(p).
std::vector<u64> pgcd(std::vector<u64> a, std::vector<u64> b, u64 p) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    pmod_inplace(a, b, p);
    std::swap(a, b);
  }
  if (!a.empty() && a.back() != 1) {
    u64 inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

LaurentPoly from_zpoly(const ZPoly& z) {
  std::vector<LaurentPoly::Term> ts;
  ts.reserve(z.size());
  for (const auto& t : z) ts.emplace_back(t.first, Rational(t.second));
  return LaurentPoly::from_terms(std::move(ts));
}

// gcd via one prime: image gcd, symmetric lift scaled by the leading-coefficient
// gcd, then trial division against both inputs. Empty result means the prime
// gave no verdict.
bool try_modular_gcd(const ZPoly& a, const ZPoly& b, u64 p, ZPoly& out, bool& coprime) {
  std::vector<u64> am, bm;
  if (!to_mod(a, p, am) || !to_mod(b, p, bm)) return false;
  std::vector<u64> g = pgcd(std::move(am), std::move(bm), p);
  if (g.size() == 1) {
    coprime = true;
    return true;
  }
  BigInt l = boost::multiprecision::gcd(zlc(a), zlc(b));
  u64 lm = big_mod(l, p);
  ZPoly cand;
  for (std::size_t i = 0; i < g.size(); ++i) {
    u64 v = mulmod(g[i], lm, p);
    if (v == 0) continue;
    BigInt c = v > p / 2 ? BigInt(v) - BigInt(p) : BigInt(v);
    cand.emplace_back(static_cast<std::int64_t>(i), std::move(c));
  }
  zmake_primitive(cand);
  LaurentPoly cl = from_zpoly(cand);
  try {
    from_zpoly(a).divide_exact(cl);
    from_zpoly(b).divide_exact(cl);
  } catch (const std::domain_error&) {
    return false;
  }
  out = std::move(cand);
  coprime = false;
  return true;
}

// Largest step of the exponent lattice; inputs have valuation 0.
std::int64_t exponent_stride(const ZPoly& a, const ZPoly& b) {
  std::int64_t g = 0;
  for (const auto& t : a) g = std::gcd(g, t.first);
  for (const auto& t : b) g = std::gcd(g, t.first);
  return g > 1 ? g : 1;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(std::int64_t exp, Rational coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace_back(exp, std::move(coeff));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::map<std::int64_t, Rational> acc;
  for (auto& t : terms) acc[t.first] += t.second;
  LaurentPoly p;
  for (auto& [e, c] : acc)
    if (c != 0) p.terms_.emplace_back(e, std::move(c));
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

std::int64_t LaurentPoly::valuation() const {
  if (terms_.empty()) throw std::domain_error("valuation of zero polynomial");
  return terms_.front().first;
}

std::int64_t LaurentPoly::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  return terms_.back().first;
}

const Rational& LaurentPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return terms_.back().second;
}

Rational LaurentPoly::coeff(std::int64_t exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                             [](const Term& t, std::int64_t e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return Rational(0);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    std::int64_t ea = i < terms_.size() ? terms_[i].first : INT64_MAX;
    std::int64_t eb = j < o.terms_.size() ? o.terms_[j].first : INT64_MAX;
    if (ea < eb) {
      r.terms_.push_back(terms_[i++]);
    } else if (eb < ea) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].second + o.terms_[j].second;
      if (c != 0) r.terms_.emplace_back(ea, std::move(c));
      ++i, ++j;
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  if (is_monomial()) return o.shifted(terms_[0].first).scaled(terms_[0].second);
  if (o.is_monomial()) return shifted(o.terms_[0].first).scaled(o.terms_[0].second);
  // Accumulate over a common denominator so the inner loop is pure integer work.
  BigInt la = 1, lb = 1;
  for (const auto& t : terms_) la = boost::multiprecision::lcm(la, den(t.second));
  for (const auto& t : o.terms_) lb = boost::multiprecision::lcm(lb, den(t.second));
  std::vector<std::pair<std::int64_t, BigInt>> as, bs;
  as.reserve(terms_.size());
  bs.reserve(o.terms_.size());
  for (const auto& t : terms_) as.emplace_back(t.first, num(t.second * Rational(la)));
  for (const auto& t : o.terms_) bs.emplace_back(t.first, num(t.second * Rational(lb)));
  std::map<std::int64_t, BigInt> acc;
  for (const auto& a : as)
    for (const auto& b : bs) {
      BigInt& slot = acc[a.first + b.first];
      slot += a.second * b.second;
    }
  const BigInt l = la * lb;
  LaurentPoly r;
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.emplace_back(e, Rational(std::move(c), l));
  return r;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c == 0) return zero();
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

std::strong_ordering LaurentPoly::operator<=>(const LaurentPoly& o) const {
  std::size_t n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (terms_[i].first != o.terms_[i].first)
      return terms_[i].first <=> o.terms_[i].first;
    if (terms_[i].second != o.terms_[i].second)
      return terms_[i].second < o.terms_[i].second ? std::strong_ordering::less
                                                   : std::strong_ordering::greater;
  }
  return terms_.size() <=> o.terms_.size();
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return zero();
  if (divisor.is_monomial())
    return shifted(-divisor.terms_[0].first).scaled(Rational(1) / divisor.terms_[0].second);
  // An exact quotient has valuation exactly val(this) - val(divisor); once the
  // working degree drops below that bound the division cannot be exact.
  const std::int64_t qval = valuation() - divisor.valuation();
  LaurentPoly rem = *this;
  std::vector<Term> qterms;
  while (!rem.is_zero() && rem.degree() - divisor.degree() >= qval) {
    std::int64_t e = rem.degree() - divisor.degree();
    Rational c = rem.leading_coeff() / divisor.leading_coeff();
    qterms.emplace_back(e, c);
    rem = rem - divisor.shifted(e).scaled(c);
  }
  if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
  return from_terms(std::move(qterms));
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0 && x == 0) throw std::domain_error("evaluating a negative power of u at 0");
    BigInt p = boost::multiprecision::pow(num(x), static_cast<unsigned>(e < 0 ? -e : e));
    BigInt q = boost::multiprecision::pow(den(x), static_cast<unsigned>(e < 0 ? -e : e));
    acc += e < 0 ? c * Rational(q, p) : c * Rational(p, q);
  }
  return acc;
}

bool LaurentPoly::evaluate_mod(std::uint64_t x, std::uint64_t p, std::uint64_t& out) const {
  using modarith::invmod;
  using modarith::mulmod;
  using modarith::powmod;
  const std::uint64_t xinv = invmod(x % p, p);
  std::uint64_t acc = 0;
  for (const auto& [e, c] : terms_) {
    std::uint64_t dm = big_mod(den(c), p);
    if (dm == 0) return false;
    std::uint64_t v = mulmod(big_mod(num(c), p), invmod(dm, p), p);
    std::uint64_t base = e < 0 ? xinv : x % p;
    std::uint64_t mag = static_cast<std::uint64_t>(e < 0 ? -e : e);
    acc = (acc + mulmod(v, powmod(base, mag, p), p)) % p;
  }
  out = acc;
  return true;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print highest exponent first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    if (first) {
      if (c < 0) os << "-", c = -c;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (it->first == 0) {
      os << rational_to_string(c);
    } else {
      if (c != 1) os << rational_to_string(c) << "*";
      os << var;
      if (it->first != 1) os << "^" << it->first;
    }
  }
  return os.str();
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  auto unit_normal = [](const LaurentPoly& p) {
    ZPoly z = to_primitive_int(p);
    std::vector<LaurentPoly::Term> ts;
    ts.reserve(z.size());
    for (auto& t : z) ts.emplace_back(t.first, Rational(t.second));
    return LaurentPoly::from_terms(std::move(ts));
  };
  if (a.is_zero() && b.is_zero()) return LaurentPoly::zero();
  if (a.is_zero()) return unit_normal(b);
  if (b.is_zero()) return unit_normal(a);
  if (a.is_monomial() || b.is_monomial()) return LaurentPoly::one();

  ZPoly A = to_primitive_int(a);
  ZPoly B = to_primitive_int(b);

  // Both live on a common exponent lattice; compute on the compressed copies.
  std::int64_t stride = exponent_stride(A, B);
  if (stride > 1) {
    for (auto& t : A) t.first /= stride;
    for (auto& t : B) t.first /= stride;
  }

  ZPoly G;
  bool done = false;
  for (u64 p : kPrimes) {
    bool coprime = false;
    if (try_modular_gcd(A, B, p, G, coprime)) {
      if (coprime) return LaurentPoly::one();
      done = true;
      break;
    }
  }
  if (!done) {
    if (zdeg(A) < zdeg(B)) std::swap(A, B);
    while (!B.empty()) {
      ZPoly R = zprem(A, B);
      zmake_primitive(R);
      A = std::move(B);
      B = std::move(R);
    }
    G = std::move(A);
  }
  // G is primitive with positive leading coefficient; shift valuation to 0.
  std::int64_t v = G.front().first;
  std::vector<LaurentPoly::Term> ts;
  ts.reserve(G.size());
  for (auto& t : G) ts.emplace_back((t.first - v) * stride, Rational(t.second));
  return LaurentPoly::from_terms(std::move(ts));
}

}  // namespace hecke
