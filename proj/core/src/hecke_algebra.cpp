#include "hecke/hecke_algebra.hpp"

#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hecke {

void HeckeElem::add_term(const WeylElement& w, std::vector<int> lambda, FieldElem c) {
  if (c.is_zero()) return;
  Key key{w.matrix(), std::move(lambda)};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), std::make_pair(w, std::move(c)));
    return;
  }
  it->second.second += c;
  if (it->second.second.is_zero()) terms_.erase(it);
}

std::vector<HeckeTerm> HeckeElem::terms() const {
  std::vector<HeckeTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, val] : terms_) out.push_back({val.first, key.second, val.second});
  return out;
}

HeckeElem HeckeElem::operator+(const HeckeElem& o) const {
  HeckeElem r = *this;
  for (const auto& [key, val] : o.terms_) r.add_term(val.first, key.second, val.second);
  return r;
}

HeckeElem HeckeElem::operator-(const HeckeElem& o) const {
  HeckeElem r = *this;
  for (const auto& [key, val] : o.terms_) r.add_term(val.first, key.second, -val.second);
  return r;
}

HeckeElem HeckeElem::scaled(const FieldElem& c) const {
  HeckeElem r;
  if (c.is_zero()) return r;
  for (const auto& [key, val] : terms_) r.terms_.emplace(key, std::make_pair(val.first, val.second * c));
  return r;
}

bool HeckeElem::operator==(const HeckeElem& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second.second != jt->second.second) return false;
  }
  return true;
}

HeckeElem HeckeAlgebra::one() const {
  HeckeElem e;
  e.add_term(WeylElement::identity(rs_->rank()), std::vector<int>(rs_->rank(), 0), FieldElem::one());
  return e;
}

HeckeElem HeckeAlgebra::t_generator(int i) const {
  HeckeElem e;
  e.add_term(WeylElement::simple_reflection(*rs_, i), std::vector<int>(rs_->rank(), 0),
             FieldElem::one());
  return e;
}

HeckeElem HeckeAlgebra::t_word(const std::vector<int>& word) const {
  HeckeElem e = one();
  for (int i : word) e = times_t(e, i);
  return e;
}

HeckeElem HeckeAlgebra::x_monomial(const std::vector<int>& lambda, const FieldElem& c) const {
  if (static_cast<int>(lambda.size()) != rs_->rank())
    throw std::invalid_argument("lambda length must equal the rank");
  HeckeElem e;
  e.add_term(WeylElement::identity(rs_->rank()), lambda, c);
  return e;
}

HeckeElem HeckeAlgebra::x_monomial(const std::vector<int>& lambda) const {
  return x_monomial(lambda, FieldElem::one());
}

HeckeElem HeckeAlgebra::geometric_factor(const std::vector<int>& lambda, int i) const {
  HeckeElem out;
  const WeylElement id = WeylElement::identity(rs_->rank());
  const std::vector<int> alpha = rs_->simple_root_omega(i);
  const int k = lambda[i];
  if (k >= 1) {
    std::vector<int> mu = lambda;
    for (int j = 0; j < k; ++j) {
      out.add_term(id, mu, FieldElem::one());
      for (int a = 0; a < rs_->rank(); ++a) mu[a] -= alpha[a];
    }
  } else if (k <= -1) {
    std::vector<int> mu = lambda;
    for (int j = 1; j <= -k; ++j) {
      for (int a = 0; a < rs_->rank(); ++a) mu[a] += alpha[a];
      out.add_term(id, mu, FieldElem::constant(-1));
    }
  }
  return out;
}

HeckeElem HeckeAlgebra::times_t(const HeckeElem& a, int i) const {
  const FieldElem qq = q_minus_qinv(ctx_);
  const WeylElement si = WeylElement::simple_reflection(*rs_, i);
  HeckeElem out;
  for (const HeckeTerm& t : a.terms()) {
    // T_w X^lambda T_i = (T_w T_i) X^{s_i lambda} + (q - q^-1) T_w G(lambda, i)
    std::vector<int> slambda = rs_->reflect_weight(i, t.lambda);
    WeylElement wsi = t.w * si;
    out.add_term(wsi, slambda, t.coeff);
    if (!is_right_ascent(*rs_, t.w, i)) out.add_term(t.w, std::move(slambda), t.coeff * qq);
    for (const HeckeTerm& g : geometric_factor(t.lambda, i).terms())
      out.add_term(t.w, g.lambda, t.coeff * g.coeff * qq);
  }
  return out;
}

HeckeElem HeckeAlgebra::times_x(const HeckeElem& a, const std::vector<int>& lambda) const {
  HeckeElem out;
  for (const HeckeTerm& t : a.terms()) {
    std::vector<int> mu = t.lambda;
    for (std::size_t k = 0; k < mu.size(); ++k) mu[k] += lambda[k];
    out.add_term(t.w, std::move(mu), t.coeff);
  }
  return out;
}

HeckeElem HeckeAlgebra::multiply(const HeckeElem& a, const HeckeElem& b) const {
  HeckeElem out;
  for (const HeckeTerm& t : b.terms()) {
    HeckeElem part = a;
    for (int i : reduced_word(*rs_, t.w)) part = times_t(part, i);
    part = times_x(part, t.lambda);
    out = out + part.scaled(t.coeff);
  }
  return out;
}

HeckeElem HeckeAlgebra::orbit_sum(const std::vector<int>& lambda, std::size_t cap) const {
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  seen.insert(lambda);
  queue.push_back(lambda);
  while (!queue.empty()) {
    std::vector<int> mu = queue.front();
    queue.pop_front();
    for (int i = 0; i < rs_->rank(); ++i) {
      std::vector<int> nu = rs_->reflect_weight(i, mu);
      if (seen.insert(nu).second) {
        if (seen.size() > cap)
          throw std::length_error("weight orbit exceeded cap " + std::to_string(cap));
        queue.push_back(std::move(nu));
      }
    }
  }
  HeckeElem out;
  const WeylElement id = WeylElement::identity(rs_->rank());
  for (const auto& mu : seen) out.add_term(id, mu, FieldElem::one());
  return out;
}

bool HeckeAlgebra::is_central(const HeckeElem& a) const {
  for (int i = 0; i < rs_->rank(); ++i) {
    HeckeElem gen = t_generator(i);
    if (multiply(a, gen) != multiply(gen, a)) return false;
  }
  std::vector<int> omega(rs_->rank(), 0);
  for (int k = 0; k < rs_->rank(); ++k) {
    omega[k] = 1;
    HeckeElem gen = x_monomial(omega);
    if (multiply(a, gen) != multiply(gen, a)) return false;
    omega[k] = 0;
  }
  return true;
}

std::string HeckeAlgebra::to_string(const HeckeElem& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const HeckeTerm& t : a.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << field_to_string(t.coeff, ctx_) << ")*T[" << word_to_string(reduced_word(*rs_, t.w))
       << "]*X[";
    for (std::size_t k = 0; k < t.lambda.size(); ++k) {
      if (k) os << ",";
      os << t.lambda[k];
    }
    os << "]";
  }
  return os.str();
}

}  // namespace hecke
