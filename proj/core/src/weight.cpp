#include "hecke/weight.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace hecke {

Weight Weight::real(const RootSystem& rs, std::vector<Rational> gamma) {
  if (static_cast<int>(gamma.size()) != rs.rank())
    throw std::invalid_argument("gamma length must equal the rank");
  Weight t;
  t.rs_ = &rs;
  t.ctx_ = make_context(gamma);
  t.real_ = true;
  t.gamma_ = std::move(gamma);
  t.values_.reserve(t.gamma_.size());
  for (const Rational& g : t.gamma_) t.values_.push_back(q_power(t.ctx_, 2 * g));
  return t;
}

Weight Weight::general(const RootSystem& rs, const QContext& ctx, std::vector<FieldElem> values) {
  if (static_cast<int>(values.size()) != rs.rank())
    throw std::invalid_argument("value vector length must equal the rank");
  for (const FieldElem& v : values)
    if (v.is_zero()) throw std::invalid_argument("weight values must be nonzero");
  Weight t;
  t.rs_ = &rs;
  t.ctx_ = ctx;
  t.real_ = false;
  t.values_ = std::move(values);
  return t;
}

const std::vector<Rational>& Weight::gamma() const {
  if (!real_) throw std::logic_error("gamma is only defined for real weights");
  return gamma_;
}

FieldElem Weight::value(const std::vector<int>& lambda) const {
  if (real_) return q_power(ctx_, 2 * exponent(lambda));
  FieldElem v = FieldElem::one();
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (lambda[i] == 0) continue;
    v *= values_[i].pow(lambda[i]);
  }
  return v;
}

FieldElem Weight::simple_root_value(int i) const { return value(rs_->simple_root_omega(i)); }

Rational Weight::exponent(const std::vector<int>& lambda) const {
  if (!real_) throw std::logic_error("exponents are only defined for real weights");
  Rational e = 0;
  for (std::size_t i = 0; i < gamma_.size(); ++i) e += gamma_[i] * lambda[i];
  return e;
}

Rational Weight::simple_root_exponent(int i) const { return exponent(rs_->simple_root_omega(i)); }

Weight Weight::reflected(int i) const {
  Weight t = *this;
  if (real_) {
    t.gamma_[i] -= simple_root_exponent(i);
    t.values_[i] = q_power(ctx_, 2 * t.gamma_[i]);
  } else {
    t.values_[i] = values_[i] * simple_root_value(i).inverse();
  }
  return t;
}

Weight Weight::acted(const WeylElement& w) const {
  const int n = rs_->rank();
  Weight t = *this;
  if (real_) {
    // (w t)(X^lambda) = t(X^{w^-1 lambda}) forces gamma' = (W^-1)^T gamma.
    const std::vector<int>& inv = w.inverse_matrix();
    for (int i = 0; i < n; ++i) {
      Rational g = 0;
      for (int j = 0; j < n; ++j) g += gamma_[j] * inv[j * n + i];
      t.gamma_[i] = g;
      t.values_[i] = q_power(ctx_, 2 * g);
    }
  } else {
    std::vector<int> e(n, 0);
    for (int i = 0; i < n; ++i) {
      e[i] = 1;
      t.values_[i] = value(w.act_inverse(e));
      e[i] = 0;
    }
  }
  return t;
}

bool Weight::operator==(const Weight& o) const {
  return ctx_.D == o.ctx_.D && values_ == o.values_;
}

bool Weight::operator<(const Weight& o) const {
  if (ctx_.D != o.ctx_.D) return ctx_.D < o.ctx_.D;
  return std::lexicographical_compare(values_.begin(), values_.end(), o.values_.begin(),
                                      o.values_.end());
}

ZeroPoleSets zero_pole_sets(const Weight& t) {
  const RootSystem& rs = t.root_system();
  ZeroPoleSets out;
  const FieldElem one = FieldElem::one();
  const FieldElem q2 = q_power(t.context(), 2);
  const FieldElem qm2 = q_power(t.context(), -2);
  for (std::size_t k = 0; k < rs.positive_count(); ++k) {
    const FieldElem v = t.value(rs.root(k).omega);
    const bool is_zero_root = v == one;
    const bool is_pole_root = v == q2 || v == qm2;
    if (t.is_real()) {
      const Rational e = t.exponent(rs.root(k).omega);
      if (is_zero_root != (e == 0) || is_pole_root != (e == 1 || e == -1))
        throw std::logic_error("exponent and field classifications disagree");
    }
    if (is_zero_root) out.zero.push_back(static_cast<int>(k));
    if (is_pole_root) out.pole.push_back(static_cast<int>(k));
  }
  return out;
}

std::vector<OrbitEntry> weight_orbit(const Weight& t, std::size_t cap) {
  const RootSystem& rs = t.root_system();
  const int n = rs.rank();

  std::vector<OrbitEntry> out;
  std::map<Weight, std::size_t> seen;
  out.push_back({t, WeylElement::identity(n), {}});
  seen.emplace(t, 0);

  // Layered BFS with left multiplication: layer l holds the orbit points at
  // coset length l, and the lex-least minimal word is kept per new weight.
  std::vector<std::size_t> layer = {0};
  while (!layer.empty()) {
    std::map<Weight, std::pair<std::vector<int>, std::size_t>> next;  // word, parent index
    for (std::size_t k : layer) {
      for (int i = 0; i < n; ++i) {
        Weight u = out[k].weight.reflected(i);
        if (seen.count(u)) continue;
        std::vector<int> word;
        word.reserve(out[k].word.size() + 1);
        word.push_back(i);
        word.insert(word.end(), out[k].word.begin(), out[k].word.end());
        auto [it, fresh] = next.try_emplace(std::move(u), word, k);
        if (!fresh && word < it->second.first) it->second = {std::move(word), k};
      }
    }
    // Words within a layer are pairwise distinct, so sorting by word fixes
    // the output order completely.
    std::vector<std::pair<std::vector<int>, Weight>> batch;
    std::vector<std::size_t> parents;
    for (auto& [u, cand] : next) {
      batch.emplace_back(std::move(cand.first), u);
      parents.push_back(cand.second);
    }
    layer.clear();
    std::vector<std::size_t> order(batch.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return batch[a].first < batch[b].first; });
    for (std::size_t k : order) {
      if (out.size() >= cap)
        throw std::length_error("weight orbit exceeded cap " + std::to_string(cap));
      auto& [word, u] = batch[k];
      seen.emplace(u, out.size());
      layer.push_back(out.size());
      WeylElement rep = WeylElement::simple_reflection(rs, word.front()) * out[parents[k]].rep;
      out.push_back({std::move(u), std::move(rep), std::move(word)});
    }
  }
  return out;
}

std::pair<Weight, std::vector<int>> dominant_rep(const Weight& t) {
  if (!t.is_real()) throw std::invalid_argument("dominant representatives need a real weight");
  Weight cur = t;
  std::vector<int> word;
  const int n = t.root_system().rank();
  for (;;) {
    int neg = -1;
    for (int i = 0; i < n; ++i) {
      if (cur.simple_root_exponent(i) < 0) { neg = i; break; }
    }
    if (neg < 0) break;
    cur = cur.reflected(neg);
    word.insert(word.begin(), neg);
  }
  const RootSystem& rs = t.root_system();
  return {cur, reduced_word(rs, from_word(rs, word))};
}

std::size_t weight_stabilizer_order(const Weight& t, std::size_t cap) {
  return reflection_subgroup_order(t.root_system(), zero_pole_sets(t).zero, cap);
}

}  // namespace hecke
