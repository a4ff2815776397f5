#include "hecke/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

std::vector<int> identity_matrix(int n) {
  std::vector<int> m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

std::vector<int> mat_mul(int n, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

}  // namespace

WeylElement WeylElement::identity(int n) {
  auto m = identity_matrix(n);
  return WeylElement(n, m, m);
}

WeylElement WeylElement::simple_reflection(const RootSystem& rs, int i) {
  const int n = rs.rank();
  // Column i of the matrix is e_i - alpha_i (omega-coordinates): the matrix of
  // lambda |-> lambda - lambda[i] * alpha_i.
  std::vector<int> m = identity_matrix(n);
  for (int k = 0; k < n; ++k) m[k * n + i] -= rs.cartan_entry(k, i);
  return WeylElement(n, m, m);  // involution
}

WeylElement WeylElement::root_reflection(const RootSystem& rs, int root_index) {
  const int n = rs.rank();
  const Root& r = rs.root(root_index);
  std::vector<int> m = identity_matrix(n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) m[k * n + j] -= r.omega[k] * r.coroot_pairing[j];
  return WeylElement(n, m, m);
}

std::vector<int> WeylElement::act(const std::vector<int>& lambda) const {
  std::vector<int> r(n_, 0);
  for (int i = 0; i < n_; ++i) {
    int acc = 0;
    for (int j = 0; j < n_; ++j) acc += mat_[i * n_ + j] * lambda[j];
    r[i] = acc;
  }
  return r;
}

std::vector<int> WeylElement::act_inverse(const std::vector<int>& lambda) const {
  std::vector<int> r(n_, 0);
  for (int i = 0; i < n_; ++i) {
    int acc = 0;
    for (int j = 0; j < n_; ++j) acc += inv_[i * n_ + j] * lambda[j];
    r[i] = acc;
  }
  return r;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  return WeylElement(n_, mat_mul(n_, mat_, o.mat_), mat_mul(n_, o.inv_, inv_));
}

WeylElement WeylElement::inverse() const { return WeylElement(n_, inv_, mat_); }

bool WeylElement::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (mat_[i * n_ + j] != (i == j)) return false;
  return true;
}

std::vector<int> inversion_set(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> out;
  for (std::size_t k = 0; k < rs.positive_count(); ++k) {
    std::vector<int> img = w.act(rs.root(k).omega);
    auto cls = rs.classify_root(img);
    if (!cls) throw std::logic_error("group action does not permute the roots");
    if (cls->second < 0) out.push_back(static_cast<int>(k));
  }
  return out;
}

std::size_t weyl_length(const RootSystem& rs, const WeylElement& w) {
  return inversion_set(rs, w).size();
}

bool is_right_ascent(const RootSystem& rs, const WeylElement& w, int i) {
  std::vector<int> img = w.act(rs.simple_root_omega(i));
  auto cls = rs.classify_root(img);
  if (!cls) throw std::logic_error("group action does not permute the roots");
  return cls->second > 0;
}

std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w) {
  // Greedy smallest left descent, which yields the lexicographically least
  // reduced word. Left descents of w are right descents of the inverse.
  std::vector<int> word;
  WeylElement v = w.inverse();
  const int n = rs.rank();
  while (!v.is_identity()) {
    int descent = -1;
    for (int i = 0; i < n; ++i) {
      if (!is_right_ascent(rs, v, i)) { descent = i; break; }
    }
    if (descent < 0) throw std::logic_error("non-identity element with no descent");
    word.push_back(descent);
    v = v * WeylElement::simple_reflection(rs, descent);
  }
  return word;
}

WeylElement from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w = WeylElement::identity(rs.rank());
  for (int i : word) {
    if (i < 0 || i >= rs.rank()) throw std::invalid_argument("simple index out of range in word");
    w = w * WeylElement::simple_reflection(rs, i);
  }
  return w;
}

std::string word_to_string(const std::vector<int>& word) {
  if (word.empty()) return "1";
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) os << "*";
    os << "s" << (word[k] + 1);
  }
  return os.str();
}

WeylGroup WeylGroup::enumerate(const RootSystem& rs, std::size_t cap) {
  const int n = rs.rank();
  std::vector<WeylElement> gens;
  gens.reserve(n);
  for (int i = 0; i < n; ++i) gens.push_back(WeylElement::simple_reflection(rs, i));

  WeylGroup g;
  std::deque<std::size_t> queue;
  auto add = [&](const WeylElement& w, const std::vector<int>& word) {
    auto [it, fresh] = g.index_.try_emplace(w.matrix(), g.elements_.size());
    if (!fresh) return false;
    g.elements_.push_back(w);
    g.words_.push_back(word);
    return true;
  };
  add(WeylElement::identity(n), {});
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t k = queue.front();
    queue.pop_front();
    WeylElement w = g.elements_[k];
    std::vector<int> word = g.words_[k];
    for (int i = 0; i < n; ++i) {
      if (!is_right_ascent(rs, w, i)) continue;
      word.push_back(i);
      if (add(w * gens[i], word)) {
        if (g.elements_.size() > cap)
          throw std::length_error("group enumeration exceeded cap " + std::to_string(cap) +
                                  " (at least " + std::to_string(g.elements_.size()) + " elements)");
        queue.push_back(g.elements_.size() - 1);
      }
      word.pop_back();
    }
  }

  // Sort by (length, word); BFS already grouped by length, so this is a
  // within-layer lexicographic tidy-up.
  std::vector<std::size_t> order(g.elements_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (g.words_[a].size() != g.words_[b].size()) return g.words_[a].size() < g.words_[b].size();
    return g.words_[a] < g.words_[b];
  });
  WeylGroup sorted;
  for (std::size_t k : order) {
    sorted.index_[g.elements_[k].matrix()] = sorted.elements_.size();
    sorted.elements_.push_back(g.elements_[k]);
    sorted.words_.push_back(g.words_[k]);
  }
  return sorted;
}

std::size_t WeylGroup::index_of(const WeylElement& w) const {
  auto it = index_.find(w.matrix());
  if (it == index_.end()) throw std::invalid_argument("element not in enumerated group");
  return it->second;
}

std::vector<std::size_t> WeylGroup::length_profile() const {
  std::vector<std::size_t> profile;
  for (const auto& w : words_) {
    if (w.size() >= profile.size()) profile.resize(w.size() + 1, 0);
    ++profile[w.size()];
  }
  return profile;
}

std::vector<WeylElement> min_coset_reps(const RootSystem& rs, const std::vector<int>& zero_roots,
                                        std::size_t cap) {
  const int n = rs.rank();
  std::set<int> zset(zero_roots.begin(), zero_roots.end());
  std::vector<WeylElement> gens;
  for (int i = 0; i < n; ++i) gens.push_back(WeylElement::simple_reflection(rs, i));

  // Left BFS: on an ascent, R(s_i w) = R(w) + {w^-1 alpha_i}, so pruning the
  // step whenever w^-1 alpha_i lies in Z enumerates exactly the elements whose
  // inversion sets avoid Z.
  std::map<std::vector<int>, std::vector<int>> seen;  // matrix -> word
  std::deque<WeylElement> queue;
  WeylElement id = WeylElement::identity(n);
  seen[id.matrix()] = {};
  queue.push_back(id);
  std::vector<WeylElement> out = {id};
  std::vector<std::vector<int>> words = {{}};
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    std::vector<int> word = seen[w.matrix()];
    for (int i = 0; i < n; ++i) {
      std::vector<int> pulled = w.act_inverse(rs.simple_root_omega(i));
      auto cls = rs.classify_root(pulled);
      if (!cls) throw std::logic_error("group action does not permute the roots");
      if (cls->second < 0) continue;           // descent: already visited territory
      if (zset.count(cls->first)) continue;    // would acquire an inversion in Z
      WeylElement next = gens[i] * w;
      std::vector<int> nword = word;
      nword.insert(nword.begin(), i);
      if (seen.emplace(next.matrix(), nword).second) {
        if (seen.size() > cap)
          throw std::length_error("coset representative enumeration exceeded cap " +
                                  std::to_string(cap) + " (at least " +
                                  std::to_string(seen.size()) + " elements)");
        queue.push_back(next);
        out.push_back(next);
        words.push_back(nword);
      }
    }
  }
  std::vector<std::size_t> order(out.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (words[a].size() != words[b].size()) return words[a].size() < words[b].size();
    return words[a] < words[b];
  });
  std::vector<WeylElement> sorted;
  sorted.reserve(out.size());
  for (std::size_t k : order) sorted.push_back(out[k]);
  return sorted;
}

std::size_t reflection_subgroup_order(const RootSystem& rs, const std::vector<int>& roots,
                                      std::size_t cap) {
  std::vector<WeylElement> gens;
  gens.reserve(roots.size());
  for (int r : roots) gens.push_back(WeylElement::root_reflection(rs, r));
  std::set<std::vector<int>> seen;
  std::deque<WeylElement> queue;
  WeylElement id = WeylElement::identity(rs.rank());
  seen.insert(id.matrix());
  queue.push_back(id);
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      WeylElement next = g * w;
      if (seen.insert(next.matrix()).second) {
        if (seen.size() > cap)
          throw std::length_error("reflection subgroup enumeration exceeded cap " +
                                  std::to_string(cap));
        queue.push_back(next);
      }
    }
  }
  return seen.size();
}

}  // namespace hecke
