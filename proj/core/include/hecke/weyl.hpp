#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hecke/root_system.hpp"

namespace hecke {

// Enumeration guard for the element-listing operations. |W| grows fast; the
// E family in particular is rejected by the default cap rather than ground
// through. Override per call, or via HECKE_WEYL_CAP in the CLI.
inline constexpr std::size_t kDefaultWeylCap = 50000;

// Group element represented by its integer action matrix on weights in
// omega-coordinates (row-major). The matrix is the identity of the element:
// equality, ordering and hashing all go through it. The inverse matrix rides
// along so that inversion and inverse actions are O(1).
class WeylElement {
 public:
  static WeylElement identity(int n);
  static WeylElement simple_reflection(const RootSystem& rs, int i);
  // Reflection through an arbitrary positive root.
  static WeylElement root_reflection(const RootSystem& rs, int root_index);

  int dim() const { return n_; }
  const std::vector<int>& matrix() const { return mat_; }
  const std::vector<int>& inverse_matrix() const { return inv_; }

  std::vector<int> act(const std::vector<int>& lambda) const;
  std::vector<int> act_inverse(const std::vector<int>& lambda) const;

  WeylElement operator*(const WeylElement& o) const;  // composition: (this o)(x) = this(o(x))
  WeylElement inverse() const;

  bool is_identity() const;
  bool operator==(const WeylElement& o) const { return mat_ == o.mat_; }
  bool operator!=(const WeylElement& o) const { return mat_ != o.mat_; }
  bool operator<(const WeylElement& o) const { return mat_ < o.mat_; }

 private:
  WeylElement(int n, std::vector<int> mat, std::vector<int> inv)
      : n_(n), mat_(std::move(mat)), inv_(std::move(inv)) {}

  int n_ = 0;
  std::vector<int> mat_;
  std::vector<int> inv_;
};

// Indices of the positive roots sent to negative ones; its size is the length.
std::vector<int> inversion_set(const RootSystem& rs, const WeylElement& w);
std::size_t weyl_length(const RootSystem& rs, const WeylElement& w);

// Canonical reduced word (0-based simple indices), obtained by repeatedly
// stripping the smallest descent from the right. Deterministic.
std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w);

WeylElement from_word(const RootSystem& rs, const std::vector<int>& word);

// True iff length(w * s_i) = length(w) + 1, i.e. w(alpha_i) > 0.
bool is_right_ascent(const RootSystem& rs, const WeylElement& w, int i);

std::string word_to_string(const std::vector<int>& word);  // "1" or "s1*s2"

// The whole group, sorted by (length, canonical word lex). Throws
// std::length_error when more than cap elements appear, naming the partial
// count.
class WeylGroup {
 public:
  static WeylGroup enumerate(const RootSystem& rs, std::size_t cap = kDefaultWeylCap);

  std::size_t size() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& element(std::size_t k) const { return elements_[k]; }
  const std::vector<int>& word(std::size_t k) const { return words_[k]; }
  std::size_t index_of(const WeylElement& w) const;  // throws if absent
  std::vector<std::size_t> length_profile() const;   // count per length

 private:
  std::vector<WeylElement> elements_;
  std::vector<std::vector<int>> words_;
  std::map<std::vector<int>, std::size_t> index_;  // by action matrix
};

// All w with inversion set disjoint from Z (a set of positive-root indices):
// the minimal coset representatives for the reflection subgroup generated by
// Z. BFS prunes any branch as soon as it acquires an inversion in Z, so the
// cost scales with the answer, not with |W|.
std::vector<WeylElement> min_coset_reps(const RootSystem& rs, const std::vector<int>& zero_roots,
                                        std::size_t cap = kDefaultWeylCap);

// Order of the subgroup generated by reflections through the given roots.
std::size_t reflection_subgroup_order(const RootSystem& rs, const std::vector<int>& roots,
                                      std::size_t cap = kDefaultWeylCap);

}  // namespace hecke
