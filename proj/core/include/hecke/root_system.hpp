#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);

// One positive root. simple[] are the coordinates in the simple-root basis,
// omega[] the coordinates in the fundamental-weight basis (equivalently the
// pairings with the simple coroots), coroot_pairing[j] = <omega_j, alpha^vee>.
struct Root {
  std::vector<int> simple;
  std::vector<int> omega;
  std::vector<int> coroot_pairing;
  int height = 0;
  bool long_root = true;
};

// Finite crystallographic root system of a given family and rank, with the
// Cartan matrix convention cartan[i][j] = <alpha_j, alpha_i^vee>, so the
// omega-coordinates of alpha_j form column j of the Cartan matrix.
//
// Weights are handled throughout in omega-coordinates (integer vectors of
// length rank); <lambda, alpha_i^vee> is then simply lambda[i].
class RootSystem {
 public:
  RootSystem(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string type_name() const;  // e.g. "A2"

  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  int cartan_entry(int i, int j) const { return cartan_[i][j]; }

  // Positive roots sorted by (height, simple coordinates lex).
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& root(int index) const { return positive_.at(index); }
  std::size_t positive_count() const { return positive_.size(); }

  // Minimal positive integer symmetrizer: d[i]*cartan[i][j] == d[j]*cartan[j][i].
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }

  // Order of the braid factor for the pair (i, j), i != j: 2, 3, 4 or 6.
  int braid_order(int i, int j) const;

  // s_i acting on a weight in omega-coordinates: lambda - lambda[i]*alpha_i.
  std::vector<int> reflect_weight(int i, const std::vector<int>& lambda) const;

  std::vector<int> simple_root_omega(int i) const;
  int simple_root_index(int i) const;  // index of alpha_i within positive_roots()

  // Looks a vector up among the roots: (positive root index, sign), or nothing
  // when the vector is not a root. Input in omega-coordinates.
  std::optional<std::pair<int, int>> classify_root(const std::vector<int>& omega) const;

  // Positive roots lying in the span of alpha_i and alpha_j.
  std::vector<int> rank2_subsystem(int i, int j) const;

  // "a1", "a1+2a2", ... from simple-root coordinates (1-based display).
  std::string root_name(int index) const;

  std::size_t weyl_order() const;  // |W|, exact

 private:
  void build_cartan();
  void build_roots();
  void check_counts() const;

  Family family_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> symmetrizer_;
  std::vector<Root> positive_;
  std::map<std::vector<int>, int> by_omega_;  // positive roots only
};

}  // namespace hecke
