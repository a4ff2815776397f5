#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hecke/root_system.hpp"
#include "hecke/weight.hpp"
#include "hecke/weyl.hpp"

namespace hecke {

// One orbit point wt, labeled by its minimal coset representative and by
// J = R(w) cap P(t), positive-root indices relative to the base weight.
struct GraphVertex {
  WeylElement rep;
  std::vector<int> word;
  Weight weight;
  std::vector<int> J;
};

struct GraphEdge {
  int a = 0, b = 0;  // vertex indices, a < b
  int i = 0;         // simple index
};

// Orbit graph of a weight: vertices are the orbit points, and s_i joins wt to
// s_i wt unless the value (wt)(X^{alpha_i}) is 1 (same point, no edge) or
// q^{+-2} (the connecting operator degenerates). Components are computed both
// by edge BFS and by grouping on J; the two partitions must agree, and
// partition_match records the comparison outcome.
struct CalibrationGraph {
  Weight base;
  ZeroPoleSets zp;  // of the base weight
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;
  std::vector<std::vector<int>> components;  // BFS partition, each sorted, by least vertex
  bool partition_match = false;
};

CalibrationGraph build_calibration_graph(const Weight& t, std::size_t cap = kDefaultWeylCap);

// The J-grouping of the graph's vertices: one shape per distinct J, ordered
// by (|J|, lex).
struct PlacedShape {
  std::vector<int> J;                       // positive-root indices
  std::vector<std::size_t> vertex_indices;  // ascending
};

std::vector<PlacedShape> placed_shapes(const CalibrationGraph& g);

// All w with R(w) cap Z(t) empty and R(w) cap P(t) = J, in (length, word lex)
// order. J must be a subset of P(t).
struct TableauSet {
  Weight weight;
  std::vector<int> J;
  std::vector<WeylElement> elements;
  std::vector<std::vector<int>> words;
};

TableauSet tableaux(const Weight& t, const std::vector<int>& J,
                    std::size_t cap = kDefaultWeylCap);

std::string graph_to_dot(const CalibrationGraph& g);

}  // namespace hecke
