#include "hecke/calibration.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

CalibrationGraph build_calibration_graph(const Weight& t, std::size_t cap) {
  const RootSystem& rs = t.root_system();
  CalibrationGraph g{t, zero_pole_sets(t), {}, {}, {}, false};

  std::vector<OrbitEntry> orbit = weight_orbit(t, cap);
  std::map<Weight, int> index;
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    std::vector<int> inv = inversion_set(rs, orbit[k].rep);
    g.vertices.push_back({orbit[k].rep, orbit[k].word, orbit[k].weight,
                          sorted_intersection(inv, g.zp.pole)});
    index.emplace(orbit[k].weight, static_cast<int>(k));
  }

  const FieldElem one = FieldElem::one();
  const FieldElem q2 = q_power(t.context(), 2);
  const FieldElem qm2 = q_power(t.context(), -2);
  std::set<std::tuple<int, int, int>> edge_set;
  for (std::size_t a = 0; a < g.vertices.size(); ++a) {
    for (int i = 0; i < rs.rank(); ++i) {
      FieldElem v = g.vertices[a].weight.simple_root_value(i);
      if (v == one) continue;  // s_i fixes this point
      if (v == q2 || v == qm2) continue;
      int b = index.at(g.vertices[a].weight.reflected(i));
      edge_set.emplace(std::min<int>(a, b), std::max<int>(a, b), i);
    }
  }
  for (const auto& [a, b, i] : edge_set) g.edges.push_back({a, b, i});

  // BFS components, discovered from the least unvisited vertex.
  std::vector<std::vector<int>> adjacency(g.vertices.size());
  for (const GraphEdge& e : g.edges) {
    adjacency[e.a].push_back(e.b);
    adjacency[e.b].push_back(e.a);
  }
  std::vector<bool> visited(g.vertices.size(), false);
  for (std::size_t start = 0; start < g.vertices.size(); ++start) {
    if (visited[start]) continue;
    std::vector<int> comp;
    std::deque<int> queue{static_cast<int>(start)};
    visited[start] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (int u : adjacency[v])
        if (!visited[u]) {
          visited[u] = true;
          queue.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    g.components.push_back(std::move(comp));
  }

  // Independent partition by J; the two must coincide.
  std::map<std::vector<int>, std::vector<int>> by_j;
  for (std::size_t k = 0; k < g.vertices.size(); ++k)
    by_j[g.vertices[k].J].push_back(static_cast<int>(k));
  std::set<std::vector<int>> lhs(g.components.begin(), g.components.end());
  std::set<std::vector<int>> rhs;
  for (auto& [j, members] : by_j) rhs.insert(members);
  g.partition_match = lhs == rhs;
  return g;
}

std::vector<PlacedShape> placed_shapes(const CalibrationGraph& g) {
  std::map<std::vector<int>, std::vector<std::size_t>> by_j;
  for (std::size_t k = 0; k < g.vertices.size(); ++k) by_j[g.vertices[k].J].push_back(k);
  std::vector<PlacedShape> out;
  for (auto& [j, members] : by_j) out.push_back({j, std::move(members)});
  std::sort(out.begin(), out.end(), [](const PlacedShape& x, const PlacedShape& y) {
    if (x.J.size() != y.J.size()) return x.J.size() < y.J.size();
    return x.J < y.J;
  });
  return out;
}

TableauSet tableaux(const Weight& t, const std::vector<int>& J, std::size_t cap) {
  const RootSystem& rs = t.root_system();
  ZeroPoleSets zp = zero_pole_sets(t);
  std::vector<int> js = J;
  std::sort(js.begin(), js.end());
  js.erase(std::unique(js.begin(), js.end()), js.end());
  for (int r : js) {
    if (!std::binary_search(zp.pole.begin(), zp.pole.end(), r))
      throw std::invalid_argument("shape component " + rs.root_name(r) +
                                  " is not a pole root of the weight");
  }
  TableauSet f{t, js, {}, {}};
  for (const WeylElement& w : min_coset_reps(rs, zp.zero, cap)) {
    if (sorted_intersection(inversion_set(rs, w), zp.pole) != js) continue;
    f.words.push_back(reduced_word(rs, w));
    f.elements.push_back(w);
  }
  return f;
}

std::string graph_to_dot(const CalibrationGraph& g) {
  const RootSystem& rs = g.base.root_system();
  std::ostringstream os;
  os << "graph calibration {\n";
  os << "  node [shape=box];\n";
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    os << "  v" << k << " [label=\"" << word_to_string(g.vertices[k].word) << " | {";
    for (std::size_t j = 0; j < g.vertices[k].J.size(); ++j) {
      if (j) os << ",";
      os << rs.root_name(g.vertices[k].J[j]);
    }
    os << "}\"];\n";
  }
  for (const GraphEdge& e : g.edges)
    os << "  v" << e.a << " -- v" << e.b << " [label=\"" << (e.i + 1) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace hecke
