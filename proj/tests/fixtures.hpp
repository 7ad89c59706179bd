#pragma once

#include <utility>
#include <vector>

#include "cayconn/cayley.hpp"
#include "cayconn/genset.hpp"

namespace testing_fixtures {

inline cayconn::GeneratingGraph cycle_generators(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(1, n);
  return cayconn::build_generating_graph(n, e, n == 3);
}

inline cayconn::GeneratingGraph path_generators(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return cayconn::build_generating_graph(n, e);
}

inline cayconn::GeneratingGraph star_generators(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 2; i <= n; ++i) e.emplace_back(1, i);
  return cayconn::build_generating_graph(n, e);
}

// 4-cycle on positions 1..4 plus the pendant path 4-5-...-n.
inline cayconn::GeneratingGraph ug_generators(int n) {
  std::vector<std::pair<int, int>> e{{1, 2}, {2, 3}, {3, 4}, {1, 4}};
  for (int i = 4; i < n; ++i) e.emplace_back(i, i + 1);
  return cayconn::build_generating_graph(n, e);
}

inline cayconn::CayleyGraph mb(int n) { return cayconn::CayleyGraph::build(cycle_generators(n)); }
inline cayconn::CayleyGraph bubble(int n) { return cayconn::CayleyGraph::build(path_generators(n)); }
inline cayconn::CayleyGraph star(int n) { return cayconn::CayleyGraph::build(star_generators(n)); }
inline cayconn::CayleyGraph ug(int n) { return cayconn::CayleyGraph::build(ug_generators(n)); }

inline cayconn::Vertex v_of(const cayconn::CayleyGraph& g, const char* p) {
  return g.vertex(cayconn::Permutation::parse(p));
}

}  // namespace testing_fixtures
