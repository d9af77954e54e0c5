#pragma once

#include <stdexcept>
#include <vector>

#include "k5mf/embedding.hpp"
#include "k5mf/graph.hpp"
#include "k5mf/planarity.hpp"

namespace k5mf::fixtures {

inline Graph complete(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return build_graph(n, es);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> es;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
  return build_graph(a + b, es);
}

inline Graph cycle(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back(normalized(i, (i + 1) % n));
  return build_graph(n, es);
}

inline Graph path(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return build_graph(n, es);
}

inline Graph star(int leaves) {
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return build_graph(leaves + 1, es);
}

// Hub 0, rim 1..k.
inline Graph wheel(int k) {
  std::vector<Edge> es;
  for (int i = 1; i <= k; ++i) {
    es.emplace_back(0, i);
    es.push_back(normalized(i, i % k + 1));
  }
  return build_graph(k + 1, es);
}

// 0 and 5 are the poles, 1-2-3-4 the equator.
inline Graph octahedron() {
  return build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {1, 4},
                         {1, 5}, {2, 5}, {3, 5}, {4, 5}});
}

inline Graph cube() {
  return build_graph(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7},
                         {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

inline Graph icosahedron() {
  // top 0, upper ring 1..5, lower ring 6..10, bottom 11
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    int a = 1 + i, b = 1 + (i + 1) % 5;
    int c = 6 + i, d = 6 + (i + 1) % 5;
    es.emplace_back(0, a);
    es.push_back(normalized(a, b));
    es.push_back(normalized(c, d));
    es.emplace_back(c, 11);
    es.push_back(normalized(a, c));
    es.push_back(normalized(b, c));
  }
  return build_graph(12, es);
}

inline Graph wagner() {
  std::vector<Edge> es;
  for (int i = 0; i < 8; ++i) es.push_back(normalized(i, (i + 1) % 8));
  for (int i = 0; i < 4; ++i) es.emplace_back(i, i + 4);
  return build_graph(8, es);
}

inline Graph petersen() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.push_back(normalized(i, (i + 1) % 5));
    es.emplace_back(i, i + 5);
    es.push_back(normalized(5 + i, 5 + (i + 2) % 5));
  }
  return build_graph(10, es);
}

inline PlaneEmbedding embed(const Graph& g) {
  auto e = is_planar(g);
  if (!e) throw std::logic_error("fixture is not planar");
  return *e;
}

}  // namespace k5mf::fixtures
