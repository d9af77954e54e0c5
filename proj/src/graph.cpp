#include "k5mf/graph.hpp"

#include <algorithm>
#include <queue>

namespace k5mf {

Graph::Graph(int n) : adj_(n), edge_id_(n) {}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_index(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return -1;
  const auto& a = adj_[u];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it == a.end() || *it != v) return -1;
  return edge_id_[u][it - a.begin()];
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

int Graph::min_degree() const {
  if (adj_.empty()) return 0;
  int d = static_cast<int>(adj_[0].size());
  for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(adj_.size());
  for (std::size_t v = 0; v < adj_.size(); ++v) d[v] = static_cast<int>(adj_[v].size());
  return d;
}

bool Graph::is_connected() const {
  const int n = vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
    }
  }
  return count == n;
}

void Graph::rebuild_edge_list() {
  edges_.clear();
  const int n = vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    std::sort(adj_[u].begin(), adj_[u].end());
    for (Vertex v : adj_[u])
      if (u < v) edges_.emplace_back(u, v);
  }
  edge_id_.assign(n, {});
  for (Vertex u = 0; u < n; ++u) edge_id_[u].resize(adj_[u].size());
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    auto [u, v] = edges_[i];
    auto pos_v = std::lower_bound(adj_[u].begin(), adj_[u].end(), v) - adj_[u].begin();
    auto pos_u = std::lower_bound(adj_[v].begin(), adj_[v].end(), u) - adj_[v].begin();
    edge_id_[u][pos_v] = i;
    edge_id_[v][pos_u] = i;
  }
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  std::vector<Edge> keep;
  keep.reserve(edges_.size());
  std::vector<Edge> drop(removed.begin(), removed.end());
  for (auto& e : drop) e = normalized(e.first, e.second);
  std::sort(drop.begin(), drop.end());
  for (const auto& e : edges_)
    if (!std::binary_search(drop.begin(), drop.end(), e)) keep.push_back(e);
  return build_graph(vertex_count(), keep);
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  std::vector<Edge> all = edges_;
  all.push_back(normalized(u, v));
  return build_graph(vertex_count(), all);
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> index(vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) index[keep[i]] = i;
  std::vector<Edge> es;
  for (const auto& [u, v] : edges_)
    if (index[u] >= 0 && index[v] >= 0) es.push_back(normalized(index[u], index[v]));
  return build_graph(static_cast<int>(keep.size()), es);
}

Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError(GraphError::Kind::VertexOutOfRange, "negative vertex count");
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw GraphError(GraphError::Kind::VertexOutOfRange,
                       "edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") out of range for n=" + std::to_string(n));
    if (u == v)
      throw GraphError(GraphError::Kind::LoopEdge, "loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& a = g.adj_[v];
    std::sort(a.begin(), a.end());
    auto dup = std::adjacent_find(a.begin(), a.end());
    if (dup != a.end())
      throw GraphError(GraphError::Kind::DuplicateEdge,
                       "duplicate edge (" + std::to_string(v) + "," + std::to_string(*dup) + ")");
  }
  g.rebuild_edge_list();
  return g;
}

}  // namespace k5mf
