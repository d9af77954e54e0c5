#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace k5mf {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
 public:
  enum class Kind { LoopEdge, DuplicateEdge, VertexOutOfRange, NotAnEdge };

  GraphError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Simple undirected graph on vertices 0..n-1. Adjacency lists are kept
// sorted ascending; edges() lists every edge once as (u, v) with u < v in
// lexicographic order, and edge_index() maps back into that list.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  const std::vector<Edge>& edges() const { return edges_; }
  // Index of edge {u, v} in edges(); -1 when absent.
  int edge_index(Vertex u, Vertex v) const;

  int max_degree() const;
  int min_degree() const;
  std::vector<int> degrees() const;
  bool is_connected() const;

  // Returns a copy with the listed edges removed (missing edges ignored).
  Graph without_edges(std::span<const Edge> removed) const;
  Graph with_edge(Vertex u, Vertex v) const;
  // Subgraph induced by `keep`; vertex i of the result is keep[i].
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  friend Graph build_graph(int n, std::span<const Edge> edges);
  void rebuild_edge_list();

  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
  // edge_id_[v][i] is the index of edge {v, adj_[v][i]} in edges_.
  std::vector<std::vector<int>> edge_id_;
};

Graph build_graph(int n, std::span<const Edge> edges);
inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Edge normalized(Vertex u, Vertex v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

}  // namespace k5mf
