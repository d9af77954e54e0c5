#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "k5mf/graph.hpp"

namespace k5mf {

// Per-vertex cyclic order of neighbours.
using Rotation = std::vector<std::vector<Vertex>>;

struct Dart {
  Vertex tail;
  Vertex head;
  friend bool operator==(const Dart&, const Dart&) = default;
};

struct Face {
  int id = 0;
  std::vector<Dart> boundary;

  // Number of edge incidences; a cut-edge shows up twice.
  int degree() const { return static_cast<int>(boundary.size()); }
  // Boundary walk as the sequence of dart tails.
  std::vector<Vertex> walk() const;
};

class EmbeddingError : public std::runtime_error {
 public:
  enum class Kind { InvalidRotation, Disconnected, NotPlane };

  EmbeddingError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Traces the faces of a rotation system. From dart (u, v) the walk continues
// with (v, w) where w follows u in the rotation at v. Faces are numbered in
// discovery order, scanning vertices ascending and each rotation in order.
// Throws EmbeddingError(InvalidRotation) when a rotation is not a permutation
// of the vertex's adjacency.
std::vector<Face> trace_faces(const Graph& g, const Rotation& rotation);

// A connected graph with a planar rotation system and a designated outer face.
class PlaneEmbedding {
 public:
  PlaneEmbedding(Graph graph, Rotation rotation, int outer_face = 0);

  const Graph& graph() const { return graph_; }
  const Rotation& rotation() const { return rotation_; }
  const std::vector<Face>& faces() const { return faces_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int outer_face() const { return outer_face_; }
  int vertex_count() const { return graph_.vertex_count(); }
  int degree(Vertex v) const { return graph_.degree(v); }

  PlaneEmbedding with_outer_face(int face) const;

  // Face containing dart (u, v). Throws GraphError(NotAnEdge).
  int face_of(Vertex u, Vertex v) const;
  // Faces on the two sides of edge uv: (face_of(u,v), face_of(v,u)).
  std::pair<int, int> faces_at_edge(Vertex u, Vertex v) const;
  int face_degree(int face) const { return faces_[face].degree(); }

  // Whether a, b, c bound a face of degree 3.
  bool is_triangle_face(Vertex a, Vertex b, Vertex c) const;
  bool on_face(Vertex v, int face) const;
  // Distinct vertices on a face, ascending.
  std::vector<Vertex> face_vertices(int face) const;
  // Faces around v; entry i is the face between rotation[v][i-1] and
  // rotation[v][i] (the face of dart (v, rotation[v][i])).
  std::vector<int> faces_around(Vertex v) const;

  Vertex successor(Vertex v, Vertex w) const;
  Vertex predecessor(Vertex v, Vertex w) const;

 private:
  int position(Vertex u, Vertex v) const;

  Graph graph_;
  Rotation rotation_;
  std::vector<Face> faces_;
  int outer_face_ = 0;
  std::vector<int> dart_offset_;
  std::vector<int> dart_face_;
  // rot_pos_[u][i]: index in rotation_[u] of the i-th sorted neighbour.
  std::vector<std::vector<int>> rot_pos_;
  // face_vertex_sets_[f] sorted distinct vertices.
  std::vector<std::vector<Vertex>> face_vertex_sets_;
};

// True iff every face, the outer one included, has degree 3.
bool is_triangulation(const PlaneEmbedding& emb);

}  // namespace k5mf
