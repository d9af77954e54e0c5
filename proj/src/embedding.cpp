#include "k5mf/embedding.hpp"

#include <algorithm>

namespace k5mf {

std::vector<Vertex> Face::walk() const {
  std::vector<Vertex> w;
  w.reserve(boundary.size());
  for (const auto& d : boundary) w.push_back(d.tail);
  return w;
}

namespace {

void check_rotation(const Graph& g, const Rotation& rotation) {
  if (static_cast<int>(rotation.size()) != g.vertex_count())
    throw EmbeddingError(EmbeddingError::Kind::InvalidRotation,
                         "rotation covers " + std::to_string(rotation.size()) +
                             " vertices, graph has " + std::to_string(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Vertex> sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    auto nb = g.neighbors(v);
    if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end()))
      throw EmbeddingError(EmbeddingError::Kind::InvalidRotation,
                           "rotation at vertex " + std::to_string(v) +
                               " is not a permutation of its neighbours");
  }
}

}  // namespace

std::vector<Face> trace_faces(const Graph& g, const Rotation& rotation) {
  check_rotation(g, rotation);
  const int n = g.vertex_count();
  std::vector<int> offset(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) offset[v + 1] = offset[v] + g.degree(v);
  // pos[v][sorted index of w] = index of w in rotation[v]
  std::vector<std::vector<int>> pos(n);
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    pos[v].resize(nb.size());
    for (int i = 0; i < static_cast<int>(rotation[v].size()); ++i) {
      auto k = std::lower_bound(nb.begin(), nb.end(), rotation[v][i]) - nb.begin();
      pos[v][k] = i;
    }
  }
  auto index_in = [&](Vertex v, Vertex w) {
    auto nb = g.neighbors(v);
    return pos[v][std::lower_bound(nb.begin(), nb.end(), w) - nb.begin()];
  };

  std::vector<char> used(offset[n], 0);
  std::vector<Face> faces;
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 0; i < g.degree(v); ++i) {
      if (used[offset[v] + i]) continue;
      Face f;
      f.id = static_cast<int>(faces.size());
      Vertex tail = v;
      Vertex head = rotation[v][i];
      int dart = offset[v] + i;
      while (!used[dart]) {
        used[dart] = 1;
        f.boundary.push_back({tail, head});
        int k = index_in(head, tail);
        const auto& r = rotation[head];
        Vertex next = r[(k + 1) % r.size()];
        tail = head;
        head = next;
        dart = offset[tail] + index_in(tail, head);
      }
      faces.push_back(std::move(f));
    }
  }
  if (g.edge_count() == 0 && n == 1) faces.push_back(Face{0, {}});
  return faces;
}

PlaneEmbedding::PlaneEmbedding(Graph graph, Rotation rotation, int outer_face)
    : graph_(std::move(graph)), rotation_(std::move(rotation)), outer_face_(outer_face) {
  if (!graph_.is_connected())
    throw EmbeddingError(EmbeddingError::Kind::Disconnected, "plane embedding needs a connected graph");
  faces_ = trace_faces(graph_, rotation_);
  const int n = graph_.vertex_count();
  if (n > 0 && n - graph_.edge_count() + face_count() != 2)
    throw EmbeddingError(EmbeddingError::Kind::NotPlane,
                         "rotation system is not planar (n - m + f = " +
                             std::to_string(n - graph_.edge_count() + face_count()) + ")");
  if (outer_face_ < 0 || (n > 0 && outer_face_ >= face_count()))
    throw EmbeddingError(EmbeddingError::Kind::InvalidRotation,
                         "outer face " + std::to_string(outer_face_) + " does not exist");

  dart_offset_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) dart_offset_[v + 1] = dart_offset_[v] + graph_.degree(v);
  rot_pos_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    auto nb = graph_.neighbors(v);
    rot_pos_[v].resize(nb.size());
    for (int i = 0; i < static_cast<int>(rotation_[v].size()); ++i) {
      auto k = std::lower_bound(nb.begin(), nb.end(), rotation_[v][i]) - nb.begin();
      rot_pos_[v][k] = i;
    }
  }
  dart_face_.assign(dart_offset_[n], -1);
  face_vertex_sets_.resize(faces_.size());
  for (const auto& f : faces_) {
    for (const auto& d : f.boundary) {
      dart_face_[dart_offset_[d.tail] + position(d.tail, d.head)] = f.id;
      face_vertex_sets_[f.id].push_back(d.tail);
    }
    auto& s = face_vertex_sets_[f.id];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  if (n == 1) face_vertex_sets_[0] = {0};
}

PlaneEmbedding PlaneEmbedding::with_outer_face(int face) const {
  PlaneEmbedding copy = *this;
  if (face < 0 || face >= face_count())
    throw EmbeddingError(EmbeddingError::Kind::InvalidRotation,
                         "outer face " + std::to_string(face) + " does not exist");
  copy.outer_face_ = face;
  return copy;
}

int PlaneEmbedding::position(Vertex u, Vertex v) const {
  auto nb = graph_.neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v)
    throw GraphError(GraphError::Kind::NotAnEdge,
                     "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  return rot_pos_[u][it - nb.begin()];
}

int PlaneEmbedding::face_of(Vertex u, Vertex v) const {
  return dart_face_[dart_offset_[u] + position(u, v)];
}

std::pair<int, int> PlaneEmbedding::faces_at_edge(Vertex u, Vertex v) const {
  return {face_of(u, v), face_of(v, u)};
}

bool PlaneEmbedding::is_triangle_face(Vertex a, Vertex b, Vertex c) const {
  if (!graph_.has_edge(a, b) || !graph_.has_edge(b, c) || !graph_.has_edge(a, c)) return false;
  for (int f : {face_of(a, b), face_of(b, a)}) {
    if (faces_[f].degree() != 3) continue;
    for (const auto& d : faces_[f].boundary)
      if (d.tail == c) return true;
  }
  return false;
}

bool PlaneEmbedding::on_face(Vertex v, int face) const {
  const auto& s = face_vertex_sets_[face];
  return std::binary_search(s.begin(), s.end(), v);
}

std::vector<Vertex> PlaneEmbedding::face_vertices(int face) const {
  return face_vertex_sets_[face];
}

std::vector<int> PlaneEmbedding::faces_around(Vertex v) const {
  std::vector<int> out;
  out.reserve(rotation_[v].size());
  for (Vertex w : rotation_[v]) out.push_back(face_of(v, w));
  return out;
}

Vertex PlaneEmbedding::successor(Vertex v, Vertex w) const {
  const auto& r = rotation_[v];
  return r[(position(v, w) + 1) % r.size()];
}

Vertex PlaneEmbedding::predecessor(Vertex v, Vertex w) const {
  const auto& r = rotation_[v];
  return r[(position(v, w) + r.size() - 1) % r.size()];
}

bool is_triangulation(const PlaneEmbedding& emb) {
  if (emb.face_count() == 0) return false;
  return std::all_of(emb.faces().begin(), emb.faces().end(),
                     [](const Face& f) { return f.degree() == 3; });
}

}  // namespace k5mf
