#include "k5mf/classify.hpp"

namespace k5mf {

const char* to_string(NeighborTag tag) {
  switch (tag) {
    case NeighborTag::Weak: return "weak";
    case NeighborTag::Semiweak: return "semiweak";
    case NeighborTag::E2: return "E2";
    case NeighborTag::E3: return "E3";
    case NeighborTag::E4: return "E4";
    case NeighborTag::S2: return "S2";
    case NeighborTag::S3: return "S3";
    case NeighborTag::S4: return "S4";
    case NeighborTag::None: return "none";
  }
  return "?";
}

bool is_weak_neighbor(const PlaneEmbedding& emb, Vertex u, Vertex v) {
  auto [f, g] = emb.faces_at_edge(u, v);
  return emb.face_degree(f) == 3 && emb.face_degree(g) == 3;
}

bool is_semiweak_neighbor(const PlaneEmbedding& emb, Vertex u, Vertex v) {
  auto [f, g] = emb.faces_at_edge(u, v);
  int a = emb.face_degree(f), b = emb.face_degree(g);
  return (a == 3 && b == 4) || (a == 4 && b == 3);
}

namespace {

void require(bool ok, const char* what, Vertex u, Vertex v) {
  if (!ok)
    throw ClassifyError(std::string(what) + " (u=" + std::to_string(u) +
                        ", v=" + std::to_string(v) + ")");
}

// Neighbours of v other than u, ascending.
std::vector<Vertex> others(const PlaneEmbedding& emb, Vertex v, Vertex u) {
  std::vector<Vertex> out;
  for (Vertex w : emb.graph().neighbors(v))
    if (w != u) out.push_back(w);
  return out;
}

NeighborKind match_E(const PlaneEmbedding& emb, Vertex u, Vertex v, std::span<const int> d) {
  const auto nb = others(emb, v, u);
  auto tri = [&](Vertex a, Vertex b, Vertex c) { return emb.is_triangle_face(a, b, c); };

  for (Vertex u1 : nb) {
    if (d[u1] != 6 || !tri(u, v, u1)) continue;
    for (Vertex u2 : nb)
      if (u2 != u1 && d[u2] == 6 && tri(u1, v, u2)) return {NeighborTag::E2, {u1, u2}};
  }
  for (Vertex u1 : nb) {
    if (d[u1] != 7) continue;
    for (Vertex u2 : nb) {
      if (u2 == u1 || d[u2] != 6 || !tri(u1, v, u2) || !tri(u2, v, u)) continue;
      for (Vertex u3 : nb)
        if (u3 != u1 && u3 != u2 && d[u3] == 6 && tri(u, v, u3))
          return {NeighborTag::E2, {u1, u2, u3}};
    }
  }
  for (Vertex u1 : nb)
    if (d[u1] == 7 && tri(u, v, u1)) return {NeighborTag::E3, {u1}};
  for (Vertex u1 : nb) {
    if (d[u1] != 8 || !tri(u, v, u1)) continue;
    for (Vertex u2 : nb)
      if (u2 > u1 && d[u2] == 8 && tri(u, v, u2)) return {NeighborTag::E4, {u1, u2}};
  }
  return {};
}

NeighborKind match_S(const PlaneEmbedding& emb, Vertex u, Vertex v, std::span<const int> d) {
  const auto nb = others(emb, v, u);
  auto tri = [&](Vertex a, Vertex b, Vertex c) { return emb.is_triangle_face(a, b, c); };

  for (Vertex u1 : nb) {
    if (d[u1] != 6 || !tri(u, v, u1)) continue;
    for (Vertex u2 : nb)
      if (u2 > u1 && d[u2] == 6 && tri(u, v, u2)) return {NeighborTag::S2, {u1, u2}};
  }
  // u1 and u4 flank uv; u2, u3 are the remaining neighbours in either order.
  for (Vertex u1 : nb) {
    if (!tri(u, v, u1)) continue;
    for (Vertex u2 : nb) {
      if (u2 == u1) continue;
      for (Vertex u3 : nb) {
        if (u3 == u1 || u3 == u2) continue;
        for (Vertex u4 : nb) {
          if (u4 == u1 || u4 == u2 || u4 == u3 || !tri(u, v, u4)) continue;
          bool a = d[u1] == 7 && d[u4] == 7 && d[u2] == 6 && d[u3] == 6 && tri(u1, v, u2) &&
                   tri(u2, v, u3) && tri(u3, v, u4);
          bool bc = d[u2] == 6 && d[u4] == 6 && (d[u1] == 7 || d[u3] == 7);
          if (a || bc) return {NeighborTag::S3, {u1, u2, u3, u4}};
        }
      }
    }
  }
  for (Vertex u1 : nb)
    if (d[u1] <= 7 && tri(u, v, u1)) return {NeighborTag::S4, {u1}};
  for (Vertex u1 : nb) {
    if (d[u1] != 7) continue;
    for (Vertex u2 : nb)
      if (u2 != u1 && d[u2] == 6) return {NeighborTag::S4, {u1, u2}};
  }
  return {};
}

}  // namespace

NeighborKind classify_E(const PlaneEmbedding& emb, Vertex u, Vertex v) {
  auto d = emb.graph().degrees();
  return classify_E(emb, u, v, d);
}

NeighborKind classify_E(const PlaneEmbedding& emb, Vertex u, Vertex v,
                        std::span<const int> degree) {
  require(degree[u] == 8, "classify_E: d(u) must be 8", u, v);
  require(degree[v] == 5, "classify_E: d(v) must be 5", u, v);
  require(is_weak_neighbor(emb, u, v), "classify_E: v must be a weak neighbour of u", u, v);
  return match_E(emb, u, v, degree);
}

NeighborKind classify_S(const PlaneEmbedding& emb, Vertex u, Vertex v) {
  auto d = emb.graph().degrees();
  return classify_S(emb, u, v, d);
}

NeighborKind classify_S(const PlaneEmbedding& emb, Vertex u, Vertex v,
                        std::span<const int> degree) {
  require(degree[u] == 7, "classify_S: d(u) must be 7", u, v);
  require(degree[v] == 5, "classify_S: d(v) must be 5", u, v);
  require(is_weak_neighbor(emb, u, v), "classify_S: v must be a weak neighbour of u", u, v);
  return match_S(emb, u, v, degree);
}

NeighborKind special_type(const PlaneEmbedding& emb, Vertex u, Vertex v,
                          std::span<const int> degree) {
  if (degree[v] != 5 || !is_weak_neighbor(emb, u, v)) return {};
  if (degree[u] == 8) return match_E(emb, u, v, degree);
  if (degree[u] == 7) return match_S(emb, u, v, degree);
  return {};
}

}  // namespace k5mf
