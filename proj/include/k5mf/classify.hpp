#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "k5mf/embedding.hpp"

namespace k5mf {

// Neighbour types around a vertex u of a plane graph. E-types describe a
// weak 5-neighbour v of an 8-vertex u, S-types a weak 5-neighbour of a
// 7-vertex, distinguished by the degrees of the vertices sharing 3-faces
// with v.
enum class NeighborTag { Weak, Semiweak, E2, E3, E4, S2, S3, S4, None };

const char* to_string(NeighborTag tag);

struct NeighborKind {
  NeighborTag tag = NeighborTag::None;
  // The vertices u1, u2, ... bound by the matched definition, in role order.
  std::vector<Vertex> witness;
};

class ClassifyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Degree lookups go through `degree`, which lets callers classify inside a
// sub-embedding while keeping the degrees of an ambient graph. The overloads
// without it use degrees in the embedding itself.
bool is_weak_neighbor(const PlaneEmbedding& emb, Vertex u, Vertex v);
bool is_semiweak_neighbor(const PlaneEmbedding& emb, Vertex u, Vertex v);

NeighborKind classify_E(const PlaneEmbedding& emb, Vertex u, Vertex v);
NeighborKind classify_E(const PlaneEmbedding& emb, Vertex u, Vertex v,
                        std::span<const int> degree);
NeighborKind classify_S(const PlaneEmbedding& emb, Vertex u, Vertex v);
NeighborKind classify_S(const PlaneEmbedding& emb, Vertex u, Vertex v,
                        std::span<const int> degree);

// E- or S-type of v with respect to u when the preconditions of either hold,
// otherwise None. Never throws for edges.
NeighborKind special_type(const PlaneEmbedding& emb, Vertex u, Vertex v,
                          std::span<const int> degree);

}  // namespace k5mf
