#pragma once

#include <optional>
#include <span>

#include "k5mf/embedding.hpp"
#include "k5mf/graph.hpp"

namespace k5mf {

// Planar rotation system for any graph (connected or not), or nullopt.
std::optional<Rotation> planar_rotation(const Graph& g);

bool planar(const Graph& g);

// Embedding of a connected graph; nullopt when g is not planar.
// Throws EmbeddingError(Disconnected) for disconnected input.
std::optional<PlaneEmbedding> is_planar(const Graph& g);

// Embedding of a connected graph in which all of `on_one_face` lie on a common
// face, designated as the outer face. nullopt if no such embedding exists.
std::optional<PlaneEmbedding> embed_with_common_face(const Graph& g,
                                                     std::span<const Vertex> on_one_face);

}  // namespace k5mf
