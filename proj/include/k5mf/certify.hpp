#pragma once

#include <optional>
#include <span>
#include <string>

#include "k5mf/configs.hpp"
#include "k5mf/embedding.hpp"
#include "k5mf/graph.hpp"

namespace k5mf::certify {

// Clause-by-clause replays of the certificates produced by the configs
// module. They recompute faces, weakness and neighbour types from the face
// list alone. Each returns std::nullopt when the certificate holds, or a
// short description of the first clause that fails.

std::optional<std::string> check_config(const PlaneEmbedding& emb, std::span<const Vertex> Y,
                                        const DegreeContext& ctx, const ConfigMatch& m);

std::optional<std::string> check_alternating_cycle(const Graph& g, const AlternatingCycle& c);

std::optional<std::string> check_alternator(const Graph& g, std::span<const Vertex> Y,
                                            const Alternator& a);

// Total assignment over the dependent set U = U_G \ U_Y.
std::optional<std::string> check_masters(const Graph& g, std::span<const Vertex> Y,
                                         const MasterAssignment& m);

}  // namespace k5mf::certify
