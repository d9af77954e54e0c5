#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "k5mf/embedding.hpp"
#include "k5mf/graph.hpp"

namespace k5mf {

// Unavoidable configurations for plane graphs with hypotheses
// d(v) >= 3 on H and d(u) + d(v) >= Delta + 3 on edges of H, where H = G - Y.
enum class ConfigKind { C1, C2_1, C2_2, C2_3, C2_4, C2_5, C2_6, C2_7, C2_8, C2_9 };

const char* to_string(ConfigKind kind);

struct ConfigMatch {
  ConfigKind kind = ConfigKind::C1;
  // Role name -> vertex, in the fixed role order of the kind:
  // C1: u v w x; C2_6: v u1 u2 u3 w; all others: v u1 ... uk.
  std::vector<std::pair<std::string, Vertex>> binding;

  Vertex at(const std::string& role) const;
  std::vector<Vertex> vertices() const;
  friend bool operator<(const ConfigMatch& a, const ConfigMatch& b);
  friend bool operator==(const ConfigMatch& a, const ConfigMatch& b) = default;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Degrees and maximum degree of the graph the configurations refer to. The
// search may run inside a sub-embedding of a larger graph; vertex ids of the
// sub-embedding index into `degree`.
struct DegreeContext {
  std::vector<int> degree;
  int max_degree = 0;

  static DegreeContext of(const Graph& g) { return {g.degrees(), g.max_degree()}; }
};

// Throws ConfigError unless Y is a valid removal set: 1 <= |Y| <= 3, pairwise
// nonadjacent, all on the outer face, and G - Y keeps an edge.
void check_removal_set(const PlaneEmbedding& emb, std::span<const Vertex> Y);

// Up to `limit` matches in canonical (kind, binding) order. Kinds C2_x are
// searched only when the maximum degree is exactly 8.
std::vector<ConfigMatch> find_lemma31_configs(const PlaneEmbedding& emb,
                                              std::span<const Vertex> Y,
                                              std::size_t limit);
std::vector<ConfigMatch> find_lemma31_configs(const PlaneEmbedding& emb,
                                              std::span<const Vertex> Y,
                                              const DegreeContext& ctx,
                                              std::size_t limit);

// Even cycle whose every second vertex has degree 2 in the ambient graph.
struct AlternatingCycle {
  std::vector<Vertex> vertices;
  friend auto operator<=>(const AlternatingCycle&, const AlternatingCycle&) = default;
};

// Minimal 2-alternating cycles: cycles of the multigraph obtained by turning
// every degree-2 vertex into an edge between its neighbours, chordless in that
// multigraph (4-cycles are always kept). Canonical form starts at the smallest
// vertex and walks towards its smaller cycle neighbour.
std::vector<AlternatingCycle> find_2alt_cycles(const Graph& g,
                                               std::size_t limit = 100000);

struct Alternator {
  std::vector<Vertex> U;
  std::vector<Vertex> W;
  std::vector<Edge> F;
};

std::optional<Alternator> find_3alternator(const Graph& g, std::span<const Vertex> Y);

struct MasterAssignment {
  // (dependent, master), ascending by dependent.
  std::vector<std::pair<Vertex, Vertex>> pairs;
  // The chosen edge set X*, normalized and sorted.
  std::vector<Edge> residual;

  std::optional<Vertex> master_of(Vertex u) const;
};

// Augmentation stalled on a set that is not a 3-alternator; only reachable
// when some low vertex has degree < 2, a neighbour in Y, or a low neighbour.
struct AssignmentBlocked {
  MasterAssignment partial;
  std::vector<Vertex> unassigned;
};

using MasterResult = std::variant<MasterAssignment, Alternator, AssignmentBlocked>;

// U: vertices of G - Y with degree <= 3 that have a neighbour outside Y.
std::vector<Vertex> dependent_candidates(const Graph& g, std::span<const Vertex> Y);

MasterResult assign_masters(const Graph& g, std::span<const Vertex> Y);

}  // namespace k5mf
