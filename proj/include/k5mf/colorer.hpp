#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "k5mf/graph.hpp"

namespace k5mf {

// Lists and colourings are indexed like g.edges().
using ColorList = std::vector<int>;

struct ListAssignment {
  std::vector<ColorList> lists;
  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;
};

using EdgeColoring = std::vector<int>;

class ColorError : public std::runtime_error {
 public:
  enum class Kind { PreconditionViolated, TooLargeForExhaustive, SizeMismatch };
  ColorError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Proper and drawn from the lists.
bool validate_coloring(const Graph& g, const ListAssignment& L, const EdgeColoring& c);

struct ExactStats {
  std::uint64_t nodes = 0;
};

// Backtracking over the edge with the fewest remaining colours (ties by edge
// index), colours ascending, with forward checking. nullopt means Unsat.
std::optional<EdgeColoring> exact_list_color(const Graph& g, const ListAssignment& L,
                                             ExactStats* stats = nullptr);

// Smallest edge (in edges() order) with d(u) + d(v) <= bound.
std::optional<Edge> find_light_edge(const Graph& g, int bound);

enum class ColorMode { DeltaPlusOne, Delta };

enum class StepKind { LightEdge, Config, AltCycle, Alternator, Fallback };

const char* to_string(StepKind k);

// One deletion G_i -> G_i - removed, in the order the reductions were found.
struct Reduction {
  StepKind kind = StepKind::LightEdge;
  std::vector<Edge> removed;
  std::string detail;  // configuration kind and binding, cycle, ...
};

// Reductions depend only on the graph, so one plan serves every list
// assignment of that graph.
struct ReductionPlan {
  int base_delta = 0;
  ColorMode mode = ColorMode::DeltaPlusOne;
  std::vector<Reduction> reductions;
  std::vector<Edge> base_edges;  // edges left after the last reduction
};

ReductionPlan plan_reductions(const Graph& g, ColorMode mode);

// One extension step, applied in order when replaying: each listed edge
// receives the listed colour. A Fallback step recolours all of G_i.
struct TraceStep {
  StepKind kind = StepKind::LightEdge;
  std::vector<Edge> removed;
  std::string method;  // "greedy", "even-cycle", "local-search", "exact"
  std::vector<std::pair<Edge, int>> assigned;
};

struct ReductionTrace {
  std::vector<std::pair<Edge, int>> base;
  std::vector<TraceStep> steps;
  int fallbacks = 0;
};

struct ColorOutcome {
  std::optional<EdgeColoring> coloring;
  ReductionTrace trace;
};

// Throws ColorError(PreconditionViolated) when the lists or maximum degree
// do not meet the mode's requirements.
ColorOutcome structured_color(const Graph& g, const ListAssignment& L, ColorMode mode);
ColorOutcome structured_color(const Graph& g, const ListAssignment& L, const ReductionPlan& plan);

// Same, without the mode preconditions (for exercising reductions outside the
// supported degree range).
ColorOutcome structured_color_unchecked(const Graph& g, const ListAssignment& L,
                                        const ReductionPlan& plan);

EdgeColoring replay_trace(const Graph& g, const ReductionTrace& trace);

enum class ListStrategy { UniformRandom, Clustered, ExhaustiveSmall };

const char* to_string(ListStrategy s);

// uniform-random: k-subsets of {1..k+3}; clustered: lists built around a
// per-vertex core so adjacent edges share most colours; exhaustive-small:
// every assignment of k-subsets of {1..k+2}, one per colour-permutation
// class (m <= 6, otherwise TooLargeForExhaustive). `count` is ignored for
// the exhaustive strategy.
std::vector<ListAssignment> adversarial_lists(const Graph& g, int k, ListStrategy strategy,
                                              std::uint64_t seed, int count);

}  // namespace k5mf
