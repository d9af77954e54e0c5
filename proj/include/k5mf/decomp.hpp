#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "k5mf/configs.hpp"
#include "k5mf/graph.hpp"

namespace k5mf {

class DecompError : public std::runtime_error {
 public:
  enum class Kind { InputHasMinor, BudgetExceeded, PreconditionViolated };
  DecompError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Five disjoint vertex sets, each inducing a connected subgraph, pairwise
// joined by an edge.
struct MinorCertificate {
  std::vector<std::vector<Vertex>> branch_sets;
};

// nullopt when the certificate is valid for g, otherwise the reason.
std::optional<std::string> check_minor_certificate(const Graph& g, const MinorCertificate& c);

inline constexpr std::uint64_t kDefaultMinorBudget = 10'000'000;

struct MinorStats {
  std::uint64_t nodes = 0;
};

// Exact K5-minor test. Splits along separations of size <= 3 (Wagner's
// structure), answers 3-connected pieces by planarity or V8, then shrinks the
// graph edge by edge to extract branch sets. nullopt means no K5 minor.
// Throws DecompError(BudgetExceeded) once more than `budget` nodes are used.
std::optional<MinorCertificate> has_k5_minor(const Graph& g,
                                             std::uint64_t budget = kDefaultMinorBudget,
                                             MinorStats* stats = nullptr);

// The decision alone, without a certificate.
bool contains_k5_minor(const Graph& g, std::uint64_t budget = kDefaultMinorBudget);

// Isomorphic to V8: an 8-cycle plus its four diameters.
bool is_wagner(const Graph& g);

// Adds non-edges while the graph stays K5-minor-free. Throws
// DecompError(InputHasMinor) when g already has a K5 minor.
Graph edge_maximalize(const Graph& g, std::uint64_t budget = kDefaultMinorBudget);

struct TreeDecomposition {
  enum class Tag { Planar, Wagner };
  struct Bag {
    std::vector<Vertex> vertices;  // ascending
    Tag tag = Tag::Planar;
  };
  std::vector<Bag> bags;
  std::vector<std::pair<int, int>> tree_edges;
  Graph maximal;  // the edge-maximalized graph the bags were cut from

  std::vector<Vertex> separator(std::size_t tree_edge) const;
};

const char* to_string(TreeDecomposition::Tag t);

// Edge-maximalizes g and splits it on clique separators of size <= 3,
// smallest first. Throws DecompError(InputHasMinor).
TreeDecomposition tree_decompose(const Graph& g, std::uint64_t budget = kDefaultMinorBudget);

// Checks (T1)-(T3), that T is a tree, that separators are cliques of size
// <= 3 in td.maximal, that every bag is planar or V8 as tagged, that the bags
// recompose td.maximal, and that g is a spanning subgraph of it.
std::optional<std::string> validate_decomposition(const Graph& g, const TreeDecomposition& td);

// "BAG <id> <tag> : v..." per bag, then "SEP <a> <b> : v..." per tree edge.
std::string serialize(const TreeDecomposition& td);

// Which disjunct of the degree trichotomies holds.
enum class Disjunct { MinDegree, LightEdge, Configuration, AltCycle, Alternator, FailsAll };

const char* to_string(Disjunct d);

struct Verdict {
  Disjunct disjunct = Disjunct::FailsAll;  // first disjunct found, in order
  std::string witness;  // the light edge, matched configuration, cycle, ...
  std::optional<ConfigMatch> config;
  // Every cheap disjunct that holds (degree and light-edge checks are always
  // evaluated), plus the searched one when it decided the verdict.
  std::vector<Disjunct> holding;

  bool holds(Disjunct d) const;
};

// An unavoidable configuration inside one part: the whole component when it
// is planar (Y = one vertex), else each side of a decomposition separator
// with Y = the separator vertices it touches and their mutual edges removed.
// Degrees are those of g. Requires g K5-minor-free.
std::optional<ConfigMatch> find_configuration(const Graph& g,
                                              std::uint64_t budget = kDefaultMinorBudget);

// delta <= 3 | some edge with d(u) + d(v) <= Delta + 2 | a configuration of
// find_lemma31_configs found in a part of the decomposition. Requires Delta >= 8.
Verdict check_trichotomy_L42(const Graph& g, std::uint64_t budget = kDefaultMinorBudget);

// delta <= 1 | 2-alternating cycle or 3-alternator | some edge with
// d(u) + d(v) <= Delta + 1. Requires Delta >= 12.
Verdict check_trichotomy_L43(const Graph& g);

}  // namespace k5mf
