#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "k5mf/colorer.hpp"
#include "k5mf/embedding.hpp"
#include "k5mf/graph.hpp"
#include "k5mf/rng.hpp"

namespace k5mf {

class GenError : public std::runtime_error {
 public:
  enum class Kind { BadParameter, SearchFailed };
  GenError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Random plane triangulation: K4, then vertices inserted into random faces,
// then random diagonal flips. Outer face is face 0. n >= 4.
PlaneEmbedding gen_triangulation(int n, std::uint64_t seed);

// Inserts a new vertex into the triangular face with boundary darts
// (a,b), (b,c), (c,a) of `rot` and returns its id.
Vertex stack_vertex(Rotation& rot, Vertex a, Vertex b, Vertex c);

// Flips edge ab; returns false when the flip would break simplicity or drop
// a degree below 3.
bool flip_edge(Rotation& rot, Vertex a, Vertex b);

Graph graph_of(const Rotation& rot);

// Icosahedron hubs 0..11 with satellites 12..23 stacked into twelve faces
// chosen so every hub ends at degree 8. The outer face contains vertex 12.
PlaneEmbedding gen_hub_satellite(int target_delta = 8);

// Faces of a triangulation (each used at most once) covering every vertex v
// exactly need[v] times. `order` fixes the branching order over faces.
std::optional<std::vector<int>> satellite_faces(const PlaneEmbedding& emb,
                                                const std::vector<int>& need,
                                                const std::vector<int>& order);

// Another instance of the same family: a random base triangulation with all
// degrees in 4..8 (or the icosahedron with a random face selection), each
// base vertex topped up to degree 8 by stacked 3-vertices, vertices randomly
// relabelled and a random outer face.
PlaneEmbedding gen_hub_satellite_variant(std::uint64_t seed);

struct K5mfOptions {
  int part_min = 4;
  int part_max = 9;
  int wagner_percent = 10;
  int delete_percent = 15;
  // Chance (percent) that the next part is glued at a clique through the
  // current maximum-degree vertex.
  int hub_percent = 0;
};

// Clique-sum over cliques of size <= 3 (kept) of random planar parts and
// occasional Wagner parts, with random non-glue edges removed. Connected.
Graph gen_k5mf(int n, std::uint64_t seed, const K5mfOptions& options = {});

Graph wagner_graph();

// Builds a graph part by part; exposed for tests.
class CliqueSumBuilder {
 public:
  explicit CliqueSumBuilder(Graph first);
  // Glues `part` by identifying part vertex part_clique[i] with graph vertex
  // clique[i]; both must be cliques of the same size <= 3. Returns the new
  // ids of the part's vertices.
  std::vector<Vertex> glue(const Graph& part, const std::vector<Vertex>& part_clique,
                           const std::vector<Vertex>& clique);
  const Graph& graph() const { return g_; }

 private:
  Graph g_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int offset, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", offset " + std::to_string(offset) +
                           ": " + what),
        line_(line),
        offset_(offset) {}
  int line() const { return line_; }
  int offset() const { return offset_; }

 private:
  int line_;
  int offset_;
};

std::string write_graph6(const Graph& g);
Graph read_graph6(const std::string& s);

// "u v" per line; '#' starts a comment. The writer emits "# n <count>" first so
// isolated vertices survive; without it n is the largest id plus one.
std::string write_edgelist(const Graph& g);
Graph read_edgelist(std::istream& in);

// "n m", then "v: w1 ... wd" per vertex in rotation order, then
// "outer: v1 ... vk" with the outer face walk.
std::string write_rotfmt(const PlaneEmbedding& emb);
PlaneEmbedding read_rotfmt(std::istream& in);

// "m k", then "u v : c1 ... cj" per edge in edges() order.
std::string write_lists(const Graph& g, const ListAssignment& L, int k);
// Reads lists for g; lines may come in any edge order.
ListAssignment read_lists(const Graph& g, std::istream& in, int* k = nullptr);

// "u v = c" per edge.
std::string write_coloring(const Graph& g, const EdgeColoring& c);
EdgeColoring read_coloring(const Graph& g, std::istream& in);

enum class GraphFormat { Graph6, Edgelist, Rotfmt };

// Reads any graph format; rotfmt input yields its graph.
Graph read_graph_any(std::istream& in, GraphFormat format);

}  // namespace k5mf
