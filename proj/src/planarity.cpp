#include "k5mf/planarity.hpp"

#include <algorithm>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

namespace k5mf {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

}  // namespace

std::optional<Rotation> planar_rotation(const Graph& g) {
  const int n = g.vertex_count();
  if (g.edge_count() > 3 * n - 6 && n >= 3) return std::nullopt;
  BoostGraph bg(n);
  for (const auto& [u, v] : g.edges()) boost::add_edge(u, v, bg);
  auto edge_index = boost::get(boost::edge_index, bg);
  int k = 0;
  boost::graph_traits<BoostGraph>::edge_iterator ei, ee;
  for (boost::tie(ei, ee) = boost::edges(bg); ei != ee; ++ei) boost::put(edge_index, *ei, k++);

  std::vector<std::vector<BoostEdge>> storage(n);
  using EmbeddingMap = boost::iterator_property_map<
      std::vector<std::vector<BoostEdge>>::iterator,
      boost::property_map<BoostGraph, boost::vertex_index_t>::type>;
  EmbeddingMap emb(storage.begin(), boost::get(boost::vertex_index, bg));
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                           boost::boyer_myrvold_params::embedding = emb))
    return std::nullopt;

  Rotation rot(n);
  for (Vertex v = 0; v < n; ++v) {
    for (const auto& e : storage[v]) {
      int s = static_cast<int>(boost::source(e, bg));
      int t = static_cast<int>(boost::target(e, bg));
      rot[v].push_back(s == v ? t : s);
    }
  }
  return rot;
}

bool planar(const Graph& g) { return planar_rotation(g).has_value(); }

std::optional<PlaneEmbedding> is_planar(const Graph& g) {
  if (!g.is_connected())
    throw EmbeddingError(EmbeddingError::Kind::Disconnected, "is_planar needs a connected graph");
  auto rot = planar_rotation(g);
  if (!rot) return std::nullopt;
  return PlaneEmbedding(g, std::move(*rot), 0);
}

std::optional<PlaneEmbedding> embed_with_common_face(const Graph& g,
                                                     std::span<const Vertex> on_one_face) {
  if (!g.is_connected())
    throw EmbeddingError(EmbeddingError::Kind::Disconnected, "embedding needs a connected graph");
  if (on_one_face.empty()) return is_planar(g);
  const int n = g.vertex_count();
  // An apex joined to the required vertices; its faces merge into one face
  // containing all of them once the apex is removed.
  std::vector<Edge> es = g.edges();
  for (Vertex y : on_one_face) es.emplace_back(y, n);
  Graph apexed = build_graph(n + 1, es);
  auto rot = planar_rotation(apexed);
  if (!rot) return std::nullopt;
  Rotation base(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : (*rot)[v])
      if (w != n) base[v].push_back(w);
  PlaneEmbedding emb(g, std::move(base), 0);
  for (int f = 0; f < emb.face_count(); ++f) {
    bool all = std::all_of(on_one_face.begin(), on_one_face.end(),
                           [&](Vertex y) { return emb.on_face(y, f); });
    if (all) return emb.with_outer_face(f);
  }
  return std::nullopt;
}

}  // namespace k5mf
