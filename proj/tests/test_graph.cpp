#include <gtest/gtest.h>

#include <numeric>

#include "fixtures.hpp"
#include "k5mf/embedding.hpp"
#include "k5mf/graph.hpp"
#include "k5mf/planarity.hpp"

using namespace k5mf;
namespace fx = k5mf::fixtures;

TEST(BuildGraph, Triangle) {
  Graph g = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(g.edge_count(), 3);
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_TRUE(g.has_edge(2, 0));
}

TEST(BuildGraph, Rejects) {
  auto kind_of = [](auto f) {
    try {
      f();
    } catch (const GraphError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no error";
    return GraphError::Kind::NotAnEdge;
  };
  EXPECT_EQ(kind_of([] { build_graph(4, {{0, 1}, {0, 1}}); }), GraphError::Kind::DuplicateEdge);
  EXPECT_EQ(kind_of([] { build_graph(4, {{0, 1}, {1, 0}}); }), GraphError::Kind::DuplicateEdge);
  EXPECT_EQ(kind_of([] { build_graph(3, {{2, 2}}); }), GraphError::Kind::LoopEdge);
  EXPECT_EQ(kind_of([] { build_graph(3, {{0, 3}}); }), GraphError::Kind::VertexOutOfRange);
  EXPECT_EQ(kind_of([] { build_graph(3, {{-1, 0}}); }), GraphError::Kind::VertexOutOfRange);
}

TEST(BuildGraph, OctahedronDegrees) {
  Graph g = fx::octahedron();
  EXPECT_EQ(g.edge_count(), 12);
  // count incidences straight from the edge list
  std::vector<int> d(6, 0);
  for (auto [u, v] : g.edges()) ++d[u], ++d[v];
  for (int x : d) EXPECT_EQ(x, 4);
  EXPECT_EQ(g.degrees(), d);
}

TEST(BuildGraph, EdgeIndexRoundTrip) {
  Graph g = fx::icosahedron();
  for (int i = 0; i < g.edge_count(); ++i) {
    auto [u, v] = g.edges()[i];
    EXPECT_EQ(g.edge_index(u, v), i);
    EXPECT_EQ(g.edge_index(v, u), i);
  }
  EXPECT_EQ(g.edge_index(0, 11), -1);
}

TEST(BuildGraph, InducedAndWithout) {
  Graph g = fx::complete(5);
  std::vector<Vertex> keep{1, 3, 4};
  Graph h = g.induced(keep);
  EXPECT_EQ(h.vertex_count(), 3);
  EXPECT_EQ(h.edge_count(), 3);
  std::vector<Edge> rm{{0, 1}, {2, 3}};
  Graph k = g.without_edges(rm);
  EXPECT_EQ(k.edge_count(), 8);
  EXPECT_FALSE(k.has_edge(1, 0));
  EXPECT_TRUE(k.with_edge(0, 1).has_edge(0, 1));
}

TEST(TraceFaces, Triangle) {
  Graph g = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  PlaneEmbedding e(g, {{1, 2}, {0, 2}, {0, 1}});
  ASSERT_EQ(e.face_count(), 2);
  for (const auto& f : e.faces()) EXPECT_EQ(f.degree(), 3);
  EXPECT_TRUE(is_triangulation(e));
}

TEST(TraceFaces, OctahedronAllTriangles) {
  PlaneEmbedding e = fx::embed(fx::octahedron());
  EXPECT_EQ(e.face_count(), 8);
  int sum = 0;
  for (const auto& f : e.faces()) {
    EXPECT_EQ(f.degree(), 3);
    sum += f.degree();
  }
  EXPECT_EQ(sum, 24);
  EXPECT_TRUE(is_triangulation(e));
}

TEST(TraceFaces, PathHasOneFace) {
  Graph g = fx::path(3);
  PlaneEmbedding e(g, {{1}, {0, 2}, {1}});
  ASSERT_EQ(e.face_count(), 1);
  EXPECT_EQ(e.faces()[0].degree(), 4);
}

TEST(TraceFaces, InvalidRotation) {
  Graph g = fx::path(3);
  try {
    trace_faces(g, {{1}, {0}, {1}});
    FAIL();
  } catch (const EmbeddingError& e) {
    EXPECT_EQ(e.kind(), EmbeddingError::Kind::InvalidRotation);
  }
  EXPECT_THROW(trace_faces(g, {{1}, {0, 0}, {1}}), EmbeddingError);
}

TEST(TraceFaces, CubeIsNotTriangulation) {
  PlaneEmbedding e = fx::embed(fx::cube());
  EXPECT_EQ(e.face_count(), 6);
  EXPECT_FALSE(is_triangulation(e));
}

TEST(TraceFaces, Deterministic) {
  Graph g = fx::icosahedron();
  auto rot = *planar_rotation(g);
  auto a = trace_faces(g, rot);
  auto b = trace_faces(g, rot);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].boundary, b[i].boundary);
}

TEST(PlaneEmbedding, RejectsDisconnectedAndNonPlane) {
  Graph two = build_graph(4, {{0, 1}, {2, 3}});
  try {
    PlaneEmbedding e(two, {{1}, {0}, {3}, {2}});
    FAIL();
  } catch (const EmbeddingError& e) {
    EXPECT_EQ(e.kind(), EmbeddingError::Kind::Disconnected);
  }
  // K4 with a rotation whose faces break Euler
  Graph k4 = fx::complete(4);
  try {
    PlaneEmbedding e(k4, {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
    FAIL();
  } catch (const EmbeddingError& e) {
    EXPECT_EQ(e.kind(), EmbeddingError::Kind::NotPlane);
  }
}

TEST(PlaneEmbedding, FacesAroundNonCutVertex) {
  PlaneEmbedding e = fx::embed(fx::icosahedron());
  for (Vertex v = 0; v < 12; ++v) {
    auto fs = e.faces_around(v);
    std::sort(fs.begin(), fs.end());
    EXPECT_EQ(std::unique(fs.begin(), fs.end()) - fs.begin(), 5);
  }
}

TEST(PlaneEmbedding, CutEdgeCountsTwice) {
  // triangle with a pendant
  Graph g = build_graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  PlaneEmbedding e = fx::embed(g);
  ASSERT_EQ(e.face_count(), 2);
  auto [f, h] = e.faces_at_edge(2, 3);
  EXPECT_EQ(f, h);
  EXPECT_EQ(e.face_degree(f), 5);
  EXPECT_THROW(e.face_of(0, 3), GraphError);
}

TEST(Planarity, Basics) {
  auto k4 = is_planar(fx::complete(4));
  ASSERT_TRUE(k4);
  EXPECT_EQ(k4->face_count(), 4);
  EXPECT_FALSE(is_planar(fx::complete(5)));
  EXPECT_FALSE(is_planar(fx::complete_bipartite(3, 3)));
  EXPECT_FALSE(planar(fx::wagner()));
  EXPECT_FALSE(planar(fx::petersen()));
  EXPECT_TRUE(planar(fx::cube()));
}

TEST(Planarity, CommonFace) {
  Graph g = fx::cube();
  std::vector<Vertex> y{0, 6};
  // 0 and 6 share no face in the cube's unique embedding
  EXPECT_FALSE(embed_with_common_face(g, y));
  std::vector<Vertex> y2{0, 2};
  auto e = embed_with_common_face(g, y2);
  ASSERT_TRUE(e);
  EXPECT_TRUE(e->on_face(0, e->outer_face()));
  EXPECT_TRUE(e->on_face(2, e->outer_face()));
}

TEST(Planarity, EulerOnRandomSubgraphs) {
  Graph ico = fx::icosahedron();
  for (int drop = 0; drop < ico.edge_count(); ++drop) {
    std::vector<Edge> rm{ico.edges()[drop]};
    Graph g = ico.without_edges(rm);
    auto e = is_planar(g);
    ASSERT_TRUE(e);
    EXPECT_EQ(g.vertex_count() - g.edge_count() + e->face_count(), 2);
    int sum = 0;
    for (const auto& f : e->faces()) sum += f.degree();
    EXPECT_EQ(sum, 2 * g.edge_count());
  }
}
