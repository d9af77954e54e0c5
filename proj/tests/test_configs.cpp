#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "k5mf/certify.hpp"
#include "k5mf/configs.hpp"

using namespace k5mf;
namespace fx = k5mf::fixtures;

namespace {

std::vector<Vertex> ids(std::initializer_list<Vertex> v) { return v; }

// u = 0 and w = 2 of degree 3 on a 4-cycle, with Y = {1} on the outer face.
PlaneEmbedding c1_example() {
  Graph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {2, 4}});
  std::vector<Vertex> y{1};
  return *embed_with_common_face(g, y);
}

// Two 3-vertices u = 0, w = 1 adjacent to u1, u2, u3 = 2, 3, 4, each of
// degree 11 through nine pendants.
Graph alternator_example() {
  std::vector<Edge> es;
  for (Vertex hub = 2; hub <= 4; ++hub) {
    es.emplace_back(0, hub);
    es.emplace_back(1, hub);
  }
  int next = 5;
  for (Vertex hub = 2; hub <= 4; ++hub)
    for (int i = 0; i < 9; ++i) es.emplace_back(hub, next++);
  return build_graph(next, es);
}

}  // namespace

TEST(RemovalSet, Validation) {
  PlaneEmbedding e = c1_example();
  EXPECT_NO_THROW(check_removal_set(e, ids({1})));
  EXPECT_THROW(check_removal_set(e, ids({})), ConfigError);
  EXPECT_THROW(check_removal_set(e, ids({0, 1})), ConfigError);
  EXPECT_THROW(check_removal_set(e, ids({1, 1})), ConfigError);
  EXPECT_THROW(check_removal_set(e, ids({0, 2, 1, 3})), ConfigError);
  PlaneEmbedding oct = fx::embed(fx::octahedron());
  // adjacent pair
  EXPECT_THROW(check_removal_set(oct, ids({1, 5})), ConfigError);
  // a vertex off the outer face
  int f0 = oct.outer_face();
  for (Vertex v = 0; v < 6; ++v)
    if (!oct.on_face(v, f0)) EXPECT_THROW(check_removal_set(oct, ids({v})), ConfigError);
}

TEST(Configs, C1OnFourCycle) {
  PlaneEmbedding e = c1_example();
  auto ms = find_lemma31_configs(e, ids({1}), 100);
  ASSERT_EQ(ms.size(), 3u);
  EXPECT_EQ(ms[0].kind, ConfigKind::C1);
  EXPECT_EQ(ms[0].vertices(), ids({0, 1, 2, 3}));
  EXPECT_EQ(ms[1].vertices(), ids({0, 1, 2, 4}));
  EXPECT_EQ(ms[2].vertices(), ids({0, 3, 2, 4}));
  auto ctx = DegreeContext::of(e.graph());
  for (const auto& m : ms) EXPECT_EQ(certify::check_config(e, ids({1}), ctx, m), std::nullopt);
  EXPECT_EQ(ms[0].at("w"), 2);
  EXPECT_THROW(ms[0].at("u7"), std::out_of_range);
}

TEST(Configs, CubeHasOnlyC1) {
  // Every vertex of the cube has degree 3 and sits on 4-cycles, so the
  // cycle clause matches; nothing of type (2.x) since the maximum degree is 3.
  PlaneEmbedding e = fx::embed(fx::cube());
  Vertex y = e.face_vertices(e.outer_face())[0];
  auto ms = find_lemma31_configs(e, ids({y}), 1000);
  EXPECT_FALSE(ms.empty());
  for (const auto& m : ms) EXPECT_EQ(m.kind, ConfigKind::C1);
}

TEST(Configs, LimitMonotone) {
  PlaneEmbedding e = c1_example();
  auto all = find_lemma31_configs(e, ids({1}), 100);
  for (std::size_t k = 0; k <= all.size(); ++k) {
    auto part = find_lemma31_configs(e, ids({1}), k);
    ASSERT_EQ(part.size(), k);
    EXPECT_TRUE(std::equal(part.begin(), part.end(), all.begin()));
  }
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(Configs, C21OnStackedWheelHub) {
  // wheel W8 around 0, rim 1..8, plus 9 stacked in (0,1,2) and 10 in (0,5,6)
  std::vector<Edge> es;
  for (int i = 1; i <= 8; ++i) {
    es.emplace_back(0, i);
    es.push_back(normalized(i, i % 8 + 1));
  }
  es.push_back({0, 9});
  es.push_back({1, 9});
  es.push_back({2, 9});
  es.push_back({0, 10});
  es.push_back({5, 10});
  es.push_back({6, 10});
  Graph g = build_graph(11, es);
  std::vector<Vertex> y{3};
  auto e = *embed_with_common_face(g, y);
  // d(0) = 10 here: too large, so no (2.x) match. Use a degree table that
  // reports 8 for the hub to exercise the matcher.
  DegreeContext ctx = DegreeContext::of(g);
  ctx.degree[0] = 8;
  ctx.max_degree = 8;
  auto ms = find_lemma31_configs(e, y, ctx, 1000);
  bool found = false;
  for (const auto& m : ms) {
    EXPECT_EQ(certify::check_config(e, y, ctx, m), std::nullopt) << to_string(m.kind);
    if (m.kind == ConfigKind::C2_1 && m.at("v") == 0 && m.at("u1") == 9 && m.at("u2") == 10)
      found = true;
  }
  EXPECT_TRUE(found);
}

TEST(Certify, RejectsTamperedMatch) {
  PlaneEmbedding e = c1_example();
  auto ctx = DegreeContext::of(e.graph());
  ConfigMatch bad{ConfigKind::C1, {{"u", 0}, {"v", 1}, {"w", 3}, {"x", 2}}};
  EXPECT_NE(certify::check_config(e, ids({1}), ctx, bad), std::nullopt);
  ConfigMatch in_y{ConfigKind::C1, {{"u", 1}, {"v", 0}, {"w", 3}, {"x", 2}}};
  EXPECT_NE(certify::check_config(e, ids({1}), ctx, in_y), std::nullopt);
}

TEST(AltCycles, C4) {
  auto cs = find_2alt_cycles(fx::cycle(4));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].vertices, ids({0, 1, 2, 3}));
}

TEST(AltCycles, HexagonWithApex) {
  Graph g = build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 6}, {2, 6}, {4, 6}});
  auto cs = find_2alt_cycles(g);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].vertices, ids({0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(certify::check_alternating_cycle(g, cs[0]), std::nullopt);
}

TEST(AltCycles, TreesHaveNone) {
  EXPECT_TRUE(find_2alt_cycles(fx::path(6)).empty());
  EXPECT_TRUE(find_2alt_cycles(fx::star(5)).empty());
}

TEST(AltCycles, K23) {
  auto cs = find_2alt_cycles(fx::complete_bipartite(2, 3));
  ASSERT_EQ(cs.size(), 3u);
  for (const auto& c : cs) {
    EXPECT_EQ(c.vertices.size(), 4u);
    EXPECT_EQ(certify::check_alternating_cycle(fx::complete_bipartite(2, 3), c), std::nullopt);
  }
}

TEST(AltCycles, LongCycleWithChordIsNotMinimal) {
  // octagon with degree-2 vertices at odd positions and a connector chord
  // 0 - 8 - 4 splitting it into two 6-cycles
  Graph g = build_graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7},
                            {0, 8}, {4, 8}});
  auto cs = find_2alt_cycles(g);
  ASSERT_EQ(cs.size(), 2u);
  for (const auto& c : cs) EXPECT_EQ(c.vertices.size(), 6u);
}

TEST(Alternator, PaddedExample) {
  Graph g = alternator_example();
  auto a = find_3alternator(g, {});
  ASSERT_TRUE(a);
  EXPECT_EQ(a->U, ids({0, 1}));
  EXPECT_EQ(a->W, ids({2, 3, 4}));
  EXPECT_EQ(a->F.size(), 6u);
  EXPECT_EQ(certify::check_alternator(g, {}, *a), std::nullopt);
}

TEST(Alternator, Absent) {
  EXPECT_FALSE(find_3alternator(fx::path(4), {}));
  EXPECT_FALSE(find_3alternator(fx::complete(4), {}));
  // hubs of degree 12 break the two-neighbour clause
  std::vector<Edge> es;
  for (Vertex hub = 2; hub <= 4; ++hub) {
    es.emplace_back(0, hub);
    es.emplace_back(1, hub);
  }
  int next = 5;
  for (Vertex hub = 2; hub <= 4; ++hub)
    for (int i = 0; i < 10; ++i) es.emplace_back(hub, next++);
  EXPECT_FALSE(find_3alternator(build_graph(next, es), {}));
}

TEST(Alternator, YNeighboursExcluded) {
  Graph g = alternator_example();
  // with a hub in Y, the 3-vertices touch Y and cannot be in U
  EXPECT_FALSE(find_3alternator(g, ids({2})));
}

TEST(Masters, PrivateNeighbours) {
  // octahedron hubs 0..5, each with a pendant 6..11
  std::vector<Edge> es = fx::octahedron().edges();
  for (int i = 0; i < 6; ++i) es.emplace_back(i, 6 + i);
  Graph g = build_graph(12, es);
  auto r = assign_masters(g, {});
  ASSERT_TRUE(std::holds_alternative<MasterAssignment>(r));
  const auto& m = std::get<MasterAssignment>(r);
  ASSERT_EQ(m.pairs.size(), 6u);
  for (int i = 0; i < 6; ++i) EXPECT_EQ(m.master_of(6 + i), i);
  EXPECT_EQ(m.master_of(0), std::nullopt);
  EXPECT_EQ(certify::check_masters(g, {}, m), std::nullopt);
}

TEST(Masters, StallsIntoAlternator) {
  Graph g = alternator_example();
  auto r = assign_masters(g, {});
  ASSERT_TRUE(std::holds_alternative<Alternator>(r));
  const auto& a = std::get<Alternator>(r);
  EXPECT_EQ(a.U, ids({0, 1}));
  EXPECT_EQ(certify::check_alternator(g, {}, a), std::nullopt);
}

TEST(Masters, EmptyU) {
  Graph g = fx::complete(5);
  auto r = assign_masters(g, ids({0}));
  ASSERT_TRUE(std::holds_alternative<MasterAssignment>(r));
  EXPECT_TRUE(std::get<MasterAssignment>(r).pairs.empty());
}

TEST(Masters, DependentsOnlyTouchingYAreSkipped) {
  // 3 has all neighbours in Y = {0, 1}
  Graph g = build_graph(5, {{0, 3}, {1, 3}, {0, 2}, {2, 4}, {1, 4}});
  auto U = dependent_candidates(g, ids({0, 1}));
  EXPECT_EQ(U, ids({2, 4}));
}
