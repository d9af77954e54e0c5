#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

#include "fixtures.hpp"
#include "k5mf/decomp.hpp"
#include "k5mf/gen_io.hpp"
#include "k5mf/planarity.hpp"
#include "k5mf/rng.hpp"
#include "small_graphs.hpp"

using namespace k5mf;

TEST(Minor, K5GivesSingletons) {
  auto c = has_k5_minor(fixtures::complete(5));
  ASSERT_TRUE(c);
  for (const auto& b : c->branch_sets) EXPECT_EQ(b.size(), 1u);
  EXPECT_FALSE(check_minor_certificate(fixtures::complete(5), *c));
}

TEST(Minor, K33Absent) { EXPECT_FALSE(has_k5_minor(fixtures::complete_bipartite(3, 3))); }

TEST(Minor, PetersenCertificate) {
  auto g = fixtures::petersen();
  auto c = has_k5_minor(g);
  ASSERT_TRUE(c);
  EXPECT_EQ(check_minor_certificate(g, *c), std::nullopt);
}

TEST(Minor, CertificateChecker) {
  auto g = fixtures::complete(5);
  MinorCertificate bad{{{0}, {1}, {2}, {3}, {3}}};
  EXPECT_TRUE(check_minor_certificate(g, bad));
  MinorCertificate four{{{0}, {1}, {2}, {3}}};
  EXPECT_TRUE(check_minor_certificate(g, four));
  auto c6 = fixtures::cycle(6);
  MinorCertificate split{{{0, 3}, {1}, {2}, {4}, {5}}};
  EXPECT_TRUE(check_minor_certificate(c6, split));
}

TEST(Minor, BudgetExceededIsDistinct) {
  auto g = fixtures::petersen();
  try {
    has_k5_minor(g, 1);
    FAIL();
  } catch (const DecompError& e) {
    EXPECT_EQ(e.kind(), DecompError::Kind::BudgetExceeded);
  }
}

TEST(Minor, PlanarAndWagnerAbsent) {
  EXPECT_FALSE(has_k5_minor(fixtures::icosahedron()));
  EXPECT_FALSE(has_k5_minor(fixtures::wagner()));
  EXPECT_TRUE(has_k5_minor(fixtures::wagner().with_edge(0, 2)));
}

TEST(Wagner, Recognition) {
  EXPECT_TRUE(is_wagner(fixtures::wagner()));
  EXPECT_TRUE(is_wagner(wagner_graph()));
  EXPECT_FALSE(is_wagner(fixtures::cube()));
  EXPECT_FALSE(is_wagner(fixtures::cycle(8)));
  EXPECT_FALSE(is_wagner(fixtures::complete_bipartite(3, 3)));
}

TEST(Wagner, RelabelledStillRecognised) {
  auto w = fixtures::wagner();
  std::vector<int> p{5, 2, 7, 0, 3, 6, 1, 4};
  std::vector<Edge> es;
  for (auto [u, v] : w.edges()) es.push_back(normalized(p[u], p[v]));
  EXPECT_TRUE(is_wagner(build_graph(8, es)));
}

using namespace k5mf::small_graphs;

TEST(Minor, AgreesWithDeleteContractOnAllConnectedGraphsUpTo7) {
  auto classes = connected_classes(7);
  const std::vector<std::size_t> known{0, 1, 1, 2, 6, 21, 112, 853};
  BruteMinor brute;
  int with_minor = 0;
  for (int n = 1; n <= 7; ++n) {
    ASSERT_EQ(classes[n].size(), known[n]) << n;
    for (Mask m : classes[n]) {
      Graph g = to_graph(n, m);
      auto c = has_k5_minor(g);
      ASSERT_EQ(c.has_value(), brute.has(n, m)) << n << " " << m;
      if (c) {
        ++with_minor;
        EXPECT_EQ(check_minor_certificate(g, *c), std::nullopt);
      }
    }
  }
  EXPECT_GT(with_minor, 0);
}

namespace {

// Every assignment of vertices to five labelled sets or to none.
bool brute_branch_sets(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(n, 5);
  std::function<bool(int, int)> rec = [&](int v, int used) -> bool {
    if (v == n) {
      if (used < 5) return false;
      MinorCertificate c;
      c.branch_sets.resize(5);
      for (int u = 0; u < n; ++u)
        if (label[u] < 5) c.branch_sets[label[u]].push_back(u);
      return !check_minor_certificate(g, c);
    }
    if (n - v < 5 - used) return false;
    for (int l = 0; l <= std::min(used, 4); ++l) {
      label[v] = l;
      if (rec(v + 1, std::max(used, l + 1))) return true;
    }
    label[v] = 5;
    return rec(v + 1, used);
  };
  return rec(0, 0);
}

}  // namespace

TEST(Minor, AgreesWithBranchSetEnumerationOnRandomGraphs) {
  SplitMix64 rng(42);
  int yes = 0, total = 0;
  for (int t = 0; t < 240; ++t) {
    const int n = 8 + t % 3;
    Graph g = t % 2 ? gen_k5mf(n, t, {.wagner_percent = 40, .delete_percent = 10 * (t % 4)})
                    : build_graph(n, {});
    if (t % 2 == 0) {
      std::vector<Edge> es;
      int m = 2 * n + static_cast<int>(rng.below(n));
      while (static_cast<int>(es.size()) < m) {
        Vertex u = static_cast<Vertex>(rng.below(n)), v = static_cast<Vertex>(rng.below(n));
        if (u != v && std::find(es.begin(), es.end(), normalized(u, v)) == es.end())
          es.push_back(normalized(u, v));
      }
      g = build_graph(n, es);
    } else if (rng.chance(1, 2)) {
      Vertex u = static_cast<Vertex>(rng.below(n)), v = static_cast<Vertex>(rng.below(n));
      if (u != v && !g.has_edge(u, v)) g = g.with_edge(u, v);
    }
    bool want = brute_branch_sets(g);
    auto c = has_k5_minor(g);
    ASSERT_EQ(c.has_value(), want) << t;
    if (c) EXPECT_EQ(check_minor_certificate(g, *c), std::nullopt);
    yes += want;
    ++total;
  }
  EXPECT_GT(yes, total / 5);
  EXPECT_LT(yes, total);
}

TEST(Minor, MoebiusLadders) {
  for (int k = 4; k <= 6; ++k) {
    std::vector<Edge> es;
    for (int i = 0; i < 2 * k; ++i) {
      es.push_back(normalized(i, (i + 1) % (2 * k)));
      if (i < k) es.emplace_back(i, i + k);
    }
    Graph g = build_graph(2 * k, es);
    EXPECT_EQ(has_k5_minor(g).has_value(), k > 4) << k;
  }
}

namespace {

void expect_maximal(const Graph& h) {
  EXPECT_FALSE(has_k5_minor(h));
  for (Vertex u = 0; u < h.vertex_count(); ++u)
    for (Vertex v = u + 1; v < h.vertex_count(); ++v)
      if (!h.has_edge(u, v)) EXPECT_TRUE(has_k5_minor(h.with_edge(u, v))) << u << " " << v;
}

}  // namespace

TEST(Maximalize, WagnerUnchanged) {
  EXPECT_EQ(edge_maximalize(fixtures::wagner()), fixtures::wagner());
}

TEST(Maximalize, TwoTriangles) {
  auto g = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  auto h = edge_maximalize(g);
  EXPECT_TRUE(h.is_connected());
  for (auto [u, v] : g.edges()) EXPECT_TRUE(h.has_edge(u, v));
  expect_maximal(h);
}

TEST(Maximalize, TriangulationKeepsEdges) {
  auto emb = gen_triangulation(14, 3);
  auto h = edge_maximalize(emb.graph());
  EXPECT_GE(h.edge_count(), emb.graph().edge_count());
  expect_maximal(h);
}

TEST(Maximalize, RandomK5mfGraphsAreMaximal) {
  for (int s = 0; s < 8; ++s) {
    auto g = gen_k5mf(10 + s, s);
    auto h = edge_maximalize(g);
    for (auto [u, v] : g.edges()) EXPECT_TRUE(h.has_edge(u, v));
    expect_maximal(h);
    // maximal K5-minor-free graphs have exactly 3n - 6 - (#V8 parts) edges at most
    EXPECT_LE(h.edge_count(), 3 * h.vertex_count() - 6);
  }
}

TEST(Maximalize, InputHasMinor) {
  try {
    edge_maximalize(fixtures::complete(5));
    FAIL();
  } catch (const DecompError& e) {
    EXPECT_EQ(e.kind(), DecompError::Kind::InputHasMinor);
  }
}

TEST(Decompose, PlanarSingleBag) {
  // triangulations without separating triangles are already edge-maximal
  for (const Graph& g : {fixtures::icosahedron(), fixtures::octahedron(), fixtures::complete(4)}) {
    auto td = tree_decompose(g);
    EXPECT_EQ(validate_decomposition(g, td), std::nullopt);
    ASSERT_EQ(td.bags.size(), 1u);
    EXPECT_EQ(td.bags[0].tag, TreeDecomposition::Tag::Planar);
  }
}

TEST(Decompose, WagnerSingleBag) {
  auto g = fixtures::wagner();
  auto td = tree_decompose(g);
  ASSERT_EQ(td.bags.size(), 1u);
  EXPECT_EQ(td.bags[0].tag, TreeDecomposition::Tag::Wagner);
  EXPECT_EQ(serialize(td), "BAG 0 wagner : 0 1 2 3 4 5 6 7\n");
}

TEST(Decompose, CubeSplitsOnlyOnCliques) {
  auto g = fixtures::cube();
  auto td = tree_decompose(g);
  EXPECT_EQ(validate_decomposition(g, td), std::nullopt);
  for (const auto& bag : td.bags) EXPECT_EQ(bag.tag, TreeDecomposition::Tag::Planar);
}

TEST(Decompose, TwoK4SharingTriangle) {
  auto g = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                           {4, 1}, {4, 2}, {4, 3}});
  auto td = tree_decompose(g);
  EXPECT_EQ(validate_decomposition(g, td), std::nullopt);
  ASSERT_EQ(td.bags.size(), 2u);
  EXPECT_EQ(td.separator(0), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(serialize(td),
            "BAG 0 planar : 0 1 2 3\nBAG 1 planar : 1 2 3 4\nSEP 0 1 : 1 2 3\n");
}

TEST(Decompose, WagnerPlusK4) {
  CliqueSumBuilder b(wagner_graph());
  b.glue(fixtures::complete(4), {0, 1}, {0, 1});
  Graph g = b.graph();
  auto td = tree_decompose(g);
  EXPECT_EQ(validate_decomposition(g, td), std::nullopt);
  int wagner = 0;
  for (const auto& bag : td.bags) wagner += bag.tag == TreeDecomposition::Tag::Wagner;
  EXPECT_EQ(wagner, 1);
}

TEST(Decompose, TwoV8SharingEdge) {
  CliqueSumBuilder b(wagner_graph());
  b.glue(wagner_graph(), {0, 1}, {2, 3});
  Graph g = b.graph();
  auto td = tree_decompose(g);
  EXPECT_EQ(validate_decomposition(g, td), std::nullopt);
  ASSERT_EQ(td.bags.size(), 2u);
  for (const auto& bag : td.bags) EXPECT_EQ(bag.tag, TreeDecomposition::Tag::Wagner);
  EXPECT_EQ(td.separator(0).size(), 2u);
}

TEST(Decompose, RandomK5mfValidates) {
  for (int s = 0; s < 25; ++s) {
    auto g = gen_k5mf(12 + s % 20, 900 + s, {.wagner_percent = 35});
    auto td = tree_decompose(g);
    EXPECT_EQ(validate_decomposition(g, td), std::nullopt) << s << "\n" << serialize(td);
  }
}

TEST(Decompose, ValidatorCatchesBrokenT3) {
  CliqueSumBuilder b(wagner_graph());
  b.glue(wagner_graph(), {0, 1}, {2, 3});
  Graph g = b.graph();
  auto td = tree_decompose(g);
  td.bags[1].vertices.erase(td.bags[1].vertices.begin());
  EXPECT_TRUE(validate_decomposition(g, td));
}

TEST(Trichotomy, StarMinDegree) {
  auto v = check_trichotomy_L42(fixtures::star(8));
  EXPECT_EQ(v.disjunct, Disjunct::MinDegree);
}

TEST(Trichotomy, StarAlsoHasLightEdge) {
  auto v = check_trichotomy_L42(fixtures::star(8));
  EXPECT_TRUE(v.holds(Disjunct::LightEdge));
}

TEST(Trichotomy, WheelLightEdge) {
  auto v = check_trichotomy_L42(fixtures::wheel(9));
  EXPECT_TRUE(v.holds(Disjunct::LightEdge));
  EXPECT_TRUE(v.holds(Disjunct::MinDegree));
  EXPECT_EQ(v.witness, "vertex 1 degree 3");
}

TEST(Trichotomy, HubSatelliteMinDegree) {
  auto v = check_trichotomy_L42(gen_hub_satellite().graph());
  EXPECT_EQ(v.disjunct, Disjunct::MinDegree);
}

TEST(Trichotomy, LowDeltaRejected) {
  try {
    check_trichotomy_L42(fixtures::icosahedron());
    FAIL();
  } catch (const DecompError& e) {
    EXPECT_EQ(e.kind(), DecompError::Kind::PreconditionViolated);
  }
  EXPECT_THROW(check_trichotomy_L43(fixtures::wheel(11)), DecompError);
}

TEST(Trichotomy, L43Disjuncts) {
  EXPECT_EQ(check_trichotomy_L43(fixtures::star(12)).disjunct, Disjunct::MinDegree);
  // W12: no 2-vertices, rim edges have sum 6
  auto v = check_trichotomy_L43(fixtures::wheel(12));
  EXPECT_TRUE(v.disjunct == Disjunct::LightEdge || v.disjunct == Disjunct::Alternator ||
              v.disjunct == Disjunct::AltCycle);
  EXPECT_NE(v.disjunct, Disjunct::FailsAll);
}

TEST(Trichotomy, RandomK5mfNeverFails) {
  for (int s = 0; s < 40; ++s) {
    auto g = gen_k5mf(20 + s % 15, 4000 + s, {.hub_percent = 60});
    if (g.max_degree() >= 8)
      EXPECT_NE(check_trichotomy_L42(g).disjunct, Disjunct::FailsAll) << s;
    if (g.max_degree() >= 12)
      EXPECT_NE(check_trichotomy_L43(g).disjunct, Disjunct::FailsAll) << s;
  }
}
