#include "k5mf/certify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace k5mf::certify {

namespace {

using Triple = std::array<Vertex, 3>;

Triple sorted3(Vertex a, Vertex b, Vertex c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

// Face data rebuilt from the face boundaries only.
struct FaceTable {
  std::set<Triple> triangles;
  std::map<std::pair<Vertex, Vertex>, int> dart_degree;

  explicit FaceTable(const PlaneEmbedding& emb) {
    for (const Face& f : emb.faces()) {
      for (const Dart& d : f.boundary) dart_degree[{d.tail, d.head}] = f.degree();
      if (f.degree() == 3) {
        const auto& b = f.boundary;
        triangles.insert(sorted3(b[0].tail, b[1].tail, b[2].tail));
      }
    }
  }
  bool tri(Vertex a, Vertex b, Vertex c) const {
    if (a == b || b == c || a == c) return false;
    return triangles.count(sorted3(a, b, c)) > 0;
  }
  std::pair<int, int> sides(Vertex u, Vertex v) const {
    return {dart_degree.at({u, v}), dart_degree.at({v, u})};
  }
  bool weak(Vertex u, Vertex v) const {
    auto [a, b] = sides(u, v);
    return a == 3 && b == 3;
  }
  bool semiweak(Vertex u, Vertex v) const {
    auto [a, b] = sides(u, v);
    return std::min(a, b) == 3 && std::max(a, b) == 4;
  }
};

struct Ctx {
  const Graph& g;
  const FaceTable& ft;
  const std::vector<int>& d;
};

std::vector<Vertex> nbrs_except(const Graph& g, Vertex v, Vertex u) {
  std::vector<Vertex> out;
  for (Vertex x : g.neighbors(v))
    if (x != u) out.push_back(x);
  return out;
}

bool e2(const Ctx& c, Vertex u, Vertex v) {
  auto nb = nbrs_except(c.g, v, u);
  for (Vertex a : nb)
    for (Vertex b : nb) {
      if (a == b) continue;
      if (c.d[a] == 6 && c.d[b] == 6 && c.ft.tri(u, v, a) && c.ft.tri(a, v, b)) return true;
      for (Vertex e : nb) {
        if (e == a || e == b) continue;
        if (c.d[a] == 7 && c.d[b] == 6 && c.d[e] == 6 && c.ft.tri(a, v, b) && c.ft.tri(b, v, u) &&
            c.ft.tri(u, v, e))
          return true;
      }
    }
  return false;
}

bool s2(const Ctx& c, Vertex u, Vertex v) {
  auto nb = nbrs_except(c.g, v, u);
  for (Vertex a : nb)
    for (Vertex b : nb)
      if (a != b && c.d[a] == 6 && c.d[b] == 6 && c.ft.tri(u, v, a) && c.ft.tri(u, v, b))
        return true;
  return false;
}

bool s3_pattern(const Ctx& c, Vertex u, Vertex v) {
  auto nb = nbrs_except(c.g, v, u);
  if (nb.size() != 4) return false;
  std::sort(nb.begin(), nb.end());
  do {
    Vertex u1 = nb[0], u2 = nb[1], u3 = nb[2], u4 = nb[3];
    if (!c.ft.tri(u, v, u1) || !c.ft.tri(u, v, u4)) continue;
    if (c.d[u1] == 7 && c.d[u4] == 7 && c.d[u2] == 6 && c.d[u3] == 6 && c.ft.tri(u1, v, u2) &&
        c.ft.tri(u2, v, u3) && c.ft.tri(u3, v, u4))
      return true;
    if (c.d[u2] == 6 && c.d[u4] == 6 && (c.d[u1] == 7 || c.d[u3] == 7)) return true;
  } while (std::next_permutation(nb.begin(), nb.end()));
  return false;
}

bool s4_pattern(const Ctx& c, Vertex u, Vertex v) {
  auto nb = nbrs_except(c.g, v, u);
  for (Vertex a : nb)
    if (c.d[a] <= 7 && c.ft.tri(u, v, a)) return true;
  for (Vertex a : nb)
    for (Vertex b : nb)
      if (a != b && c.d[a] == 7 && c.d[b] == 6) return true;
  return false;
}

// Type of u as a neighbour of the centre v, computed from scratch.
bool e2_neighbor(const Ctx& c, Vertex v, Vertex u) {
  return c.d[v] == 8 && c.d[u] == 5 && c.ft.weak(v, u) && e2(c, v, u);
}
bool s2_neighbor(const Ctx& c, Vertex v, Vertex u) {
  return c.d[v] == 7 && c.d[u] == 5 && c.ft.weak(v, u) && s2(c, v, u);
}
bool s3_neighbor(const Ctx& c, Vertex v, Vertex u) {
  return c.d[v] == 7 && c.d[u] == 5 && c.ft.weak(v, u) && !s2(c, v, u) && s3_pattern(c, v, u);
}
bool s4_neighbor(const Ctx& c, Vertex v, Vertex u) {
  return c.d[v] == 7 && c.d[u] == 5 && c.ft.weak(v, u) && !s2(c, v, u) &&
         !s3_pattern(c, v, u) && s4_pattern(c, v, u);
}

std::vector<std::string> role_names(ConfigKind k) {
  switch (k) {
    case ConfigKind::C1: return {"u", "v", "w", "x"};
    case ConfigKind::C2_1: return {"v", "u1", "u2", "u3"};
    case ConfigKind::C2_2: return {"v", "u1", "u2", "u3", "u4"};
    case ConfigKind::C2_3: return {"v", "u1", "u2", "u3", "u4"};
    case ConfigKind::C2_4: return {"v", "u1", "u2", "u3", "u4", "u5"};
    case ConfigKind::C2_5: return {"v", "u1", "u2", "u3", "u4"};
    case ConfigKind::C2_6: return {"v", "u1", "u2", "u3", "w"};
    case ConfigKind::C2_7: return {"v", "u1", "u2", "u3"};
    case ConfigKind::C2_8: return {"v", "u1", "u2", "u3"};
    case ConfigKind::C2_9: return {"v", "u1", "u2", "u3"};
  }
  return {};
}

}  // namespace

std::optional<std::string> check_config(const PlaneEmbedding& emb, std::span<const Vertex> Y,
                                        const DegreeContext& ctx, const ConfigMatch& m) {
  const Graph& g = emb.graph();
  const int n = g.vertex_count();
  FaceTable ft(emb);
  Ctx c{g, ft, ctx.degree};
  const auto& d = ctx.degree;
  auto in_h = [&](Vertex x) { return std::find(Y.begin(), Y.end(), x) == Y.end(); };

  auto names = role_names(m.kind);
  if (m.binding.size() != names.size()) return "wrong number of roles";
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (m.binding[i].first != names[i]) return "role " + names[i] + " missing or out of order";
    Vertex x = m.binding[i].second;
    if (x < 0 || x >= n) return "vertex out of range";
    vs.push_back(x);
  }
  {
    auto s = vs;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return "roles not distinct";
  }

  if (m.kind == ConfigKind::C1) {
    Vertex u = vs[0], v = vs[1], w = vs[2], x = vs[3];
    if (!in_h(u) || !in_h(w)) return "u or w not in H";
    if (d[u] != 3 || d[w] != 3) return "d(u) or d(w) is not 3";
    if (!g.has_edge(u, v) || !g.has_edge(v, w) || !g.has_edge(w, x) || !g.has_edge(x, u))
      return "(u,v,w,x) is not a cycle";
    return std::nullopt;
  }

  if (ctx.max_degree != 8) return "configurations (2.x) need maximum degree 8";
  Vertex v = vs[0];
  if (!in_h(v)) return "centre not in H";
  const std::size_t k = m.kind == ConfigKind::C2_6 ? 3 : vs.size() - 1;
  for (std::size_t i = 1; i <= k; ++i) {
    if (!in_h(vs[i])) return "u" + std::to_string(i) + " not in H";
    if (!g.has_edge(v, vs[i])) return "u" + std::to_string(i) + " not adjacent to v";
  }
  auto U = [&](int i) { return vs[i]; };
  auto weak = [&](int i) { return ft.weak(v, U(i)); };
  auto fail = [](const char* s) { return std::optional<std::string>(s); };

  switch (m.kind) {
    case ConfigKind::C2_1:
      if (d[v] != 8) return fail("d(v) != 8");
      if (!weak(1) || !weak(2) || d[U(1)] != 3 || d[U(2)] != 3) return fail("u1,u2 not weak 3-neighbours");
      if (d[U(3)] > 5) return fail("d(u3) > 5");
      break;
    case ConfigKind::C2_2:
      if (d[v] != 8) return fail("d(v) != 8");
      if (!weak(1) || d[U(1)] != 3) return fail("u1 not a weak 3-neighbour");
      if (!ft.semiweak(v, U(2)) || d[U(2)] != 3) return fail("u2 not a semiweak 3-neighbour");
      if (d[U(3)] > 5 || d[U(4)] > 5) return fail("d(u3) or d(u4) > 5");
      break;
    case ConfigKind::C2_3:
      if (d[v] != 8) return fail("d(v) != 8");
      for (int i = 1; i <= 4; ++i)
        if (!weak(i)) return fail("a neighbour is not weak");
      if (d[U(1)] != 3 || d[U(2)] != 4 || d[U(3)] != 4 || d[U(4)] > 5) return fail("degrees");
      break;
    case ConfigKind::C2_4:
      if (d[v] != 8) return fail("d(v) != 8");
      if (!weak(1) || d[U(1)] != 3) return fail("u1 not a weak 3-neighbour");
      if (d[U(2)] != 4 || d[U(3)] > 5 || d[U(4)] > 5 || d[U(5)] > 7) return fail("degrees");
      break;
    case ConfigKind::C2_5:
      if (d[v] != 8) return fail("d(v) != 8");
      for (int i = 1; i <= 4; ++i)
        if (!weak(i)) return fail("a neighbour is not weak");
      if (d[U(1)] != 3) return fail("d(u1) != 3");
      if (!e2_neighbor(c, v, U(2))) return fail("u2 is not an E2-neighbour");
      if (d[U(3)] > 5 || d[U(4)] > 5) return fail("d(u3) or d(u4) > 5");
      break;
    case ConfigKind::C2_6: {
      Vertex w = vs[4];
      if (d[v] != 7) return fail("d(v) != 7");
      if (d[U(1)] != 5 || d[U(2)] != 6 || d[U(3)] != 5) return fail("degrees");
      if (!g.has_edge(U(2), U(1)) || !g.has_edge(U(2), U(3))) return fail("u2 not adjacent to u1 and u3");
      if (d[w] != 6 || !g.has_edge(w, U(3))) return fail("w is not a 6-neighbour of u3");
      break;
    }
    case ConfigKind::C2_7: {
      if (d[v] != 7) return fail("d(v) != 7");
      for (int i = 1; i <= 3; ++i)
        if (!weak(i)) return fail("a neighbour is not weak");
      if (d[U(1)] != 4 || d[U(2)] != 4) return fail("d(u1) or d(u2) != 4");
      bool typed = s2_neighbor(c, v, U(3)) || s3_neighbor(c, v, U(3)) || s4_neighbor(c, v, U(3));
      if (!typed && d[U(3)] != 4) return fail("u3 neither an S-neighbour nor a 4-vertex");
      break;
    }
    case ConfigKind::C2_8:
      if (d[v] != 7) return fail("d(v) != 7");
      if (d[U(1)] != 4) return fail("d(u1) != 4");
      if (!s3_neighbor(c, v, U(2))) return fail("u2 is not an S3-neighbour");
      if (d[U(3)] > 5) return fail("d(u3) > 5");
      break;
    case ConfigKind::C2_9:
      if (d[v] != 5) return fail("d(v) != 5");
      if (d[U(1)] != 6 || d[U(2)] != 6 || d[U(3)] != 6) return fail("degrees");
      if (!g.has_edge(U(2), U(1)) || !g.has_edge(U(2), U(3))) return fail("u2 not adjacent to u1 and u3");
      break;
    default:
      return fail("unknown kind");
  }
  return std::nullopt;
}

std::optional<std::string> check_alternating_cycle(const Graph& g, const AlternatingCycle& c) {
  const auto& vs = c.vertices;
  const std::size_t L = vs.size();
  if (L < 4 || L % 2 != 0) return "cycle length must be even and at least 4";
  std::set<Vertex> seen(vs.begin(), vs.end());
  if (seen.size() != L) return "cycle repeats a vertex";
  for (std::size_t i = 0; i < L; ++i) {
    Vertex a = vs[i], b = vs[(i + 1) % L];
    if (a < 0 || a >= g.vertex_count()) return "vertex out of range";
    if (!g.has_edge(a, b)) return "consecutive vertices not adjacent";
  }
  bool odd = true, even = true;
  for (std::size_t i = 0; i < L; ++i) {
    if (g.degree(vs[i]) != 2) (i % 2 ? odd : even) = false;
  }
  if (!odd && !even) return "no alternate class of degree-2 vertices";
  return std::nullopt;
}

std::optional<std::string> check_alternator(const Graph& g, std::span<const Vertex> Y,
                                            const Alternator& a) {
  std::set<Vertex> U(a.U.begin(), a.U.end()), W(a.W.begin(), a.W.end());
  std::set<Vertex> Ys(Y.begin(), Y.end());
  if (U.empty()) return "U is empty";
  for (Vertex u : U)
    if (W.count(u)) return "U and W intersect";
  std::map<Vertex, int> dF;
  std::set<Edge> F;
  for (auto [x, y] : a.F) {
    if (!g.has_edge(x, y)) return "F edge not in G";
    bool ok = (U.count(x) && W.count(y)) || (U.count(y) && W.count(x));
    if (!ok) return "F edge not between U and W";
    if (!F.insert(normalized(x, y)).second) return "F repeats an edge";
    ++dF[x];
    ++dF[y];
  }
  for (Vertex x : U) {
    if (Ys.count(x)) return "U meets Y";
    if (g.degree(x) > 3) return "U vertex of degree > 3";
    if (dF[x] != g.degree(x) || dF[x] < 2) return "U vertex without full degree 2..3 in F";
  }
  for (Vertex w : W) {
    if (Ys.count(w)) return "W meets Y";
    if (dF[w] >= 3) continue;
    std::vector<Vertex> inU;
    for (Vertex x : g.neighbors(w))
      if (U.count(x)) inU.push_back(x);
    int want = 14 - g.degree(w);
    if (!(inU.size() == 2 && g.degree(inU[0]) == want && g.degree(inU[1]) == want))
      return "W vertex " + std::to_string(w) + " fails both clauses";
  }
  return std::nullopt;
}

std::optional<std::string> check_masters(const Graph& g, std::span<const Vertex> Y,
                                         const MasterAssignment& m) {
  std::set<Vertex> Ys(Y.begin(), Y.end());
  std::set<Vertex> U;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (Ys.count(v) || g.degree(v) > 3) continue;
    bool all_y = std::all_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                             [&](Vertex x) { return Ys.count(x) > 0; });
    if (!all_y) U.insert(v);
  }
  std::map<Vertex, Vertex> master;
  for (auto [u, w] : m.pairs) {
    if (!U.count(u)) return "dependent " + std::to_string(u) + " not in U";
    if (!master.emplace(u, w).second) return "dependent assigned twice";
    if (Ys.count(w)) return "master in Y";
    if (!g.has_edge(u, w)) return "master not adjacent to dependent";
  }
  if (master.size() != U.size()) return "assignment is not total";
  std::map<Vertex, std::vector<Vertex>> deps;
  for (auto [u, w] : master) deps[w].push_back(u);
  for (auto& [w, ds] : deps) {
    if (U.count(w)) return "master is also a dependent";
    if (ds.size() > 2) return "master with more than two dependents";
    int special = 0;
    for (Vertex u : ds) special += g.degree(u) == 14 - g.degree(w) ? 1 : 0;
    if (special > 1) return "master with two dependents of degree 14 - d(w)";
  }
  std::set<Edge> res(m.residual.begin(), m.residual.end());
  std::set<Edge> want;
  for (auto [u, w] : master) want.insert(normalized(u, w));
  if (res != want) return "residual edge set does not match pairs";
  return std::nullopt;
}

}  // namespace k5mf::certify
