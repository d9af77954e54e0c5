#include <algorithm>
#include <array>
#include <functional>
#include <iterator>
#include <numeric>

#include "k5mf/decomp.hpp"
#include "k5mf/planarity.hpp"

namespace k5mf {

namespace {

// Working graph: compact ids, sorted adjacency, and for every vertex the set
// of input vertices contracted into it.
struct MG {
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<Vertex>> sets;

  int n() const { return static_cast<int>(adj.size()); }
  int m() const {
    int s = 0;
    for (const auto& a : adj) s += static_cast<int>(a.size());
    return s / 2;
  }
  bool has(int u, int v) const { return std::binary_search(adj[u].begin(), adj[u].end(), v); }

  void add_edge(int u, int v) {
    auto it = std::lower_bound(adj[u].begin(), adj[u].end(), v);
    if (it != adj[u].end() && *it == v) return;
    adj[u].insert(it, v);
    adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
  }
  void erase_edge(int u, int v) {
    adj[u].erase(std::lower_bound(adj[u].begin(), adj[u].end(), v));
    adj[v].erase(std::lower_bound(adj[v].begin(), adj[v].end(), u));
  }
  // Removes v; the last vertex takes over its id.
  void remove_vertex(int v) {
    for (int w : std::vector<int>(adj[v])) erase_edge(v, w);
    int last = n() - 1;
    if (v != last) {
      for (int w : adj[last]) {
        auto& a = adj[w];
        a.erase(std::lower_bound(a.begin(), a.end(), last));
        a.insert(std::lower_bound(a.begin(), a.end(), v), v);
      }
      adj[v] = std::move(adj[last]);
      sets[v] = std::move(sets[last]);
    }
    adj.pop_back();
    sets.pop_back();
  }
  // Merges v into u (u keeps its id unless it was the last vertex).
  void contract(int u, int v) {
    for (int w : adj[v])
      if (w != u) add_edge(u, w);
    sets[u].insert(sets[u].end(), sets[v].begin(), sets[v].end());
    remove_vertex(v);
  }

  MG induced(const std::vector<int>& keep) const {
    std::vector<int> id(n(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) id[keep[i]] = static_cast<int>(i);
    MG h;
    h.adj.resize(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
      h.sets.push_back(sets[keep[i]]);
      for (int w : adj[keep[i]])
        if (id[w] >= 0) h.adj[i].push_back(id[w]);
      std::sort(h.adj[i].begin(), h.adj[i].end());
    }
    return h;
  }

  Graph to_graph() const {
    std::vector<Edge> es;
    for (int u = 0; u < n(); ++u)
      for (int v : adj[u])
        if (u < v) es.emplace_back(u, v);
    return build_graph(n(), es);
  }

  std::vector<Vertex> union_of(const std::vector<int>& vs) const {
    std::vector<Vertex> out;
    for (int v : vs) out.insert(out.end(), sets[v].begin(), sets[v].end());
    return out;
  }
};

MG from_graph(const Graph& g) {
  MG h;
  h.adj.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    h.adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    h.sets.push_back({v});
  }
  return h;
}

// Components of g minus the blocked vertices.
std::vector<std::vector<int>> components(const MG& g, const std::vector<char>& blocked) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(blocked);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : g.adj[comp[i]])
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    out.push_back(std::move(comp));
  }
  return out;
}

// Articulation points of g minus the blocked vertices, which must leave it
// connected.
std::vector<int> articulation_points(const MG& g, const std::vector<char>& blocked) {
  const int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> cut(n, 0);
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (int w : g.adj[v]) {
      if (blocked[w] || w == parent) continue;
      if (disc[w] >= 0) {
        low[v] = std::min(low[v], disc[w]);
        continue;
      }
      ++children;
      dfs(w, v);
      low[v] = std::min(low[v], low[w]);
      if (parent >= 0 && low[w] >= disc[v]) cut[v] = 1;
    }
    if (parent < 0 && children > 1) cut[v] = 1;
  };
  for (int s = 0; s < n; ++s)
    if (!blocked[s]) {
      dfs(s, -1);
      break;
    }
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (cut[v]) out.push_back(v);
  return out;
}

// Bridges of g minus blocked vertices, as (u, v) pairs.
std::vector<std::pair<int, int>> bridges(const MG& g, const std::vector<char>& blocked) {
  const int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> out;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    for (int w : g.adj[v]) {
      if (blocked[w] || w == parent) continue;
      if (disc[w] >= 0) {
        low[v] = std::min(low[v], disc[w]);
        continue;
      }
      dfs(w, v);
      low[v] = std::min(low[v], low[w]);
      if (low[w] > disc[v]) out.emplace_back(v, w);
    }
  };
  for (int s = 0; s < n; ++s)
    if (!blocked[s] && disc[s] < 0) dfs(s, -1);
  return out;
}

std::vector<std::array<int, 3>> triangles(const MG& g) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < g.n(); ++a)
    for (int b : g.adj[a])
      if (b > a)
        for (int c : g.adj[b])
          if (c > b && g.has(a, c)) out.push_back({a, b, c});
  return out;
}

// Drops vertices of degree <= 1 and contracts degree-2 vertices away. Both
// keep the answer, and branch sets of the result lift to the input.
void reduce(MG& g) {
  bool again = true;
  while (again) {
    again = false;
    for (int v = 0; v < g.n(); ++v) {
      int d = static_cast<int>(g.adj[v].size());
      if (d <= 1) {
        g.remove_vertex(v);
        again = true;
        break;
      }
      if (d == 2) {
        g.contract(g.adj[v][0], v);
        again = true;
        break;
      }
    }
  }
}

std::optional<MinorCertificate> k5_subgraph(const MG& g) {
  std::vector<int> pick;
  std::function<bool(int)> grow = [&](int from) -> bool {
    if (pick.size() == 5) return true;
    for (int v = from; v < g.n(); ++v) {
      if (g.adj[v].size() < 4) continue;
      if (!std::all_of(pick.begin(), pick.end(), [&](int p) { return g.has(p, v); })) continue;
      pick.push_back(v);
      if (grow(v + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (!grow(0)) return std::nullopt;
  MinorCertificate c;
  for (int v : pick) c.branch_sets.push_back(g.sets[v]);
  return c;
}

// Exhaustive branch-set search for tiny graphs: labels in first-use order,
// label 5 for unused vertices.
bool small_exact(const MG& g) {
  const int n = g.n();
  std::vector<int> label(n, 5);
  std::function<bool(int, int)> rec = [&](int v, int used) -> bool {
    if (v == n) {
      if (used < 5) return false;
      bool joined[5][5] = {};
      for (int u = 0; u < n; ++u)
        for (int w : g.adj[u])
          if (label[u] < 5 && label[w] < 5) joined[label[u]][label[w]] = true;
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
          if (!joined[i][j]) return false;
      for (int i = 0; i < 5; ++i) {
        std::vector<int> in;
        for (int u = 0; u < n; ++u)
          if (label[u] == i) in.push_back(u);
        std::vector<int> reach{in[0]};
        std::vector<char> seen(n, 0);
        seen[in[0]] = 1;
        for (std::size_t k = 0; k < reach.size(); ++k)
          for (int w : g.adj[reach[k]])
            if (label[w] == i && !seen[w]) {
              seen[w] = 1;
              reach.push_back(w);
            }
        if (reach.size() != in.size()) return false;
      }
      return true;
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

// Graphs this small are settled by small_exact; 3-connected pieces without
// a nontrivial 3-separation include K3,3-like exceptions below it.
constexpr int kSmallExact = 8;

// Decision by decomposition. Pieces are glued along cliques of size <= 1,
// along 2-separations (torso gets the virtual edge), and along 3-separations
// with at least two vertices on each side (torso gets the virtual triangle,
// which the other side always realises in a 3-connected graph). A 3-connected
// graph without such a 3-separation has no K5 minor iff it is planar or V8.
class Decider {
 public:
  explicit Decider(std::uint64_t budget) : budget_(budget) {}

  bool has_minor(MG g) {
    if (++nodes_ > budget_)
      throw DecompError(DecompError::Kind::BudgetExceeded,
                        "K5-minor search exceeded " + std::to_string(budget_) + " nodes");
    reduce(g);
    const int n = g.n(), m = g.m();
    if (n < 5 || m < 10) return false;
    // Mader: m >= 3n - 5 forces a K5 minor
    if (m >= 3 * n - 5) return true;
    if (n <= kSmallExact) return small_exact(g);

    std::vector<char> none(n, 0);
    auto comps = components(g, none);
    if (comps.size() > 1) {
      for (auto& c : comps)
        if (has_minor(g.induced(c))) return true;
      return false;
    }
    if (auto cuts = articulation_points(g, none); !cuts.empty())
      return split(g, {cuts[0]}, false);
    for (int a = 0; a < n; ++a) {
      std::vector<char> blocked(n, 0);
      blocked[a] = 1;
      if (auto cuts = articulation_points(g, blocked); !cuts.empty())
        return split(g, {a, cuts[0]}, true);
    }

    if (planar(g.to_graph())) return false;
    if (is_wagner(g.to_graph())) return false;

    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        std::vector<char> blocked(n, 0);
        blocked[a] = blocked[b] = 1;
        for (int c : articulation_points(g, blocked)) {
          std::vector<int> s{a, b, c};
          if (auto sides = nontrivial_sides(g, s)) return split3(g, s, *sides);
        }
      }
    return true;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool split(const MG& g, std::vector<int> s, bool virtual_edge) {
    std::vector<char> blocked(g.n(), 0);
    for (int x : s) blocked[x] = 1;
    for (auto& c : components(g, blocked)) {
      std::vector<int> keep = c;
      keep.insert(keep.end(), s.begin(), s.end());
      MG p = g.induced(keep);
      if (virtual_edge) p.add_edge(static_cast<int>(keep.size()) - 2, static_cast<int>(keep.size()) - 1);
      if (has_minor(std::move(p))) return true;
    }
    return false;
  }

  // Groups the components of g - s into two sides with >= 2 vertices each.
  static std::optional<std::pair<std::vector<int>, std::vector<int>>> nontrivial_sides(
      const MG& g, const std::vector<int>& s) {
    std::vector<char> blocked(g.n(), 0);
    for (int x : s) blocked[x] = 1;
    auto comps = components(g, blocked);
    std::sort(comps.begin(), comps.end(),
              [](const auto& x, const auto& y) { return x.size() < y.size(); });
    std::vector<int> A, B;
    for (auto& c : comps) (A.size() < 2 ? A : B).insert((A.size() < 2 ? A : B).end(), c.begin(), c.end());
    if (A.size() < 2 || B.size() < 2) return std::nullopt;
    return std::make_pair(A, B);
  }

  bool split3(const MG& g, const std::vector<int>& s,
              const std::pair<std::vector<int>, std::vector<int>>& sides) {
    for (const auto* side : {&sides.first, &sides.second}) {
      std::vector<int> keep = *side;
      keep.insert(keep.end(), s.begin(), s.end());
      MG p = g.induced(keep);
      const int k = static_cast<int>(keep.size());
      p.add_edge(k - 3, k - 2);
      p.add_edge(k - 3, k - 1);
      p.add_edge(k - 2, k - 1);
      if (has_minor(std::move(p))) return true;
    }
    return false;
  }

  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

// A triangle plus two sides, each touching all three corners, joined by a
// single edge.
std::optional<MinorCertificate> quick_find(const MG& g) {
  for (const auto& t : triangles(g)) {
    std::vector<char> blocked(g.n(), 0);
    for (int x : t) blocked[x] = 1;
    for (auto [x, y] : bridges(g, blocked)) {
      MG cut = g;
      cut.erase_edge(x, y);
      auto parts = components(cut, blocked);
      std::vector<int> sx, sy;
      for (auto& p : parts) {
        if (std::count(p.begin(), p.end(), x)) sx = p;
        if (std::count(p.begin(), p.end(), y)) sy = p;
      }
      auto full = [&](const std::vector<int>& side) {
        return std::all_of(t.begin(), t.end(), [&](int s) {
          return std::any_of(side.begin(), side.end(), [&](int v) { return g.has(v, s); });
        });
      };
      if (!full(sx) || !full(sy)) continue;
      MinorCertificate c;
      for (int s : t) c.branch_sets.push_back(g.sets[s]);
      c.branch_sets.push_back(g.union_of(sx));
      c.branch_sets.push_back(g.union_of(sy));
      return c;
    }
  }
  return std::nullopt;
}

// Shrinks g by single deletions and contractions that keep a K5 minor until a
// K5 subgraph is left; some edge always qualifies.
std::optional<MinorCertificate> certify(MG g, Decider& d) {
  if (!d.has_minor(g)) return std::nullopt;
  for (;;) {
    reduce(g);
    if (auto c = k5_subgraph(g)) return c;
    if (auto c = quick_find(g)) return c;
    bool moved = false;
    // contract first: it shrinks the graph fastest
    for (int u = 0; u < g.n() && !moved; ++u)
      for (int v : std::vector<int>(g.adj[u])) {
        if (v < u) continue;
        MG c = g;
        c.contract(u, v);
        if (d.has_minor(c)) {
          g = std::move(c);
          moved = true;
          break;
        }
      }
    for (int u = 0; u < g.n() && !moved; ++u)
      for (int v : std::vector<int>(g.adj[u])) {
        if (v < u) continue;
        MG c = g;
        c.erase_edge(u, v);
        if (d.has_minor(c)) {
          g = std::move(c);
          moved = true;
          break;
        }
      }
    if (!moved) throw std::logic_error("K5-minor certificate search stalled");
  }
}

}  // namespace

std::optional<std::string> check_minor_certificate(const Graph& g, const MinorCertificate& c) {
  if (c.branch_sets.size() != 5) return "expected 5 branch sets";
  const int n = g.vertex_count();
  std::vector<int> owner(n, -1);
  for (int i = 0; i < 5; ++i) {
    const auto& s = c.branch_sets[i];
    if (s.empty()) return "branch set " + std::to_string(i) + " is empty";
    for (Vertex v : s) {
      if (v < 0 || v >= n) return "vertex out of range";
      if (owner[v] >= 0) return "vertex " + std::to_string(v) + " in two branch sets";
      owner[v] = i;
    }
  }
  for (int i = 0; i < 5; ++i) {
    const auto& s = c.branch_sets[i];
    std::vector<Vertex> reach{s[0]};
    std::vector<char> seen(n, 0);
    seen[s[0]] = 1;
    for (std::size_t k = 0; k < reach.size(); ++k)
      for (Vertex w : g.neighbors(reach[k]))
        if (owner[w] == i && !seen[w]) {
          seen[w] = 1;
          reach.push_back(w);
        }
    if (reach.size() != s.size()) return "branch set " + std::to_string(i) + " is not connected";
  }
  bool joined[5][5] = {};
  for (auto [u, v] : g.edges())
    if (owner[u] >= 0 && owner[v] >= 0 && owner[u] != owner[v]) joined[owner[u]][owner[v]] =
        joined[owner[v]][owner[u]] = true;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (!joined[i][j])
        return "branch sets " + std::to_string(i) + " and " + std::to_string(j) + " not adjacent";
  return std::nullopt;
}

std::optional<MinorCertificate> has_k5_minor(const Graph& g, std::uint64_t budget,
                                             MinorStats* stats) {
  Decider d(budget);
  std::optional<MinorCertificate> r;
  try {
    r = certify(from_graph(g), d);
  } catch (...) {
    if (stats) stats->nodes = d.nodes();
    throw;
  }
  if (stats) stats->nodes = d.nodes();
  if (r)
    for (auto& b : r->branch_sets) std::sort(b.begin(), b.end());
  return r;
}

bool contains_k5_minor(const Graph& g, std::uint64_t budget) {
  Decider d(budget);
  return d.has_minor(from_graph(g));
}

bool is_wagner(const Graph& g) {
  if (g.vertex_count() != 8 || g.edge_count() != 12) return false;
  for (Vertex v = 0; v < 8; ++v)
    if (g.degree(v) != 3) return false;
  // look for a Hamiltonian cycle whose antipodal pairs are all edges
  std::vector<Vertex> cyc{0};
  std::vector<char> used(8, 0);
  used[0] = 1;
  std::function<bool()> extend = [&]() -> bool {
    if (cyc.size() == 8) {
      if (!g.has_edge(cyc[7], cyc[0])) return false;
      for (int i = 0; i < 4; ++i)
        if (!g.has_edge(cyc[i], cyc[i + 4])) return false;
      return true;
    }
    for (Vertex w : g.neighbors(cyc.back())) {
      if (used[w]) continue;
      used[w] = 1;
      cyc.push_back(w);
      if (extend()) return true;
      cyc.pop_back();
      used[w] = 0;
    }
    return false;
  };
  return extend();
}

}  // namespace k5mf
