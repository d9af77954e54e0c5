#include <algorithm>
#include <functional>
#include <sstream>

#include "k5mf/configs.hpp"
#include "k5mf/decomp.hpp"
#include "k5mf/planarity.hpp"

namespace k5mf {

namespace {

Graph induced_on(const Graph& g, const std::vector<Vertex>& vs) { return g.induced(vs); }

// Components of g[within] - blocked, as vertex lists of g.
std::vector<std::vector<Vertex>> components_within(const Graph& g, const std::vector<Vertex>& within,
                                                   const std::vector<Vertex>& blocked) {
  std::vector<char> allowed(g.vertex_count(), 0), seen(g.vertex_count(), 0);
  for (Vertex v : within) allowed[v] = 1;
  for (Vertex v : blocked) allowed[v] = 0;
  std::vector<std::vector<Vertex>> out;
  for (Vertex s : within) {
    if (!allowed[s] || seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (allowed[w] && !seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

// Smallest clique separator (size <= 3) of g[piece], ties broken
// lexicographically; nullopt for an atom.
std::optional<std::vector<Vertex>> clique_separator(const Graph& g,
                                                    const std::vector<Vertex>& piece) {
  auto splits = [&](const std::vector<Vertex>& s) {
    return components_within(g, piece, s).size() >= 2;
  };
  if (components_within(g, piece, {}).size() >= 2) return std::vector<Vertex>{};
  for (Vertex a : piece)
    if (splits({a})) return std::vector<Vertex>{a};
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : piece) in[v] = 1;
  for (Vertex a : piece)
    for (Vertex b : g.neighbors(a))
      if (b > a && in[b] && splits({a, b})) return std::vector<Vertex>{a, b};
  for (Vertex a : piece)
    for (Vertex b : g.neighbors(a))
      if (b > a && in[b])
        for (Vertex c : g.neighbors(b))
          if (c > b && in[c] && g.has_edge(a, c) && splits({a, b, c}))
            return std::vector<Vertex>{a, b, c};
  return std::nullopt;
}

struct RawDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<int, int>> edges;
};

RawDecomposition split_on_cliques(const Graph& g, std::vector<Vertex> piece) {
  std::sort(piece.begin(), piece.end());
  auto sep = clique_separator(g, piece);
  if (!sep) return {{piece}, {}};
  RawDecomposition out;
  int anchor = -1;
  for (auto& comp : components_within(g, piece, *sep)) {
    std::vector<Vertex> sub = comp;
    sub.insert(sub.end(), sep->begin(), sep->end());
    RawDecomposition d = split_on_cliques(g, sub);
    const int offset = static_cast<int>(out.bags.size());
    int holder = 0;
    for (std::size_t i = 0; i < d.bags.size(); ++i)
      if (std::includes(d.bags[i].begin(), d.bags[i].end(), sep->begin(), sep->end())) {
        holder = static_cast<int>(i);
        break;
      }
    for (auto& b : d.bags) out.bags.push_back(std::move(b));
    for (auto [a, b] : d.edges) out.edges.emplace_back(a + offset, b + offset);
    if (anchor < 0)
      anchor = offset + holder;
    else
      out.edges.emplace_back(anchor, offset + holder);
  }
  return out;
}

std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> vs(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) vs[v] = v;
  return vs;
}

std::string list(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

}  // namespace

Graph edge_maximalize(const Graph& g, std::uint64_t budget) {
  if (contains_k5_minor(g, budget))
    throw DecompError(DecompError::Kind::InputHasMinor, "input graph has a K5 minor");
  const int n = g.vertex_count();
  std::vector<Edge> es = g.edges();
  Graph h = g;

  // Inside a planar atom, an edge that keeps the atom planar keeps the whole
  // clique-sum K5-minor-free.
  for (const auto& atom : split_on_cliques(h, all_vertices(h)).bags) {
    Graph local = induced_on(h, atom);
    if (!planar(local)) continue;
    for (std::size_t i = 0; i < atom.size(); ++i)
      for (std::size_t j = i + 1; j < atom.size(); ++j) {
        int a = static_cast<int>(i), b = static_cast<int>(j);
        if (local.has_edge(a, b)) continue;
        Graph trial = local.with_edge(a, b);
        if (!planar(trial)) continue;
        local = std::move(trial);
        es.emplace_back(atom[i], atom[j]);
      }
  }
  h = build_graph(n, es);

  // Everything else by direct test, lexicographically. Rejected edges stay
  // rejected as the graph grows, so one pass suffices.
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (h.has_edge(u, v)) continue;
      Graph trial = h.with_edge(u, v);
      if (!contains_k5_minor(trial, budget)) h = std::move(trial);
    }
  return h;
}

const char* to_string(TreeDecomposition::Tag t) {
  return t == TreeDecomposition::Tag::Planar ? "planar" : "wagner";
}

std::vector<Vertex> TreeDecomposition::separator(std::size_t tree_edge) const {
  const auto& a = bags[tree_edges[tree_edge].first].vertices;
  const auto& b = bags[tree_edges[tree_edge].second].vertices;
  std::vector<Vertex> s;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(s));
  return s;
}

TreeDecomposition tree_decompose(const Graph& g, std::uint64_t budget) {
  TreeDecomposition td;
  td.maximal = edge_maximalize(g, budget);
  RawDecomposition raw = split_on_cliques(td.maximal, all_vertices(td.maximal));
  for (auto& bag : raw.bags) {
    Graph part = induced_on(td.maximal, bag);
    TreeDecomposition::Bag b;
    b.vertices = bag;
    if (planar(part))
      b.tag = TreeDecomposition::Tag::Planar;
    else if (is_wagner(part))
      b.tag = TreeDecomposition::Tag::Wagner;
    else
      throw std::logic_error("atom of a maximal K5-minor-free graph is neither planar nor V8");
    td.bags.push_back(std::move(b));
  }
  td.tree_edges = raw.edges;
  return td;
}

std::optional<std::string> validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  const Graph& h = td.maximal;
  const int n = h.vertex_count();
  const int k = static_cast<int>(td.bags.size());
  if (g.vertex_count() != n) return "vertex count differs from the maximal graph";
  for (auto [u, v] : g.edges())
    if (!h.has_edge(u, v)) return "edge " + std::to_string(u) + "-" + std::to_string(v) + " lost";
  if (k == 0) return n == 0 ? std::nullopt : std::optional<std::string>("no bags");
  if (static_cast<int>(td.tree_edges.size()) != k - 1) return "tree has wrong edge count";
  std::vector<std::vector<int>> tadj(k);
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || a >= k || b >= k || a == b) return "bad tree edge";
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  {
    std::vector<char> seen(k, 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int y : tadj[x])
        if (!seen[y]) {
          seen[y] = 1;
          ++cnt;
          st.push_back(y);
        }
    }
    if (cnt != k) return "tree is not connected";
  }
  std::vector<std::vector<int>> holding(n);
  for (int i = 0; i < k; ++i) {
    const auto& b = td.bags[i].vertices;
    if (!std::is_sorted(b.begin(), b.end())) return "bag " + std::to_string(i) + " not sorted";
    for (Vertex v : b) {
      if (v < 0 || v >= n) return "bag vertex out of range";
      holding[v].push_back(i);
    }
  }
  // (T1)
  for (Vertex v = 0; v < n; ++v)
    if (holding[v].empty()) return "(T1) vertex " + std::to_string(v) + " in no bag";
  // (T2), which also gives recomposition of the maximal graph
  for (auto [u, v] : h.edges()) {
    bool ok = false;
    for (int i : holding[u])
      ok |= std::binary_search(td.bags[i].vertices.begin(), td.bags[i].vertices.end(), v);
    if (!ok) return "(T2) edge " + std::to_string(u) + "-" + std::to_string(v) + " in no bag";
  }
  // (T3): bags holding v form a subtree
  for (Vertex v = 0; v < n; ++v) {
    std::vector<char> holds(k, 0), seen(k, 0);
    for (int i : holding[v]) holds[i] = 1;
    std::vector<int> st{holding[v][0]};
    seen[holding[v][0]] = 1;
    std::size_t cnt = 1;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int y : tadj[x])
        if (holds[y] && !seen[y]) {
          seen[y] = 1;
          ++cnt;
          st.push_back(y);
        }
    }
    if (cnt != holding[v].size()) return "(T3) bags holding " + std::to_string(v) + " not a subtree";
  }
  for (std::size_t e = 0; e < td.tree_edges.size(); ++e) {
    auto s = td.separator(e);
    if (s.size() > 3) return "separator larger than 3";
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (!h.has_edge(s[i], s[j])) return "separator is not a clique";
  }
  for (int i = 0; i < k; ++i) {
    Graph part = induced_on(h, td.bags[i].vertices);
    bool ok = td.bags[i].tag == TreeDecomposition::Tag::Planar ? planar(part) : is_wagner(part);
    if (!ok) return "bag " + std::to_string(i) + " is not " + to_string(td.bags[i].tag);
  }
  return std::nullopt;
}

std::string serialize(const TreeDecomposition& td) {
  std::ostringstream out;
  for (std::size_t i = 0; i < td.bags.size(); ++i)
    out << "BAG " << i << ' ' << to_string(td.bags[i].tag) << " : " << list(td.bags[i].vertices)
        << '\n';
  for (std::size_t e = 0; e < td.tree_edges.size(); ++e)
    out << "SEP " << td.tree_edges[e].first << ' ' << td.tree_edges[e].second << " : "
        << list(td.separator(e)) << '\n';
  return out.str();
}

const char* to_string(Disjunct d) {
  switch (d) {
    case Disjunct::MinDegree: return "min-degree";
    case Disjunct::LightEdge: return "light-edge";
    case Disjunct::Configuration: return "configuration";
    case Disjunct::AltCycle: return "2-alternating-cycle";
    case Disjunct::Alternator: return "3-alternator";
    case Disjunct::FailsAll: return "FAILS-ALL";
  }
  return "?";
}

namespace {

std::optional<Verdict> min_degree_verdict(const Graph& g, int bound) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) <= bound)
      return Verdict{Disjunct::MinDegree,
                     "vertex " + std::to_string(v) + " degree " + std::to_string(g.degree(v)),
                     std::nullopt, {Disjunct::MinDegree}};
  return std::nullopt;
}

std::optional<Verdict> light_edge_verdict(const Graph& g, int bound) {
  for (auto [u, v] : g.edges())
    if (g.degree(u) + g.degree(v) <= bound)
      return Verdict{Disjunct::LightEdge,
                     "edge " + std::to_string(u) + " " + std::to_string(v) + " sum " +
                         std::to_string(g.degree(u) + g.degree(v)),
                     std::nullopt, {Disjunct::LightEdge}};
  return std::nullopt;
}

// Searches the unavoidable configurations in `sub` (vertex ids `orig` in g)
// with Y on the outer face and degrees taken from g.
std::optional<ConfigMatch> configs_in(const Graph& g, const std::vector<Vertex>& orig,
                                      const Graph& sub, const std::vector<Vertex>& Y_local) {
  if (!sub.is_connected()) return std::nullopt;
  auto emb = embed_with_common_face(sub, Y_local);
  if (!emb) return std::nullopt;
  DegreeContext ctx;
  for (Vertex v : orig) ctx.degree.push_back(g.degree(v));
  ctx.max_degree = g.max_degree();
  std::vector<Vertex> Y = Y_local;
  try {
    check_removal_set(*emb, Y);
  } catch (const ConfigError&) {
    return std::nullopt;
  }
  auto ms = find_lemma31_configs(*emb, Y, ctx, 1);
  if (ms.empty()) return std::nullopt;
  ConfigMatch m = ms.front();
  for (auto& [role, v] : m.binding) v = orig[v];
  return m;
}

std::optional<ConfigMatch> configs_in_component(const Graph& g, std::uint64_t budget) {
  if (planar(g)) {
    auto orig = all_vertices(g);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (auto m = configs_in(g, orig, g, {v})) return m;
    return std::nullopt;
  }
  TreeDecomposition td;
  try {
    td = tree_decompose(g, budget);
  } catch (const DecompError& e) {
    if (e.kind() == DecompError::Kind::InputHasMinor)
      throw DecompError(DecompError::Kind::PreconditionViolated, "graph has a K5 minor");
    throw;
  }
  auto all = all_vertices(g);
  for (std::size_t e = 0; e < td.tree_edges.size(); ++e) {
    auto S = td.separator(e);
    for (const auto& C : components_within(g, all, S)) {
      if (C.size() < 2) continue;
      std::vector<Vertex> Y;
      for (Vertex s : S)
        if (std::any_of(C.begin(), C.end(), [&](Vertex c) { return g.has_edge(c, s); }))
          Y.push_back(s);
      std::vector<Vertex> orig = C;
      orig.insert(orig.end(), Y.begin(), Y.end());
      std::vector<Edge> es;
      for (std::size_t i = 0; i < orig.size(); ++i)
        for (std::size_t j = i + 1; j < orig.size(); ++j) {
          bool both_y = i >= C.size() && j >= C.size();
          if (!both_y && g.has_edge(orig[i], orig[j]))
            es.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
      Graph sub = build_graph(static_cast<int>(orig.size()), es);
      std::vector<Vertex> Y_local;
      for (std::size_t i = C.size(); i < orig.size(); ++i) Y_local.push_back(static_cast<int>(i));
      if (Y_local.empty()) continue;
      if (!planar(sub)) continue;
      if (auto m = configs_in(g, orig, sub, Y_local)) return m;
    }
  }
  return std::nullopt;
}

std::optional<ConfigMatch> configs_by_parts(const Graph& g, std::uint64_t budget) {
  for (const auto& comp : components_within(g, all_vertices(g), {})) {
    if (comp.size() < 2) continue;
    auto m = configs_in_component(g.induced(comp), budget);
    if (!m) continue;
    for (auto& [role, v] : m->binding) v = comp[v];
    return m;
  }
  return std::nullopt;
}

// The first of the cheap verdicts, with every one that holds listed.
std::optional<Verdict> cheap_verdict(std::vector<std::optional<Verdict>> found) {
  std::optional<Verdict> first;
  std::vector<Disjunct> holding;
  for (auto& v : found)
    if (v) {
      holding.push_back(v->disjunct);
      if (!first) first = std::move(v);
    }
  if (first) first->holding = holding;
  return first;
}

}  // namespace

std::optional<ConfigMatch> find_configuration(const Graph& g, std::uint64_t budget) {
  return configs_by_parts(g, budget);
}

bool Verdict::holds(Disjunct d) const {
  return std::find(holding.begin(), holding.end(), d) != holding.end();
}

Verdict check_trichotomy_L42(const Graph& g, std::uint64_t budget) {
  const int delta = g.max_degree();
  if (delta < 8)
    throw DecompError(DecompError::Kind::PreconditionViolated,
                      "maximum degree " + std::to_string(delta) + " < 8");
  if (auto v = cheap_verdict({min_degree_verdict(g, 3), light_edge_verdict(g, delta + 2)}))
    return *v;
  if (auto m = configs_by_parts(g, budget)) {
    std::string w = to_string(m->kind);
    for (auto& [role, v] : m->binding) w += " " + role + "=" + std::to_string(v);
    return Verdict{Disjunct::Configuration, w, m, {Disjunct::Configuration}};
  }
  return Verdict{};
}

Verdict check_trichotomy_L43(const Graph& g) {
  const int delta = g.max_degree();
  if (delta < 12)
    throw DecompError(DecompError::Kind::PreconditionViolated,
                      "maximum degree " + std::to_string(delta) + " < 12");
  auto light = light_edge_verdict(g, delta + 1);
  if (auto v = cheap_verdict({min_degree_verdict(g, 1), light})) {
    if (v->disjunct == Disjunct::MinDegree) return *v;
  }
  std::vector<Disjunct> also;
  if (light) also.push_back(Disjunct::LightEdge);
  auto with = [&](Disjunct d) {
    std::vector<Disjunct> h{d};
    h.insert(h.end(), also.begin(), also.end());
    return h;
  };
  auto cycles = find_2alt_cycles(g, 1);
  if (!cycles.empty())
    return Verdict{Disjunct::AltCycle, list(cycles[0].vertices), std::nullopt,
                   with(Disjunct::AltCycle)};
  if (auto a = find_3alternator(g, {}))
    return Verdict{Disjunct::Alternator, "U " + list(a->U) + " W " + list(a->W), std::nullopt,
                   with(Disjunct::Alternator)};
  if (light) {
    light->holding = {Disjunct::LightEdge};
    return *light;
  }
  return Verdict{};
}

}  // namespace k5mf
