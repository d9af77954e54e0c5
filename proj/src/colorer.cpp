#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "k5mf/colorer.hpp"
#include "k5mf/configs.hpp"
#include "k5mf/decomp.hpp"
#include "k5mf/rng.hpp"

namespace k5mf {

namespace {

void check_sizes(const Graph& g, const ListAssignment& L) {
  if (static_cast<int>(L.lists.size()) != g.edge_count())
    throw ColorError(ColorError::Kind::SizeMismatch,
                     "expected " + std::to_string(g.edge_count()) + " lists, got " +
                         std::to_string(L.lists.size()));
}

// Edges sharing an endpoint, by edge index.
std::vector<std::vector<int>> conflicts(const Graph& g) {
  const auto es = g.edges();
  std::vector<std::vector<int>> inc(g.vertex_count()), out(es.size());
  for (std::size_t i = 0; i < es.size(); ++i) {
    inc[es[i].first].push_back(static_cast<int>(i));
    inc[es[i].second].push_back(static_cast<int>(i));
  }
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (Vertex x : {es[i].first, es[i].second})
      for (int j : inc[x])
        if (j != static_cast<int>(i)) out[i].push_back(j);
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

}  // namespace

bool validate_coloring(const Graph& g, const ListAssignment& L, const EdgeColoring& c) {
  const auto es = g.edges();
  if (L.lists.size() != es.size() || c.size() != es.size()) return false;
  for (std::size_t i = 0; i < es.size(); ++i)
    if (std::find(L.lists[i].begin(), L.lists[i].end(), c[i]) == L.lists[i].end()) return false;
  std::vector<std::vector<int>> at(g.vertex_count());
  for (std::size_t i = 0; i < es.size(); ++i) {
    at[es[i].first].push_back(c[i]);
    at[es[i].second].push_back(c[i]);
  }
  for (auto& cs : at) {
    std::sort(cs.begin(), cs.end());
    if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) return false;
  }
  return true;
}

std::optional<EdgeColoring> exact_list_color(const Graph& g, const ListAssignment& L,
                                             ExactStats* stats) {
  check_sizes(g, L);
  const int m = g.edge_count();
  auto nb = conflicts(g);
  std::vector<std::vector<int>> dom(m);
  for (int e = 0; e < m; ++e) {
    dom[e] = L.lists[e];
    std::sort(dom[e].begin(), dom[e].end());
    dom[e].erase(std::unique(dom[e].begin(), dom[e].end()), dom[e].end());
  }
  // ban[e][i] counts coloured neighbours using dom[e][i]
  std::vector<std::vector<int>> ban(m);
  std::vector<int> left(m);
  for (int e = 0; e < m; ++e) {
    ban[e].assign(dom[e].size(), 0);
    left[e] = static_cast<int>(dom[e].size());
  }
  EdgeColoring color(m, 0);
  std::vector<char> done(m, 0);
  std::uint64_t nodes = 0;

  auto apply = [&](int e, int c, int delta) {
    bool wiped = false;
    for (int f : nb[e]) {
      if (done[f]) continue;
      auto it = std::lower_bound(dom[f].begin(), dom[f].end(), c);
      if (it == dom[f].end() || *it != c) continue;
      int& b = ban[f][it - dom[f].begin()];
      if (delta > 0 && b++ == 0 && --left[f] == 0) wiped = true;
      if (delta < 0 && --b == 0) ++left[f];
    }
    return !wiped;
  };

  std::function<bool(int)> search = [&](int placed) -> bool {
    ++nodes;
    if (placed == m) return true;
    int e = -1;
    for (int f = 0; f < m; ++f)
      if (!done[f] && (e < 0 || left[f] < left[e])) e = f;
    if (left[e] == 0) return false;
    done[e] = 1;
    for (std::size_t i = 0; i < dom[e].size(); ++i) {
      if (ban[e][i]) continue;
      int c = dom[e][i];
      color[e] = c;
      bool ok = apply(e, c, +1);
      if (ok && search(placed + 1)) return true;
      apply(e, c, -1);
    }
    done[e] = 0;
    return false;
  };
  bool found = search(0);
  if (stats) stats->nodes = nodes;
  if (!found) return std::nullopt;
  return color;
}

std::optional<Edge> find_light_edge(const Graph& g, int bound) {
  for (auto [u, v] : g.edges())
    if (g.degree(u) + g.degree(v) <= bound) return Edge{u, v};
  return std::nullopt;
}

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::LightEdge: return "light-edge";
    case StepKind::Config: return "config";
    case StepKind::AltCycle: return "2-alternating-cycle";
    case StepKind::Alternator: return "3-alternator";
    case StepKind::Fallback: return "fallback";
  }
  return "?";
}

const char* to_string(ListStrategy s) {
  switch (s) {
    case ListStrategy::UniformRandom: return "uniform-random";
    case ListStrategy::Clustered: return "clustered";
    case ListStrategy::ExhaustiveSmall: return "exhaustive-small";
  }
  return "?";
}

namespace {

std::optional<Reduction> config_reduction(const Graph& h) {
  std::optional<ConfigMatch> m;
  try {
    m = find_configuration(h);
  } catch (const DecompError&) {
    return std::nullopt;
  }
  if (!m) return std::nullopt;
  // delete the edges at the bound vertex of least degree
  Vertex low = m->binding.front().second;
  for (auto& [role, v] : m->binding)
    if (h.degree(v) < h.degree(low)) low = v;
  Reduction r{StepKind::Config, {}, to_string(m->kind)};
  for (auto& [role, v] : m->binding) r.detail += " " + role + "=" + std::to_string(v);
  for (Vertex w : h.neighbors(low)) r.removed.push_back(normalized(low, w));
  return r;
}

std::optional<Reduction> min_degree_reduction(const Graph& h, int bound) {
  Vertex best = -1;
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    if (h.degree(v) > 0 && (best < 0 || h.degree(v) < h.degree(best))) best = v;
  if (best < 0 || h.degree(best) > bound) return std::nullopt;
  Reduction r{StepKind::Config, {}, "min-degree vertex " + std::to_string(best)};
  for (Vertex w : h.neighbors(best)) r.removed.push_back(normalized(best, w));
  return r;
}

std::optional<Reduction> alt_cycle_reduction(const Graph& h) {
  auto cycles = find_2alt_cycles(h, 1);
  if (cycles.empty()) return std::nullopt;
  const auto& c = cycles[0].vertices;
  Reduction r{StepKind::AltCycle, {}, "cycle"};
  for (std::size_t i = 0; i < c.size(); ++i) {
    r.detail += " " + std::to_string(c[i]);
    r.removed.push_back(normalized(c[i], c[(i + 1) % c.size()]));
  }
  return r;
}

std::optional<Reduction> alternator_reduction(const Graph& h) {
  auto a = find_3alternator(h, {});
  if (!a) return std::nullopt;
  Reduction r{StepKind::Alternator, a->F, "U"};
  for (Vertex u : a->U) r.detail += " " + std::to_string(u);
  r.detail += " W";
  for (Vertex w : a->W) r.detail += " " + std::to_string(w);
  return r;
}

}  // namespace

ReductionPlan plan_reductions(const Graph& g, ColorMode mode) {
  ReductionPlan plan;
  plan.base_delta = g.max_degree();
  plan.mode = mode;
  const int bound = plan.base_delta + (mode == ColorMode::DeltaPlusOne ? 2 : 1);
  Graph h = g;
  while (h.edge_count() > 0) {
    std::optional<Reduction> r;
    if (auto e = find_light_edge(h, bound)) {
      r = Reduction{StepKind::LightEdge, {*e},
                    std::to_string(h.degree(e->first) + h.degree(e->second))};
    } else if (mode == ColorMode::DeltaPlusOne) {
      r = config_reduction(h);
      if (!r) r = min_degree_reduction(h, 3);
    } else {
      r = alt_cycle_reduction(h);
      if (!r) r = alternator_reduction(h);
    }
    if (!r) break;
    std::sort(r->removed.begin(), r->removed.end());
    h = h.without_edges(r->removed);
    plan.reductions.push_back(std::move(*r));
  }
  plan.base_edges = h.edges();
  return plan;
}

namespace {

// Colours `todo` given the fixed colours of `colored` edges, by exhaustive
// search over the todo edges only. `avail_min` aborts when some edge has
// fewer available colours.
std::optional<std::vector<int>> extend(const Graph& g, const ListAssignment& L,
                                       const std::vector<int>& color, const std::vector<int>& todo,
                                       bool greedy, int avail_min) {
  const auto es = g.edges();
  std::vector<std::vector<int>> at(g.vertex_count());
  for (std::size_t i = 0; i < es.size(); ++i)
    if (color[i] > 0) {
      at[es[i].first].push_back(color[i]);
      at[es[i].second].push_back(color[i]);
    }
  std::vector<Edge> sub;
  ListAssignment sl;
  for (int e : todo) {
    ColorList avail;
    for (int c : L.lists[e]) {
      auto used = [&](Vertex x) { return std::count(at[x].begin(), at[x].end(), c) > 0; };
      if (!used(es[e].first) && !used(es[e].second)) avail.push_back(c);
    }
    std::sort(avail.begin(), avail.end());
    if (static_cast<int>(avail.size()) < avail_min) return std::nullopt;
    sub.push_back(es[e]);
    sl.lists.push_back(std::move(avail));
  }
  if (greedy) {
    std::vector<int> out;
    for (std::size_t i = 0; i < todo.size(); ++i) {
      int pick = 0;
      for (int c : sl.lists[i]) {
        bool clash = false;
        for (std::size_t j = 0; j < i; ++j)
          if (out[j] == c && (sub[j].first == sub[i].first || sub[j].first == sub[i].second ||
                              sub[j].second == sub[i].first || sub[j].second == sub[i].second))
            clash = true;
        if (!clash) {
          pick = c;
          break;
        }
      }
      if (pick == 0) return std::nullopt;
      out.push_back(pick);
    }
    return out;
  }
  // the removed edges as a graph of their own, lists indexed like its edges()
  Graph sg = build_graph(g.vertex_count(), sub);
  ListAssignment ordered;
  ordered.lists.resize(sub.size());
  for (std::size_t i = 0; i < sub.size(); ++i)
    ordered.lists[sg.edge_index(sub[i].first, sub[i].second)] = sl.lists[i];
  auto c = exact_list_color(sg, ordered);
  if (!c) return std::nullopt;
  std::vector<int> out;
  for (const auto& e : sub) out.push_back((*c)[sg.edge_index(e.first, e.second)]);
  return out;
}

void check_mode(const Graph& g, const ListAssignment& L, ColorMode mode) {
  const int delta = g.max_degree();
  const int need_delta = mode == ColorMode::DeltaPlusOne ? 8 : 12;
  const int need_list = mode == ColorMode::DeltaPlusOne ? delta + 1 : delta;
  if (delta < need_delta)
    throw ColorError(ColorError::Kind::PreconditionViolated,
                     "maximum degree " + std::to_string(delta) + " < " + std::to_string(need_delta));
  for (std::size_t i = 0; i < L.lists.size(); ++i) {
    ColorList l = L.lists[i];
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    if (static_cast<int>(l.size()) < need_list)
      throw ColorError(ColorError::Kind::PreconditionViolated,
                       "list " + std::to_string(i) + " has " + std::to_string(l.size()) +
                           " colours, need " + std::to_string(need_list));
  }
}

}  // namespace

ColorOutcome structured_color_unchecked(const Graph& g, const ListAssignment& L,
                                        const ReductionPlan& plan) {
  check_sizes(g, L);
  const auto es = g.edges();
  const int m = g.edge_count();
  auto index = [&](const Edge& e) { return g.edge_index(e.first, e.second); };
  ColorOutcome out;
  std::vector<int> color(m, 0);
  std::vector<char> present(m, 0);

  // base
  {
    Graph base = build_graph(g.vertex_count(), plan.base_edges);
    ListAssignment bl;
    for (const auto& e : base.edges()) bl.lists.push_back(L.lists[index(e)]);
    auto c = exact_list_color(base, bl);
    if (!c) return out;
    auto bes = base.edges();
    for (std::size_t i = 0; i < bes.size(); ++i) {
      color[index(bes[i])] = (*c)[i];
      present[index(bes[i])] = 1;
      out.trace.base.emplace_back(bes[i], (*c)[i]);
    }
  }

  for (auto it = plan.reductions.rbegin(); it != plan.reductions.rend(); ++it) {
    std::vector<int> todo;
    for (const auto& e : it->removed) todo.push_back(index(e));
    TraceStep step{it->kind, it->removed, "", {}};
    std::optional<std::vector<int>> got;
    switch (it->kind) {
      case StepKind::LightEdge:
        step.method = "greedy";
        got = extend(g, L, color, todo, true, 1);
        break;
      case StepKind::AltCycle:
        step.method = "even-cycle";
        got = extend(g, L, color, todo, false, 2);
        break;
      default:
        step.method = "local-search";
        got = extend(g, L, color, todo, false, 1);
        break;
    }
    if (got) {
      for (std::size_t i = 0; i < todo.size(); ++i) {
        color[todo[i]] = (*got)[i];
        present[todo[i]] = 1;
        step.assigned.emplace_back(es[todo[i]], (*got)[i]);
      }
      out.trace.steps.push_back(std::move(step));
      continue;
    }
    // exact colouring of G_i, recorded as its own step
    for (int e : todo) present[e] = 1;
    std::vector<Edge> gi;
    for (int e = 0; e < m; ++e)
      if (present[e]) gi.push_back(es[e]);
    Graph h = build_graph(g.vertex_count(), gi);
    ListAssignment hl;
    for (const auto& e : h.edges()) hl.lists.push_back(L.lists[index(e)]);
    auto c = exact_list_color(h, hl);
    if (!c) return out;
    TraceStep fb{StepKind::Fallback, it->removed, "exact", {}};
    auto hes = h.edges();
    for (std::size_t i = 0; i < hes.size(); ++i) {
      color[index(hes[i])] = (*c)[i];
      fb.assigned.emplace_back(hes[i], (*c)[i]);
    }
    ++out.trace.fallbacks;
    out.trace.steps.push_back(std::move(fb));
  }
  out.coloring = color;
  return out;
}

ColorOutcome structured_color(const Graph& g, const ListAssignment& L, const ReductionPlan& plan) {
  check_sizes(g, L);
  check_mode(g, L, plan.mode);
  return structured_color_unchecked(g, L, plan);
}

ColorOutcome structured_color(const Graph& g, const ListAssignment& L, ColorMode mode) {
  check_sizes(g, L);
  check_mode(g, L, mode);
  return structured_color_unchecked(g, L, plan_reductions(g, mode));
}

EdgeColoring replay_trace(const Graph& g, const ReductionTrace& trace) {
  EdgeColoring c(g.edge_count(), 0);
  for (const auto& [e, col] : trace.base) c[g.edge_index(e.first, e.second)] = col;
  for (const auto& s : trace.steps)
    for (const auto& [e, col] : s.assigned) c[g.edge_index(e.first, e.second)] = col;
  return c;
}

namespace {

ColorList random_subset(SplitMix64& rng, int palette, int k) {
  std::vector<int> all(palette);
  std::iota(all.begin(), all.end(), 1);
  rng.shuffle(all);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

// All k-subsets of {1..p} as bitmasks, in lexicographic order of their
// sorted elements.
std::vector<unsigned> subsets(int p, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int c = from; c <= p; ++c) {
      cur.push_back(c);
      rec(c + 1);
      cur.pop_back();
    }
  };
  rec(1);
  std::vector<unsigned> masks;
  for (auto& s : out) {
    unsigned mk = 0;
    for (int c : s) mk |= 1u << (c - 1);
    masks.push_back(mk);
  }
  return masks;
}

std::vector<ListAssignment> exhaustive_small(const Graph& g, int k) {
  const int m = g.edge_count();
  if (m > 6)
    throw ColorError(ColorError::Kind::TooLargeForExhaustive,
                     "exhaustive lists need m <= 6, got " + std::to_string(m));
  const int p = k + 2;
  auto masks = subsets(p, k);
  std::map<unsigned, int> rank;
  for (std::size_t i = 0; i < masks.size(); ++i) rank[masks[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  auto apply = [&](const std::vector<int>& pi, unsigned mk) {
    unsigned r = 0;
    for (int c = 0; c < p; ++c)
      if ((mk >> c) & 1u) r |= 1u << pi[c];
    return r;
  };

  std::vector<int> chosen;  // ranks
  // minimal in its orbit, which holds for every prefix of a minimal sequence
  auto minimal = [&]() {
    for (const auto& pi : perms) {
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        int r = rank[apply(pi, masks[chosen[i]])];
        if (r < chosen[i]) return false;
        if (r > chosen[i]) break;
      }
    }
    return true;
  };
  std::vector<ListAssignment> out;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(chosen.size()) == m) {
      ListAssignment L;
      for (int r : chosen) {
        ColorList l;
        for (int c = 0; c < p; ++c)
          if ((masks[r] >> c) & 1u) l.push_back(c + 1);
        L.lists.push_back(std::move(l));
      }
      out.push_back(std::move(L));
      return;
    }
    for (std::size_t r = 0; r < masks.size(); ++r) {
      chosen.push_back(static_cast<int>(r));
      if (minimal()) rec();
      chosen.pop_back();
    }
  };
  rec();
  return out;
}

}  // namespace

std::vector<ListAssignment> adversarial_lists(const Graph& g, int k, ListStrategy strategy,
                                              std::uint64_t seed, int count) {
  if (k < 1) throw ColorError(ColorError::Kind::PreconditionViolated, "k must be positive");
  if (strategy == ListStrategy::ExhaustiveSmall) return exhaustive_small(g, k);
  const auto es = g.edges();
  SplitMix64 rng(seed);
  const int palette = k + 3;
  std::vector<ListAssignment> out;
  for (int t = 0; t < count; ++t) {
    ListAssignment L;
    if (strategy == ListStrategy::UniformRandom) {
      for (std::size_t i = 0; i < es.size(); ++i) L.lists.push_back(random_subset(rng, palette, k));
    } else {
      // each vertex prefers a core of k colours; an edge takes the shared
      // part of its ends' cores first
      std::vector<ColorList> core(g.vertex_count());
      for (auto& c : core) c = random_subset(rng, palette, k);
      for (auto [u, v] : es) {
        ColorList both, either, rest;
        for (int c = 1; c <= palette; ++c) {
          bool a = std::binary_search(core[u].begin(), core[u].end(), c);
          bool b = std::binary_search(core[v].begin(), core[v].end(), c);
          (a && b ? both : a || b ? either : rest).push_back(c);
        }
        rng.shuffle(either);
        rng.shuffle(rest);
        ColorList l = both;
        for (int c : either)
          if (static_cast<int>(l.size()) < k) l.push_back(c);
        for (int c : rest)
          if (static_cast<int>(l.size()) < k) l.push_back(c);
        std::sort(l.begin(), l.end());
        L.lists.push_back(std::move(l));
      }
    }
    out.push_back(std::move(L));
  }
  return out;
}

}  // namespace k5mf
