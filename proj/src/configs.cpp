#include "k5mf/configs.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "k5mf/classify.hpp"

namespace k5mf {

const char* to_string(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::C1: return "C1";
    case ConfigKind::C2_1: return "C2_1";
    case ConfigKind::C2_2: return "C2_2";
    case ConfigKind::C2_3: return "C2_3";
    case ConfigKind::C2_4: return "C2_4";
    case ConfigKind::C2_5: return "C2_5";
    case ConfigKind::C2_6: return "C2_6";
    case ConfigKind::C2_7: return "C2_7";
    case ConfigKind::C2_8: return "C2_8";
    case ConfigKind::C2_9: return "C2_9";
  }
  return "?";
}

Vertex ConfigMatch::at(const std::string& role) const {
  for (const auto& [name, v] : binding)
    if (name == role) return v;
  throw std::out_of_range("no role " + role + " in " + to_string(kind));
}

std::vector<Vertex> ConfigMatch::vertices() const {
  std::vector<Vertex> out;
  for (const auto& b : binding) out.push_back(b.second);
  return out;
}

bool operator<(const ConfigMatch& a, const ConfigMatch& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  return a.vertices() < b.vertices();
}

void check_removal_set(const PlaneEmbedding& emb, std::span<const Vertex> Y) {
  const Graph& g = emb.graph();
  if (Y.empty() || Y.size() > 3)
    throw ConfigError("Y must have between 1 and 3 vertices, got " + std::to_string(Y.size()));
  for (std::size_t i = 0; i < Y.size(); ++i) {
    if (Y[i] < 0 || Y[i] >= g.vertex_count())
      throw ConfigError("Y vertex " + std::to_string(Y[i]) + " out of range");
    if (!emb.on_face(Y[i], emb.outer_face()))
      throw ConfigError("Y vertex " + std::to_string(Y[i]) + " is not on the outer face");
    for (std::size_t j = i + 1; j < Y.size(); ++j) {
      if (Y[i] == Y[j]) throw ConfigError("Y has a repeated vertex");
      if (g.has_edge(Y[i], Y[j]))
        throw ConfigError("Y vertices " + std::to_string(Y[i]) + " and " + std::to_string(Y[j]) +
                          " are adjacent");
    }
  }
  auto in_y = [&](Vertex v) { return std::find(Y.begin(), Y.end(), v) != Y.end(); };
  bool has_edge = std::any_of(g.edges().begin(), g.edges().end(),
                              [&](const Edge& e) { return !in_y(e.first) && !in_y(e.second); });
  if (!has_edge) throw ConfigError("G - Y has no edge");
}

namespace {

// A role is filled by a neighbour of the centre satisfying `ok`; when `after`
// names an earlier role the candidate must exceed that role's vertex
// (symmetry breaking between interchangeable roles).
struct Role {
  std::function<bool(const std::vector<Vertex>& prefix, Vertex cand)> ok;
  int after = -1;
};

class Matcher {
 public:
  Matcher(const PlaneEmbedding& emb, std::span<const Vertex> Y, const DegreeContext& ctx)
      : emb_(emb), g_(emb.graph()), d_(ctx.degree), in_y_(g_.vertex_count(), 0) {
    for (Vertex y : Y) in_y_[y] = 1;
    delta_ = ctx.max_degree;
  }

  std::vector<ConfigMatch> run(std::size_t limit) {
    limit_ = limit;
    if (limit_ == 0) return {};
    find_c1();
    if (delta_ == 8) {
      find_c2();
    }
    return std::move(out_);
  }

 private:
  bool full() const { return out_.size() >= limit_; }
  bool in_h(Vertex v) const { return !in_y_[v]; }
  bool weak(Vertex v, Vertex u) const { return is_weak_neighbor(emb_, v, u); }
  bool semiweak(Vertex v, Vertex u) const { return is_semiweak_neighbor(emb_, v, u); }
  NeighborTag special(Vertex v, Vertex u) const { return special_type(emb_, v, u, d_).tag; }

  void find_c1() {
    const int n = g_.vertex_count();
    for (Vertex u = 0; u < n && !full(); ++u) {
      if (!in_h(u) || d_[u] != 3) continue;
      for (Vertex v : g_.neighbors(u)) {
        for (Vertex w : g_.neighbors(v)) {
          if (w <= u || !in_h(w) || d_[w] != 3) continue;
          for (Vertex x : g_.neighbors(w)) {
            if (x <= v || !g_.has_edge(x, u)) continue;
            out_.push_back({ConfigKind::C1, {{"u", u}, {"v", v}, {"w", w}, {"x", x}}});
            if (full()) return;
          }
        }
      }
    }
  }

  void match_roles(ConfigKind kind, Vertex v, const std::vector<Role>& roles,
                   const std::function<void(const std::vector<Vertex>&)>& finish) {
    std::vector<Vertex> cands;
    for (Vertex u : g_.neighbors(v))
      if (in_h(u)) cands.push_back(u);
    std::vector<Vertex> chosen;
    std::function<void()> rec = [&]() {
      if (full()) return;
      if (chosen.size() == roles.size()) {
        finish(chosen);
        return;
      }
      const Role& r = roles[chosen.size()];
      for (Vertex u : cands) {
        if (std::find(chosen.begin(), chosen.end(), u) != chosen.end()) continue;
        if (r.after >= 0 && u <= chosen[r.after]) continue;
        if (!r.ok(chosen, u)) continue;
        chosen.push_back(u);
        rec();
        chosen.pop_back();
        if (full()) return;
      }
    };
    rec();
    (void)kind;
  }

  void emit(ConfigKind kind, Vertex v, const std::vector<Vertex>& us) {
    ConfigMatch m{kind, {{"v", v}}};
    for (std::size_t i = 0; i < us.size(); ++i) m.binding.emplace_back("u" + std::to_string(i + 1), us[i]);
    out_.push_back(std::move(m));
  }

  void find_c2() {
    const int n = g_.vertex_count();
    auto deg = [&](auto pred) {
      return [this, pred](const std::vector<Vertex>&, Vertex u) { return pred(d_[u]); };
    };
    auto weak_deg = [&](Vertex v, auto pred) {
      return [this, v, pred](const std::vector<Vertex>&, Vertex u) {
        return pred(d_[u]) && weak(v, u);
      };
    };
    auto eq = [](int k) { return [k](int d) { return d == k; }; };
    auto le = [](int k) { return [k](int d) { return d <= k; }; };

    using K = ConfigKind;
    for (K kind : {K::C2_1, K::C2_2, K::C2_3, K::C2_4, K::C2_5, K::C2_6, K::C2_7, K::C2_8, K::C2_9}) {
      for (Vertex v = 0; v < n && !full(); ++v) {
        if (!in_h(v)) continue;
        auto plain = [&](const std::vector<Vertex>& us) { emit(kind, v, us); };
        switch (kind) {
          case K::C2_1:
            if (d_[v] != 8) break;
            match_roles(kind, v,
                        {{weak_deg(v, eq(3))}, {weak_deg(v, eq(3)), 0}, {deg(le(5))}}, plain);
            break;
          case K::C2_2:
            if (d_[v] != 8) break;
            match_roles(kind, v,
                        {{weak_deg(v, eq(3))},
                         {[&, v](const std::vector<Vertex>&, Vertex u) {
                           return d_[u] == 3 && semiweak(v, u);
                         }},
                         {deg(le(5))},
                         {deg(le(5)), 2}},
                        plain);
            break;
          case K::C2_3:
            if (d_[v] != 8) break;
            match_roles(kind, v,
                        {{weak_deg(v, eq(3))},
                         {weak_deg(v, eq(4))},
                         {weak_deg(v, eq(4)), 1},
                         {weak_deg(v, le(5))}},
                        plain);
            break;
          case K::C2_4:
            if (d_[v] != 8) break;
            match_roles(kind, v,
                        {{weak_deg(v, eq(3))},
                         {deg(eq(4))},
                         {deg(le(5))},
                         {deg(le(5)), 2},
                         {deg(le(7))}},
                        plain);
            break;
          case K::C2_5:
            if (d_[v] != 8) break;
            match_roles(kind, v,
                        {{weak_deg(v, eq(3))},
                         {[&, v](const std::vector<Vertex>&, Vertex u) {
                           return special(v, u) == NeighborTag::E2;
                         }},
                         {weak_deg(v, le(5))},
                         {weak_deg(v, le(5)), 2}},
                        plain);
            break;
          case K::C2_6:
            if (d_[v] != 7) break;
            match_roles(kind, v,
                        {{deg(eq(5))},
                         {[&](const std::vector<Vertex>& p, Vertex u) {
                           return d_[u] == 6 && g_.has_edge(u, p[0]);
                         }},
                         {[&](const std::vector<Vertex>& p, Vertex u) {
                           return d_[u] == 5 && g_.has_edge(u, p[1]);
                         }}},
                        [&](const std::vector<Vertex>& us) {
                          for (Vertex w : g_.neighbors(us[2])) {
                            if (full()) return;
                            if (w == us[1] || d_[w] != 6) continue;
                            ConfigMatch m{kind, {{"v", v}, {"u1", us[0]}, {"u2", us[1]},
                                                 {"u3", us[2]}, {"w", w}}};
                            out_.push_back(std::move(m));
                          }
                        });
            break;
          case K::C2_7:
            if (d_[v] != 7) break;
            match_roles(kind, v,
                        {{weak_deg(v, eq(4))},
                         {weak_deg(v, eq(4)), 0},
                         {[&, v](const std::vector<Vertex>&, Vertex u) {
                           if (!weak(v, u)) return false;
                           if (d_[u] == 4) return true;
                           auto t = special(v, u);
                           return t == NeighborTag::S2 || t == NeighborTag::S3 ||
                                  t == NeighborTag::S4;
                         }}},
                        plain);
            break;
          case K::C2_8:
            if (d_[v] != 7) break;
            match_roles(kind, v,
                        {{deg(eq(4))},
                         {[&, v](const std::vector<Vertex>&, Vertex u) {
                           return special(v, u) == NeighborTag::S3;
                         }},
                         {deg(le(5))}},
                        plain);
            break;
          case K::C2_9:
            if (d_[v] != 5) break;
            match_roles(kind, v,
                        {{deg(eq(6))},
                         {[&](const std::vector<Vertex>& p, Vertex u) {
                           return d_[u] == 6 && g_.has_edge(u, p[0]);
                         }},
                         {[&](const std::vector<Vertex>& p, Vertex u) {
                            return d_[u] == 6 && g_.has_edge(u, p[1]);
                          },
                          0}},
                        plain);
            break;
          default:
            break;
        }
      }
      if (full()) return;
    }
  }

  const PlaneEmbedding& emb_;
  const Graph& g_;
  std::vector<int> d_;
  std::vector<char> in_y_;
  int delta_ = 0;
  std::size_t limit_ = 0;
  std::vector<ConfigMatch> out_;
};

}  // namespace

std::vector<ConfigMatch> find_lemma31_configs(const PlaneEmbedding& emb,
                                              std::span<const Vertex> Y,
                                              std::size_t limit) {
  return find_lemma31_configs(emb, Y, DegreeContext::of(emb.graph()), limit);
}

std::vector<ConfigMatch> find_lemma31_configs(const PlaneEmbedding& emb,
                                              std::span<const Vertex> Y,
                                              const DegreeContext& ctx,
                                              std::size_t limit) {
  check_removal_set(emb, Y);
  if (static_cast<int>(ctx.degree.size()) != emb.vertex_count())
    throw ConfigError("degree context does not match the embedding");
  return Matcher(emb, Y, ctx).run(limit);
}

// ---------------------------------------------------------------------------
// 2-alternating cycles

namespace {

struct Connector {
  Vertex a, b, via;
};

AlternatingCycle canonical_cycle(std::vector<Vertex> c) {
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c.size() > 2 && c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
  return {std::move(c)};
}

}  // namespace

std::vector<AlternatingCycle> find_2alt_cycles(const Graph& g, std::size_t limit) {
  const int n = g.vertex_count();
  // conn[h] lists (other hub, connector) pairs.
  std::vector<std::vector<std::pair<Vertex, Vertex>>> conn(n);
  for (Vertex c = 0; c < n; ++c) {
    if (g.degree(c) != 2) continue;
    Vertex a = g.neighbors(c)[0], b = g.neighbors(c)[1];
    conn[a].emplace_back(b, c);
    conn[b].emplace_back(a, c);
  }
  for (auto& l : conn) std::sort(l.begin(), l.end());
  auto connectors_between = [&](Vertex a, Vertex b) {
    int k = 0;
    for (auto& [o, c] : conn[a])
      if (o == b) ++k;
    return k;
  };

  std::set<AlternatingCycle> found;
  // 4-cycles: two connectors with the same pair of ends.
  for (Vertex a = 0; a < n && found.size() < limit; ++a) {
    for (std::size_t i = 0; i < conn[a].size(); ++i) {
      for (std::size_t j = i + 1; j < conn[a].size(); ++j) {
        auto [b1, c1] = conn[a][i];
        auto [b2, c2] = conn[a][j];
        if (b1 != b2 || b1 < a) continue;
        if (c1 == b1 || c2 == b1 || c1 == a || c2 == a) continue;
        found.insert(canonical_cycle({a, c1, b1, c2}));
      }
    }
  }

  // Longer cycles: chordless cycles of at least three hubs.
  std::vector<Vertex> hubs, vias;
  std::vector<char> on_cycle(n, 0);
  std::function<void(Vertex, bool)> extend = [&](Vertex start, bool must_close) {
    Vertex last = hubs.back();
    for (auto& [next, via] : conn[last]) {
      if (found.size() >= limit) return;
      if (on_cycle[via] || connectors_between(last, next) != 1) continue;
      if (next == start) {
        if (hubs.size() < 3) continue;
        std::vector<Vertex> seq;
        for (std::size_t i = 0; i < hubs.size(); ++i) {
          seq.push_back(hubs[i]);
          seq.push_back(i < vias.size() ? vias[i] : via);
        }
        found.insert(canonical_cycle(seq));
        continue;
      }
      if (must_close || next < start || on_cycle[next]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < hubs.size() && !chord; ++i)
        chord = connectors_between(next, hubs[i]) > 0;
      if (chord) continue;
      on_cycle[via] = 1;
      on_cycle[next] = 1;
      hubs.push_back(next);
      vias.push_back(via);
      extend(start, hubs.size() >= 3 && connectors_between(next, start) > 0);
      hubs.pop_back();
      vias.pop_back();
      on_cycle[next] = 0;
      on_cycle[via] = 0;
    }
  };
  for (Vertex s = 0; s < n && found.size() < limit; ++s) {
    if (conn[s].empty()) continue;
    hubs = {s};
    vias.clear();
    on_cycle[s] = 1;
    extend(s, false);
    on_cycle[s] = 0;
  }
  std::vector<AlternatingCycle> out(found.begin(), found.end());
  if (out.size() > limit) out.resize(limit);
  return out;
}

// ---------------------------------------------------------------------------
// 3-alternators and master assignment

namespace {

bool two_clause(const Graph& g, Vertex w, Vertex a, Vertex b) {
  int want = 14 - g.degree(w);
  return g.degree(a) == want && g.degree(b) == want;
}

// Largest subset of `cands` closed under the W-side condition, ignoring
// independence of U.
std::vector<Vertex> w_closed_core(const Graph& g, std::vector<Vertex> U) {
  const int n = g.vertex_count();
  std::vector<char> inU(n, 0);
  for (Vertex u : U) inU[u] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<char> seen(n, 0);
    for (Vertex u : U) {
      if (!inU[u]) continue;
      for (Vertex w : g.neighbors(u)) {
        if (seen[w]) continue;
        seen[w] = 1;
        std::vector<Vertex> in;
        for (Vertex x : g.neighbors(w))
          if (inU[x]) in.push_back(x);
        bool ok = in.size() >= 3 || (in.size() == 2 && two_clause(g, w, in[0], in[1]));
        if (!ok) {
          for (Vertex x : in) inU[x] = 0;
          changed = true;
        }
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex u : U)
    if (inU[u]) out.push_back(u);
  return out;
}

std::optional<std::vector<Vertex>> independent_core(const Graph& g, std::vector<Vertex> U,
                                                    int& budget) {
  if (--budget < 0) return std::nullopt;
  U = w_closed_core(g, std::move(U));
  if (U.empty()) return std::nullopt;
  for (Vertex a : U) {
    for (Vertex b : g.neighbors(a)) {
      if (b <= a || !std::binary_search(U.begin(), U.end(), b)) continue;
      for (Vertex drop : {b, a}) {
        std::vector<Vertex> rest;
        for (Vertex x : U)
          if (x != drop) rest.push_back(x);
        if (auto r = independent_core(g, rest, budget)) return r;
      }
      return std::nullopt;
    }
  }
  return U;
}

Alternator alternator_from(const Graph& g, const std::vector<Vertex>& U) {
  Alternator a;
  a.U = U;
  std::set<Vertex> W;
  for (Vertex u : U)
    for (Vertex w : g.neighbors(u)) {
      W.insert(w);
      a.F.push_back(normalized(u, w));
    }
  a.W.assign(W.begin(), W.end());
  std::sort(a.F.begin(), a.F.end());
  return a;
}

std::optional<Alternator> alternator_within(const Graph& g, std::span<const Vertex> Y,
                                            std::span<const Vertex> pool) {
  std::vector<char> in_y(g.vertex_count(), 0);
  for (Vertex y : Y) in_y[y] = 1;
  std::vector<Vertex> cands;
  for (Vertex v : pool) {
    if (in_y[v] || g.degree(v) < 2 || g.degree(v) > 3) continue;
    bool touches_y = false;
    for (Vertex w : g.neighbors(v)) touches_y |= in_y[w] != 0;
    if (!touches_y) cands.push_back(v);
  }
  std::sort(cands.begin(), cands.end());
  int budget = 100000;
  auto core = independent_core(g, cands, budget);
  if (!core) return std::nullopt;
  return alternator_from(g, *core);
}

}  // namespace

std::optional<Alternator> find_3alternator(const Graph& g, std::span<const Vertex> Y) {
  std::vector<Vertex> all(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
  return alternator_within(g, Y, all);
}

std::optional<Vertex> MasterAssignment::master_of(Vertex u) const {
  auto it = std::lower_bound(pairs.begin(), pairs.end(), std::pair<Vertex, Vertex>{u, -1});
  if (it != pairs.end() && it->first == u) return it->second;
  return std::nullopt;
}

std::vector<Vertex> dependent_candidates(const Graph& g, std::span<const Vertex> Y) {
  std::vector<char> in_y(g.vertex_count(), 0);
  for (Vertex y : Y) in_y[y] = 1;
  std::vector<Vertex> U;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in_y[v] || g.degree(v) > 3) continue;
    bool outside = false;
    for (Vertex w : g.neighbors(v)) outside |= !in_y[w];
    if (outside) U.push_back(v);
  }
  return U;
}

MasterResult assign_masters(const Graph& g, std::span<const Vertex> Y) {
  const int n = g.vertex_count();
  std::vector<char> in_y(n, 0);
  for (Vertex y : Y) in_y[y] = 1;
  const std::vector<Vertex> U = dependent_candidates(g, Y);
  std::vector<char> unassigned(n, 0), is_master(n, 0), in_u(n, 0);
  for (Vertex u : U) unassigned[u] = in_u[u] = 1;
  std::vector<int> master(n, -1);

  auto special = [&](Vertex w, Vertex u) { return g.degree(u) == 14 - g.degree(w); };
  bool progress = true;
  std::size_t remaining = U.size();
  while (progress && remaining > 0) {
    progress = false;
    for (Vertex u : U) {
      if (!unassigned[u]) continue;
      Vertex best = -1;
      bool best_binds = true;
      for (Vertex w : g.neighbors(u)) {
        // a dependent never doubles as a master
        if (in_y[w] || in_u[w]) continue;
        if (is_master[w]) throw std::logic_error("assign_masters: neighbour of an unassigned vertex is a master");
        int count = 0, specials = 0;
        for (Vertex x : g.neighbors(w))
          if (unassigned[x]) {
            ++count;
            specials += special(w, x) ? 1 : 0;
          }
        if (count > 2 || specials > 1) continue;
        bool binds = specials > 0;
        if (best < 0 || (best_binds && !binds)) {
          best = w;
          best_binds = binds;
        }
      }
      if (best < 0) continue;
      for (Vertex x : g.neighbors(best)) {
        if (!unassigned[x]) continue;
        unassigned[x] = 0;
        master[x] = best;
        --remaining;
      }
      is_master[best] = 1;
      progress = true;
    }
  }

  MasterAssignment ma;
  for (Vertex u : U) {
    if (master[u] < 0) continue;
    ma.pairs.emplace_back(u, master[u]);
    ma.residual.push_back(normalized(u, master[u]));
  }
  std::sort(ma.residual.begin(), ma.residual.end());
  if (remaining == 0) return ma;

  std::vector<Vertex> stuck;
  for (Vertex u : U)
    if (unassigned[u]) stuck.push_back(u);
  if (auto alt = alternator_within(g, Y, stuck)) return *alt;
  return AssignmentBlocked{std::move(ma), std::move(stuck)};
}

}  // namespace k5mf
