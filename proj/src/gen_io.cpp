#include "k5mf/gen_io.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "k5mf/planarity.hpp"

namespace k5mf {

namespace {

int pos(const std::vector<Vertex>& r, Vertex w) {
  auto it = std::find(r.begin(), r.end(), w);
  return it == r.end() ? -1 : static_cast<int>(it - r.begin());
}

Vertex succ(const Rotation& rot, Vertex v, Vertex w) {
  const auto& r = rot[v];
  return r[(pos(r, w) + 1) % r.size()];
}

void insert_after(std::vector<Vertex>& r, Vertex a, Vertex x) {
  r.insert(r.begin() + pos(r, a) + 1, x);
}

void erase(std::vector<Vertex>& r, Vertex a) { r.erase(r.begin() + pos(r, a)); }

Graph icosahedron_graph() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    int a = 1 + i, b = 1 + (i + 1) % 5;
    int c = 6 + i, d = 6 + (i + 1) % 5;
    es.emplace_back(0, a);
    es.push_back(normalized(a, b));
    es.push_back(normalized(c, d));
    es.emplace_back(c, 11);
    es.push_back(normalized(a, c));
    es.push_back(normalized(b, c));
  }
  return build_graph(12, es);
}

PlaneEmbedding embed_or_throw(const Graph& g) {
  auto rot = planar_rotation(g);
  if (!rot) throw GenError(GenError::Kind::SearchFailed, "base graph is not planar");
  return PlaneEmbedding(g, std::move(*rot), 0);
}

// Stacks one vertex into each listed face of a triangulation.
Rotation stack_into(const PlaneEmbedding& emb, const std::vector<int>& faces) {
  Rotation rot = emb.rotation();
  for (int f : faces) {
    const auto& b = emb.faces()[f].boundary;
    stack_vertex(rot, b[0].tail, b[1].tail, b[2].tail);
  }
  return rot;
}

int first_face_with(const PlaneEmbedding& emb, Vertex v) {
  for (int f = 0; f < emb.face_count(); ++f)
    if (emb.on_face(v, f)) return f;
  return 0;
}

}  // namespace

Graph graph_of(const Rotation& rot) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < static_cast<Vertex>(rot.size()); ++u)
    for (Vertex v : rot[u])
      if (u < v) es.emplace_back(u, v);
  return build_graph(static_cast<int>(rot.size()), es);
}

Vertex stack_vertex(Rotation& rot, Vertex a, Vertex b, Vertex c) {
  Vertex x = static_cast<Vertex>(rot.size());
  rot.push_back({b, a, c});
  insert_after(rot[b], a, x);
  insert_after(rot[c], b, x);
  insert_after(rot[a], c, x);
  return x;
}

bool flip_edge(Rotation& rot, Vertex a, Vertex b) {
  if (rot[a].size() <= 3 || rot[b].size() <= 3) return false;
  Vertex c = succ(rot, b, a);
  Vertex d = succ(rot, a, b);
  if (c == d || pos(rot[c], d) >= 0) return false;
  // both sides must be triangles
  if (succ(rot, c, b) != a || succ(rot, d, a) != b) return false;
  erase(rot[a], b);
  erase(rot[b], a);
  insert_after(rot[d], a, c);
  insert_after(rot[c], b, d);
  return true;
}

PlaneEmbedding gen_triangulation(int n, std::uint64_t seed) {
  if (n < 4) throw GenError(GenError::Kind::BadParameter, "triangulation needs n >= 4");
  SplitMix64 rng(seed);
  Rotation rot = embed_or_throw(build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}))
                     .rotation();
  while (static_cast<int>(rot.size()) < n) {
    Graph g = graph_of(rot);
    auto faces = trace_faces(g, rot);
    const auto& b = faces[rng.below(faces.size())].boundary;
    stack_vertex(rot, b[0].tail, b[1].tail, b[2].tail);
  }
  for (int t = 0; t < 2 * n; ++t) {
    const auto es = graph_of(rot).edges();
    auto [a, b] = es[rng.below(es.size())];
    flip_edge(rot, a, b);
  }
  return PlaneEmbedding(graph_of(rot), rot, 0);
}

std::optional<std::vector<int>> satellite_faces(const PlaneEmbedding& emb,
                                                const std::vector<int>& need,
                                                const std::vector<int>& order) {
  const int n = emb.vertex_count();
  std::vector<std::vector<Vertex>> corners;
  for (int f : order) corners.push_back(emb.face_vertices(f));
  // avail[i][v]: faces from position i onward containing v
  std::vector<std::vector<int>> avail(order.size() + 1, std::vector<int>(n, 0));
  for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
    avail[i] = avail[i + 1];
    for (Vertex v : corners[i]) ++avail[i][v];
  }
  std::vector<int> left = need;
  std::vector<int> chosen;
  long budget = 2000000;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (--budget < 0) return false;
    for (Vertex v = 0; v < n; ++v)
      if (left[v] > avail[i][v]) return false;
    if (i == order.size()) return true;
    const auto& c = corners[i];
    bool fits = std::all_of(c.begin(), c.end(), [&](Vertex v) { return left[v] > 0; });
    if (fits) {
      for (Vertex v : c) --left[v];
      chosen.push_back(order[i]);
      if (rec(i + 1)) return true;
      chosen.pop_back();
      for (Vertex v : c) ++left[v];
    }
    return rec(i + 1);
  };
  if (!rec(0)) return std::nullopt;
  return chosen;
}

PlaneEmbedding gen_hub_satellite(int target_delta) {
  if (target_delta != 8)
    throw GenError(GenError::Kind::BadParameter, "hub-satellite family exists for delta 8 only");
  PlaneEmbedding base = embed_or_throw(icosahedron_graph());
  std::vector<int> need(12, 3), order(base.face_count());
  std::iota(order.begin(), order.end(), 0);
  auto faces = satellite_faces(base, need, order);
  if (!faces) throw GenError(GenError::Kind::SearchFailed, "no 12-face selection found");
  Rotation rot = stack_into(base, *faces);
  PlaneEmbedding out(graph_of(rot), rot, 0);
  return out.with_outer_face(first_face_with(out, 12));
}

PlaneEmbedding gen_hub_satellite_variant(std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    PlaneEmbedding base = [&] {
      if (rng.chance(1, 4)) return embed_or_throw(icosahedron_graph());
      int nb = 3 * rng.range(4, 7);
      return gen_triangulation(nb, rng.next());
    }();
    Rotation rot = base.rotation();
    auto badness = [&](const Rotation& r) {
      int b = 0;
      for (const auto& l : r) {
        int d = static_cast<int>(l.size());
        b += std::max(0, 4 - d) + std::max(0, d - 8);
      }
      return b;
    };
    for (int t = 0; t < 400 && badness(rot) > 0; ++t) {
      const auto es = graph_of(rot).edges();
      auto [a, b] = es[rng.below(es.size())];
      Rotation trial = rot;
      if (flip_edge(trial, a, b) && badness(trial) <= badness(rot)) rot = std::move(trial);
    }
    if (badness(rot) > 0) continue;
    PlaneEmbedding tri(graph_of(rot), rot, 0);
    const int nb = tri.vertex_count();
    std::vector<int> need(nb);
    for (Vertex v = 0; v < nb; ++v) need[v] = 8 - tri.degree(v);
    std::vector<int> order(tri.face_count());
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    auto faces = satellite_faces(tri, need, order);
    if (!faces) continue;
    Rotation full = stack_into(tri, *faces);
    // random relabelling
    const int n = static_cast<int>(full.size());
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    Rotation relabelled(n);
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w : full[v]) relabelled[perm[v]].push_back(perm[w]);
    PlaneEmbedding out(graph_of(relabelled), relabelled, 0);
    return out.with_outer_face(static_cast<int>(rng.below(out.face_count())));
  }
  throw GenError(GenError::Kind::SearchFailed, "no hub-satellite variant found");
}

Graph wagner_graph() {
  std::vector<Edge> es;
  for (int i = 0; i < 8; ++i) es.push_back(normalized(i, (i + 1) % 8));
  for (int i = 0; i < 4; ++i) es.emplace_back(i, i + 4);
  return build_graph(8, es);
}

CliqueSumBuilder::CliqueSumBuilder(Graph first) : g_(std::move(first)) {}

std::vector<Vertex> CliqueSumBuilder::glue(const Graph& part, const std::vector<Vertex>& part_clique,
                                           const std::vector<Vertex>& clique) {
  if (part_clique.size() != clique.size() || clique.size() > 3)
    throw GenError(GenError::Kind::BadParameter, "glue cliques must match and have size <= 3");
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      if (!g_.has_edge(clique[i], clique[j]) || !part.has_edge(part_clique[i], part_clique[j]))
        throw GenError(GenError::Kind::BadParameter, "glue set is not a clique");
  const int n0 = g_.vertex_count();
  std::vector<Vertex> id(part.vertex_count(), -1);
  for (std::size_t i = 0; i < clique.size(); ++i) id[part_clique[i]] = clique[i];
  int next = n0;
  for (Vertex v = 0; v < part.vertex_count(); ++v)
    if (id[v] < 0) id[v] = next++;
  std::vector<Edge> es = g_.edges();
  std::set<Edge> have(es.begin(), es.end());
  for (auto [a, b] : part.edges()) {
    Edge e = normalized(id[a], id[b]);
    if (have.insert(e).second) es.push_back(e);
  }
  g_ = build_graph(next, es);
  return id;
}

Graph gen_k5mf(int n, std::uint64_t seed, const K5mfOptions& opt) {
  if (n < 4) throw GenError(GenError::Kind::BadParameter, "gen_k5mf needs n >= 4");
  SplitMix64 rng(seed);

  auto planar_part = [&](int k) -> Graph {
    if (k < 4) {
      std::vector<Edge> es;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) es.emplace_back(i, j);
      return build_graph(k, es);
    }
    return gen_triangulation(k, rng.next()).graph();
  };
  // Drops random edges outside `keep` while the part stays connected.
  auto thin = [&](Graph part, const std::vector<Vertex>& keep) {
    std::vector<Edge> es = part.edges();
    rng.shuffle(es);
    for (const Edge& e : es) {
      if (!rng.chance(opt.delete_percent, 100)) continue;
      bool glue_edge = std::count(keep.begin(), keep.end(), e.first) &&
                       std::count(keep.begin(), keep.end(), e.second);
      if (glue_edge) continue;
      std::vector<Edge> one{e};
      Graph trial = part.without_edges(one);
      if (trial.is_connected()) part = std::move(trial);
    }
    return part;
  };

  int k0 = std::min(n, rng.range(std::max(4, opt.part_min), std::max(4, opt.part_max)));
  bool wag0 = n >= 8 && rng.chance(opt.wagner_percent, 100);
  CliqueSumBuilder b(wag0 ? wagner_graph() : thin(planar_part(k0), {}));

  while (b.graph().vertex_count() < n) {
    const Graph& g = b.graph();
    const int remaining = n - g.vertex_count();
    Vertex hub = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) > g.degree(hub)) hub = v;
    bool at_hub = rng.chance(opt.hub_percent, 100);

    // glue clique in the current graph
    std::vector<std::vector<Vertex>> cands;
    int s = rng.range(1, 3);
    if (s == 3) {
      for (auto [u, v] : g.edges())
        for (Vertex w : g.neighbors(v))
          if (w > v && g.has_edge(u, w) && (!at_hub || u == hub || v == hub || w == hub))
            cands.push_back({u, v, w});
      if (cands.empty()) s = 2;
    }
    if (s == 2) {
      for (auto [u, v] : g.edges())
        if (!at_hub || u == hub || v == hub) cands.push_back({u, v});
      if (cands.empty()) s = 1;
    }
    if (s == 1) {
      if (at_hub) cands.push_back({hub});
      else
        for (Vertex v = 0; v < g.vertex_count(); ++v) cands.push_back({v});
    }
    std::vector<Vertex> clique = cands[rng.below(cands.size())];
    rng.shuffle(clique);

    bool wagner = s <= 2 && remaining >= 8 - s && rng.chance(opt.wagner_percent, 100);
    Graph part;
    std::vector<Vertex> pc;
    if (wagner) {
      part = wagner_graph();
      pc = s == 1 ? std::vector<Vertex>{0} : std::vector<Vertex>{0, 1};
    } else {
      int k = rng.range(opt.part_min, opt.part_max);
      k = std::max(k, s + 1);
      k = std::min(k, remaining + s);
      part = planar_part(k);
      if (s == 1) {
        Vertex best = 0;
        for (Vertex v = 0; v < part.vertex_count(); ++v)
          if (part.degree(v) > part.degree(best)) best = v;
        pc = {at_hub ? best : static_cast<Vertex>(rng.below(part.vertex_count()))};
      } else if (s == 2) {
        auto e = part.edges()[rng.below(part.edges().size())];
        pc = {e.first, e.second};
      } else {
        std::vector<std::vector<Vertex>> tris;
        for (auto [u, v] : part.edges())
          for (Vertex w : part.neighbors(v))
            if (w > v && part.has_edge(u, w)) tris.push_back({u, v, w});
        pc = tris[rng.below(tris.size())];
      }
      rng.shuffle(pc);
      part = thin(part, pc);
    }
    b.glue(part, pc, clique);
  }
  return b.graph();
}

// ---------------------------------------------------------------------------
// formats

std::string write_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int sh = 12; sh >= 0; sh -= 6) out.push_back(static_cast<char>(((n >> sh) & 63) + 63));
  }
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph read_graph6(const std::string& raw) {
  std::string s = raw;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  std::size_t p = 0;
  auto byte = [&](std::size_t i) {
    if (i >= s.size()) throw ParseError(1, static_cast<int>(i), "graph6 string too short");
    int c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw ParseError(1, static_cast<int>(i), "byte outside 63..126");
    return c - 63;
  };
  if (s.empty()) throw ParseError(1, 0, "empty graph6 string");
  int n = 0;
  if (s[0] == '~') {
    if (s.size() > 1 && s[1] == '~') throw ParseError(1, 1, "graphs this large are not supported");
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    p = 4;
  } else {
    n = byte(0);
    p = 1;
  }
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((pairs + 5) / 6);
  if (s.size() != p + need)
    throw ParseError(1, static_cast<int>(std::min(s.size(), p + need)),
                     "expected " + std::to_string(need) + " data bytes");
  std::vector<Edge> es;
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int b = byte(p + k / 6);
      if ((b >> (5 - k % 6)) & 1) es.emplace_back(i, j);
    }
  if (pairs % 6 != 0) {
    int last = byte(p + need - 1);
    if (last & ((1 << (6 - pairs % 6)) - 1))
      throw ParseError(1, static_cast<int>(p + need - 1), "nonzero padding bits");
  }
  return build_graph(n, es);
}

namespace {

struct Tokens {
  std::vector<std::string> words;
  std::vector<int> offsets;
};

Tokens split(const std::string& line) {
  Tokens t;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    t.words.push_back(line.substr(i, j - i));
    t.offsets.push_back(static_cast<int>(i));
    i = j;
  }
  return t;
}

int to_int(const std::string& w, int line, int offset) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(w, &used);
  } catch (const std::exception&) {
    throw ParseError(line, offset, "expected an integer, got '" + w + "'");
  }
  if (used != w.size()) throw ParseError(line, offset, "expected an integer, got '" + w + "'");
  return v;
}

// Non-empty lines with their numbers; '#' comments dropped.
std::vector<std::pair<int, std::string>> lines_of(std::istream& in, bool keep_comments = false) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!keep_comments) {
      auto h = line.find('#');
      if (h != std::string::npos) line.erase(h);
    }
    if (split(line).words.empty()) continue;
    out.emplace_back(no, line);
  }
  return out;
}

Graph build_or_parse_error(int n, const std::vector<Edge>& es, int line) {
  try {
    return build_graph(n, es);
  } catch (const GraphError& e) {
    throw ParseError(line, 0, e.what());
  }
}

}  // namespace

std::string write_edgelist(const Graph& g) {
  std::ostringstream out;
  out << "# n " << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_edgelist(std::istream& in) {
  int n = -1, max_id = -1, last = 0;
  std::vector<Edge> es;
  for (auto& [no, line] : lines_of(in, true)) {
    last = no;
    auto h = line.find('#');
    if (h != std::string::npos) {
      Tokens c = split(line.substr(h + 1));
      if (c.words.size() == 2 && c.words[0] == "n")
        n = to_int(c.words[1], no, static_cast<int>(h + 1 + c.offsets[1]));
      line.erase(h);
    }
    Tokens t = split(line);
    if (t.words.empty()) continue;
    if (t.words.size() != 2) throw ParseError(no, t.offsets[0], "expected 'u v'");
    int u = to_int(t.words[0], no, t.offsets[0]);
    int v = to_int(t.words[1], no, t.offsets[1]);
    if (u < 0 || v < 0) throw ParseError(no, t.offsets[0], "negative vertex id");
    es.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
  }
  if (n < 0) n = max_id + 1;
  if (max_id >= n) throw ParseError(last, 0, "vertex id exceeds declared n");
  return build_or_parse_error(n, es, last);
}

std::string write_rotfmt(const PlaneEmbedding& emb) {
  std::ostringstream out;
  out << emb.vertex_count() << ' ' << emb.graph().edge_count() << '\n';
  for (Vertex v = 0; v < emb.vertex_count(); ++v) {
    out << v << ':';
    for (Vertex w : emb.rotation()[v]) out << ' ' << w;
    out << '\n';
  }
  out << "outer:";
  for (Vertex v : emb.faces()[emb.outer_face()].walk()) out << ' ' << v;
  out << '\n';
  return out.str();
}

PlaneEmbedding read_rotfmt(std::istream& in) {
  auto lines = lines_of(in);
  if (lines.empty()) throw ParseError(1, 0, "empty rotfmt input");
  Tokens head = split(lines[0].second);
  if (head.words.size() != 2) throw ParseError(lines[0].first, 0, "expected 'n m'");
  int n = to_int(head.words[0], lines[0].first, head.offsets[0]);
  int m = to_int(head.words[1], lines[0].first, head.offsets[1]);
  if (n < 1 || m < 0) throw ParseError(lines[0].first, 0, "bad n or m");
  Rotation rot(n);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> outer;
  bool have_outer = false;
  int last = lines[0].first;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto& [no, line] = lines[i];
    last = no;
    Tokens t = split(line);
    if (t.words[0] == "outer:") {
      if (have_outer) throw ParseError(no, 0, "second outer line");
      have_outer = true;
      for (std::size_t j = 1; j < t.words.size(); ++j)
        outer.push_back(to_int(t.words[j], no, t.offsets[j]));
      continue;
    }
    const std::string& w0 = t.words[0];
    if (w0.size() < 2 || w0.back() != ':') throw ParseError(no, 0, "expected 'v:'");
    int v = to_int(w0.substr(0, w0.size() - 1), no, 0);
    if (v < 0 || v >= n) throw ParseError(no, 0, "vertex out of range");
    if (seen[v]) throw ParseError(no, 0, "rotation given twice");
    seen[v] = 1;
    for (std::size_t j = 1; j < t.words.size(); ++j) {
      int w = to_int(t.words[j], no, t.offsets[j]);
      if (w < 0 || w >= n) throw ParseError(no, t.offsets[j], "neighbour out of range");
      rot[v].push_back(w);
    }
  }
  if (!have_outer) throw ParseError(last, 0, "missing outer line");
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : rot[u])
      if (u < v) es.emplace_back(u, v);
  Graph g = build_or_parse_error(n, es, last);
  if (g.edge_count() != m) throw ParseError(lines[0].first, head.offsets[1], "edge count mismatch");
  try {
    PlaneEmbedding emb(g, rot, 0);
    for (int f = 0; f < emb.face_count(); ++f) {
      auto w = emb.faces()[f].walk();
      if (w.size() != outer.size()) continue;
      for (std::size_t s = 0; s < w.size() || (w.empty() && s == 0); ++s) {
        if (w.empty() || std::equal(w.begin(), w.end(), outer.begin()))
          return emb.with_outer_face(f);
        std::rotate(w.begin(), w.begin() + 1, w.end());
      }
    }
  } catch (const EmbeddingError& e) {
    throw ParseError(last, 0, e.what());
  } catch (const GraphError& e) {
    throw ParseError(last, 0, e.what());
  }
  throw ParseError(last, 0, "outer walk is not a face");
}

std::string write_lists(const Graph& g, const ListAssignment& L, int k) {
  std::ostringstream out;
  out << g.edge_count() << ' ' << k << '\n';
  for (int i = 0; i < g.edge_count(); ++i) {
    out << g.edges()[i].first << ' ' << g.edges()[i].second << " :";
    for (int c : L.lists[i]) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

ListAssignment read_lists(const Graph& g, std::istream& in, int* k_out) {
  auto lines = lines_of(in);
  if (lines.empty()) throw ParseError(1, 0, "empty lists input");
  Tokens head = split(lines[0].second);
  if (head.words.size() != 2) throw ParseError(lines[0].first, 0, "expected 'm k'");
  int m = to_int(head.words[0], lines[0].first, head.offsets[0]);
  int k = to_int(head.words[1], lines[0].first, head.offsets[1]);
  if (m != g.edge_count()) throw ParseError(lines[0].first, 0, "edge count does not match graph");
  if (static_cast<int>(lines.size()) != m + 1)
    throw ParseError(lines.back().first, 0, "expected one line per edge");
  ListAssignment L;
  L.lists.assign(m, {});
  std::vector<char> seen(m, 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto& [no, line] = lines[i];
    Tokens t = split(line);
    if (t.words.size() < 3 || t.words[2] != ":") throw ParseError(no, 0, "expected 'u v : c...'");
    int u = to_int(t.words[0], no, t.offsets[0]);
    int v = to_int(t.words[1], no, t.offsets[1]);
    int e = g.edge_index(u, v);
    if (e < 0) throw ParseError(no, t.offsets[0], "not an edge of the graph");
    if (seen[e]) throw ParseError(no, t.offsets[0], "edge listed twice");
    seen[e] = 1;
    for (std::size_t j = 3; j < t.words.size(); ++j)
      L.lists[e].push_back(to_int(t.words[j], no, t.offsets[j]));
    if (static_cast<int>(L.lists[e].size()) < k) throw ParseError(no, 0, "list shorter than k");
    auto sorted = L.lists[e];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError(no, 0, "repeated colour in list");
  }
  if (k_out) *k_out = k;
  return L;
}

std::string write_coloring(const Graph& g, const EdgeColoring& c) {
  std::ostringstream out;
  for (int i = 0; i < g.edge_count(); ++i)
    out << g.edges()[i].first << ' ' << g.edges()[i].second << " = " << c[i] << '\n';
  return out.str();
}

EdgeColoring read_coloring(const Graph& g, std::istream& in) {
  EdgeColoring c(g.edge_count(), 0);
  std::vector<char> seen(g.edge_count(), 0);
  int last = 0;
  for (auto& [no, line] : lines_of(in)) {
    last = no;
    Tokens t = split(line);
    if (t.words.size() != 4 || t.words[2] != "=") throw ParseError(no, 0, "expected 'u v = c'");
    int e = g.edge_index(to_int(t.words[0], no, t.offsets[0]), to_int(t.words[1], no, t.offsets[1]));
    if (e < 0) throw ParseError(no, t.offsets[0], "not an edge of the graph");
    if (seen[e]) throw ParseError(no, t.offsets[0], "edge coloured twice");
    seen[e] = 1;
    c[e] = to_int(t.words[3], no, t.offsets[3]);
  }
  if (std::count(seen.begin(), seen.end(), 0) > 0) throw ParseError(last, 0, "uncoloured edge");
  return c;
}

Graph read_graph_any(std::istream& in, GraphFormat format) {
  switch (format) {
    case GraphFormat::Graph6: {
      std::string line;
      int no = 0;
      while (std::getline(in, line)) {
        ++no;
        if (!split(line).words.empty()) return read_graph6(split(line).words[0]);
      }
      throw ParseError(no, 0, "no graph6 line");
    }
    case GraphFormat::Edgelist: return read_edgelist(in);
    case GraphFormat::Rotfmt: return read_rotfmt(in).graph();
  }
  return {};
}

}  // namespace k5mf
