#include "k5mf/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "k5mf/configs.hpp"
#include "k5mf/gen_io.hpp"
#include "k5mf/planarity.hpp"

namespace k5mf::harness {

std::uint64_t sample_seed(std::uint64_t seed, std::size_t index) {
  SplitMix64 rng(seed ^ (0x5851f42d4c957f2dULL * (index + 1)));
  return rng.next();
}

Graph sample_k5mf(std::uint64_t seed, int min_delta, int n_lo, int n_hi) {
  SplitMix64 rng(seed);
  const int hub = min_delta >= 12 ? 90 : 60;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const int n = rng.range(n_lo, n_hi);
    Graph g = gen_k5mf(n, rng.next(), {.hub_percent = hub});
    if (g.max_degree() >= min_delta) return g;
  }
  throw GenError(GenError::Kind::SearchFailed, "no gen_k5mf sample reached the degree bound");
}

std::vector<Vertex> random_removal_set(const PlaneEmbedding& emb, SplitMix64& rng) {
  const Graph& g = emb.graph();
  std::vector<Vertex> cand = emb.face_vertices(emb.outer_face());
  rng.shuffle(cand);
  int want = rng.range(1, 3);
  std::vector<Vertex> Y;
  for (Vertex v : cand) {
    if (static_cast<int>(Y.size()) == want) break;
    bool ok = std::none_of(Y.begin(), Y.end(), [&](Vertex y) { return g.has_edge(v, y); });
    if (!ok) continue;
    Y.push_back(v);
    try {
      check_removal_set(emb, Y);
    } catch (const ConfigError&) {
      Y.pop_back();
    }
  }
  return Y;
}

PlaneSample sample_lemma31(std::uint64_t seed, bool canonical) {
  SplitMix64 rng(seed);
  PlaneEmbedding emb = canonical ? gen_hub_satellite() : gen_hub_satellite_variant(rng.next());
  for (;;) {
    PlaneEmbedding e = emb.with_outer_face(static_cast<int>(rng.below(emb.face_count())));
    auto Y = random_removal_set(e, rng);
    if (!Y.empty()) return {std::move(e), std::move(Y)};
  }
}

std::optional<std::string> lemma31_hypotheses(const PlaneEmbedding& emb,
                                              std::span<const Vertex> Y) {
  const Graph& g = emb.graph();
  const int delta = g.max_degree();
  std::vector<char> in_y(g.vertex_count(), 0);
  for (Vertex y : Y) in_y[y] = 1;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!in_y[v] && g.degree(v) < 3) return "vertex " + std::to_string(v) + " has degree < 3";
  for (auto [u, v] : g.edges())
    if (!in_y[u] && !in_y[v] && g.degree(u) + g.degree(v) < delta + 3)
      return "edge " + std::to_string(u) + "-" + std::to_string(v) + " is light";
  return std::nullopt;
}

PlaneSample sample_dependents(std::uint64_t seed) {
  SplitMix64 rng(seed);
  // sparse: at most two low neighbours per base vertex, so augmentation
  // rarely stalls; dense: base degrees topped up to 11..13 so every edge sum is >= 14
  const bool dense = rng.chance(1, 2);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    PlaneEmbedding base = gen_triangulation(rng.range(6, 14), rng.next());
    const int nb = base.vertex_count();
    std::vector<Edge> es = base.graph().edges();
    std::vector<int> deg = base.graph().degrees();
    std::vector<int> target(nb), low(nb, 0);
    for (int& t : target) t = rng.range(11, 13);
    const int cap = dense ? nb : 2;
    int next = nb;
    // degree-3 vertices stacked into faces
    for (const Face& f : base.faces()) {
      if (!rng.chance(1, 2)) continue;
      if (std::any_of(f.boundary.begin(), f.boundary.end(),
                      [&](const Dart& d) { return low[d.tail] >= cap; }))
        continue;
      for (const Dart& d : f.boundary) {
        es.emplace_back(d.tail, next);
        ++deg[d.tail];
        ++low[d.tail];
      }
      ++next;
    }
    // degree-2 vertices beside base edges; their ends must reach 12
    for (Vertex v = 0; v < nb; ++v) {
      if (deg[v] >= target[v]) continue;
      target[v] = std::max(target[v], 12);
      for (int guard = 0; deg[v] < target[v] && guard < 4 * nb; ++guard) {
        auto nbrs = base.graph().neighbors(v);
        Vertex w = nbrs[rng.below(nbrs.size())];
        if (low[v] >= cap || low[w] >= cap) break;
        target[w] = std::max(target[w], 12);
        es.emplace_back(v, next);
        es.emplace_back(w, next);
        ++deg[v], ++deg[w], ++low[v], ++low[w];
        ++next;
      }
    }
    Graph g = build_graph(next, es);
    if (dense) {
      bool ok = g.max_degree() >= 12;
      for (auto [u, v] : g.edges()) ok = ok && g.degree(u) + g.degree(v) >= 14;
      if (!ok) continue;
    } else {
      // base vertices must not be low themselves
      bool ok = true;
      for (Vertex v = 0; v < nb; ++v) ok = ok && g.degree(v) >= 4;
      if (!ok) continue;
    }
    auto emb = is_planar(g);
    if (!emb) continue;
    for (int tries = 0; tries < 20; ++tries) {
      PlaneEmbedding e = emb->with_outer_face(static_cast<int>(rng.below(emb->face_count())));
      auto Y = random_removal_set(e, rng);
      if (!Y.empty()) return {std::move(e), std::move(Y)};
    }
  }
  throw GenError(GenError::Kind::SearchFailed, "no dependent-rich sample found");
}

int thread_count() {
  if (const char* s = std::getenv("K5MF_THREADS")) {
    int t = std::atoi(s);
    if (t > 0) return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t threads = std::min<std::size_t>(thread_count(), std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto work = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
}

std::string join(std::span<const Vertex> vs, const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? sep : "") << vs[i];
  return out.str();
}

}  // namespace k5mf::harness
