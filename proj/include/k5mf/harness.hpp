#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "k5mf/embedding.hpp"
#include "k5mf/graph.hpp"
#include "k5mf/rng.hpp"

namespace k5mf::harness {

// Seed of sample `index` in a batch started from `seed`.
std::uint64_t sample_seed(std::uint64_t seed, std::size_t index);

// gen_k5mf output with n in [n_lo, n_hi] and maximum degree >= min_delta;
// retries derived seeds until one qualifies.
Graph sample_k5mf(std::uint64_t seed, int min_delta, int n_lo = 20, int n_hi = 40);

struct PlaneSample {
  PlaneEmbedding emb;
  std::vector<Vertex> Y;
};

// Pairwise nonadjacent outer-face vertices, 1 to 3 of them, forming a valid
// removal set. Empty if none was found.
std::vector<Vertex> random_removal_set(const PlaneEmbedding& emb, SplitMix64& rng);

// Hub-satellite instance (canonical = the icosahedron one) with a random
// outer face and removal set.
PlaneSample sample_lemma31(std::uint64_t seed, bool canonical);

// nullopt when d(v) >= 3 on G - Y and d(u) + d(v) >= Delta + 3 on its edges;
// otherwise the first offending vertex or edge.
std::optional<std::string> lemma31_hypotheses(const PlaneEmbedding& emb,
                                              std::span<const Vertex> Y);

// Plane graph whose low vertices (degree 2 or 3) only touch vertices of a
// base triangulation. Half the samples are dense (Delta >= 12 and
// d(u) + d(v) >= 14 on every edge), half give each base vertex at most two
// low neighbours. Random outer face and removal set.
PlaneSample sample_dependents(std::uint64_t seed);

// K5MF_THREADS when set and positive, else the hardware concurrency.
int thread_count();

// Runs body(0..count-1) on thread_count() threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

std::string join(std::span<const Vertex> vs, const char* sep = " ");

}  // namespace k5mf::harness
