#include "bergeham/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bergeham {

uint64_t mix64(uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

uint64_t sample_seed(uint64_t seed, uint64_t index) {
  return mix64(seed ^ mix64(index + 0x9E3779B97F4A7C15ull));
}

Hypergraph gen_hprime(int n, int r) {
  if (r < 3 || r >= n) throw std::invalid_argument("gen_hprime needs 3 <= r < n");
  std::vector<std::vector<Vertex>> edges;
  // all r-subsets of 0..n-2, lexicographic
  std::vector<Vertex> pick(r);
  auto rec = [&](auto&& self, int from, int depth) -> void {
    if (depth == r) {
      edges.emplace_back(pick);
      return;
    }
    for (Vertex v = from; v <= n - 1 - (r - depth); ++v) {
      pick[depth] = v;
      self(self, v + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  std::vector<Vertex> extra;
  for (Vertex v = 0; v <= r - 2; ++v) extra.push_back(v);
  extra.push_back(n - 1);
  edges.push_back(std::move(extra));
  return Hypergraph(n, std::move(edges));
}

Hypergraph gen_blowup(int k, int part_size) {
  if (k < 2 || part_size < 1) throw std::invalid_argument("gen_blowup needs k >= 2, part_size >= 1");
  long long n = static_cast<long long>(k) * part_size;
  long long pairs = static_cast<long long>(k) * (k - 1) / 2;
  if (pairs >= n) throw std::invalid_argument("gen_blowup needs C(k,2) < k*part_size");
  std::vector<std::vector<Vertex>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      std::vector<Vertex> e;
      for (int t = 0; t < part_size; ++t) e.push_back(i * part_size + t);
      for (int t = 0; t < part_size; ++t) e.push_back(j * part_size + t);
      edges.push_back(std::move(e));
    }
  return Hypergraph(static_cast<int>(n), std::move(edges));
}

Hypergraph gen_luwang() {
  return Hypergraph(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {2, 3, 4}});
}

Hypergraph gen_random(int n, double p2, double p3, uint64_t seed) {
  if (n < 3) throw std::invalid_argument("gen_random needs n >= 3");
  if (p2 < 0 || p2 > 1 || p3 < 0 || p3 > 1)
    throw std::invalid_argument("probabilities must lie in [0,1]");
  SplitMix64 rng(seed);
  std::vector<std::vector<Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.unit() < p2) edges.push_back({u, v});
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      for (Vertex w = v + 1; w < n; ++w)
        if (rng.unit() < p3) edges.push_back({u, v, w});
  return Hypergraph(n, std::move(edges));
}

namespace {

// Adds a random 3-edge containing the pair (a, b); returns false when all
// such edges already exist.
bool add_covering_edge(std::set<std::vector<Vertex>>& edges, int n, Vertex a, Vertex b,
                       SplitMix64& rng) {
  std::vector<Vertex> third;
  for (Vertex w = 0; w < n; ++w) {
    if (w == a || w == b) continue;
    std::vector<Vertex> e = {a, b, w};
    std::sort(e.begin(), e.end());
    if (!edges.count(e)) third.push_back(w);
  }
  if (third.empty()) return false;
  Vertex w = third[rng.below(third.size())];
  std::vector<Vertex> e = {a, b, w};
  std::sort(e.begin(), e.end());
  edges.insert(e);
  return true;
}

Hypergraph from_edge_set(int n, const std::set<std::vector<Vertex>>& edges) {
  return Hypergraph(n, std::vector<std::vector<Vertex>>(edges.begin(), edges.end()));
}

}  // namespace

Hypergraph gen_random_covering(int n, uint64_t seed) {
  if (n < 3) throw std::invalid_argument("gen_random_covering needs n >= 3");
  SplitMix64 rng(seed);
  double p3 = 0.2 + 0.5 * rng.unit();
  Hypergraph start = gen_random(n, 0.0, p3, rng.next());
  std::set<std::vector<Vertex>> edges(start.edges().begin(), start.edges().end());
  while (true) {
    Hypergraph h = from_edge_set(n, edges);
    OreReport rep = ore_report(h);
    if (rep.covering) return h;
    auto [a, b] = *rep.witness_pair;
    add_covering_edge(edges, n, a, b, rng);  // cannot fail for a non-adjacent pair
  }
}

std::optional<Hypergraph> gen_random_ore(int n, int d0, uint64_t seed, int max_attempts) {
  if (n < 3) throw std::invalid_argument("gen_random_ore needs n >= 3");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    SplitMix64 rng(sample_seed(seed, attempt));
    double p3 = 0.2 + 0.5 * rng.unit();
    Hypergraph start = gen_random(n, 0.0, p3, rng.next());
    std::set<std::vector<Vertex>> edges(start.edges().begin(), start.edges().end());
    // Each densification step makes the minimizing pair adjacent, so this
    // terminates (a covering hypergraph satisfies any d0 vacuously).
    long long steps = static_cast<long long>(n) * n;
    while (steps-- > 0) {
      Hypergraph h = from_edge_set(n, edges);
      OreReport rep = ore_report(h);
      if (rep.certifies(d0)) return h;
      auto [a, b] = *rep.witness_pair;
      if (!add_covering_edge(edges, n, a, b, rng)) break;
    }
  }
  return std::nullopt;
}

}  // namespace bergeham
