#include "bergeham/berge.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <numeric>

namespace bergeham {

Vertex BergeCycle::vertex_at(int pos) const {
  int t = length();
  return vertices[((pos % t) + t) % t];
}

EdgeId BergeCycle::edge_at(int pos) const {
  int t = length();
  return edge_ids[((pos % t) + t) % t];
}

namespace {

Violation fail(int index, std::string reason) { return Violation{false, index, std::move(reason)}; }

Violation check_distinct(const Hypergraph& h, const std::vector<Vertex>& vs,
                         const std::vector<EdgeId>& es) {
  std::vector<char> seen_v(h.vertex_count(), 0);
  for (size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || vs[i] >= h.vertex_count()) return fail(static_cast<int>(i), "vertex out of range");
    if (seen_v[vs[i]]) return fail(static_cast<int>(i), "duplicate vertex");
    seen_v[vs[i]] = 1;
  }
  std::vector<char> seen_e(h.edge_count(), 0);
  for (size_t i = 0; i < es.size(); ++i) {
    if (es[i] < 0 || es[i] >= h.edge_count()) return fail(static_cast<int>(i), "edge id out of range");
    if (seen_e[es[i]]) return fail(static_cast<int>(i), "duplicate edge");
    seen_e[es[i]] = 1;
  }
  return {};
}

}  // namespace

Violation validate_path(const Hypergraph& h, const BergePath& p) {
  if (p.vertices.size() < 2) return fail(0, "path needs at least 2 vertices");
  if (p.edge_ids.size() + 1 != p.vertices.size())
    return fail(0, "edge count must be vertex count - 1");
  if (auto v = check_distinct(h, p.vertices, p.edge_ids); !v.ok) return v;
  for (size_t i = 0; i < p.edge_ids.size(); ++i) {
    if (!h.edge_contains(p.edge_ids[i], p.vertices[i]) ||
        !h.edge_contains(p.edge_ids[i], p.vertices[i + 1]))
      return fail(static_cast<int>(i), "edge does not contain its vertex pair");
  }
  return {};
}

Violation validate_cycle(const Hypergraph& h, const BergeCycle& c) {
  if (c.vertices.size() < 3) return fail(0, "cycle needs at least 3 vertices");
  if (c.edge_ids.size() != c.vertices.size()) return fail(0, "edge count must equal vertex count");
  if (auto v = check_distinct(h, c.vertices, c.edge_ids); !v.ok) return v;
  size_t t = c.vertices.size();
  for (size_t i = 0; i < t; ++i) {
    if (!h.edge_contains(c.edge_ids[i], c.vertices[i]) ||
        !h.edge_contains(c.edge_ids[i], c.vertices[(i + 1) % t]))
      return fail(static_cast<int>(i), "edge does not contain its vertex pair");
  }
  return {};
}

std::string to_string(HamStatus s) {
  switch (s) {
    case HamStatus::hamiltonian: return "hamiltonian";
    case HamStatus::not_hamiltonian: return "not_hamiltonian";
    case HamStatus::timeout: return "timeout";
  }
  return "?";
}

namespace {

// Incremental SDR matching between pair slots and edges (Kuhn augmenting
// paths). push_pair either extends the matching or leaves it untouched;
// pop_pair rolls back via the flip log.
class SdrMatcher {
 public:
  explicit SdrMatcher(const Hypergraph& h)
      : h_(h), match_of_edge_(h.edge_count(), -1), stamp_(h.edge_count(), 0) {}

  bool push_pair(Vertex u, Vertex v) {
    slot_pairs_.emplace_back(u, v);
    slot_edge_.push_back(-1);
    log_marks_.push_back(log_.size());
    ++cur_stamp_;
    int slot = static_cast<int>(slot_pairs_.size()) - 1;
    if (augment(slot)) return true;
    slot_pairs_.pop_back();
    slot_edge_.pop_back();
    log_marks_.pop_back();
    return false;
  }

  void pop_pair() {
    size_t mark = log_marks_.back();
    while (log_.size() > mark) {
      const Flip& f = log_.back();
      match_of_edge_[f.e] = f.prev_edge_slot;
      slot_edge_[f.slot] = f.prev_slot_edge;
      log_.pop_back();
    }
    log_marks_.pop_back();
    slot_pairs_.pop_back();
    slot_edge_.pop_back();
  }

  EdgeId edge_for_slot(int slot) const { return slot_edge_[slot]; }

  int free_edge_count(Vertex u, Vertex v) const {
    int c = 0;
    for (EdgeId e : h_.edges_between(u, v))
      if (match_of_edge_[e] < 0) ++c;
    return c;
  }

 private:
  struct Flip {
    EdgeId e;
    int prev_edge_slot;
    int slot;
    EdgeId prev_slot_edge;
  };

  bool augment(int slot) {
    const auto& [u, v] = slot_pairs_[slot];
    for (EdgeId e : h_.edges_between(u, v)) {
      if (stamp_[e] == cur_stamp_) continue;
      stamp_[e] = cur_stamp_;
      if (match_of_edge_[e] < 0 || augment(match_of_edge_[e])) {
        log_.push_back({e, match_of_edge_[e], slot, slot_edge_[slot]});
        match_of_edge_[e] = slot;
        slot_edge_[slot] = e;
        return true;
      }
    }
    return false;
  }

  const Hypergraph& h_;
  std::vector<std::pair<Vertex, Vertex>> slot_pairs_;
  std::vector<EdgeId> slot_edge_;
  std::vector<int> match_of_edge_;
  std::vector<int> stamp_;
  int cur_stamp_ = 0;
  std::vector<Flip> log_;
  std::vector<size_t> log_marks_;
};

using Clock = std::chrono::steady_clock;

struct SearchCtx {
  const Hypergraph& h;
  SdrMatcher matcher;
  std::vector<Vertex> seq;
  std::vector<char> used;
  long long nodes = 0;
  long long max_nodes;
  double max_seconds;
  Clock::time_point start = Clock::now();
  bool timed_out = false;

  SearchCtx(const Hypergraph& hg, SearchBudget b)
      : h(hg), matcher(hg), used(hg.vertex_count(), 0), max_nodes(b.max_nodes),
        max_seconds(b.max_seconds) {}

  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start).count(); }

  // One node per extension attempt; wall clock sampled every 1024 nodes.
  bool tick() {
    if (timed_out) return false;
    ++nodes;
    if (nodes > max_nodes) timed_out = true;
    if ((nodes & 1023) == 0 && max_seconds > 0 && elapsed() > max_seconds) timed_out = true;
    return !timed_out;
  }

  // Unused shadow-neighbors of `last`, fail-first: fewest currently free
  // candidate edges, ties by vertex id.
  std::vector<Vertex> candidates(Vertex last) const {
    std::vector<Vertex> cand;
    for (Vertex v : h.shadow().neighbors(last))
      if (!used[v]) cand.push_back(v);
    std::vector<int> key(cand.size());
    for (size_t i = 0; i < cand.size(); ++i) key[i] = matcher.free_edge_count(last, cand[i]);
    std::vector<int> idx(cand.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
      if (key[a] != key[b]) return key[a] < key[b];
      return cand[a] < cand[b];
    });
    std::vector<Vertex> out(cand.size());
    for (size_t i = 0; i < idx.size(); ++i) out[i] = cand[idx[i]];
    return out;
  }
};

BergeCycle cycle_from_slots(const SearchCtx& ctx) {
  BergeCycle c;
  c.vertices = ctx.seq;
  for (size_t i = 0; i < ctx.seq.size(); ++i) c.edge_ids.push_back(ctx.matcher.edge_for_slot(static_cast<int>(i)));
  return c;
}

// Depth-first extension toward a cycle on exactly `target` vertices; all
// vertices must stay above the anchor ctx.seq[0] when min_anchor is set
// (used by the maximum-cycle search so the anchor is the set minimum).
bool dfs_cycle(SearchCtx& ctx, int target, bool min_anchor) {
  int t = static_cast<int>(ctx.seq.size());
  if (t == target) {
    if (ctx.seq[1] >= ctx.seq[target - 1]) return false;  // canonical direction
    if (!ctx.matcher.push_pair(ctx.seq[target - 1], ctx.seq[0])) return false;
    return true;
  }
  Vertex last = ctx.seq.back();
  for (Vertex v : ctx.candidates(last)) {
    if (min_anchor && v < ctx.seq[0]) continue;
    if (t == target - 1 && !ctx.h.shadow().adjacent(v, ctx.seq[0])) continue;
    if (!ctx.tick()) return false;
    if (!ctx.matcher.push_pair(last, v)) continue;
    ctx.seq.push_back(v);
    ctx.used[v] = 1;
    if (dfs_cycle(ctx, target, min_anchor)) return true;
    ctx.used[v] = 0;
    ctx.seq.pop_back();
    ctx.matcher.pop_pair();
    if (ctx.timed_out) return false;
  }
  return false;
}

}  // namespace

bool berge_sequence_feasible(const Hypergraph& h, std::span<const Vertex> seq, bool close_cycle) {
  if (seq.size() < 2 || (close_cycle && seq.size() < 3))
    throw std::invalid_argument("sequence too short");
  std::vector<char> used(h.vertex_count(), 0);
  for (Vertex v : seq) {
    if (v < 0 || v >= h.vertex_count()) throw std::invalid_argument("vertex out of range");
    if (used[v]) throw std::invalid_argument("repeated vertex in sequence");
    used[v] = 1;
  }
  SdrMatcher m(h);
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    if (!m.push_pair(seq[i], seq[i + 1])) return false;
  if (close_cycle && !m.push_pair(seq.back(), seq.front())) return false;
  return true;
}

HamiltonicityVerdict find_hamiltonian_berge_cycle(const Hypergraph& h, SearchBudget budget) {
  int n = h.vertex_count();
  if (n < 3) throw std::invalid_argument("need at least 3 vertices");
  HamiltonicityVerdict verdict;
  SearchCtx ctx(h, budget);

  // A Hamiltonian Berge cycle needs n distinct edges, two shadow neighbors
  // and two incident edges per vertex.
  bool pruned = h.edge_count() < n;
  for (Vertex v = 0; v < n && !pruned; ++v)
    pruned = h.shadow().degree(v) < 2 || h.edges_at(v).size() < 2;
  if (!pruned) {
    ctx.seq.push_back(0);
    ctx.used[0] = 1;
    if (dfs_cycle(ctx, n, false)) {
      verdict.status = HamStatus::hamiltonian;
      verdict.certificate = cycle_from_slots(ctx);
      assert(validate_cycle(h, *verdict.certificate).ok);
    } else {
      verdict.status = ctx.timed_out ? HamStatus::timeout : HamStatus::not_hamiltonian;
    }
  }
  verdict.nodes_explored = ctx.nodes;
  verdict.elapsed_seconds = ctx.elapsed();
  return verdict;
}

HamPathResult find_hamiltonian_berge_path(const Hypergraph& h, SearchBudget budget,
                                          std::optional<std::pair<Vertex, Vertex>> endpoints) {
  int n = h.vertex_count();
  if (n < 2) throw std::invalid_argument("need at least 2 vertices");
  HamPathResult res;
  SearchCtx ctx(h, budget);

  std::optional<Vertex> goal;
  std::vector<Vertex> starts;
  if (endpoints) {
    auto [a, b] = *endpoints;
    if (a == b || a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("bad endpoints");
    starts = {std::min(a, b)};
    goal = std::max(a, b);
  } else {
    starts.resize(n);
    std::iota(starts.begin(), starts.end(), 0);
  }

  // Recursive lambda: path of n vertices, endpoint constraints as above.
  auto dfs = [&](auto&& self, Vertex last) -> bool {
    int t = static_cast<int>(ctx.seq.size());
    if (t == n) {
      if (goal) return ctx.seq.back() == *goal;
      return ctx.seq.front() < ctx.seq.back();  // each path once
    }
    for (Vertex v : ctx.candidates(last)) {
      if (goal && v == *goal && t != n - 1) continue;
      if (!ctx.tick()) return false;
      if (!ctx.matcher.push_pair(last, v)) continue;
      ctx.seq.push_back(v);
      ctx.used[v] = 1;
      if (self(self, v)) return true;
      ctx.used[v] = 0;
      ctx.seq.pop_back();
      ctx.matcher.pop_pair();
      if (ctx.timed_out) return false;
    }
    return false;
  };

  for (Vertex s : starts) {
    ctx.seq.assign(1, s);
    std::fill(ctx.used.begin(), ctx.used.end(), 0);
    ctx.used[s] = 1;
    if (dfs(dfs, s)) {
      BergePath p;
      p.vertices = ctx.seq;
      for (int i = 0; i + 1 < n; ++i) p.edge_ids.push_back(ctx.matcher.edge_for_slot(i));
      assert(validate_path(h, p).ok);
      res.found = true;
      res.path = std::move(p);
      break;
    }
    while (ctx.seq.size() > 1) {  // unwind matcher state between starts
      ctx.seq.pop_back();
      ctx.matcher.pop_pair();
    }
    if (ctx.timed_out) break;
  }
  res.timeout = ctx.timed_out && !res.found;
  res.nodes_explored = ctx.nodes;
  return res;
}

MaxCycleResult max_berge_cycle(const Hypergraph& h, SearchBudget budget) {
  int n = h.vertex_count();
  MaxCycleResult res;
  SearchCtx ctx(h, budget);
  for (int target = n; target >= 3 && !ctx.timed_out; --target) {
    for (Vertex anchor = 0; anchor + target <= n && !ctx.timed_out; ++anchor) {
      ctx.seq.assign(1, anchor);
      std::fill(ctx.used.begin(), ctx.used.end(), 0);
      ctx.used[anchor] = 1;
      if (dfs_cycle(ctx, target, true)) {
        res.status = MaxCycleStatus::found;
        res.cycle = cycle_from_slots(ctx);
        assert(validate_cycle(h, *res.cycle).ok);
        res.nodes_explored = ctx.nodes;
        res.elapsed_seconds = ctx.elapsed();
        return res;
      }
      while (ctx.seq.size() > 1) {
        ctx.seq.pop_back();
        ctx.matcher.pop_pair();
      }
    }
  }
  res.status = ctx.timed_out ? MaxCycleStatus::timeout : MaxCycleStatus::none;
  res.nodes_explored = ctx.nodes;
  res.elapsed_seconds = ctx.elapsed();
  return res;
}

HamiltonicityVerdict brute_force_oracle(const Hypergraph& h) {
  int n = h.vertex_count();
  int m = h.edge_count();
  if (n > 8 || m > 24) throw std::invalid_argument("oracle guard: need n <= 8 and |E| <= 24");
  if (n < 3) throw std::invalid_argument("need at least 3 vertices");

  HamiltonicityVerdict verdict;
  std::vector<Vertex> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);

  // Assigns distinct edges to the n consecutive pairs of the cyclic order
  // (0, perm...), plain backtracking, no matching machinery.
  std::vector<EdgeId> chosen(n, -1);
  auto assign = [&](auto&& self, const std::vector<Vertex>& order, int i, uint32_t mask) -> bool {
    if (i == n) return true;
    Vertex u = order[i];
    Vertex v = order[(i + 1) % n];
    for (EdgeId e : h.edges_between(u, v)) {
      if (mask & (1u << e)) continue;
      ++verdict.nodes_explored;
      chosen[i] = e;
      if (self(self, order, i + 1, mask | (1u << e))) return true;
    }
    chosen[i] = -1;
    return false;
  };

  std::vector<Vertex> order(n);
  order[0] = 0;
  do {
    if (perm.front() > perm.back()) continue;  // one direction per cyclic order
    std::copy(perm.begin(), perm.end(), order.begin() + 1);
    if (assign(assign, order, 0, 0)) {
      BergeCycle c{order, chosen};
      assert(validate_cycle(h, c).ok);
      verdict.status = HamStatus::hamiltonian;
      verdict.certificate = std::move(c);
      return verdict;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  verdict.status = HamStatus::not_hamiltonian;
  return verdict;
}

}  // namespace bergeham
