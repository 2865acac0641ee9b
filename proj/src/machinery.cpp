#include "bergeham/machinery.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <set>

namespace bergeham {

namespace {

void require_3graph(const Hypergraph& h) {
  if (h.max_edge_size() > 3)
    throw std::invalid_argument("requires a [3]-graph (every edge of size <= 3)");
}

void require_valid_cycle(const Hypergraph& h, const BergeCycle& c) {
  if (auto v = validate_cycle(h, c); !v.ok)
    throw std::invalid_argument("invalid Berge cycle at index " + std::to_string(v.index) + ": " +
                                v.reason);
}

// Position arithmetic on a cycle, everything mod length.
struct CycleView {
  const Hypergraph& h;
  const BergeCycle& c;
  int len;
  std::vector<int> pos_of;  // vertex -> position on C, -1 off cycle

  CycleView(const Hypergraph& hg, const BergeCycle& cy)
      : h(hg), c(cy), len(cy.length()), pos_of(hg.vertex_count(), -1) {
    for (int p = 0; p < len; ++p) pos_of[c.vertices[p]] = p;
  }

  int norm(int p) const { return ((p % len) + len) % len; }
  Vertex v(int p) const { return c.vertices[norm(p)]; }
  EdgeId e(int p) const { return c.edge_ids[norm(p)]; }
  bool on_cycle(Vertex x) const { return pos_of[x] >= 0; }
  // v_i -> v_k -> v_j: k strictly inside the clockwise arc from i to j.
  bool between(int i, int k, int j) const {
    int dk = norm(k - i), dj = norm(j - i);
    return dk > 0 && dk < dj;
  }
  int circ_dist(int i, int j) const {
    int d = norm(i - j);
    return std::min(d, len - d);
  }
};

std::vector<Vertex> as_set(std::initializer_list<Vertex> vs) {
  std::vector<Vertex> s(vs);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

ThresholdReport validate_thresholds(const ThresholdConfig& cfg, int64_t n) {
  ThresholdReport rep;
  rep.config = cfg;
  rep.n = n;
  const Rational d0 = cfg.d0, g1 = cfg.gamma1, g2 = cfg.gamma2;
  auto add = [&](const std::string& name, bool ok, const std::string& detail) {
    rep.checks.push_back({name, ok, detail});
  };
  add("constrain0", d0 >= 2, "d0 >= 2");
  add("constrain00", g1 * 4 + 8 <= d0 * 3 && d0 <= g2 * 4 + 16,
      "4*gamma1 + 8 <= 3*d0 and d0 <= 4*gamma2 + 16");
  add("constrain1", d0 >= 57 && g1 >= 18, "d0 >= 57 and gamma1 >= 18");
  add("constrain2", g2 >= Rational(3, 2), "gamma2 >= 3/2");
  add("constrain3", g1 + g2 + 4 <= d0, "gamma1 + gamma2 + 4 <= d0");
  add("constrain4", d0 >= 65 && g2 >= Rational(5, 2), "d0 >= 65 and gamma2 >= 5/2");
  rep.all_satisfied = std::all_of(rep.checks.begin(), rep.checks.end(),
                                  [](const ConstraintCheck& c) { return c.satisfied; });
  rep.n_at_least_d0_plus_4 = n >= cfg.d0 + 4;
  return rep;
}

int cycle_degree(const Hypergraph& h, const BergeCycle& c, Vertex v) {
  CycleView cv(h, c);
  int d = 0;
  for (Vertex w : h.shadow().neighbors(v))
    if (cv.on_cycle(w)) ++d;
  return d;
}

VertexClassification classify_vertices(const Hypergraph& h, const BergeCycle& c,
                                       const ThresholdConfig& cfg) {
  require_valid_cycle(h, c);
  CycleView cv(h, c);
  VertexClassification out;
  out.n = h.vertex_count();
  out.cycle_length = c.length();
  out.config = cfg;
  const Rational n = out.n;
  const Rational small_thr = (n + cfg.d0) / 2 - 3;
  const Rational super_small_thr = n / 4 + cfg.gamma1;
  const Rational super_big_thr = n * Rational(3, 4) + cfg.gamma2;
  for (Vertex v = 0; v < out.n; ++v) {
    VertexClassification::Entry e;
    e.v = v;
    e.d_c = 0;
    for (Vertex w : h.shadow().neighbors(v))
      if (cv.on_cycle(w)) ++e.d_c;
    Rational d = e.d_c;
    e.super_small = d < super_small_thr;
    e.small = d < small_thr;
    e.big = !e.small;
    e.super_big = d >= super_big_thr;
    e.big1 = e.big && !e.super_big;
    out.entries.push_back(e);
  }
  return out;
}

std::vector<int> crossings(const Hypergraph& h, const BergePath& p) {
  if (auto v = validate_path(h, p); !v.ok)
    throw std::invalid_argument("invalid Berge path at index " + std::to_string(v.index) + ": " +
                                v.reason);
  int n = h.vertex_count();
  if (static_cast<int>(p.vertices.size()) != n)
    throw std::invalid_argument("path is not Hamiltonian");
  const ShadowGraph& sh = h.shadow();
  Vertex first = p.vertices.front(), last = p.vertices.back();
  std::vector<int> out;
  for (int q = 1; q < n; ++q)
    if (sh.adjacent(first, p.vertices[q]) && sh.adjacent(last, p.vertices[q - 1])) out.push_back(q);
  return out;
}

namespace {

// Tries to close a Berge path into a cycle on all of its vertices: first via
// an unused endpoint edge, then via crossing splices. Returns nullopt when
// neither mechanism yields a valid cycle.
std::optional<BergeCycle> try_close_full(const Hypergraph& h, const BergePath& p) {
  int n = static_cast<int>(p.vertices.size());
  if (n < 3) return std::nullopt;
  Vertex s = p.vertices.front(), t = p.vertices.back();
  std::vector<char> in_path(h.edge_count(), 0);
  for (EdgeId e : p.edge_ids) in_path[e] = 1;

  if (h.shadow().adjacent(s, t)) {
    for (EdgeId e : h.edges_between(s, t)) {
      if (in_path[e]) continue;
      BergeCycle cand{p.vertices, p.edge_ids};
      cand.edge_ids.push_back(e);
      if (validate_cycle(h, cand).ok) return cand;
    }
  }

  // Crossing splice: s, e, v_q, ..., t, e', v_{q-1}, ..., s. Both chords must
  // avoid the path edges except the dropped pe[q-1].
  for (int q = 1; q < n; ++q) {
    if (!h.shadow().adjacent(s, p.vertices[q]) || !h.shadow().adjacent(t, p.vertices[q - 1]))
      continue;
    EdgeId dropped = p.edge_ids[q - 1];
    for (EdgeId e : h.edges_between(s, p.vertices[q])) {
      if (in_path[e] && e != dropped) continue;
      for (EdgeId e2 : h.edges_between(t, p.vertices[q - 1])) {
        if (e2 == e || (in_path[e2] && e2 != dropped)) continue;
        BergeCycle cand;
        cand.vertices.push_back(s);
        cand.edge_ids.push_back(e);
        for (int r = q; r < n; ++r) {
          cand.vertices.push_back(p.vertices[r]);
          cand.edge_ids.push_back(r + 1 < n ? p.edge_ids[r] : e2);
        }
        for (int r = q - 1; r >= 1; --r) {
          cand.vertices.push_back(p.vertices[r]);
          cand.edge_ids.push_back(p.edge_ids[r - 1]);
        }
        if (validate_cycle(h, cand).ok) return cand;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

BergeCycle cycle_from_ham_path(const Hypergraph& h, const BergePath& p) {
  require_3graph(h);
  if (auto v = validate_path(h, p); !v.ok)
    throw std::invalid_argument("invalid Berge path at index " + std::to_string(v.index) + ": " +
                                v.reason);
  int n = h.vertex_count();
  if (static_cast<int>(p.vertices.size()) != n)
    throw std::invalid_argument("path is not Hamiltonian");
  Vertex s = p.vertices.front(), t = p.vertices.back();
  bool adjacent = h.shadow().adjacent(s, t);
  if (!adjacent && h.shadow().degree(s) + h.shadow().degree(t) < n + 2)
    throw std::invalid_argument("endpoints non-adjacent and shadow degree sum < n + 2");

  if (auto full = try_close_full(h, p)) return *full;

  std::vector<char> in_path(h.edge_count(), 0);
  for (EdgeId e : p.edge_ids) in_path[e] = 1;

  if (adjacent) {
    // Every connecting edge lies on the path; splicing e_0 or e_{n-2} out of
    // its slot gives an (n-1)-cycle.
    for (EdgeId e : h.edges_between(s, t)) {
      if (e == p.edge_ids[0]) {
        BergeCycle cand;
        cand.vertices.assign(p.vertices.begin() + 1, p.vertices.end());
        cand.edge_ids.assign(p.edge_ids.begin() + 1, p.edge_ids.end());
        cand.edge_ids.push_back(e);  // closes v_{n-1} .. v_1 via {v_0, v_1, v_{n-1}}
        if (validate_cycle(h, cand).ok) return cand;
      }
      if (e == p.edge_ids[n - 2]) {
        BergeCycle cand;
        cand.vertices.assign(p.vertices.begin(), p.vertices.end() - 1);
        cand.edge_ids.assign(p.edge_ids.begin(), p.edge_ids.end() - 1);
        cand.edge_ids.push_back(e);  // closes v_{n-2} .. v_0 via {v_0, v_{n-2}, v_{n-1}}
        if (validate_cycle(h, cand).ok) return cand;
      }
    }
    throw HypothesisViolation("adjacent endpoints admit no cycle splice");
  }

  auto cross = crossings(h, p);

  // (n-1)-cycles: the chord on one side is the path edge at the crossing
  // itself (e = pe[q]) or just before it (e' = pe[q-2]); the other side must
  // be free apart from the dropped pe[q-1].
  for (int round = 0; round < 2; ++round) {
    for (int q : cross) {
      if (q < 2 || q > n - 2) continue;  // non-adjacent endpoints force this anyway
      EdgeId dropped = p.edge_ids[q - 1];
      if (round == 0) {
        for (EdgeId e : h.edges_between(s, p.vertices[q])) {
          if (e != p.edge_ids[q]) continue;  // want e = pe[q], which contains v_0
          for (EdgeId e2 : h.edges_between(t, p.vertices[q - 1])) {
            if (e2 == p.edge_ids[n - 2] || e2 == e) continue;
            if (e2 == p.edge_ids[q - 2]) continue;  // that combination is the n-2 case
            if (in_path[e2] && e2 != dropped) continue;
            // v_0, pe[q], v_{q+1}, ..., v_{n-1}, e2, v_{q-1}, ..., v_1, v_0
            BergeCycle cand;
            cand.vertices.push_back(s);
            cand.edge_ids.push_back(e);
            for (int r = q + 1; r < n; ++r) {
              cand.vertices.push_back(p.vertices[r]);
              cand.edge_ids.push_back(r + 1 < n ? p.edge_ids[r] : e2);
            }
            for (int r = q - 1; r >= 1; --r) {
              cand.vertices.push_back(p.vertices[r]);
              cand.edge_ids.push_back(p.edge_ids[r - 1]);
            }
            if (validate_cycle(h, cand).ok) return cand;
          }
        }
      } else {
        for (EdgeId e2 : h.edges_between(t, p.vertices[q - 1])) {
          if (e2 != p.edge_ids[q - 2]) continue;  // want e' = pe[q-2], which contains v_{n-1}
          for (EdgeId e : h.edges_between(s, p.vertices[q])) {
            if (e == p.edge_ids[0] || e == e2) continue;
            if (e == p.edge_ids[q]) continue;  // that combination is the n-2 case
            if (in_path[e] && e != dropped) continue;
            // v_0, e, v_q, ..., v_{n-1}, pe[q-2], v_{q-2}, ..., v_1, v_0
            BergeCycle cand;
            cand.vertices.push_back(s);
            cand.edge_ids.push_back(e);
            for (int r = q; r < n; ++r) {
              cand.vertices.push_back(p.vertices[r]);
              cand.edge_ids.push_back(r + 1 < n ? p.edge_ids[r] : e2);
            }
            for (int r = q - 2; r >= 1; --r) {
              cand.vertices.push_back(p.vertices[r]);
              cand.edge_ids.push_back(p.edge_ids[r - 1]);
            }
            if (validate_cycle(h, cand).ok) return cand;
          }
        }
      }
    }
  }

  // (n-2)-cycle: both chords are path edges, v_q and v_{q-1} drop out.
  for (int q : cross) {
    if (q < 2 || q > n - 2) continue;
    EdgeId e = p.edge_ids[q];
    EdgeId e2 = p.edge_ids[q - 2];
    if (!h.edge_contains(e, s) || !h.edge_contains(e2, t)) continue;
    BergeCycle cand;
    cand.vertices.push_back(s);
    cand.edge_ids.push_back(e);
    for (int r = q + 1; r < n; ++r) {
      cand.vertices.push_back(p.vertices[r]);
      cand.edge_ids.push_back(r + 1 < n ? p.edge_ids[r] : e2);
    }
    for (int r = q - 2; r >= 1; --r) {
      cand.vertices.push_back(p.vertices[r]);
      cand.edge_ids.push_back(p.edge_ids[r - 1]);
    }
    if (validate_cycle(h, cand).ok) return cand;
  }

  throw HypothesisViolation("no qualifying crossing splice exists");
}

namespace {

// Largest subset of `avail` (positions on a cycle of `len` slots) with no two
// cyclically consecutive members; ties resolved toward smaller positions.
std::vector<int> max_nonconsecutive(std::vector<int> avail, int len) {
  std::sort(avail.begin(), avail.end());
  int m = static_cast<int>(avail.size());
  if (m == 0) return {};
  if (m == len) {
    // whole cycle available: alternate positions, one fewer pick when odd
    std::vector<int> out;
    for (int p = 0; p < (len % 2 == 0 ? len : len - 1); p += 2) out.push_back(p);
    return out;
  }
  std::vector<char> in(len, 0);
  for (int p : avail) in[p] = 1;
  int start = 0;
  while (in[start]) start = (start + 1) % len;  // a gap exists since m < len
  // Scan runs of consecutive positions; take alternate members of each run.
  std::vector<int> out;
  std::vector<int> run;
  for (int step = 0; step <= len; ++step) {
    int p = (start + step) % len;
    if (step < len && in[p]) {
      run.push_back(p);
    } else if (!run.empty()) {
      for (size_t r = 0; r < run.size(); r += 2) out.push_back(run[r]);
      run.clear();
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

UsableSet usable_set(const Hypergraph& h, const BergeCycle& c, Vertex u) {
  require_3graph(h);
  require_valid_cycle(h, c);
  if (u < 0 || u >= h.vertex_count()) throw std::invalid_argument("vertex out of range");
  CycleView cv(h, c);
  if (cv.on_cycle(u)) throw std::invalid_argument("vertex lies on the cycle");

  UsableSet out;
  out.u = u;

  std::vector<int> ncu;  // positions of on-cycle neighbors of u
  for (int p = 0; p < cv.len; ++p)
    if (h.shadow().adjacent(u, cv.v(p))) ncu.push_back(p);
  int d_c = static_cast<int>(ncu.size());
  if (d_c == 0) return out;

  // A neighbor v_r is bad when the only edge joining it to u is the cycle
  // edge e_{r-1}; its predecessor is then good via that very edge.
  std::vector<char> bad(cv.len, 0);
  bool any_bad = false;
  for (int r : ncu) {
    const auto& between = h.edges_between(u, cv.v(r));
    bad[r] = between.size() == 1 && between[0] == cv.e(r - 1);
    any_bad |= bad[r] != 0;
  }

  std::vector<int> base;
  if (!any_bad) {
    base = max_nonconsecutive(ncu, cv.len);
  } else {
    std::vector<char> blocked(cv.len, 0);
    for (int r : ncu)
      if (bad[r]) {
        blocked[r] = 1;
        blocked[cv.norm(r - 1)] = 1;
        blocked[cv.norm(r - 2)] = 1;
        base.push_back(cv.norm(r - 1));  // predecessors of bad vertices
      }
    std::vector<int> rest;
    for (int r : ncu)
      if (!blocked[r]) rest.push_back(r);
    for (int p : max_nonconsecutive(rest, cv.len)) base.push_back(p);
    std::sort(base.begin(), base.end());
  }

  // Shift forward: candidate positions are the successors, witnesses are the
  // admissible edges from u to the predecessor.
  std::vector<int> candidates;
  for (int p : base) candidates.push_back(cv.norm(p + 1));
  std::sort(candidates.begin(), candidates.end());
  std::map<int, std::vector<EdgeId>> wit;
  for (int q : candidates) {
    std::vector<EdgeId> w;
    for (EdgeId e : h.edges_between(u, cv.v(q - 1)))
      if (e != cv.e(q - 2)) w.push_back(e);
    wit[q] = std::move(w);
  }

  // Delete the larger position of every pair stuck on the same single
  // witness edge.
  std::set<int> removed;
  for (size_t a = 0; a < candidates.size(); ++a) {
    for (size_t b = a + 1; b < candidates.size(); ++b) {
      int qa = candidates[a], qb = candidates[b];
      if (removed.count(qa) || removed.count(qb)) continue;
      if (wit[qa].size() == 1 && wit[qb].size() == 1 && wit[qa][0] == wit[qb][0])
        removed.insert(std::max(qa, qb));
    }
  }
  for (int q : candidates) {
    if (removed.count(q)) continue;
    out.positions.push_back(q);
    out.witness[q] = wit[q];
  }

  if (static_cast<long long>(out.positions.size()) * 6 < d_c)
    throw std::logic_error("usable set size guarantee violated");
  return out;
}

std::vector<BridgeRecord> bridges(const Hypergraph& h, const BergeCycle& c, int i, int j) {
  require_3graph(h);
  require_valid_cycle(h, c);
  CycleView cv(h, c);
  i = cv.norm(i);
  j = cv.norm(j);
  if (i == j) throw std::invalid_argument("positions i and j must differ");

  std::vector<BridgeRecord> out;
  std::vector<char> seen(h.edge_count(), 0);
  auto emit = [&](int k, int pcase, int edge_pos, std::vector<Vertex> want) {
    EdgeId e = cv.e(edge_pos);
    if (h.edge(e) != want) return;
    if (seen[e]) return;
    seen[e] = 1;
    out.push_back({i, j, k, pcase, e});
  };
  for (int k = 0; k < cv.len; ++k) {
    if (k == i || k == j) continue;
    if (cv.between(i, k, j)) {
      emit(k, 1, k + 1, as_set({cv.v(i), cv.v(k + 1), cv.v(k + 2)}));
      emit(k, 2, k - 1, as_set({cv.v(j), cv.v(k), cv.v(k - 1)}));
    }
    if (cv.between(j, k, i)) {
      emit(k, 3, k - 1, as_set({cv.v(i), cv.v(k), cv.v(k - 1)}));
      emit(k, 4, k + 1, as_set({cv.v(j), cv.v(k + 1), cv.v(k + 2)}));
    }
  }
  return out;
}

std::map<EdgeId, int> bridge_multiplicity(const Hypergraph& h, const BergeCycle& c,
                                          const std::vector<int>& x) {
  CycleView cv(h, c);
  std::vector<int> pos;
  for (int p : x) pos.push_back(cv.norm(p));
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());

  std::map<EdgeId, int> counts;
  for (size_t a = 0; a < pos.size(); ++a)
    for (size_t b = a + 1; b < pos.size(); ++b)
      for (const BridgeRecord& r : bridges(h, c, pos[a], pos[b])) ++counts[r.edge_id];
  for (const auto& [e, cnt] : counts)
    if (cnt > static_cast<int>(pos.size()) - 1)
      throw std::logic_error("bridge produced by more than |X|-1 pairs");
  return counts;
}

std::string to_string(ExtensionMove m) {
  switch (m) {
    case ExtensionMove::M1_usable_pair: return "M1_usable_pair";
    case ExtensionMove::M2_double_rotation: return "M2_double_rotation";
    case ExtensionMove::M3_skip_one: return "M3_skip_one";
    case ExtensionMove::M4_skip_two: return "M4_skip_two";
    case ExtensionMove::CROSSING_CLOSE: return "CROSSING_CLOSE";
  }
  return "?";
}

namespace {

// First pair of distinct edges (a from ws_a, b from ws_b); nullopt if the two
// lists cannot be told apart.
std::optional<std::pair<EdgeId, EdgeId>> pick_distinct(const std::vector<EdgeId>& ws_a,
                                                       const std::vector<EdgeId>& ws_b) {
  for (EdgeId a : ws_a)
    for (EdgeId b : ws_b)
      if (a != b) return std::make_pair(a, b);
  return std::nullopt;
}

std::vector<Vertex> off_cycle_vertices(const Hypergraph& h, const CycleView& cv) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    if (!cv.on_cycle(v)) out.push_back(v);
  return out;
}

ExtensionResult make_result(ExtensionMove move, const BergeCycle& old_c, BergeCycle new_c) {
  ExtensionResult res;
  res.move = move;
  std::set<Vertex> before(old_c.vertices.begin(), old_c.vertices.end());
  std::set<Vertex> after(new_c.vertices.begin(), new_c.vertices.end());
  for (Vertex v : after)
    if (!before.count(v)) res.gained.push_back(v);
  for (Vertex v : before)
    if (!after.count(v)) res.dropped.push_back(v);
  res.new_cycle = std::move(new_c);
  return res;
}

// Inserts w between some consecutive pair of C, spending the freed cycle edge
// if needed. Returns the grown cycle or nullopt.
std::optional<BergeCycle> plain_insert(const Hypergraph& h, const BergeCycle& c, Vertex w) {
  CycleView cv(h, c);
  std::vector<char> on(h.edge_count(), 0);
  for (EdgeId e : c.edge_ids) on[e] = 1;
  for (int m = 0; m < cv.len; ++m) {
    Vertex x = cv.v(m), y = cv.v(m + 1);
    if (!h.shadow().adjacent(w, x) || !h.shadow().adjacent(w, y)) continue;
    EdgeId freed = cv.e(m);
    for (EdgeId a : h.edges_between(w, x)) {
      if (on[a] && a != freed) continue;
      for (EdgeId b : h.edges_between(w, y)) {
        if (b == a || (on[b] && b != freed)) continue;
        BergeCycle cand;
        for (int r = 0; r < cv.len; ++r) {
          cand.vertices.push_back(cv.v(m + 1 + r));
          cand.edge_ids.push_back(r + 1 < cv.len ? cv.e(m + 1 + r) : a);
        }
        cand.vertices.push_back(w);
        cand.edge_ids.push_back(b);
        if (validate_cycle(h, cand).ok) return cand;
      }
    }
  }
  return std::nullopt;
}

// Repeatedly plain-inserts off-cycle vertices until none fits.
BergeCycle saturate_insertions(const Hypergraph& h, BergeCycle c) {
  bool grew = true;
  while (grew && c.length() < h.vertex_count()) {
    grew = false;
    CycleView cv(h, c);
    for (Vertex w : off_cycle_vertices(h, cv)) {
      if (auto bigger = plain_insert(h, c, w)) {
        c = std::move(*bigger);
        grew = true;
        break;
      }
    }
  }
  return c;
}

std::optional<BergeCycle> move_m1(const Hypergraph& h, const CycleView& cv, Vertex u,
                                  const UsableSet& us) {
  for (size_t a = 0; a < us.positions.size(); ++a) {
    for (size_t b = 0; b < us.positions.size(); ++b) {
      if (a == b) continue;
      int qi = us.positions[a], qj = us.positions[b];
      Vertex vi = cv.v(qi), vj = cv.v(qj);
      if (!h.shadow().adjacent(vi, vj)) continue;
      auto picked = pick_distinct(us.witness.at(qi), us.witness.at(qj));
      if (!picked) continue;
      auto [gi, gj] = *picked;
      for (EdgeId f : h.edges_between(vi, vj)) {
        if (f == cv.e(qi) || f == cv.e(qj) || f == gi || f == gj) continue;
        // v_qj ..forward.. v_{qi-1}, u, v_{qj-1} ..backward.. v_qi, chord f
        BergeCycle cand;
        for (int r = qj; cv.norm(r) != cv.norm(qi); ++r) {
          cand.vertices.push_back(cv.v(r));
          cand.edge_ids.push_back(cv.norm(r + 1) != cv.norm(qi) ? cv.e(r) : gi);
        }
        cand.vertices.push_back(u);
        cand.edge_ids.push_back(gj);
        for (int r = qj - 1; cv.norm(r) != cv.norm(qi - 1); --r) {
          cand.vertices.push_back(cv.v(r));
          cand.edge_ids.push_back(cv.norm(r - 1) != cv.norm(qi - 1) ? cv.e(r - 1) : f);
        }
        if (validate_cycle(h, cand).ok) return cand;
      }
    }
  }
  return std::nullopt;
}

std::optional<BergeCycle> move_m2(const Hypergraph& h, const CycleView& cv, Vertex u,
                                  const UsableSet& us) {
  for (size_t a = 0; a < us.positions.size(); ++a) {
    for (size_t b = 0; b < us.positions.size(); ++b) {
      if (a == b) continue;
      int qi = us.positions[a], qj = us.positions[b];
      Vertex vi = cv.v(qi), vj = cv.v(qj);
      auto picked = pick_distinct(us.witness.at(qi), us.witness.at(qj));
      if (!picked) continue;
      auto [gi, gj] = *picked;
      for (int k = 0; k < cv.len; ++k) {
        // need both k and k+1 strictly inside the arc from qj to qi
        if (!cv.between(qj, k, qi) || !cv.between(qj, cv.norm(k + 1), qi)) continue;
        Vertex vk = cv.v(k), vk1 = cv.v(k + 1);
        if (vk == vj || vk1 == vi) continue;
        if (!h.shadow().adjacent(vi, vk) || !h.shadow().adjacent(vj, vk1)) continue;
        for (EdgeId fi : h.edges_between(vi, vk)) {
          if (fi == cv.e(k - 1) || fi == cv.e(qi) || fi == gi || fi == gj) continue;
          for (EdgeId fj : h.edges_between(vj, vk1)) {
            if (fj == cv.e(k + 1) || fj == cv.e(qj) || fj == fi || fj == gj) continue;
            if (fj == gi) {
              // chord doubles as the u-witness: plain insertion of u next to v_qj
              BergeCycle cand;
              for (int r = qj; cv.norm(r) != cv.norm(qj - 1); ++r) {
                cand.vertices.push_back(cv.v(r));
                cand.edge_ids.push_back(cv.e(r));
              }
              cand.vertices.push_back(cv.v(qj - 1));
              cand.edge_ids.push_back(gj);
              cand.vertices.push_back(u);
              cand.edge_ids.push_back(fj);
              if (validate_cycle(h, cand).ok) return cand;
              continue;
            }
            // v_qj ..forward.. v_k, f_i, v_qi ..forward.. v_{qj-1}, g_j, u,
            // g_i, v_{qi-1} ..backward.. v_{k+1}, f_j
            BergeCycle cand;
            for (int r = qj; cv.norm(r) != cv.norm(k + 1); ++r) {
              cand.vertices.push_back(cv.v(r));
              cand.edge_ids.push_back(cv.norm(r) != k ? cv.e(r) : fi);
            }
            for (int r = qi; cv.norm(r) != cv.norm(qj); ++r) {
              cand.vertices.push_back(cv.v(r));
              cand.edge_ids.push_back(cv.norm(r + 1) != cv.norm(qj) ? cv.e(r) : gj);
            }
            cand.vertices.push_back(u);
            cand.edge_ids.push_back(gi);
            for (int r = qi - 1; cv.norm(r) != cv.norm(k); --r) {
              cand.vertices.push_back(cv.v(r));
              cand.edge_ids.push_back(cv.norm(r) != cv.norm(k + 1) ? cv.e(r - 1) : fj);
            }
            if (validate_cycle(h, cand).ok) return cand;
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<BergeCycle> move_m3(const Hypergraph& h, const BergeCycle& c, const CycleView& cv,
                                  Vertex u) {
  std::vector<char> on(h.edge_count(), 0);
  for (EdgeId e : c.edge_ids) on[e] = 1;
  for (int q = 0; q < cv.len; ++q) {
    Vertex prev = cv.v(q - 1), next = cv.v(q + 1);
    if (!h.shadow().adjacent(u, prev) || !h.shadow().adjacent(u, next)) continue;
    EdgeId f1 = cv.e(q - 1), f2 = cv.e(q);  // freed by dropping v_q
    for (EdgeId g : h.edges_between(u, prev)) {
      if (on[g] && g != f1 && g != f2) continue;
      for (EdgeId f : h.edges_between(u, next)) {
        if (f == g || (on[f] && f != f1 && f != f2)) continue;
        BergeCycle rearranged;
        for (int r = 0; r + 1 < cv.len; ++r) {
          rearranged.vertices.push_back(cv.v(q + 1 + r));
          rearranged.edge_ids.push_back(r + 2 < cv.len ? cv.e(q + 1 + r) : g);
        }
        rearranged.vertices.push_back(u);
        rearranged.edge_ids.push_back(f);
        if (!validate_cycle(h, rearranged).ok) continue;
        BergeCycle grown = saturate_insertions(h, rearranged);
        if (grown.length() > cv.len) return grown;
      }
    }
  }
  return std::nullopt;
}

std::optional<BergeCycle> move_m4(const Hypergraph& h, const CycleView& cv, Vertex u,
                                  const UsableSet& us) {
  for (size_t a = 0; a < us.positions.size(); ++a) {
    for (size_t b = 0; b < us.positions.size(); ++b) {
      if (a == b) continue;
      int qi = us.positions[a], qj = us.positions[b];
      Vertex after_i = cv.v(qi + 1), after_j = cv.v(qj + 1);
      if (after_i == cv.v(qj) || after_j == cv.v(qi)) continue;
      if (!h.shadow().adjacent(after_i, after_j)) continue;
      auto picked = pick_distinct(us.witness.at(qi), us.witness.at(qj));
      if (!picked) continue;
      auto [gi, gj] = *picked;
      for (EdgeId f : h.edges_between(after_i, after_j)) {
        if (f == gi || f == gj) continue;
        // v_{qi-1}, g_i, u, g_j, v_{qj-1} ..backward.. v_{qi+1}, f,
        // v_{qj+1} ..forward.. v_{qi-1}; drops v_qi and v_qj.
        BergeCycle rearranged;
        rearranged.vertices.push_back(cv.v(qi - 1));
        rearranged.edge_ids.push_back(gi);
        rearranged.vertices.push_back(u);
        rearranged.edge_ids.push_back(gj);
        for (int r = qj - 1; cv.norm(r) != cv.norm(qi); --r) {
          rearranged.vertices.push_back(cv.v(r));
          rearranged.edge_ids.push_back(cv.norm(r) != cv.norm(qi + 1) ? cv.e(r - 1) : f);
        }
        for (int r = qj + 1; cv.norm(r) != cv.norm(qi - 1); ++r) {
          rearranged.vertices.push_back(cv.v(r));
          rearranged.edge_ids.push_back(cv.e(r));
        }
        if (!validate_cycle(h, rearranged).ok) continue;
        BergeCycle grown = saturate_insertions(h, rearranged);
        if (grown.length() > cv.len) return grown;
      }
    }
  }
  return std::nullopt;
}

std::optional<BergeCycle> move_crossing_close(const Hypergraph& h, const BergeCycle& c,
                                              const CycleView& cv, Vertex u) {
  std::vector<char> on(h.edge_count(), 0);
  for (EdgeId e : c.edge_ids) on[e] = 1;
  for (int m = 0; m < cv.len; ++m) {
    EdgeId freed = cv.e(m);
    for (int end = 0; end < 2; ++end) {
      // Open C at e_m into the path v_{m+1} .. v_m and attach u at one end.
      Vertex attach = end == 0 ? cv.v(m + 1) : cv.v(m);
      if (!h.shadow().adjacent(u, attach)) continue;
      for (EdgeId g : h.edges_between(u, attach)) {
        if (on[g] && g != freed) continue;
        BergePath path;
        if (end == 0) {
          path.vertices.push_back(u);
          path.edge_ids.push_back(g);
          for (int r = 0; r < cv.len; ++r) {
            path.vertices.push_back(cv.v(m + 1 + r));
            if (r + 1 < cv.len) path.edge_ids.push_back(cv.e(m + 1 + r));
          }
        } else {
          for (int r = 0; r < cv.len; ++r) {
            path.vertices.push_back(cv.v(m + 1 + r));
            if (r + 1 < cv.len) path.edge_ids.push_back(cv.e(m + 1 + r));
          }
          path.vertices.push_back(u);
          path.edge_ids.push_back(g);
        }
        if (!validate_path(h, path).ok) continue;
        if (auto full = try_close_full(h, path)) return full;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ExtensionResult> try_extend(const Hypergraph& h, const BergeCycle& c,
                                          const ThresholdConfig&) {
  require_3graph(h);
  require_valid_cycle(h, c);
  CycleView cv(h, c);
  std::vector<Vertex> off = off_cycle_vertices(h, cv);
  if (off.empty()) return std::nullopt;

  std::vector<UsableSet> usables;
  for (Vertex u : off) usables.push_back(usable_set(h, c, u));

  for (size_t i = 0; i < off.size(); ++i)
    if (auto nc = move_m1(h, cv, off[i], usables[i]))
      return make_result(ExtensionMove::M1_usable_pair, c, std::move(*nc));
  for (size_t i = 0; i < off.size(); ++i)
    if (auto nc = move_m2(h, cv, off[i], usables[i]))
      return make_result(ExtensionMove::M2_double_rotation, c, std::move(*nc));
  for (Vertex u : off)
    if (auto nc = move_m3(h, c, cv, u))
      return make_result(ExtensionMove::M3_skip_one, c, std::move(*nc));
  for (size_t i = 0; i < off.size(); ++i)
    if (auto nc = move_m4(h, cv, off[i], usables[i]))
      return make_result(ExtensionMove::M4_skip_two, c, std::move(*nc));
  for (Vertex u : off)
    if (auto nc = move_crossing_close(h, c, cv, u))
      return make_result(ExtensionMove::CROSSING_CLOSE, c, std::move(*nc));
  return std::nullopt;
}

namespace {

// Smallest Berge cycle to grow from: first feasible triangle, else a short
// exact search.
std::optional<BergeCycle> seed_cycle(const Hypergraph& h, long long node_cap) {
  int n = h.vertex_count();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b : h.shadow().neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : h.shadow().neighbors(b)) {
        if (c <= a || c == b || !h.shadow().adjacent(c, a)) continue;
        for (EdgeId e1 : h.edges_between(a, b))
          for (EdgeId e2 : h.edges_between(b, c)) {
            if (e2 == e1) continue;
            for (EdgeId e3 : h.edges_between(c, a)) {
              if (e3 == e1 || e3 == e2) continue;
              return BergeCycle{{a, b, c}, {e1, e2, e3}};
            }
          }
      }
    }
  }
  SearchBudget small{std::min<long long>(node_cap, 200'000), 0.0};
  auto res = max_berge_cycle(h, small);
  if (res.status == MaxCycleStatus::found) return res.cycle;
  return std::nullopt;
}

}  // namespace

HeuristicResult heuristic_hamiltonian(const Hypergraph& h, const ThresholdConfig& cfg,
                                      SearchBudget budget) {
  require_3graph(h);
  int n = h.vertex_count();
  if (n < 3) throw std::invalid_argument("need at least 3 vertices");
  auto start = std::chrono::steady_clock::now();
  HeuristicResult res;

  auto seed = seed_cycle(h, budget.max_nodes);
  if (seed) {
    BergeCycle c = saturate_insertions(h, *seed);
    while (c.length() < n) {
      ++res.nodes_explored;
      if (res.nodes_explored > budget.max_nodes) break;
      auto ext = try_extend(h, c, cfg);
      if (!ext) break;
      ++res.moves_applied;
      c = std::move(ext->new_cycle);
    }
    if (c.length() == n && validate_cycle(h, c).ok) {
      res.found = true;
      res.certificate = std::move(c);
    }
  }
  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

DiagnosticsReport diagnostics_report(const Hypergraph& h, const BergeCycle& c,
                                     const ThresholdConfig& cfg) {
  require_3graph(h);
  DiagnosticsReport rep;
  rep.classes = classify_vertices(h, c, cfg);
  rep.cycle_edge_count = c.length();
  CycleView cv(h, c);

  std::set<EdgeId> bridge_union;
  for (int i = 0; i < cv.len; ++i)
    for (int j = i + 1; j < cv.len; ++j)
      for (const BridgeRecord& r : bridges(h, c, i, j)) bridge_union.insert(r.edge_id);
  rep.bridge_union_size = static_cast<int>(bridge_union.size());
  // every bridge is a cycle edge, so the union can never exceed |E(C)|
  if (rep.bridge_union_size > rep.cycle_edge_count)
    throw std::logic_error("bridge union exceeds cycle edge count");

  for (Vertex u : off_cycle_vertices(h, cv)) {
    DiagnosticsReport::UsableDiag diag;
    diag.u = u;
    diag.usable = usable_set(h, c, u);
    diag.d_c = cycle_degree(h, c, u);
    diag.u_super_small = rep.classes.entries[u].super_small;
    std::vector<int> big1_shifted;  // X = (U_u ∩ B1)+
    for (int q : diag.usable.positions) {
      const auto& entry = rep.classes.entries[cv.v(q)];
      diag.in_small += entry.small;
      diag.in_big += entry.big;
      diag.in_super_big += entry.super_big;
      if (entry.big1) big1_shifted.push_back(cv.norm(q + 1));
    }
    for (size_t a = 0; a < big1_shifted.size(); ++a) {
      for (size_t b = a + 1; b < big1_shifted.size(); ++b) {
        DiagnosticsReport::PairDiag pd;
        pd.u = u;
        pd.i = big1_shifted[a];
        pd.j = big1_shifted[b];
        pd.bridge_count = static_cast<int>(bridges(h, c, pd.i, pd.j).size());
        long long di = cycle_degree(h, c, cv.v(pd.i));
        long long dj = cycle_degree(h, c, cv.v(pd.j));
        pd.bound_minus_6 = di + dj - 6;
        pd.bound_minus_len_6 = di + dj - cv.len - 6;
        rep.pair_bridges.push_back(pd);
      }
    }
    rep.usable_sets.push_back(std::move(diag));
  }
  return rep;
}

}  // namespace bergeham
