#ifndef BERGEHAM_MACHINERY_HPP
#define BERGEHAM_MACHINERY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bergeham/berge.hpp"
#include "bergeham/hypergraph.hpp"
#include "bergeham/rational.hpp"

namespace bergeham {

// Everything in this header views a cycle C through 0-based positions into
// its vertex sequence; positions are taken modulo |V(C)|. Operations that
// reason about edge contents require every edge to have size <= 3 and throw
// std::invalid_argument otherwise.

struct ThresholdConfig {
  int64_t d0 = 65;
  Rational gamma1 = 18;
  Rational gamma2 = 13;
};

struct ConstraintCheck {
  std::string name;
  bool satisfied = false;
  std::string detail;
};

struct ThresholdReport {
  ThresholdConfig config;
  int64_t n = 0;
  std::vector<ConstraintCheck> checks;
  bool all_satisfied = false;
  bool n_at_least_d0_plus_4 = false;
};

/// Evaluates each threshold constraint exactly and reports n >= d0 + 4.
ThresholdReport validate_thresholds(const ThresholdConfig& cfg, int64_t n);

/// Per-vertex cycle-degree classes. d_c(v) = |N(v) ∩ V(C)|; a vertex is
/// small / big etc. by exact rational comparison of d_c(v) against the
/// thresholds built from n, d0, gamma1, gamma2.
struct VertexClassification {
  struct Entry {
    Vertex v = 0;
    int d_c = 0;
    bool super_small = false;  // d_c <  n/4 + gamma1
    bool small = false;        // d_c < (n+d0)/2 - 3
    bool big = false;          // complement of small
    bool super_big = false;    // d_c >= 3n/4 + gamma2
    bool big1 = false;         // big and not super_big
  };
  int n = 0;
  int cycle_length = 0;
  ThresholdConfig config;
  std::vector<Entry> entries;  // one per vertex of H, in vertex order
};

VertexClassification classify_vertices(const Hypergraph& h, const BergeCycle& c,
                                       const ThresholdConfig& cfg);

/// Cycle-restricted degree of v: number of shadow neighbors of v on C.
int cycle_degree(const Hypergraph& h, const BergeCycle& c, Vertex v);

/// Crossing positions of a Hamiltonian Berge path: all 0-based positions p
/// with vertices[p] adjacent to the first vertex and vertices[p-1] adjacent
/// to the last.
std::vector<int> crossings(const Hypergraph& h, const BergePath& p);

/// Raised when an input satisfying the stated hypotheses should admit a
/// construction but none exists; carries diagnostic detail.
class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Converts a Hamiltonian Berge path into a Berge cycle on n, n-1 or n-2
/// vertices by endpoint or crossing splices, preferring the longest.
/// Precondition: endpoints adjacent or shadow degree sum >= n + 2.
BergeCycle cycle_from_ham_path(const Hypergraph& h, const BergePath& p);

/// Cycle positions usable for the off-cycle vertex u, with the admissible
/// witness edges per position: witness[i] = E(u, v_{i-1}) - {e_{i-2}}.
struct UsableSet {
  Vertex u = -1;
  std::vector<int> positions;                   // ascending
  std::map<int, std::vector<EdgeId>> witness;   // position -> admissible edges
};

/// Greedy construction with the guarantee |positions| >= d_c(u)/6:
/// shift good neighbors and predecessors of bad ones onto the cycle, take a
/// maximum non-consecutive subset, then delete one endpoint of every pair
/// whose witness sets are the same single edge.
UsableSet usable_set(const Hypergraph& h, const BergeCycle& c, Vertex u);

struct BridgeRecord {
  int i = 0;
  int j = 0;
  int k = 0;
  int positional_case = 0;  // 1..4, see bridges()
  EdgeId edge_id = -1;
};

/// All bridges produced by the position pair (i, j), deduplicated by edge id
/// (first firing k/case wins). The four positional cases, with position
/// arithmetic mod |V(C)| and edge content compared as sets:
///   1: i -> k -> j and e_{k+1} = {v_i, v_{k+1}, v_{k+2}}
///   2: i -> k -> j and e_{k-1} = {v_j, v_k,     v_{k-1}}
///   3: j -> k -> i and e_{k-1} = {v_i, v_k,     v_{k-1}}
///   4: j -> k -> i and e_{k+1} = {v_j, v_{k+1}, v_{k+2}}
std::vector<BridgeRecord> bridges(const Hypergraph& h, const BergeCycle& c, int i, int j);

/// For each edge, the number of position pairs within X producing it as a
/// bridge. Checked invariant: every count <= |X| - 1.
std::map<EdgeId, int> bridge_multiplicity(const Hypergraph& h, const BergeCycle& c,
                                          const std::vector<int>& x);

enum class ExtensionMove {
  M1_usable_pair,
  M2_double_rotation,
  M3_skip_one,
  M4_skip_two,
  CROSSING_CLOSE,
};

std::string to_string(ExtensionMove m);

struct ExtensionResult {
  ExtensionMove move = ExtensionMove::M1_usable_pair;
  BergeCycle new_cycle;
  std::vector<Vertex> gained;
  std::vector<Vertex> dropped;
};

/// Tries the rotation-extension moves in order M1, M2, M3, M4,
/// CROSSING_CLOSE and returns the first strictly vertex-increasing valid
/// cycle, or nullopt when no move fires.
std::optional<ExtensionResult> try_extend(const Hypergraph& h, const BergeCycle& c,
                                          const ThresholdConfig& cfg);

struct HeuristicResult {
  bool found = false;
  bool heuristic = true;
  std::optional<BergeCycle> certificate;
  long long moves_applied = 0;
  long long nodes_explored = 0;
  double elapsed_seconds = 0.0;
};

/// Greedy seed cycle grown by try_extend; a hamiltonian result carries a
/// validated certificate, anything else is inconclusive.
HeuristicResult heuristic_hamiltonian(const Hypergraph& h, const ThresholdConfig& cfg,
                                      SearchBudget budget = {});

/// Non-asserted observational report: per-vertex classes, usable sets per
/// off-cycle vertex with class intersections, and bridge counts per usable
/// pair including both displayed lower-bound expressions.
struct DiagnosticsReport {
  VertexClassification classes;
  struct UsableDiag {
    Vertex u;
    int d_c;
    UsableSet usable;
    int in_small = 0;
    int in_big = 0;
    int in_super_big = 0;
    bool u_super_small = false;
  };
  std::vector<UsableDiag> usable_sets;
  struct PairDiag {
    Vertex u;
    int i = 0;
    int j = 0;
    int bridge_count = 0;
    // d_c(v_i) + d_c(v_j) - 6 and d_c(v_i) + d_c(v_j) - |V(C)| - 6
    long long bound_minus_6 = 0;
    long long bound_minus_len_6 = 0;
  };
  std::vector<PairDiag> pair_bridges;
  int bridge_union_size = 0;
  int cycle_edge_count = 0;
};

DiagnosticsReport diagnostics_report(const Hypergraph& h, const BergeCycle& c,
                                     const ThresholdConfig& cfg);

}  // namespace bergeham

#endif
