#ifndef BERGEHAM_BERGE_HPP
#define BERGEHAM_BERGE_HPP

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bergeham/hypergraph.hpp"

namespace bergeham {

/// Distinct vertices v_0..v_t and distinct edges e_0..e_{t-1} with
/// {v_i, v_{i+1}} contained in edge e_i.
struct BergePath {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edge_ids;

  int length() const { return static_cast<int>(edge_ids.size()); }
};

/// Distinct vertices v_0..v_{t-1} and distinct edges e_0..e_{t-1} with
/// {v_i, v_{i+1 mod t}} contained in edge e_i; t >= 3. Indices into the
/// vertex sequence are cycle positions, always taken modulo t.
struct BergeCycle {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edge_ids;

  int length() const { return static_cast<int>(vertices.size()); }
  Vertex vertex_at(int pos) const;   // position mod length
  EdgeId edge_at(int pos) const;     // edge from v_pos to v_{pos+1}, mod length
};

/// Result of a structural check; when !ok, index is the first failing
/// sequence position and reason says which invariant broke.
struct Violation {
  bool ok = true;
  int index = -1;
  std::string reason;
};

Violation validate_path(const Hypergraph& h, const BergePath& p);
Violation validate_cycle(const Hypergraph& h, const BergeCycle& c);

struct SearchBudget {
  long long max_nodes = 100'000'000;
  // <= 0 disables the wall-clock limit (node limits keep runs deterministic).
  double max_seconds = 0.0;
};

enum class HamStatus { hamiltonian, not_hamiltonian, timeout };

std::string to_string(HamStatus s);

struct HamiltonicityVerdict {
  HamStatus status = HamStatus::not_hamiltonian;
  std::optional<BergeCycle> certificate;
  long long nodes_explored = 0;
  double elapsed_seconds = 0.0;
};

/// True iff the consecutive pairs of seq admit a system of distinct
/// representative edges; with close_cycle also the pair (last, first).
bool berge_sequence_feasible(const Hypergraph& h, std::span<const Vertex> seq, bool close_cycle);

/// Exact decision by backtracking over vertex sequences anchored at vertex 0,
/// pruned by incremental SDR matching. not_hamiltonian only after exhausting
/// the search space; timeout when the budget runs out first.
HamiltonicityVerdict find_hamiltonian_berge_cycle(const Hypergraph& h,
                                                  SearchBudget budget = {});

/// Same engine, searching for a Berge path covering all vertices. Optional
/// fixed endpoints (order irrelevant).
struct HamPathResult {
  bool found = false;
  bool timeout = false;
  std::optional<BergePath> path;
  long long nodes_explored = 0;
};
HamPathResult find_hamiltonian_berge_path(const Hypergraph& h, SearchBudget budget = {},
                                          std::optional<std::pair<Vertex, Vertex>> endpoints = {});

enum class MaxCycleStatus { found, none, timeout };

struct MaxCycleResult {
  MaxCycleStatus status = MaxCycleStatus::none;
  std::optional<BergeCycle> cycle;
  long long nodes_explored = 0;
  double elapsed_seconds = 0.0;
};

/// Berge cycle with the maximum number of vertices, or none when the
/// hypergraph has no Berge cycle at all. Exhaustive within the budget.
MaxCycleResult max_berge_cycle(const Hypergraph& h, SearchBudget budget = {});

/// Independent small-instance oracle: enumerates all cyclic vertex orders
/// (v_0 = 0, direction canonical) and all injective edge assignments.
/// Guard: n <= 8 and |E| <= 24; throws std::invalid_argument beyond it.
HamiltonicityVerdict brute_force_oracle(const Hypergraph& h);

}  // namespace bergeham

#endif
