#ifndef BERGEHAM_HYPERGRAPH_HPP
#define BERGEHAM_HYPERGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bergeham {

using Vertex = int;
using EdgeId = int;

/// Thrown by the loaders; carries the 1-based input line number (0 when the
/// error is not tied to a specific line).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Simple graph on the same vertex set: u,v adjacent iff some edge of the
/// source hypergraph contains both.
class ShadowGraph {
 public:
  ShadowGraph() = default;
  explicit ShadowGraph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0), neighbors_(n) {}

  int vertex_count() const { return n_; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[static_cast<size_t>(u) * n_ + v] != 0; }
  int degree(Vertex u) const { return static_cast<int>(neighbors_[u].size()); }
  const std::vector<Vertex>& neighbors(Vertex u) const { return neighbors_[u]; }
  bool complete() const;
  // Number of edges of the shadow graph (adjacent pairs).
  long long pair_count() const;

 private:
  friend class Hypergraph;
  void add_pair(Vertex u, Vertex v);

  int n_ = 0;
  std::vector<uint8_t> adj_;
  std::vector<std::vector<Vertex>> neighbors_;
};

/// Vertex ids are 0..n-1. Edges are distinct vertex sets of size >= 2, kept
/// id-sorted; edge ids follow construction order. Immutable once built; the
/// shadow graph and the pair -> edges index are computed eagerly.
class Hypergraph {
 public:
  Hypergraph() : Hypergraph(0, {}) {}
  Hypergraph(int n, std::vector<std::vector<Vertex>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Vertex>& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<std::vector<Vertex>>& edges() const { return edges_; }
  /// Ids of the edges containing v.
  const std::vector<EdgeId>& edges_at(Vertex v) const { return incidence_[v]; }
  int max_edge_size() const { return max_edge_size_; }

  bool edge_contains(EdgeId e, Vertex v) const;
  const ShadowGraph& shadow() const { return shadow_; }

  /// Co-degree of u and v: number of edges containing both. Requires u != v.
  int codegree(Vertex u, Vertex v) const;
  /// Ids of the edges containing both u and v. Requires u != v.
  const std::vector<EdgeId>& edges_between(Vertex u, Vertex v) const;

 private:
  void check_pair(Vertex u, Vertex v) const;

  int n_ = 0;
  int max_edge_size_ = 0;
  std::vector<std::vector<Vertex>> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::unordered_map<int64_t, std::vector<EdgeId>> pair_edges_;
  ShadowGraph shadow_;
};

/// Ore-condition summary over the shadow graph. When the hypergraph is
/// covering there is no non-adjacent pair and the minimum (and the certified
/// d0) are absent.
struct OreReport {
  int n = 0;
  bool covering = false;
  std::optional<long long> min_nonadjacent_sum;
  std::optional<std::pair<Vertex, Vertex>> witness_pair;
  // Largest d with min_nonadjacent_sum >= n + d; may be negative.
  std::optional<long long> satisfied_d0;

  /// True when every non-adjacent pair has shadow degree sum >= n + d0
  /// (vacuously when covering).
  bool certifies(long long d0) const { return covering || *satisfied_d0 >= d0; }
};

OreReport ore_report(const Hypergraph& h);

// ---- file formats ----
//
// `.hg` text: first non-comment line is n, every further non-comment line is
// one edge as space-separated vertex ids; `#` starts a comment, blank lines
// are ignored. Structured format: {"n": int, "edges": [[int,...],...]}.
// Output of either format is canonical: each edge ascending, edge list
// sorted lexicographically.

Hypergraph load_hg(std::istream& in);
Hypergraph load_hg_file(const std::string& path);
void store_hg(const Hypergraph& h, std::ostream& out);
std::string store_hg_string(const Hypergraph& h);

Hypergraph hypergraph_from_json_string(const std::string& text);
std::string hypergraph_to_json_string(const Hypergraph& h);

}  // namespace bergeham

#endif
