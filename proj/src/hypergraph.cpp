#include "bergeham/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace bergeham {

namespace {

int64_t pair_key(int n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return static_cast<int64_t>(u) * n + v;
}

const std::vector<EdgeId> kNoEdges;

}  // namespace

void ShadowGraph::add_pair(Vertex u, Vertex v) {
  if (adjacent(u, v)) return;
  adj_[static_cast<size_t>(u) * n_ + v] = 1;
  adj_[static_cast<size_t>(v) * n_ + u] = 1;
  neighbors_[u].push_back(v);
  neighbors_[v].push_back(u);
}

bool ShadowGraph::complete() const {
  for (int u = 0; u < n_; ++u)
    if (degree(u) != n_ - 1) return false;
  return true;
}

long long ShadowGraph::pair_count() const {
  long long twice = 0;
  for (int u = 0; u < n_; ++u) twice += degree(u);
  return twice / 2;
}

Hypergraph::Hypergraph(int n, std::vector<std::vector<Vertex>> edges)
    : n_(n), edges_(std::move(edges)), incidence_(n), shadow_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::set<std::vector<Vertex>> seen;
  for (size_t id = 0; id < edges_.size(); ++id) {
    auto& e = edges_[id];
    std::sort(e.begin(), e.end());
    if (e.size() < 2) throw std::invalid_argument("edge of size < 2");
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= n_) throw std::invalid_argument("vertex id out of range");
      if (i > 0 && e[i] == e[i - 1]) throw std::invalid_argument("duplicate vertex in edge");
    }
    if (!seen.insert(e).second) throw std::invalid_argument("duplicate edge");
    max_edge_size_ = std::max(max_edge_size_, static_cast<int>(e.size()));
    for (Vertex v : e) incidence_[v].push_back(static_cast<EdgeId>(id));
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = i + 1; j < e.size(); ++j) {
        shadow_.add_pair(e[i], e[j]);
        pair_edges_[pair_key(n_, e[i], e[j])].push_back(static_cast<EdgeId>(id));
      }
  }
  for (auto& nb : shadow_.neighbors_) std::sort(nb.begin(), nb.end());
}

bool Hypergraph::edge_contains(EdgeId e, Vertex v) const {
  const auto& ed = edges_[e];
  return std::binary_search(ed.begin(), ed.end(), v);
}

void Hypergraph::check_pair(Vertex u, Vertex v) const {
  if (u == v) throw std::invalid_argument("u == v");
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex id out of range");
}

int Hypergraph::codegree(Vertex u, Vertex v) const {
  return static_cast<int>(edges_between(u, v).size());
}

const std::vector<EdgeId>& Hypergraph::edges_between(Vertex u, Vertex v) const {
  check_pair(u, v);
  auto it = pair_edges_.find(pair_key(n_, u, v));
  return it == pair_edges_.end() ? kNoEdges : it->second;
}

OreReport ore_report(const Hypergraph& h) {
  OreReport rep;
  rep.n = h.vertex_count();
  const ShadowGraph& sh = h.shadow();
  rep.covering = true;
  for (Vertex u = 0; u < rep.n; ++u) {
    for (Vertex v = u + 1; v < rep.n; ++v) {
      if (sh.adjacent(u, v)) continue;
      long long sum = sh.degree(u) + sh.degree(v);
      if (!rep.min_nonadjacent_sum || sum < *rep.min_nonadjacent_sum) {
        rep.min_nonadjacent_sum = sum;
        rep.witness_pair = {u, v};
      }
      rep.covering = false;
    }
  }
  if (!rep.covering) rep.satisfied_d0 = *rep.min_nonadjacent_sum - rep.n;
  return rep;
}

namespace {

// Strips comments, splits into integer tokens; throws on anything else.
std::vector<long long> parse_int_line(const std::string& raw, int lineno) {
  std::string line = raw;
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  std::istringstream ss(line);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    try {
      size_t pos = 0;
      long long v = std::stoll(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(lineno, "malformed token '" + tok + "'");
    }
  }
  return out;
}

Hypergraph build_checked(long long n, std::vector<std::pair<int, std::vector<Vertex>>> lines) {
  // Re-run the type checks line by line so errors carry line numbers.
  if (n < 0) throw ParseError(0, "negative vertex count");
  std::set<std::vector<Vertex>> seen;
  std::vector<std::vector<Vertex>> edges;
  for (auto& [lineno, e] : lines) {
    if (e.size() < 2) throw ParseError(lineno, "edge of size < 2");
    std::vector<Vertex> sorted = e;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] < 0 || sorted[i] >= n)
        throw ParseError(lineno, "vertex id " + std::to_string(sorted[i]) + " out of range [0," +
                                     std::to_string(n) + ")");
      if (i > 0 && sorted[i] == sorted[i - 1])
        throw ParseError(lineno, "duplicate vertex " + std::to_string(sorted[i]) + " in edge");
    }
    if (!seen.insert(sorted).second) throw ParseError(lineno, "duplicate edge");
    edges.push_back(std::move(e));
  }
  return Hypergraph(static_cast<int>(n), std::move(edges));
}

}  // namespace

Hypergraph load_hg(std::istream& in) {
  std::string raw;
  int lineno = 0;
  std::optional<long long> n;
  std::vector<std::pair<int, std::vector<Vertex>>> edge_lines;
  while (std::getline(in, raw)) {
    ++lineno;
    auto ints = parse_int_line(raw, lineno);
    if (ints.empty()) continue;
    if (!n) {
      if (ints.size() != 1) throw ParseError(lineno, "expected a single vertex count");
      n = ints[0];
      continue;
    }
    std::vector<Vertex> e;
    for (long long v : ints) {
      if (v < INT32_MIN || v > INT32_MAX) throw ParseError(lineno, "vertex id out of range");
      e.push_back(static_cast<Vertex>(v));
    }
    edge_lines.emplace_back(lineno, std::move(e));
  }
  if (!n) throw ParseError(0, "missing vertex count line");
  return build_checked(*n, std::move(edge_lines));
}

Hypergraph load_hg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  // Structured files start with '{'; sniff the first non-space character.
  char c;
  while (in.get(c)) {
    if (!isspace(static_cast<unsigned char>(c))) break;
  }
  in.clear();
  in.seekg(0);
  if (c == '{') {
    std::ostringstream buf;
    buf << in.rdbuf();
    return hypergraph_from_json_string(buf.str());
  }
  return load_hg(in);
}

namespace {

std::vector<std::vector<Vertex>> canonical_edges(const Hypergraph& h) {
  auto edges = h.edges();  // already internally sorted
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

void store_hg(const Hypergraph& h, std::ostream& out) {
  out << h.vertex_count() << "\n";
  for (const auto& e : canonical_edges(h)) {
    for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << "\n";
  }
}

std::string store_hg_string(const Hypergraph& h) {
  std::ostringstream out;
  store_hg(h, out);
  return out.str();
}

Hypergraph hypergraph_from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError(0, "expected an object with fields n, edges");
  long long n;
  std::vector<std::pair<int, std::vector<Vertex>>> edge_lines;
  try {
    n = j.at("n").get<long long>();
    int idx = 0;
    for (const auto& je : j.at("edges")) {
      ++idx;
      edge_lines.emplace_back(idx, je.get<std::vector<Vertex>>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("bad json: ") + e.what());
  }
  return build_checked(n, std::move(edge_lines));
}

std::string hypergraph_to_json_string(const Hypergraph& h) {
  nlohmann::json j;
  j["n"] = h.vertex_count();
  j["edges"] = canonical_edges(h);
  return j.dump();
}

}  // namespace bergeham
