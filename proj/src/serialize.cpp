#include "bergeham/serialize.hpp"

namespace bergeham::io {

json to_json(const Hypergraph& h) { return json::parse(hypergraph_to_json_string(h)); }

Hypergraph hypergraph_from_json(const json& j) { return hypergraph_from_json_string(j.dump()); }

json to_json(const OreReport& r) {
  json j;
  j["n"] = r.n;
  j["covering"] = r.covering;
  j["min_nonadjacent_sum"] = r.min_nonadjacent_sum ? json(*r.min_nonadjacent_sum) : json(nullptr);
  j["witness_pair"] =
      r.witness_pair ? json({r.witness_pair->first, r.witness_pair->second}) : json(nullptr);
  j["satisfied_d0"] = r.satisfied_d0 ? json(*r.satisfied_d0) : json(nullptr);
  return j;
}

OreReport ore_report_from_json(const json& j) {
  OreReport r;
  r.n = j.at("n").get<int>();
  r.covering = j.at("covering").get<bool>();
  if (!j.at("min_nonadjacent_sum").is_null())
    r.min_nonadjacent_sum = j.at("min_nonadjacent_sum").get<long long>();
  if (!j.at("witness_pair").is_null()) {
    auto w = j.at("witness_pair").get<std::vector<Vertex>>();
    r.witness_pair = {w.at(0), w.at(1)};
  }
  if (!j.at("satisfied_d0").is_null()) r.satisfied_d0 = j.at("satisfied_d0").get<long long>();
  return r;
}

json to_json(const BergePath& p) {
  return json{{"vertices", p.vertices}, {"edge_ids", p.edge_ids}};
}

BergePath path_from_json(const json& j) {
  return BergePath{j.at("vertices").get<std::vector<Vertex>>(),
                   j.at("edge_ids").get<std::vector<EdgeId>>()};
}

json to_json(const BergeCycle& c) {
  return json{{"vertices", c.vertices}, {"edge_ids", c.edge_ids}};
}

BergeCycle cycle_from_json(const json& j) {
  return BergeCycle{j.at("vertices").get<std::vector<Vertex>>(),
                    j.at("edge_ids").get<std::vector<EdgeId>>()};
}

json to_json(const HamiltonicityVerdict& v) {
  json j;
  j["status"] = to_string(v.status);
  j["certificate"] = v.certificate ? to_json(*v.certificate) : json(nullptr);
  j["nodes_explored"] = v.nodes_explored;
  return j;
}

HamiltonicityVerdict verdict_from_json(const json& j) {
  HamiltonicityVerdict v;
  std::string s = j.at("status").get<std::string>();
  if (s == "hamiltonian")
    v.status = HamStatus::hamiltonian;
  else if (s == "not_hamiltonian")
    v.status = HamStatus::not_hamiltonian;
  else if (s == "timeout")
    v.status = HamStatus::timeout;
  else
    throw std::invalid_argument("unknown status " + s);
  if (!j.at("certificate").is_null()) v.certificate = cycle_from_json(j.at("certificate"));
  v.nodes_explored = j.value("nodes_explored", 0ll);
  return v;
}

json to_json(const MaxCycleResult& r) {
  json j;
  switch (r.status) {
    case MaxCycleStatus::found: j["status"] = "found"; break;
    case MaxCycleStatus::none: j["status"] = "none"; break;
    case MaxCycleStatus::timeout: j["status"] = "timeout"; break;
  }
  j["cycle"] = r.cycle ? to_json(*r.cycle) : json(nullptr);
  j["nodes_explored"] = r.nodes_explored;
  return j;
}

json to_json(const ThresholdConfig& c) {
  return json{{"d0", c.d0}, {"gamma1", c.gamma1.str()}, {"gamma2", c.gamma2.str()}};
}

ThresholdConfig threshold_config_from_json(const json& j) {
  ThresholdConfig c;
  c.d0 = j.at("d0").get<int64_t>();
  c.gamma1 = Rational::parse(j.at("gamma1").get<std::string>());
  c.gamma2 = Rational::parse(j.at("gamma2").get<std::string>());
  return c;
}

json to_json(const ThresholdReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"satisfied", c.satisfied}, {"detail", c.detail}});
  return json{{"config", to_json(r.config)},
              {"n", r.n},
              {"checks", checks},
              {"all_satisfied", r.all_satisfied},
              {"n_at_least_d0_plus_4", r.n_at_least_d0_plus_4}};
}

json to_json(const VertexClassification& c) {
  json entries = json::array();
  for (const auto& e : c.entries)
    entries.push_back({{"v", e.v},
                       {"d_c", e.d_c},
                       {"super_small", e.super_small},
                       {"small", e.small},
                       {"big", e.big},
                       {"super_big", e.super_big},
                       {"big1", e.big1}});
  return json{{"n", c.n},
              {"cycle_length", c.cycle_length},
              {"config", to_json(c.config)},
              {"classes", entries}};
}

json to_json(const UsableSet& u) {
  json wit = json::array();
  for (int q : u.positions) wit.push_back({{"position", q}, {"edges", u.witness.at(q)}});
  return json{{"u", u.u}, {"positions", u.positions}, {"witnesses", wit}};
}

UsableSet usable_set_from_json(const json& j) {
  UsableSet u;
  u.u = j.at("u").get<Vertex>();
  u.positions = j.at("positions").get<std::vector<int>>();
  for (const auto& w : j.at("witnesses"))
    u.witness[w.at("position").get<int>()] = w.at("edges").get<std::vector<EdgeId>>();
  return u;
}

json to_json(const BridgeRecord& b) {
  return json{
      {"i", b.i}, {"j", b.j}, {"k", b.k}, {"case", b.positional_case}, {"edge_id", b.edge_id}};
}

json to_json(const std::vector<BridgeRecord>& bs) {
  json arr = json::array();
  for (const auto& b : bs) arr.push_back(to_json(b));
  return arr;
}

json to_json(const ExtensionResult& e) {
  return json{{"move", to_string(e.move)},
              {"new_cycle", to_json(e.new_cycle)},
              {"gained", e.gained},
              {"dropped", e.dropped}};
}

json to_json(const HeuristicResult& r) {
  json j;
  j["status"] = r.found ? "hamiltonian" : "not_found";
  j["heuristic"] = true;
  j["certificate"] = r.certificate ? to_json(*r.certificate) : json(nullptr);
  j["moves_applied"] = r.moves_applied;
  return j;
}

json to_json(const Campaign& c) {
  return json{{"kind", to_string(c.kind)}, {"n_min", c.n_min},     {"n_max", c.n_max},
              {"d0", c.d0},                {"samples", c.samples}, {"seed", c.seed},
              {"budget_nodes", c.budget_nodes}, {"guard_max", c.guard_max}};
}

Campaign campaign_from_json(const json& j) {
  Campaign c;
  c.kind = campaign_kind_from_string(j.at("kind").get<std::string>());
  c.n_min = j.at("n_min").get<int>();
  c.n_max = j.at("n_max").get<int>();
  c.d0 = j.at("d0").get<int>();
  c.samples = j.at("samples").get<long long>();
  c.seed = j.at("seed").get<uint64_t>();
  c.budget_nodes = j.at("budget_nodes").get<long long>();
  c.guard_max = j.value("guard_max", 12);
  return c;
}

json to_json(const CampaignReport& r) {
  json per_n = json::array();
  for (const auto& p : r.per_n)
    per_n.push_back({{"n", p.n},
                     {"sampled", p.sampled},
                     {"ore_satisfied", p.ore_satisfied},
                     {"hamiltonian", p.hamiltonian},
                     {"not_hamiltonian", p.not_hamiltonian},
                     {"timeouts", p.timeouts},
                     {"min_margin", p.min_margin ? json(*p.min_margin) : json(nullptr)}});
  json ces = json::array();
  for (const auto& ce : r.counterexamples)
    ces.push_back({{"n", ce.n},
                   {"sample_index", ce.sample_index},
                   {"sample_seed", ce.sample_seed},
                   {"hg", ce.hg_text},
                   {"ore_report", to_json(ce.ore)},
                   {"verdict_status", ce.verdict_status},
                   {"detail", ce.detail}});
  return json{{"campaign", to_json(r.campaign)},
              {"per_n", per_n},
              {"counterexamples", ces},
              {"failure_seeds", r.failure_seeds}};
}

CampaignReport campaign_report_from_json(const json& j) {
  CampaignReport r;
  r.campaign = campaign_from_json(j.at("campaign"));
  for (const auto& p : j.at("per_n")) {
    CampaignReport::PerN pn;
    pn.n = p.at("n").get<int>();
    pn.sampled = p.at("sampled").get<long long>();
    pn.ore_satisfied = p.at("ore_satisfied").get<long long>();
    pn.hamiltonian = p.at("hamiltonian").get<long long>();
    pn.not_hamiltonian = p.at("not_hamiltonian").get<long long>();
    pn.timeouts = p.at("timeouts").get<long long>();
    if (!p.at("min_margin").is_null()) pn.min_margin = p.at("min_margin").get<long long>();
    r.per_n.push_back(pn);
  }
  for (const auto& c : j.at("counterexamples")) {
    Counterexample ce;
    ce.n = c.at("n").get<int>();
    ce.sample_index = c.at("sample_index").get<long long>();
    ce.sample_seed = c.at("sample_seed").get<uint64_t>();
    ce.hg_text = c.at("hg").get<std::string>();
    ce.ore = ore_report_from_json(c.at("ore_report"));
    ce.verdict_status = c.at("verdict_status").get<std::string>();
    ce.detail = c.at("detail").get<std::string>();
    r.counterexamples.push_back(std::move(ce));
  }
  r.failure_seeds = j.at("failure_seeds").get<std::vector<uint64_t>>();
  return r;
}

}  // namespace bergeham::io
