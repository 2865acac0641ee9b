#ifndef BERGEHAM_SERIALIZE_HPP
#define BERGEHAM_SERIALIZE_HPP

#include "json.hpp"

#include "bergeham/berge.hpp"
#include "bergeham/harness.hpp"
#include "bergeham/hypergraph.hpp"
#include "bergeham/machinery.hpp"

// JSON forms of every result type. Keys serialize alphabetically, so dumps
// of equal values are byte-identical; volatile timing fields are never part
// of the canonical form (text renderings report them instead).

namespace bergeham::io {

using nlohmann::json;

json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);

json to_json(const OreReport& r);
OreReport ore_report_from_json(const json& j);

json to_json(const BergePath& p);
BergePath path_from_json(const json& j);

json to_json(const BergeCycle& c);
BergeCycle cycle_from_json(const json& j);

json to_json(const HamiltonicityVerdict& v);
HamiltonicityVerdict verdict_from_json(const json& j);

json to_json(const MaxCycleResult& r);

json to_json(const ThresholdConfig& c);
ThresholdConfig threshold_config_from_json(const json& j);
json to_json(const ThresholdReport& r);

json to_json(const VertexClassification& c);

json to_json(const UsableSet& u);
UsableSet usable_set_from_json(const json& j);

json to_json(const BridgeRecord& b);
json to_json(const std::vector<BridgeRecord>& bs);

json to_json(const ExtensionResult& e);

json to_json(const HeuristicResult& r);

json to_json(const Campaign& c);
Campaign campaign_from_json(const json& j);

json to_json(const CampaignReport& r);
CampaignReport campaign_report_from_json(const json& j);

}  // namespace bergeham::io

#endif
