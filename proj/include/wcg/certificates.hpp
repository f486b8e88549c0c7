#pragma once

#include <string>

#include "json.hpp"
#include "wcg/bench.hpp"
#include "wcg/clique_cover.hpp"
#include "wcg/edge_ring.hpp"
#include "wcg/graph.hpp"
#include "wcg/simplicial.hpp"
#include "wcg/wellcovered.hpp"

// JSON certificates. Every document produced by the CLI starts from
// envelope() and is described by schema/wcg-output.schema.json.
namespace wcg::json {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json envelope(const std::string& command);

json vertex_list(const VertexSet& s);
json graph_json(const Graph& g);
json cover_json(const BasicCliqueCover& cover);
json oracle_json(const OracleVerdict& verdict);
json verdict_json(const Verdict& verdict);
json zero_divisor_json(const ZeroDivisorVerdict& verdict);
json ravindra_json(const RavindraResult& result);
json spartite_json(const SpartiteReport& report);
json subdivision_json(const NoncomparabilityGraph& subdivision);
json hunt_json(const HuntReport& report);
json bench_json(const std::vector<BenchRow>& rows);

}  // namespace wcg::json
