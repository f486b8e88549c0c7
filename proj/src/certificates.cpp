#include "wcg/certificates.hpp"

#include "wcg/io.hpp"

namespace wcg::json {

namespace {

json edge_list(const std::vector<Edge>& edges) {
    json out = json::array();
    for (auto [u, v] : edges) out.push_back({u, v});
    return out;
}

const char* status_name(SpartiteStatus s) {
    switch (s) {
        case SpartiteStatus::consistent: return "consistent";
        case SpartiteStatus::premise_not_met: return "premise_not_met";
        case SpartiteStatus::contradiction: return "contradiction";
    }
    return "unknown";
}

json shortcut_record_json(const ShortcutRecord& r) {
    return {{"graph", graph_json(r.graph)},
            {"clique", vertex_list(r.clique)},
            {"shortcut", r.shortcut},
            {"witness", r.witness ? vertex_list(*r.witness) : json(nullptr)}};
}

}  // namespace

json envelope(const std::string& command) { return {{"schema", kSchemaVersion}, {"command", command}}; }

json vertex_list(const VertexSet& s) { return s.members(); }

json graph_json(const Graph& g) {
    return {{"n", g.order()},
            {"edges", edge_list(g.edges())},
            {"graph6", g.order() <= kMaxGraph6Order ? json(encode_graph6(g)) : json(nullptr)}};
}

json cover_json(const BasicCliqueCover& cover) {
    json out = json::array();
    for (const auto& q : cover.cliques) out.push_back(vertex_list(q));
    return out;
}

json oracle_json(const OracleVerdict& v) {
    json out = {{"well_covered", v.well_covered}, {"count", v.count}};
    out["common_size"] = v.common_size ? json(*v.common_size) : json(nullptr);
    if (v.smaller_witness && v.larger_witness)
        out["witnesses"] = {{"smaller", vertex_list(*v.smaller_witness)},
                            {"larger", vertex_list(*v.larger_witness)}};
    else
        out["witnesses"] = nullptr;
    return out;
}

json verdict_json(const Verdict& v) {
    json per_clique = json::array();
    for (const auto& c : v.per_clique) {
        json entry = {{"clique", vertex_list(c.clique)}, {"search_nodes", c.search_nodes}};
        if (c.refutation) {
            entry["status"] = "refuted";
            entry["witness"] = vertex_list(*c.refutation);
        } else {
            entry["status"] = "certified";
            entry["witness"] = nullptr;
        }
        per_clique.push_back(std::move(entry));
    }
    json out = {{"well_covered", v.well_covered}, {"alpha", v.alpha}, {"per_clique", per_clique}};
    if (v.witness_pair)
        out["witnesses"] = {{"maximum", vertex_list(v.witness_pair->maximum)},
                            {"smaller", vertex_list(v.witness_pair->smaller)}};
    else
        out["witnesses"] = nullptr;
    return out;
}

json zero_divisor_json(const ZeroDivisorVerdict& v) {
    json thetas = json::array();
    for (const auto& t : v.thetas)
        thetas.push_back({{"form", t.theta.to_string()},
                          {"support", vertex_list(t.theta.support())},
                          {"zero_divisor", t.witness.has_value()},
                          {"witness", t.witness ? json(t.witness->to_string()) : json(nullptr)},
                          {"witness_support", t.witness ? vertex_list(t.witness->support) : json(nullptr)}});
    return {{"well_covered", v.well_covered}, {"thetas", thetas}};
}

json ravindra_json(const RavindraResult& r) {
    json out = {{"well_covered", r.well_covered},
                {"perfect_matching_exists", r.perfect_matching_exists},
                {"matching", edge_list(r.matching)},
                {"reason", r.reason}};
    if (r.evidence)
        out["evidence"] = {{"matched", {r.evidence->matched.first, r.evidence->matched.second}},
                           {"non_adjacent", {r.evidence->missing.first, r.evidence->missing.second}}};
    else
        out["evidence"] = nullptr;
    return out;
}

json spartite_json(const SpartiteReport& r) {
    json matchings = json::array();
    for (const auto& m : r.matchings)
        matchings.push_back(
            {{"parts", {m.first, m.second}}, {"matching", edge_list(m.matching)}, {"perfect", m.perfect}});
    return {{"status", status_name(r.status)},
            {"reason", r.reason},
            {"part_sizes", r.part_sizes},
            {"equal_sizes", r.equal_sizes},
            {"matchings", matchings}};
}

json subdivision_json(const NoncomparabilityGraph& s) {
    json faces = json::array();
    for (const auto& f : s.map.faces) faces.push_back(f);
    json levels = json::array();
    for (const auto& q : s.cover.cliques) levels.push_back(q.size());
    return {{"graph", graph_json(s.graph)},
            {"edgelist", format_edgelist(s.graph)},
            {"faces", faces},
            {"cover", cover_json(s.cover)},
            {"cover_levels", levels}};
}

json hunt_json(const HuntReport& r) {
    json counterexamples = json::array();
    for (const auto& c : r.counterexamples) {
        json parts = json::array();
        for (const auto& p : c.parts) parts.push_back(vertex_list(p));
        counterexamples.push_back(
            {{"graph", graph_json(c.graph)}, {"s", c.s}, {"parts", parts}, {"common_size", c.common_size}});
    }
    json disagreements = json::array();
    for (const auto& d : r.shortcut_disagreements) disagreements.push_back(shortcut_record_json(d));
    json violations = json::array();
    for (const auto& v : r.shortcut_violations) violations.push_back(shortcut_record_json(v));
    return {{"complete", r.complete},
            {"scanned", r.scanned},
            {"premise_satisfying", r.premise_satisfying},
            {"premise_in_class_G", r.premise_in_class_G},
            {"counterexamples", counterexamples},
            {"shortcut_audit",
             {{"cliques_audited", r.cliques_audited},
              {"agreements", r.shortcut_agreements},
              {"disagreement_count", r.shortcut_disagreements.size()},
              {"violation_count", r.shortcut_violations.size()},
              {"disagreements", disagreements},
              {"violations", violations}}}};
}

json bench_json(const std::vector<BenchRow>& rows) {
    json out = json::array();
    for (const auto& r : rows)
        out.push_back({{"graph_id", r.id},
                       {"graph6", r.graph6},
                       {"vertices", r.vertices},
                       {"oracle_us", r.oracle_us},
                       {"checker_us", r.checker_us},
                       {"zerodiv_us", r.zerodiv_us},
                       {"agreement", r.agreement}});
    return out;
}

}  // namespace wcg::json
