#include "wcg/wellcovered.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "wcg/corpus.hpp"

namespace wcg {

namespace {

struct DominatorBacktrack {
    const Graph& g;
    std::vector<Vertex> order;                 // target vertices, hardest first
    std::vector<std::vector<Vertex>> options;  // candidate dominators per entry of order
    VertexSet chosen;
    VertexSet blocked;  // chosen plus its neighbors
    std::size_t nodes = 0;

    bool dominated(Vertex q) const { return g.neighbors(q).intersects(chosen); }

    bool available(Vertex c) const { return !blocked.contains(c); }

    bool still_feasible(std::size_t from) const {
        for (std::size_t i = from; i < order.size(); ++i) {
            if (dominated(order[i])) continue;
            if (std::none_of(options[i].begin(), options[i].end(), [&](Vertex c) { return available(c); }))
                return false;
        }
        return true;
    }

    bool run(std::size_t idx) {
        ++nodes;
        while (idx < order.size() && dominated(order[idx])) ++idx;
        if (idx == order.size()) return true;
        for (Vertex c : options[idx]) {
            if (!available(c)) continue;
            VertexSet saved = blocked;
            chosen.insert(c);
            blocked.insert(c);
            blocked |= g.neighbors(c);
            if (still_feasible(idx + 1) && run(idx + 1)) return true;
            chosen.erase(c);
            blocked = std::move(saved);
        }
        return false;
    }
};

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) out += (out.empty() ? "" : "; ") + s;
    return out;
}

}  // namespace

DominatorSearch find_independent_dominator(const Graph& g, const VertexSet& target) {
    if (target.universe() != g.order()) throw InputError("target set over the wrong vertex range");
    DominatorBacktrack search{g, target.members(), {}, g.no_vertices(), g.no_vertices()};
    std::stable_sort(search.order.begin(), search.order.end(), [&](Vertex a, Vertex b) {
        return (g.neighbors(a) - target).size() < (g.neighbors(b) - target).size();
    });
    for (Vertex q : search.order) search.options.push_back((g.neighbors(q) - target).members());

    DominatorSearch result;
    if (search.still_feasible(0) && search.run(0)) result.witness = search.chosen;
    result.nodes = search.nodes;
    return result;
}

std::optional<VertexSet> dominating_independent_set(const Graph& g, const VertexSet& q) {
    if (q.universe() != g.order() || !is_clique(g, q))
        throw PreconditionError(q.to_string() + " is not a clique of the graph");
    return find_independent_dominator(g, q).witness;
}

VertexSet extend_to_maximal_independent(const Graph& g, VertexSet s) {
    VertexSet blocked = closed_neighborhood(g, s);
    for (std::size_t v = 0; v < g.order(); ++v) {
        const auto vertex = static_cast<Vertex>(v);
        if (blocked.contains(vertex)) continue;
        s.insert(vertex);
        blocked.insert(vertex);
        blocked |= g.neighbors(vertex);
    }
    return s;
}

Verdict check_well_covered(const Graph& g, const BasicCliqueCover& cover) {
    CoverReport report = validate_basic_cover(g, cover);
    if (!report) throw PreconditionError("invalid basic clique cover: " + join(report.violations));

    Verdict verdict;
    verdict.alpha = cover.cliques.size();
    for (const auto& q : cover.cliques) {
        DominatorSearch search = find_independent_dominator(g, q);
        if (search.witness) verdict.well_covered = false;
        verdict.per_clique.push_back({q, std::move(search.witness), search.nodes});
    }

    if (!verdict.well_covered) {
        const auto refuting = std::find_if(verdict.per_clique.begin(), verdict.per_clique.end(),
                                           [](const auto& c) { return c.refutation.has_value(); });
        WitnessPair pair{maximum_independent_set(g), extend_to_maximal_independent(g, *refuting->refutation)};
        // The extension avoids the refuted clique and meets every other clique at
        // most once.
        if (pair.smaller.size() >= verdict.alpha)
            throw std::logic_error("refutation extended to a maximal independent set of size alpha");
        verdict.witness_pair = std::move(pair);
    }
    return verdict;
}

// Bipartite matching criterion -------------------------------------------------

std::optional<Edge> ravindra_edge_defect(const Graph& g, Vertex x, Vertex y) {
    for (Vertex a : g.neighbors(x).members())
        for (Vertex b : g.neighbors(y).members())
            if (a != b && !g.adjacent(a, b)) return Edge{a, b};
    return std::nullopt;
}

RavindraResult check_ravindra(const Graph& g) {
    auto sides = two_coloring(g);
    if (!sides) throw PreconditionError("graph is not bipartite");
    for (std::size_t v = 0; v < g.order(); ++v)
        if (g.degree(static_cast<Vertex>(v)) == 0)
            throw PreconditionError("vertex " + std::to_string(v) + " is isolated");

    VertexSet x = g.no_vertices(), y = g.no_vertices();
    for (std::size_t v = 0; v < g.order(); ++v) ((*sides)[v] == 0 ? x : y).insert(static_cast<Vertex>(v));

    RavindraResult result;
    result.matching = max_bipartite_matching(g, x, y);
    result.perfect_matching_exists = 2 * result.matching.size() == g.order();
    if (!result.perfect_matching_exists) {
        result.reason = "no perfect matching (maximum matching has " + std::to_string(result.matching.size()) +
                        " edges on " + std::to_string(g.order()) + " vertices)";
        return result;
    }

    for (auto [u, w] : result.matching) {
        if (auto defect = ravindra_edge_defect(g, u, w)) {
            result.evidence = RavindraEvidence{{u, w}, *defect};
            break;
        }
    }
    if (!result.evidence) {
        result.well_covered = true;
        result.reason = "perfect matching with complete bipartite closed neighborhoods";
        return result;
    }

    // The first matching failed; any other perfect matching made only of good
    // edges is a perfect matching of the good-edge subgraph.
    std::vector<Edge> good;
    for (auto [u, w] : g.edges())
        if (!ravindra_edge_defect(g, u, w)) good.emplace_back(u, w);
    Graph good_graph(g.order(), good);
    auto alternative = max_bipartite_matching(good_graph, x, y);
    if (2 * alternative.size() == g.order()) {
        result.well_covered = true;
        result.matching = std::move(alternative);
        result.evidence.reset();
        result.reason = "perfect matching with complete bipartite closed neighborhoods";
    } else {
        result.reason = "no perfect matching uses only edges with complete bipartite closed neighborhoods";
    }
    return result;
}

// s-partite consequences --------------------------------------------------------

SpartiteReport verify_spartite_consequences(const Graph& g, const std::vector<VertexSet>& parts,
                                            const Guard& guard) {
    VertexSet covered = g.no_vertices();
    for (const auto& p : parts) {
        if (p.universe() != g.order()) throw InputError("part over the wrong vertex range");
        if (p.intersects(covered)) throw InputError("parts overlap in " + (p & covered).to_string());
        if (!is_independent(g, p)) throw InputError("part " + p.to_string() + " is not independent");
        covered |= p;
    }
    if (covered != g.all_vertices())
        throw InputError("parts miss vertices " + (g.all_vertices() - covered).to_string());

    SpartiteReport report;
    const std::size_t s = parts.size();
    for (const auto& p : parts) report.part_sizes.push_back(p.size());

    for (const auto& clique : maximal_cliques(g)) {
        if (clique.size() != s) {
            report.reason = "maximal clique " + clique.to_string() + " has size " + std::to_string(clique.size()) +
                            ", not s = " + std::to_string(s);
            return report;
        }
    }
    if (!is_well_covered_oracle(g, guard).well_covered) {
        report.reason = "graph is not well-covered";
        return report;
    }

    report.status = SpartiteStatus::consistent;
    report.equal_sizes = std::adjacent_find(report.part_sizes.begin(), report.part_sizes.end(),
                                            std::not_equal_to<>()) == report.part_sizes.end();
    std::vector<std::string> failures;
    if (!report.equal_sizes) failures.push_back("part sizes differ");
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j) {
            PartMatching pm{i, j, max_bipartite_matching(g, parts[i], parts[j]), false};
            pm.perfect = pm.matching.size() == parts[i].size() && pm.matching.size() == parts[j].size();
            if (!pm.perfect)
                failures.push_back("no perfect matching between parts " + std::to_string(i) + " and " +
                                   std::to_string(j));
            report.matchings.push_back(std::move(pm));
        }
    if (!failures.empty()) {
        report.status = SpartiteStatus::contradiction;
        report.reason = join(failures);
    } else {
        report.reason = "equal part sizes and pairwise perfect matchings";
    }
    return report;
}

std::optional<PartitePremise> uniform_clique_partition(const Graph& g) {
    if (g.order() == 0) return std::nullopt;
    const auto cliques = maximal_cliques(g);
    const std::size_t s = cliques.front().size();
    for (const auto& c : cliques)
        if (c.size() != s) return std::nullopt;
    auto coloring = find_coloring(g, s);
    if (!coloring) return std::nullopt;
    PartitePremise premise{s, std::vector<VertexSet>(s, g.no_vertices())};
    for (std::size_t v = 0; v < g.order(); ++v) premise.parts[(*coloring)[v]].insert(static_cast<Vertex>(v));
    return premise;
}

// Minimal-cover shortcut ----------------------------------------------------------

bool shortcut_minimal_cover_claim(const Graph& g, const VertexSet& q) {
    if (q.universe() != g.order() || !is_clique(g, q))
        throw PreconditionError(q.to_string() + " is not a clique of the graph");
    const VertexSet closed = closed_neighborhood(g, q);
    const VertexSet outside = closed - q;
    // q covers the induced subgraph on N[q] iff no edge joins two vertices outside q.
    bool covers = true;
    outside.for_each([&](Vertex v) { covers = covers && !g.neighbors(v).intersects(outside); });
    if (!covers) return false;
    // Dropping v uncovers an edge iff v has a neighbor outside q.
    bool minimal = true;
    q.for_each([&](Vertex v) { minimal = minimal && g.neighbors(v).intersects(outside); });
    return minimal;
}

// Conjecture hunt ---------------------------------------------------------------

namespace {

struct GraphOutcome {
    bool scanned = false;
    bool premise = false;
    bool in_class = false;
    std::optional<Counterexample> counterexample;
    std::size_t audited = 0;
    std::size_t agreements = 0;
    std::vector<ShortcutRecord> disagreements;
    std::vector<ShortcutRecord> violations;
};

GraphOutcome examine(const Graph& g) {
    GraphOutcome out;
    out.scanned = true;
    const Guard unlimited{0, true};
    const auto membership = is_in_class_G(g, unlimited);
    out.in_class = membership.member;

    if (membership.witness) {
        for (const auto& q : membership.witness->cliques) {
            const bool shortcut = shortcut_minimal_cover_claim(g, q);
            auto witness = find_independent_dominator(g, q).witness;
            ++out.audited;
            if (shortcut == witness.has_value()) {
                ++out.agreements;
            } else {
                ShortcutRecord record{g, q, shortcut, std::move(witness)};
                (shortcut ? out.violations : out.disagreements).push_back(std::move(record));
            }
        }
    }

    if (auto premise = uniform_clique_partition(g)) {
        const OracleVerdict oracle = is_well_covered_oracle(g, unlimited);
        if (oracle.well_covered) {
            out.premise = true;
            if (!out.in_class)
                out.counterexample = Counterexample{g, premise->s, premise->parts, *oracle.common_size};
        }
    }
    return out;
}

}  // namespace

HuntReport conjecture_hunt(std::span<const Graph> graphs, const HuntOptions& options) {
    std::vector<GraphOutcome> outcomes(graphs.size());
    const std::size_t workers = std::max<std::size_t>(1, std::min(options.workers, graphs.size()));
    auto cancelled = [&] { return options.cancel && options.cancel->load(); };

    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < graphs.size() && !cancelled(); i += workers)
                    outcomes[i] = examine(graphs[i]);
            });
    }

    HuntReport report;
    for (auto& o : outcomes) {
        if (!o.scanned) {
            report.complete = false;
            continue;
        }
        ++report.scanned;
        if (o.premise) {
            ++report.premise_satisfying;
            if (o.in_class) ++report.premise_in_class_G;
        }
        if (o.counterexample) report.counterexamples.push_back(std::move(*o.counterexample));
        report.cliques_audited += o.audited;
        report.shortcut_agreements += o.agreements;
        std::move(o.disagreements.begin(), o.disagreements.end(), std::back_inserter(report.shortcut_disagreements));
        std::move(o.violations.begin(), o.violations.end(), std::back_inserter(report.shortcut_violations));
    }
    return report;
}

HuntReport conjecture_hunt(std::size_t max_n, const HuntOptions& options) {
    if (max_n > options.max_enumeration_n)
        throw ResourceError("hunt enumeration limited to n <= " + std::to_string(options.max_enumeration_n) +
                            ", got " + std::to_string(max_n));
    const auto graphs = nonisomorphic_graphs_up_to(max_n);
    return conjecture_hunt(graphs, options);
}

}  // namespace wcg
