// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "fixtures.hpp"
#include "wcg/bench.hpp"
#include "wcg/corpus.hpp"
#include "wcg/edge_ring.hpp"
#include "wcg/io.hpp"
#include "wcg/simplicial.hpp"
#include "wcg/wellcovered.hpp"

using namespace wcg;
using namespace wcg::test;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s [%d] %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), seconds);
    std::fflush(stdout);
}

bool isolated_vertex(const Graph& g) {
    for (std::size_t v = 0; v < g.order(); ++v)
        if (g.degree(static_cast<Vertex>(v)) == 0) return true;
    return false;
}

// Antichains of non-empty subsets of [n] whose union is [n].
std::vector<SimplicialComplex> all_complexes(std::size_t n) {
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t s = 1; s < (1u << n); ++s) subsets.push_back(s);
    std::vector<SimplicialComplex> out;
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint64_t family = 1; family < (std::uint64_t{1} << subsets.size()); ++family) {
        std::vector<std::uint32_t> chosen;
        std::uint32_t covered = 0;
        for (std::size_t i = 0; i < subsets.size(); ++i)
            if ((family >> i) & 1u) {
                chosen.push_back(subsets[i]);
                covered |= subsets[i];
            }
        if (covered != full) continue;
        bool antichain = true;
        for (std::size_t i = 0; i < chosen.size() && antichain; ++i)
            for (std::size_t j = 0; j < chosen.size() && antichain; ++j)
                if (i != j && (chosen[i] & chosen[j]) == chosen[i]) antichain = false;
        if (!antichain) continue;
        std::vector<Face> facets;
        for (auto s : chosen) {
            Face f;
            for (std::size_t e = 0; e < n; ++e)
                if ((s >> e) & 1u) f.push_back(static_cast<int>(e));
            facets.push_back(f);
        }
        out.push_back(from_facets(n, facets, true));
    }
    return out;
}

SimplicialComplex random_complex(std::size_t n, std::mt19937_64& rng) {
    std::vector<Face> facets(1 + rng() % 5);
    for (auto& f : facets) {
        const std::uint32_t mask = 1 + static_cast<std::uint32_t>(rng() % ((1u << n) - 1));
        for (std::size_t e = 0; e < n; ++e)
            if ((mask >> e) & 1u) f.push_back(static_cast<int>(e));
    }
    return from_facets(n, facets);
}

std::string count_line(std::initializer_list<std::pair<const char*, std::size_t>> items) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [name, value] : items) {
        out << (first ? "" : ", ") << name << "=" << value;
        first = false;
    }
    return out.str();
}

}  // namespace

int main() {
    const auto corpus = nonisomorphic_graphs_up_to(8);
    std::printf("corpus: %zu non-isomorphic graphs on at most 8 vertices\n", corpus.size());

    report(1, "domination criterion equals the oracle on every basic cover, n <= 8", [&] {
        std::size_t graphs = 0, covers = 0, mismatches = 0, inconsistent = 0;
        for (const auto& g : corpus) {
            const auto all = all_basic_clique_covers(g);
            if (all.empty()) continue;
            ++graphs;
            const bool oracle = is_well_covered_oracle(g).well_covered;
            if (oracle != brute_well_covered(g)) ++mismatches;
            std::optional<bool> first;
            for (const auto& cover : all) {
                ++covers;
                const bool verdict = check_well_covered(g, cover).well_covered;
                if (verdict != oracle) ++mismatches;
                if (first && *first != verdict) ++inconsistent;
                first = verdict;
            }
        }
        return Outcome{graphs > 0 && mismatches == 0 && inconsistent == 0,
                       count_line({{"class-G graphs", graphs}, {"covers", covers}, {"mismatches", mismatches},
                                   {"cover-dependent verdicts", inconsistent}})};
    });

    report(2, "zero-divisor route equals both verdicts with re-validated witnesses, n <= 8", [&] {
        std::size_t graphs = 0, mismatches = 0, witnesses = 0, bad_witnesses = 0;
        for (const auto& g : corpus) {
            const auto cover = find_basic_clique_cover(g);
            if (!cover) continue;
            ++graphs;
            const bool oracle = is_well_covered_oracle(g).well_covered;
            const bool checker = check_well_covered(g, *cover).well_covered;
            const auto zd = wellcovered_via_zero_divisors(g, *cover);
            if (zd.well_covered != oracle || zd.well_covered != checker) ++mismatches;
            const auto adj = adjacency_masks(g);
            for (const auto& t : zd.thetas) {
                if (!t.witness) continue;
                ++witnesses;
                // m is nonzero iff its support is independent; m*x_j vanishes
                // iff support + j is dependent.
                std::uint32_t m = 0;
                t.witness->support.for_each([&](Vertex v) { m |= 1u << v; });
                bool ok = mask_independent(adj, m);
                t.theta.support().for_each([&](Vertex j) { ok = ok && !mask_independent(adj, m | (1u << j)); });
                if (!ok) ++bad_witnesses;
            }
        }
        return Outcome{graphs > 0 && mismatches == 0 && bad_witnesses == 0,
                       count_line({{"class-G graphs", graphs}, {"mismatches", mismatches},
                                   {"witnesses", witnesses}, {"invalid witnesses", bad_witnesses}})};
    });

    report(3, "purity equals well-coveredness of the non-comparability graph", [&] {
        std::size_t complexes = 0, mismatches = 0, bad_covers = 0;
        auto audit = [&](const SimplicialComplex& c) {
            ++complexes;
            const auto nc = noncomparability_graph(c);
            if (is_pure(c) != is_well_covered_oracle(nc.graph).well_covered) ++mismatches;
            if (!validate_basic_cover(nc.graph, nc.cover)) ++bad_covers;
        };
        std::size_t exhaustive = 0;
        for (std::size_t n = 1; n <= 4; ++n)
            for (const auto& c : all_complexes(n)) {
                audit(c);
                ++exhaustive;
            }
        std::mt19937_64 rng(2024);
        for (int i = 0; i < 1000; ++i) audit(random_complex(5, rng));
        return Outcome{mismatches == 0 && bad_covers == 0,
                       count_line({{"exhaustive complexes on <= 4 elements", exhaustive},
                                   {"total", complexes}, {"mismatches", mismatches}, {"invalid covers", bad_covers}})};
    });

    report(4, "worked facts on cycles and the figure graph", [&] {
        std::vector<std::string> wrong;
        const auto c4 = find_basic_clique_cover(cycle(4));
        if (!c4 || !validate_basic_cover(cycle(4), *c4)) wrong.push_back("C4 cover");
        if (find_basic_clique_cover(cycle(5))) wrong.push_back("C5 cover");
        for (std::size_t n : {3, 5, 7, 9, 11})
            if (alpha(cycle(n)) != (n - 1) / 2) wrong.push_back("alpha(C" + std::to_string(n) + ")");
        const Graph fig = figure_graph();
        const auto oracle = is_well_covered_oracle(fig);
        if (!oracle.well_covered) wrong.push_back("figure well-covered");
        if (alpha(fig) != 2) wrong.push_back("figure alpha");
        if (is_in_class_G(fig).member || brute_partition_into_cliques(fig, 2)) wrong.push_back("figure class G");
        std::string detail = wrong.empty() ? "C4 covered, C5 not, alpha(C_n) = (n-1)/2, figure well-covered with alpha 2 outside class G"
                                           : "wrong:";
        for (const auto& w : wrong) detail += " " + w;
        return Outcome{wrong.empty(), detail};
    });

    report(5, "bipartite matching criterion equals the oracle, connected, n <= 10", [&] {
        auto bipartite = [](const Graph& g) { return two_coloring(g).has_value(); };
        const auto graphs = nonisomorphic_graphs_up_to(10, bipartite);
        std::size_t checked = 0, mismatches = 0, well_covered = 0;
        for (const auto& g : graphs) {
            if (g.order() < 2 || !is_connected(g) || isolated_vertex(g)) continue;
            ++checked;
            const bool oracle = is_well_covered_oracle(g).well_covered;
            if (check_ravindra(g).well_covered != oracle) ++mismatches;
            if (oracle) ++well_covered;
        }
        return Outcome{checked > 0 && mismatches == 0,
                       count_line({{"connected bipartite graphs", checked}, {"well-covered", well_covered},
                                   {"mismatches", mismatches}})};
    });

    report(6, "s-partite consequences hold on every premise graph, n <= 8", [&] {
        std::size_t premise = 0, contradictions = 0;
        for (const auto& g : corpus) {
            if (g.order() == 0) continue;
            const auto partition = uniform_clique_partition(g);
            if (!partition || !is_well_covered_oracle(g).well_covered) continue;
            ++premise;
            const auto r = verify_spartite_consequences(g, partition->parts);
            if (r.status != SpartiteStatus::consistent || !r.equal_sizes) ++contradictions;
            for (const auto& m : r.matchings)
                if (!m.perfect) ++contradictions;
        }
        return Outcome{premise > 0 && contradictions == 0,
                       count_line({{"premise graphs", premise}, {"contradictions", contradictions}})};
    });

    HuntOptions options;
    options.workers = std::max(1u, std::thread::hardware_concurrency());
    HuntReport hunt;
    bool hunt_ran = false;
    std::string hunt_error;
    try {
        hunt = conjecture_hunt(8, options);
        hunt_ran = true;
    } catch (const std::exception& e) {
        hunt_error = e.what();
    }

    report(7, "minimal-cover shortcut audit over the hunt corpus", [&] {
        if (!hunt_ran) return Outcome{false, "hunt failed: " + hunt_error};
        std::size_t bad_certificates = 0;
        for (const auto& d : hunt.shortcut_disagreements) {
            const auto& a = d.witness;
            if (!a || !is_independent(d.graph, *a) || a->intersects(d.clique) || !dominates(d.graph, *a, d.clique) ||
                shortcut_minimal_cover_claim(d.graph, d.clique))
                ++bad_certificates;
        }
        for (const auto& v : hunt.shortcut_violations)
            if (brute_independent_dominator_exists(v.graph, v.clique)) ++bad_certificates;
        const bool counted = hunt.cliques_audited == hunt.shortcut_agreements + hunt.shortcut_disagreements.size() +
                                                         hunt.shortcut_violations.size();
        return Outcome{hunt.shortcut_violations.empty() && bad_certificates == 0 && counted,
                       count_line({{"cliques audited", hunt.cliques_audited},
                                   {"agreements", hunt.shortcut_agreements},
                                   {"disagreements", hunt.shortcut_disagreements.size()},
                                   {"violations", hunt.shortcut_violations.size()},
                                   {"bad certificates", bad_certificates}})};
    });

    report(8, "conjecture hunt completes at n <= 8 with validated counterexamples", [&] {
        if (!hunt_ran) return Outcome{false, "hunt failed: " + hunt_error};
        std::size_t unconfirmed = 0;
        for (const auto& c : hunt.counterexamples) {
            const Graph& g = c.graph;
            const auto oracle = is_well_covered_oracle(g);
            bool ok = oracle.well_covered && oracle.common_size == c.common_size && brute_well_covered(g);
            for (const auto& part : c.parts) ok = ok && is_independent(g, part);
            for (const auto& q : maximal_cliques(g)) ok = ok && q.size() == c.s;
            ok = ok && !brute_partition_into_cliques(g, alpha(g));
            for (const auto& cover : all_basic_clique_covers(g)) ok = ok && !validate_basic_cover(g, cover);
            if (!ok) ++unconfirmed;
        }
        return Outcome{hunt.complete && hunt.scanned == corpus.size() && unconfirmed == 0,
                       count_line({{"scanned", hunt.scanned},
                                   {"premise graphs", hunt.premise_satisfying},
                                   {"premise graphs in class G", hunt.premise_in_class_G},
                                   {"counterexamples", hunt.counterexamples.size()},
                                   {"unconfirmed", unconfirmed}})};
    });

    report(9, "graph6 round trip on the corpus and fixed strings", [&] {
        std::size_t failures_seen = 0;
        for (const auto& g : corpus) {
            const std::string s = encode_graph6(g);
            if (!(parse_graph6(s) == g) || encode_graph6(parse_graph6(s)) != s) ++failures_seen;
        }
        const bool fixed = parse_graph6("@") == Graph::empty(1) && encode_graph6(Graph::empty(1)) == "@" &&
                           parse_graph6("C~") == complete(4) && encode_graph6(complete(4)) == "C~" &&
                           parse_graph6("Cl") == cycle(4) && encode_graph6(cycle(4)) == "Cl";
        return Outcome{failures_seen == 0 && fixed,
                       count_line({{"graphs", corpus.size()}, {"round-trip failures", failures_seen}}) +
                           (fixed ? ", fixed strings exact" : ", fixed strings WRONG")};
    });

    report(10, "bench CSV on non-comparability graphs of complexes with <= 12 faces", [&] {
        BenchOptions bench;
        bench.count = 200;
        bench.runs = 1;
        const auto rows = run_bench(bench);
        const std::string csv = bench_csv(rows);
        std::size_t disagreements = 0, oversized = 0;
        for (const auto& row : rows) {
            if (!row.agreement) ++disagreements;
            if (row.vertices > bench.max_faces) ++oversized;
        }
        const bool header = csv.rfind("graph_id,graph6,vertices,oracle_us,checker_us,zerodiv_us,agreement\n", 0) == 0;
        const auto lines = static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n'));
        return Outcome{rows.size() == bench.count && header && lines == rows.size() + 1 && disagreements == 0 &&
                           oversized == 0,
                       count_line({{"rows", rows.size()}, {"disagreements", disagreements},
                                   {"rows over 12 faces", oversized}})};
    });

    std::printf("%s: %d failing criteria\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
