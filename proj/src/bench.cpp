#include "wcg/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

#include "wcg/edge_ring.hpp"
#include "wcg/io.hpp"
#include "wcg/wellcovered.hpp"

namespace wcg {

namespace {

template <typename Fn>
double median_micros(std::size_t runs, Fn&& fn) {
    std::vector<double> samples;
    for (std::size_t r = 0; r < std::max<std::size_t>(runs, 1); ++r) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto stop = std::chrono::steady_clock::now();
        samples.push_back(std::chrono::duration<double, std::micro>(stop - start).count());
    }
    std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
    return samples[samples.size() / 2];
}

}  // namespace

std::vector<SimplicialComplex> random_complexes(const BenchOptions& options) {
    std::mt19937_64 rng(options.seed);
    const std::size_t max_ground = std::max<std::size_t>(1, std::min(options.max_ground, options.max_faces));
    std::uniform_int_distribution<std::size_t> ground(1, max_ground);
    std::bernoulli_distribution coin(0.5);

    std::vector<SimplicialComplex> out;
    while (out.size() < options.count) {
        const std::size_t n = ground(rng);
        std::uniform_int_distribution<std::size_t> facet_count(1, n + 1);
        std::vector<Face> facets(facet_count(rng));
        for (auto& f : facets) {
            while (f.empty())
                for (std::size_t e = 0; e < n; ++e)
                    if (coin(rng)) f.push_back(static_cast<int>(e));
        }
        SimplicialComplex complex = from_facets(n, std::move(facets));
        try {
            faces(complex, options.max_faces);
        } catch (const ResourceError&) {
            continue;
        }
        out.push_back(std::move(complex));
    }
    return out;
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
    std::vector<BenchRow> rows;
    const Guard unlimited{0, true};
    for (const auto& complex : random_complexes(options)) {
        const auto subdivision = noncomparability_graph(complex, options.max_faces);
        const Graph& g = subdivision.graph;
        BenchRow row;
        row.id = rows.size();
        row.graph6 = encode_graph6(g);
        row.vertices = g.order();

        OracleVerdict oracle;
        Verdict checker;
        ZeroDivisorVerdict zerodiv;
        row.oracle_us = median_micros(options.runs, [&] { oracle = is_well_covered_oracle(g, unlimited); });
        row.checker_us = median_micros(options.runs, [&] { checker = check_well_covered(g, subdivision.cover); });
        row.zerodiv_us =
            median_micros(options.runs, [&] { zerodiv = wellcovered_via_zero_divisors(g, subdivision.cover); });
        row.agreement = oracle.well_covered == checker.well_covered &&
                        checker.well_covered == zerodiv.well_covered && checker.well_covered == is_pure(complex);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "graph_id,graph6,vertices,oracle_us,checker_us,zerodiv_us,agreement\n";
    out << std::fixed << std::setprecision(1);
    for (const auto& r : rows)
        out << r.id << ',' << r.graph6 << ',' << r.vertices << ',' << r.oracle_us << ',' << r.checker_us << ','
            << r.zerodiv_us << ',' << (r.agreement ? "true" : "false") << '\n';
    return out.str();
}

}  // namespace wcg
