#include "doctest.h"

#include <set>

#include "fixtures.hpp"
#include "wcg/corpus.hpp"

using namespace wcg;
using namespace wcg::test;

namespace {

// Codes of every labeling of g.
std::set<std::uint64_t> all_codes(const Graph& g) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::uint64_t> codes;
    do {
        const Graph h = relabel(g, perm);
        std::uint64_t code = 0;
        for (std::size_t j = 1; j < g.order(); ++j)
            for (std::size_t i = 0; i < j; ++i)
                code = (code << 1) | (h.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1u : 0u);
        codes.insert(code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return codes;
}

}  // namespace

TEST_CASE("canonical code separates isomorphism classes") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + rng() % 7;
        const Graph g = random_graph(n, 0.2 + 0.1 * (trial % 6), rng);
        const Graph h = random_graph(n, 0.2 + 0.1 * (trial % 6), rng);
        const auto g_codes = all_codes(g);
        CHECK(g_codes.count(canonical_code(g)) == 1);
        const bool isomorphic = g_codes.count(*all_codes(h).begin()) == 1;
        CHECK((canonical_code(g) == canonical_code(h)) == isomorphic);
    }
    CHECK(canonical_code(Graph::empty(7)) == 0);
    CHECK(canonical_form(cycle(7)).order() == 7);
    CHECK(canonical_code(canonical_form(cycle(7))) == canonical_code(cycle(7)));
}

TEST_CASE("canonical code is invariant under relabeling") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        const Graph g = random_graph(n, 0.5, rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_code(g) == canonical_code(relabel(g, perm)));
        CHECK(canonical_form(g) == canonical_form(relabel(g, perm)));
    }
    CHECK_THROWS_AS(canonical_code(Graph::empty(12)), ResourceError);
}

TEST_CASE("graph counts per order") {
    // Small orders against brute-force isomorphism classes of labeled graphs.
    for (std::size_t n = 0; n <= 5; ++n) {
        std::set<std::uint64_t> classes;
        const std::size_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code)
            classes.insert(*all_codes(graph_from_code(n, code)).begin());
        CHECK(nonisomorphic_graphs(n).size() == classes.size());
    }
    // Known totals for 6 and 7 vertices.
    CHECK(nonisomorphic_graphs(6).size() == 156);
    CHECK(nonisomorphic_graphs(7).size() == 1044);
}

TEST_CASE("hereditary filtering") {
    auto bipartite = [](const Graph& g) { return two_coloring(g).has_value(); };
    for (std::size_t n = 1; n <= 5; ++n) {
        std::size_t expected = 0;
        for (const auto& g : nonisomorphic_graphs(n))
            if (bipartite(g)) ++expected;
        CHECK(nonisomorphic_graphs(n, bipartite).size() == expected);
    }
    const auto upto = nonisomorphic_graphs_up_to(4);
    CHECK(upto.size() == 1 + 1 + 2 + 4 + 11);
}
