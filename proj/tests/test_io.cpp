#include "doctest.h"

#include "fixtures.hpp"
#include "wcg/corpus.hpp"
#include "wcg/io.hpp"

using namespace wcg;
using namespace wcg::test;

TEST_CASE("edge list parsing") {
    CHECK(parse_edgelist("4 4\n0 1\n1 2\n2 3\n3 0") == cycle(4));
    CHECK(parse_edgelist("# a comment\n\n3 1   # header\n0 2\n") == Graph(3, {{0, 2}}));
    CHECK_THROWS_WITH_AS(parse_edgelist("2 1\n0 0"), doctest::Contains("loop"), ParseError);
    CHECK_THROWS_WITH_AS(parse_edgelist("3 2\n0 1\n0 1"), doctest::Contains("line 3: duplicate"), ParseError);
    CHECK_THROWS_WITH_AS(parse_edgelist("3 2\n0 1\n1 0"), doctest::Contains("duplicate"), ParseError);
    CHECK_THROWS_AS(parse_edgelist("3 1\n0 5"), ParseError);
    CHECK_THROWS_AS(parse_edgelist("3 1\n0 x"), ParseError);
    CHECK_THROWS_AS(parse_edgelist("3 2\n0 1"), ParseError);
    CHECK_THROWS_AS(parse_edgelist("3 1\n0 1 2"), ParseError);
    CHECK_THROWS_AS(parse_edgelist(""), ParseError);

    try {
        parse_edgelist("3 2\n0 1\n\n2 2\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
    CHECK(parse_edgelist(format_edgelist(cycle(5))) == cycle(5));
}

TEST_CASE("graph6 fixed strings") {
    CHECK(parse_graph6("C~") == complete(4));
    CHECK(parse_graph6("Cl") == cycle(4));
    CHECK(parse_graph6("@") == Graph::empty(1));
    CHECK(parse_graph6("?") == Graph::empty(0));
    CHECK(encode_graph6(complete(4)) == "C~");
    CHECK(encode_graph6(cycle(4)) == "Cl");
    CHECK(encode_graph6(Graph::empty(1)) == "@");
    CHECK(encode_graph6(cycle(5)) == "Dhc");
    CHECK(parse_graph6("Cl\n") == cycle(4));
}

TEST_CASE("graph6 errors") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);       // truncated
    CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);     // trailing
    CHECK_THROWS_AS(parse_graph6("C "), ParseError);      // byte out of range
    CHECK_THROWS_AS(parse_graph6("~?@?"), ParseError);    // multi-byte order
    CHECK_THROWS_AS(parse_graph6("B@"), ParseError);      // padding bit set
    CHECK_THROWS_AS(encode_graph6(Graph::empty(63)), InputError);
    CHECK(parse_graph6(encode_graph6(Graph::empty(62))).order() == 62);
}

TEST_CASE("graph6 round trip") {
    for (const auto& g : nonisomorphic_graphs_up_to(6)) CHECK(parse_graph6(encode_graph6(g)) == g);
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = random_graph(rng() % 63, 0.3, rng);
        const std::string s = encode_graph6(g);
        CHECK(parse_graph6(s) == g);
        CHECK(encode_graph6(parse_graph6(s)) == s);
    }
}

TEST_CASE("facet and cover files") {
    const auto complex = parse_facets("3\n0 1\n2");
    CHECK(complex.facets() == std::vector<Face>{{2}, {0, 1}});
    CHECK(parse_facets("# facets\n2\n0\n").coverage_repaired());
    CHECK_THROWS_AS(parse_facets("2\n0\n", true), InputError);
    CHECK_THROWS_AS(parse_facets("2\n0 2"), ParseError);
    CHECK_THROWS_AS(parse_facets("2 3\n0"), ParseError);

    const Graph c4 = cycle(4);
    const auto cover = parse_cover("0 1\n2 3", c4);
    CHECK(cover.cliques == std::vector<VertexSet>{set_of(c4, {0, 1}), set_of(c4, {2, 3})});
    CHECK_THROWS_WITH_AS(parse_cover("0 2", c4), doctest::Contains("not a clique"), InputError);
    CHECK_THROWS_AS(parse_cover("0 9", c4), ParseError);
}

TEST_CASE("linear form syntax") {
    CHECK(parse_linear_form("x3+x7+x9", 10).to_string() == "x3+x7+x9");
    const auto f = parse_linear_form("2*x1-1/3*x4", 5);
    CHECK(f.terms().at(1) == Rational(2));
    CHECK(f.terms().at(4) == Rational(-1, 3));
    CHECK(parse_linear_form("-x0+x0+x1", 2).to_string() == "x1");
    CHECK(parse_linear_form("4/6*x0", 1).to_string() == "2/3*x0");
    CHECK_THROWS_AS(parse_linear_form("", 3), ParseError);
    CHECK_THROWS_AS(parse_linear_form("x3", 3), ParseError);
    CHECK_THROWS_AS(parse_linear_form("x1 + x2", 3), ParseError);
    CHECK_THROWS_AS(parse_linear_form("2x1", 3), ParseError);
    CHECK_THROWS_AS(parse_linear_form("1/0*x1", 3), ParseError);
    CHECK_THROWS_AS(parse_linear_form("x1x2", 3), ParseError);
}
