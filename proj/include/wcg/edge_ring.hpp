#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "wcg/clique_cover.hpp"
#include "wcg/graph.hpp"

namespace wcg {

/// Coefficients are kept exact for display only. For a square-free ideal the
/// zero-divisor test of a linear form depends on its support alone, so no
/// field arithmetic is ever performed.
using Rational = boost::rational<long long>;

/// Product of distinct variables x_v, v in support. Empty support is 1.
struct SquareFreeMonomial {
    VertexSet support;

    /// "1", "x2", "x0*x3"
    std::string to_string() const;

    friend bool operator==(const SquareFreeMonomial&, const SquareFreeMonomial&) = default;
};

/// Radical of m * x_v, i.e. the monomial with support supp(m) + {v}.
SquareFreeMonomial multiply(const SquareFreeMonomial& m, Vertex v);

/// Sum of c_v * x_v with every stored coefficient nonzero.
class LinearForm {
public:
    LinearForm() = default;
    /// Duplicate variables are summed; terms that end up zero are dropped.
    /// Throws InputError for a variable outside [0, variables).
    LinearForm(std::size_t variables, const std::vector<std::pair<Vertex, Rational>>& terms);

    std::size_t variables() const noexcept { return variables_; }
    const std::map<Vertex, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    VertexSet support() const;

    /// "x0+x1", "2*x1-1/3*x4", "0"
    std::string to_string() const;

private:
    std::size_t variables_ = 0;
    std::map<Vertex, Rational> terms_;
};

/// Generators x_u x_v, one per edge {u,v}.
struct EdgeIdeal {
    std::size_t variables = 0;
    std::vector<SquareFreeMonomial> generators;
};

/// K[x_0..x_{n-1}] / I(G), with K left implicit.
struct EdgeRing {
    Graph graph;
    EdgeIdeal ideal;
};

EdgeIdeal edge_ideal(const Graph& g);
EdgeRing edge_ring(const Graph& g);

/// Whether m vanishes in R(G): its support contains an edge.
bool monomial_is_zero(const EdgeRing& ring, const SquareFreeMonomial& m);

/// Sum of the variables of q, all coefficients 1. Throws InputError if q is empty.
LinearForm theta(const VertexSet& q);

/// Direct check that m != 0 in R and m * x_j = 0 in R for every j in supp(f).
bool annihilates(const EdgeRing& ring, const SquareFreeMonomial& m, const LinearForm& f);

/// A non-zero square-free monomial m with m * f = 0, or nullopt when f is not
/// a zero-divisor. The witness has minimum support size, lexicographically
/// smallest among those. Throws PreconditionError for the zero form.
std::optional<SquareFreeMonomial> linear_zero_divisor(const EdgeRing& ring, const LinearForm& f);

/// Variable sets generating the minimal primes of I(G): the minimal vertex
/// covers of G.
std::vector<VertexSet> minimal_primes(const EdgeRing& ring, const Guard& guard = {});

struct ThetaCertificate {
    LinearForm theta;
    std::optional<SquareFreeMonomial> witness;
};

struct ZeroDivisorVerdict {
    bool well_covered = true;
    std::vector<ThetaCertificate> thetas;
};

/// Well-coveredness of a class-G graph as "no theta of a cover clique is a
/// zero-divisor of R(G)". Throws PreconditionError for an invalid cover.
ZeroDivisorVerdict wellcovered_via_zero_divisors(const Graph& g, const BasicCliqueCover& cover);

}  // namespace wcg
