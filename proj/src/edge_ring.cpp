#include "wcg/edge_ring.hpp"

#include <functional>

#include "wcg/wellcovered.hpp"

namespace wcg {

std::string SquareFreeMonomial::to_string() const {
    if (support.empty()) return "1";
    std::string out;
    support.for_each([&](Vertex v) { out += (out.empty() ? "x" : "*x") + std::to_string(v); });
    return out;
}

SquareFreeMonomial multiply(const SquareFreeMonomial& m, Vertex v) {
    SquareFreeMonomial out = m;
    out.support.insert(v);
    return out;
}

LinearForm::LinearForm(std::size_t variables, const std::vector<std::pair<Vertex, Rational>>& terms)
    : variables_(variables) {
    for (const auto& [v, c] : terms) {
        if (v < 0 || static_cast<std::size_t>(v) >= variables)
            throw InputError("variable x" + std::to_string(v) + " outside x0..x" +
                             std::to_string(static_cast<long long>(variables) - 1));
        terms_[v] += c;
    }
    std::erase_if(terms_, [](const auto& term) { return term.second.numerator() == 0; });
}

VertexSet LinearForm::support() const {
    VertexSet s(variables_);
    for (const auto& [v, c] : terms_) s.insert(v);
    return s;
}

std::string LinearForm::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [v, c] : terms_) {
        const bool negative = c.numerator() < 0;
        const Rational magnitude = negative ? -c : c;
        if (negative)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (magnitude != Rational(1)) {
            out += std::to_string(magnitude.numerator());
            if (magnitude.denominator() != 1) out += "/" + std::to_string(magnitude.denominator());
            out += "*";
        }
        out += "x" + std::to_string(v);
    }
    return out;
}

EdgeIdeal edge_ideal(const Graph& g) {
    EdgeIdeal ideal{g.order(), {}};
    for (auto [u, v] : g.edges()) ideal.generators.push_back({VertexSet(g.order(), {u, v})});
    return ideal;
}

EdgeRing edge_ring(const Graph& g) { return EdgeRing{g, edge_ideal(g)}; }

bool monomial_is_zero(const EdgeRing& ring, const SquareFreeMonomial& m) {
    return !is_independent(ring.graph, m.support);
}

LinearForm theta(const VertexSet& q) {
    if (q.empty()) throw InputError("theta of an empty clique");
    std::vector<std::pair<Vertex, Rational>> terms;
    q.for_each([&](Vertex v) { terms.emplace_back(v, Rational(1)); });
    return LinearForm(q.universe(), terms);
}

bool annihilates(const EdgeRing& ring, const SquareFreeMonomial& m, const LinearForm& f) {
    if (monomial_is_zero(ring, m)) return false;
    for (const auto& [j, c] : f.terms())
        if (!monomial_is_zero(ring, multiply(m, j))) return false;
    return true;
}

std::optional<SquareFreeMonomial> linear_zero_divisor(const EdgeRing& ring, const LinearForm& f) {
    if (f.is_zero()) throw PreconditionError("the zero form is not a zero-divisor candidate");
    if (f.variables() != ring.graph.order())
        throw InputError("linear form has " + std::to_string(f.variables()) + " variables, ring has " +
                         std::to_string(ring.graph.order()));
    const Graph& g = ring.graph;
    const VertexSet target = f.support();
    auto found = find_independent_dominator(g, target).witness;
    if (!found) return std::nullopt;

    // Every member of a minimum witness dominates some target vertex, so the
    // search stays inside N(target) \ target. Combinations come out in
    // lexicographic order, so the first hit of each size is the smallest.
    const std::vector<Vertex> pool = (open_neighborhood(g, target) - target).members();
    VertexSet chosen = g.no_vertices();
    std::function<bool(std::size_t, std::size_t)> pick = [&](std::size_t from, std::size_t left) {
        if (left == 0) return target.is_subset_of(open_neighborhood(g, chosen));
        for (std::size_t i = from; i + left <= pool.size(); ++i) {
            const Vertex c = pool[i];
            if (g.neighbors(c).intersects(chosen)) continue;
            chosen.insert(c);
            if (pick(i + 1, left - 1)) return true;
            chosen.erase(c);
        }
        return false;
    };
    for (std::size_t size = 1; size <= found->size(); ++size)
        if (pick(0, size)) return SquareFreeMonomial{chosen};
    return SquareFreeMonomial{*found};
}

std::vector<VertexSet> minimal_primes(const EdgeRing& ring, const Guard& guard) {
    return minimal_vertex_covers(ring.graph, guard);
}

ZeroDivisorVerdict wellcovered_via_zero_divisors(const Graph& g, const BasicCliqueCover& cover) {
    CoverReport report = validate_basic_cover(g, cover);
    if (!report) {
        std::string what;
        for (const auto& v : report.violations) what += (what.empty() ? "" : "; ") + v;
        throw PreconditionError("invalid basic clique cover: " + what);
    }
    const EdgeRing ring = edge_ring(g);
    ZeroDivisorVerdict verdict;
    for (const auto& q : cover.cliques) {
        ThetaCertificate cert{theta(q), std::nullopt};
        cert.witness = linear_zero_divisor(ring, cert.theta);
        if (cert.witness) verdict.well_covered = false;
        verdict.thetas.push_back(std::move(cert));
    }
    return verdict;
}

}  // namespace wcg
