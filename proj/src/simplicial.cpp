#include "wcg/simplicial.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace wcg {

namespace {

bool face_order(const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

bool contains(const Face& big, const Face& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

SimplicialComplex from_facets(std::size_t n, std::vector<Face> facets, bool strict) {
    for (auto& f : facets) {
        if (f.empty()) throw InputError("empty facet");
        for (int e : f)
            if (e < 0 || static_cast<std::size_t>(e) >= n)
                throw InputError("facet element " + std::to_string(e) + " outside [0," + std::to_string(n) + ")");
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
    }
    std::sort(facets.begin(), facets.end(), face_order);
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    SimplicialComplex complex;
    complex.n_ = n;
    // Sorted by size, so only later entries can contain an earlier one.
    for (std::size_t i = 0; i < facets.size(); ++i) {
        bool subsumed = false;
        for (std::size_t j = i + 1; j < facets.size() && !subsumed; ++j)
            subsumed = facets[j].size() > facets[i].size() && contains(facets[j], facets[i]);
        if (!subsumed) complex.facets_.push_back(facets[i]);
    }

    std::vector<bool> seen(n, false);
    for (const auto& f : complex.facets_)
        for (int e : f) seen[e] = true;
    for (std::size_t e = 0; e < n; ++e) {
        if (seen[e]) continue;
        if (strict) throw InputError("ground element " + std::to_string(e) + " lies in no facet");
        complex.repaired_.push_back(static_cast<int>(e));
        complex.facets_.push_back({static_cast<int>(e)});
    }
    std::sort(complex.facets_.begin(), complex.facets_.end(), face_order);
    return complex;
}

std::vector<Face> faces(const SimplicialComplex& complex, std::size_t max_faces) {
    std::set<Face> found;
    auto over = [&] {
        return ResourceError("complex has more than " + std::to_string(max_faces) + " faces");
    };
    for (const auto& facet : complex.facets()) {
        if (facet.size() >= 63 || (std::uint64_t{1} << facet.size()) - 1 > max_faces) throw over();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << facet.size()); ++mask) {
            Face f;
            for (std::size_t i = 0; i < facet.size(); ++i)
                if ((mask >> i) & 1u) f.push_back(facet[i]);
            found.insert(std::move(f));
            if (found.size() > max_faces) throw over();
        }
    }
    std::vector<Face> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), face_order);
    return out;
}

int dimension(const SimplicialComplex& complex) {
    int dim = -1;
    for (const auto& f : complex.facets()) dim = std::max(dim, static_cast<int>(f.size()) - 1);
    return dim;
}

bool is_pure(const SimplicialComplex& complex) {
    const auto& f = complex.facets();
    return std::all_of(f.begin(), f.end(), [&](const Face& x) { return x.size() == f.front().size(); });
}

SimplicialComplex independence_complex(const Graph& g, const Guard& guard) {
    guard.require(g.order(), "independence complex vertex count");
    std::vector<Face> facets;
    for (const auto& s : maximal_independent_sets(g))
        if (!s.empty()) facets.push_back(s.members());
    return from_facets(g.order(), std::move(facets), true);
}

NoncomparabilityGraph noncomparability_graph(const SimplicialComplex& complex, std::size_t max_faces) {
    NoncomparabilityGraph out;
    out.map.faces = faces(complex, max_faces);
    const auto& all = out.map.faces;
    const std::size_t m = all.size();
    for (std::size_t i = 0; i < m; ++i) out.map.index.emplace(all[i], static_cast<Vertex>(i));

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (!contains(all[i], all[j]) && !contains(all[j], all[i]))
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    out.graph = Graph(m, edges);

    const int dim = dimension(complex);
    out.cover.cliques.assign(static_cast<std::size_t>(dim + 1), VertexSet(m));
    for (std::size_t i = 0; i < m; ++i) out.cover.cliques[all[i].size() - 1].insert(static_cast<Vertex>(i));
    return out;
}

}  // namespace wcg
