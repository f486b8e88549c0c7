#pragma once

// Shared test graphs and brute-force oracles. The oracles here enumerate
// subsets directly and must not call into the routines they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "wcg/graph.hpp"

namespace wcg::test {

inline VertexSet set_of(const Graph& g, std::initializer_list<Vertex> members) {
    return VertexSet(g.order(), members);
}

inline Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
    return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return Graph(n, e);
}

inline Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph(n, e);
}

/// K_{2,2,2}, parts {0,1},{2,3},{4,5}.
inline Graph octahedron() {
    std::vector<Edge> e;
    for (Vertex u = 0; u < 6; ++u)
        for (Vertex v = u + 1; v < 6; ++v)
            if (u / 2 != v / 2) e.emplace_back(u, v);
    return Graph(6, e);
}

/// The six-vertex 3-partite example: a..f = 0..5, parts {0,3},{1,4},{2,5}.
inline Graph figure_graph() {
    return Graph(6, {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 4}, {3, 4}, {3, 5}});
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph(n, e);
}

// Brute force over bitmasks (n <= 20) -----------------------------------------

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> adj(g.order(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    return adj;
}

inline bool mask_independent(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
    for (std::size_t v = 0; v < adj.size(); ++v)
        if (((s >> v) & 1u) && (adj[v] & s)) return false;
    return true;
}

inline VertexSet from_mask(std::size_t n, std::uint32_t mask) {
    VertexSet s(n);
    for (std::size_t v = 0; v < n; ++v)
        if ((mask >> v) & 1u) s.insert(static_cast<Vertex>(v));
    return s;
}

/// Maximal independent sets by checking every subset, sorted.
inline std::vector<VertexSet> brute_mis(const Graph& g) {
    const auto adj = adjacency_masks(g);
    const std::size_t n = g.order();
    std::vector<VertexSet> out;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (!mask_independent(adj, s)) continue;
        bool maximal = true;
        for (std::size_t v = 0; v < n && maximal; ++v)
            if (!((s >> v) & 1u) && mask_independent(adj, s | (1u << v))) maximal = false;
        if (maximal) out.push_back(from_mask(n, s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool brute_well_covered(const Graph& g) {
    const auto sets = brute_mis(g);
    return std::all_of(sets.begin(), sets.end(), [&](const auto& s) { return s.size() == sets.front().size(); });
}

/// Largest clique, by subsets.
inline std::size_t brute_clique_number(const Graph& g) {
    const auto adj = adjacency_masks(g);
    std::size_t best = 0;
    for (std::uint32_t s = 0; s < (1u << g.order()); ++s) {
        bool clique = true;
        for (std::size_t v = 0; v < g.order() && clique; ++v)
            if ((s >> v) & 1u) clique = ((s & ~(1u << v)) & ~adj[v]) == 0;
        if (clique) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(s)));
    }
    return best;
}

/// Chromatic number by trying every assignment of k colors, k = 1, 2, ...
inline std::size_t brute_chromatic_number(const Graph& g) {
    const std::size_t n = g.order();
    if (n == 0) return 0;
    for (std::size_t k = 1;; ++k) {
        std::vector<std::size_t> color(n, 0);
        while (true) {
            bool proper = std::all_of(g.edges().begin(), g.edges().end(),
                                      [&](const Edge& e) { return color[e.first] != color[e.second]; });
            if (proper) return k;
            std::size_t i = 0;
            while (i < n && ++color[i] == k) color[i++] = 0;
            if (i == n) break;
        }
    }
}

/// Maximum matching size between x and y, by subsets of the cross edges.
inline std::size_t brute_matching_size(const Graph& g, const VertexSet& x, const VertexSet& y) {
    std::vector<Edge> cross;
    for (auto [u, v] : g.edges())
        if ((x.contains(u) && y.contains(v)) || (x.contains(v) && y.contains(u))) cross.emplace_back(u, v);
    std::size_t best = 0;
    for (std::uint32_t s = 0; s < (1u << cross.size()); ++s) {
        std::uint32_t used = 0;
        bool ok = true;
        for (std::size_t i = 0; i < cross.size() && ok; ++i) {
            if (!((s >> i) & 1u)) continue;
            const std::uint32_t ends = (1u << cross[i].first) | (1u << cross[i].second);
            ok = (used & ends) == 0;
            used |= ends;
        }
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(s)));
    }
    return best;
}

/// Whether some independent A, by subsets, has every target vertex adjacent to
/// a member of A.
inline bool brute_independent_dominator_exists(const Graph& g, const VertexSet& target) {
    const auto adj = adjacency_masks(g);
    std::uint32_t t = 0;
    target.for_each([&](Vertex v) { t |= 1u << v; });
    for (std::uint32_t a = 0; a < (1u << g.order()); ++a) {
        if (!mask_independent(adj, a)) continue;
        bool covers = true;
        for (std::size_t v = 0; v < g.order() && covers; ++v)
            if ((t >> v) & 1u) covers = (adj[v] & a) != 0;
        if (covers) return true;
    }
    return false;
}

/// Whether V(g) splits into k cliques, by assigning each vertex a clique label.
inline bool brute_partition_into_cliques(const Graph& g, std::size_t k) {
    const std::size_t n = g.order();
    if (n == 0) return true;
    if (k == 0) return false;
    std::vector<std::size_t> label(n, 0);
    while (true) {
        bool ok = true;
        for (std::size_t u = 0; u < n && ok; ++u)
            for (std::size_t v = u + 1; v < n && ok; ++v)
                if (label[u] == label[v] && !g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) ok = false;
        if (ok) return true;
        std::size_t i = 0;
        while (i < n && ++label[i] == k) label[i++] = 0;
        if (i == n) return false;
    }
}

/// Applies a vertex permutation: vertex v becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), e);
}

}  // namespace wcg::test
