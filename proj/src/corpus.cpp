#include "wcg/corpus.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>

namespace wcg {

namespace {

using Mask = std::uint32_t;
using Cells = std::vector<std::vector<int>>;

struct Canonizer {
    std::size_t n;
    std::vector<Mask> adj;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();

    explicit Canonizer(const Graph& g) : n(g.order()), adj(g.order(), 0) {
        for (auto [u, v] : g.edges()) {
            adj[u] |= Mask{1} << v;
            adj[v] |= Mask{1} << u;
        }
    }

    // Splits cells by neighbor counts into every cell until the partition is
    // equitable. Split order depends only on the counts, so the result is
    // invariant under relabeling.
    void refine(Cells& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<Mask> cell_masks(cells.size(), 0);
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c]) cell_masks[c] |= Mask{1} << v;

            for (std::size_t c = 0; c < cells.size() && !changed; ++c) {
                if (cells[c].size() < 2) continue;
                std::vector<std::pair<std::vector<int>, int>> keyed;
                for (int v : cells[c]) {
                    std::vector<int> sig(cells.size());
                    for (std::size_t d = 0; d < cells.size(); ++d)
                        sig[d] = std::popcount(adj[v] & cell_masks[d]);
                    keyed.emplace_back(std::move(sig), v);
                }
                std::sort(keyed.begin(), keyed.end());
                if (keyed.front().first == keyed.back().first) continue;

                Cells split;
                for (std::size_t i = 0; i < keyed.size(); ++i) {
                    if (i == 0 || keyed[i].first != keyed[i - 1].first) split.emplace_back();
                    split.back().push_back(keyed[i].second);
                }
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), split.begin(), split.end());
                changed = true;
            }
        }
    }

    std::uint64_t code_of(const Cells& cells) const {
        std::vector<int> vertex_at(n);
        for (std::size_t i = 0; i < n; ++i) vertex_at[i] = cells[i].front();
        std::uint64_t code = 0;
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i)
                code = (code << 1) | ((adj[vertex_at[i]] >> vertex_at[j]) & 1u);
        return code;
    }

    bool twins(int u, int v) const {
        return (adj[u] & ~(Mask{1} << v)) == (adj[v] & ~(Mask{1} << u));
    }

    void search(Cells cells) {
        refine(cells);
        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size()))
                target = c;
        if (target == cells.size()) {
            best = std::min(best, code_of(cells));
            return;
        }
        std::vector<int> tried;
        for (int v : cells[target]) {
            // Swapping twins is an automorphism fixing the partition, so their
            // subtrees produce the same codes.
            if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
            tried.push_back(v);
            Cells next = cells;
            std::vector<int> rest;
            for (int w : cells[target])
                if (w != v) rest.push_back(w);
            next[target] = {v};
            next.insert(next.begin() + static_cast<std::ptrdiff_t>(target) + 1, rest);
            search(std::move(next));
        }
    }
};

void require_small(std::size_t n) {
    if (n > kMaxCanonicalOrder)
        throw ResourceError("canonical form supports at most " + std::to_string(kMaxCanonicalOrder) +
                            " vertices, got " + std::to_string(n));
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    require_small(g.order());
    if (g.order() < 2) return 0;
    Canonizer canon(g);
    Cells initial(1);
    for (std::size_t v = 0; v < g.order(); ++v) initial[0].push_back(static_cast<int>(v));
    canon.search(std::move(initial));
    return canon.best;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
    require_small(n);
    std::vector<Edge> edges;
    std::size_t bit = n * (n - (n > 0 ? 1 : 0)) / 2;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            --bit;
            if ((code >> bit) & 1u) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    return Graph(n, edges);
}

Graph canonical_form(const Graph& g) { return graph_from_code(g.order(), canonical_code(g)); }

namespace {

std::vector<Graph> extend_by_one_vertex(const std::vector<Graph>& level, std::size_t n,
                                        const HereditaryPredicate& keep) {
    std::unordered_set<std::uint64_t> seen;
    for (const Graph& smaller : level) {
        const std::size_t m = smaller.order();
        for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
            std::vector<Edge> edges = smaller.edges();
            for (std::size_t v = 0; v < m; ++v)
                if ((subset >> v) & 1u) edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(m));
            Graph candidate(n, edges);
            if (keep && !keep(candidate)) continue;
            seen.insert(canonical_code(candidate));
        }
    }
    std::vector<std::uint64_t> codes(seen.begin(), seen.end());
    std::sort(codes.begin(), codes.end());
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (auto code : codes) out.push_back(graph_from_code(n, code));
    return out;
}

std::vector<Graph> base_level(const HereditaryPredicate& keep) {
    Graph g = Graph::empty(0);
    if (keep && !keep(g)) return {};
    return {g};
}

}  // namespace

std::vector<Graph> nonisomorphic_graphs(std::size_t n, const HereditaryPredicate& keep) {
    require_small(n);
    std::vector<Graph> level = base_level(keep);
    for (std::size_t m = 1; m <= n; ++m) level = extend_by_one_vertex(level, m, keep);
    return level;
}

std::vector<Graph> nonisomorphic_graphs_up_to(std::size_t max_n, const HereditaryPredicate& keep) {
    require_small(max_n);
    std::vector<Graph> level = base_level(keep);
    std::vector<Graph> out = level;
    for (std::size_t m = 1; m <= max_n; ++m) {
        level = extend_by_one_vertex(level, m, keep);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace wcg
