#include "wcg/clique_cover.hpp"

#include <algorithm>
#include <functional>

namespace wcg {

namespace {

struct Dsatur {
    const Graph& g;
    std::size_t colors;
    std::vector<int> color;

    Dsatur(const Graph& graph, std::size_t k) : g(graph), colors(k), color(graph.order(), -1) {}

    Vertex pick() const {
        Vertex best = -1;
        std::size_t best_sat = 0, best_deg = 0;
        for (std::size_t v = 0; v < g.order(); ++v) {
            if (color[v] >= 0) continue;
            std::vector<bool> seen(colors, false);
            std::size_t sat = 0, deg = 0;
            g.neighbors(static_cast<Vertex>(v)).for_each([&](Vertex w) {
                if (color[w] < 0) {
                    ++deg;
                } else if (!seen[color[w]]) {
                    seen[color[w]] = true;
                    ++sat;
                }
            });
            if (best < 0 || sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = static_cast<Vertex>(v);
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool solve(std::size_t colored, std::size_t used) {
        if (colored == g.order()) return true;
        const Vertex v = pick();
        const std::size_t limit = std::min(used + 1, colors);
        for (std::size_t c = 0; c < limit; ++c) {
            bool free = true;
            g.neighbors(v).for_each([&](Vertex w) { free = free && color[w] != static_cast<int>(c); });
            if (!free) continue;
            color[v] = static_cast<int>(c);
            if (solve(colored + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    }
};

// Renumbers colors by first appearance in vertex order.
std::vector<int> normalize_colors(std::vector<int> color) {
    std::vector<int> renamed(color.size() + 1, -1);
    int next = 0;
    for (int& c : color) {
        if (renamed[c] < 0) renamed[c] = next++;
        c = renamed[c];
    }
    return color;
}

}  // namespace

std::optional<std::vector<int>> find_coloring(const Graph& g, std::size_t colors) {
    if (g.order() == 0) return std::vector<int>{};
    if (colors == 0) return std::nullopt;
    Dsatur search(g, colors);
    if (!search.solve(0, 0)) return std::nullopt;
    return normalize_colors(std::move(search.color));
}

void validate_clique_cover(const Graph& g, const CliqueCover& cover) {
    VertexSet covered = g.no_vertices();
    for (const auto& q : cover.cliques) {
        if (q.universe() != g.order())
            throw InputError("cover member " + q.to_string() + " is over the wrong vertex range");
        if (!is_clique(g, q)) throw InputError(q.to_string() + " is not a clique");
        covered |= q;
    }
    if (covered != g.all_vertices())
        throw InputError("cover misses vertices " + (g.all_vertices() - covered).to_string());
}

BasicCliqueCover basify(const Graph& g, const CliqueCover& cover) {
    validate_clique_cover(g, cover);
    const std::size_t k = alpha(g);
    if (cover.cliques.size() != k)
        throw PreconditionError("basify needs a cover by alpha = " + std::to_string(k) +
                                " cliques, got " + std::to_string(cover.cliques.size()));
    BasicCliqueCover out;
    VertexSet claimed = g.no_vertices();
    for (const auto& q : cover.cliques) {
        out.cliques.push_back(q - claimed);
        claimed |= q;
    }
    return out;
}

CoverReport validate_basic_cover(const Graph& g, const BasicCliqueCover& cover) {
    CoverReport report;
    auto fail = [&](std::string what) {
        report.valid = false;
        report.violations.push_back(std::move(what));
    };

    VertexSet covered = g.no_vertices();
    for (std::size_t i = 0; i < cover.cliques.size(); ++i) {
        const auto& q = cover.cliques[i];
        const std::string label = "clique " + std::to_string(i) + " " + q.to_string();
        if (q.universe() != g.order()) {
            fail(label + ": vertex range " + std::to_string(q.universe()) + " does not match graph order " +
                 std::to_string(g.order()));
            continue;
        }
        if (q.empty()) fail(label + ": empty");
        if (!is_clique(g, q)) fail(label + ": not a clique");
        if (q.intersects(covered)) fail(label + ": overlaps earlier cliques in " + (q & covered).to_string());
        covered |= q;
    }
    if (covered != g.all_vertices()) fail("uncovered vertices " + (g.all_vertices() - covered).to_string());

    const std::size_t k = alpha(g);
    if (cover.cliques.size() != k)
        fail("count " + std::to_string(cover.cliques.size()) + " != alpha = " + std::to_string(k));
    return report;
}

std::optional<BasicCliqueCover> find_basic_clique_cover(const Graph& g, const Guard& guard) {
    guard.require(g.order(), "clique cover search vertex count");
    const std::size_t k = alpha(g);
    auto coloring = find_coloring(complement(g), k);
    if (!coloring) return std::nullopt;

    BasicCliqueCover cover;
    cover.cliques.assign(k, g.no_vertices());
    for (std::size_t v = 0; v < g.order(); ++v) cover.cliques[(*coloring)[v]].insert(static_cast<Vertex>(v));
    // A k-coloring of the complement with alpha = k uses every color, since a
    // partition into fewer cliques would bound alpha below k.
    return cover;
}

ClassMembership is_in_class_G(const Graph& g, const Guard& guard) {
    ClassMembership result;
    result.witness = find_basic_clique_cover(g, guard);
    result.member = result.witness.has_value();
    return result;
}

std::vector<BasicCliqueCover> all_basic_clique_covers(const Graph& g, std::size_t limit, const Guard& guard) {
    guard.require(g.order(), "clique cover enumeration vertex count");
    const std::size_t n = g.order();
    const std::size_t k = alpha(g);
    std::vector<BasicCliqueCover> out;
    std::vector<VertexSet> groups;

    std::function<void(std::size_t)> place = [&](std::size_t v) {
        if (out.size() >= limit) return;
        if (groups.size() + (n - v) < k) return;
        if (v == n) {
            if (groups.size() == k) out.push_back(BasicCliqueCover{groups});
            return;
        }
        const auto vertex = static_cast<Vertex>(v);
        for (std::size_t i = 0; i < groups.size(); ++i) {
            if (!groups[i].is_subset_of(g.neighbors(vertex))) continue;
            groups[i].insert(vertex);
            place(v + 1);
            groups[i].erase(vertex);
        }
        if (groups.size() < k) {
            groups.emplace_back(n);
            groups.back().insert(vertex);
            place(v + 1);
            groups.pop_back();
        }
    };
    place(0);
    return out;
}

}  // namespace wcg
