#include "wcg/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace wcg {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : n_(n), adj_(n, VertexSet(n)) {
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                             "} has an endpoint outside [0," + std::to_string(n) + ")");
        if (u == v) throw InputError("loop at vertex " + std::to_string(u));
        if (adj_[u].contains(v))
            throw InputError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        adj_[u].insert(v);
        adj_[v].insert(u);
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
}

std::size_t Graph::check(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= n_)
        throw InputError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    return static_cast<std::size_t>(v);
}

namespace {

void check_set(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw InputError("vertex set universe " + std::to_string(s.universe()) +
                         " does not match graph order " + std::to_string(g.order()));
}

}  // namespace

VertexSet neighbors(const Graph& g, Vertex v) { return g.neighbors(v); }

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
    check_set(g, s);
    VertexSet out = g.no_vertices();
    s.for_each([&](Vertex v) { out |= g.neighbors(v); });
    return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    return open_neighborhood(g, s) | s;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    check_set(g, s);
    for (Vertex v = s.first(); v >= 0; v = s.next(v + 1))
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    check_set(g, s);
    for (Vertex v = s.first(); v >= 0; v = s.next(v + 1)) {
        VertexSet rest = s;
        rest.erase(v);
        if (!rest.is_subset_of(g.neighbors(v))) return false;
    }
    return true;
}

bool dominates(const Graph& g, const VertexSet& a, const VertexSet& b) {
    check_set(g, b);
    return b.is_subset_of(closed_neighborhood(g, a));
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
    check_set(g, s);
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return s.contains(e.first) || s.contains(e.second); });
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
    return is_independent(g, s) && closed_neighborhood(g, s) == g.all_vertices();
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(g.order(), edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    check_set(g, s);
    std::vector<int> relabel(g.order(), -1);
    int next = 0;
    s.for_each([&](Vertex v) { relabel[v] = next++; });
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (relabel[u] >= 0 && relabel[v] >= 0) edges.emplace_back(relabel[u], relabel[v]);
    return Graph(static_cast<std::size_t>(next), edges);
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
    std::vector<int> side(g.order(), -1);
    for (std::size_t root = 0; root < g.order(); ++root) {
        if (side[root] >= 0) continue;
        side[root] = 0;
        std::queue<Vertex> queue;
        queue.push(static_cast<Vertex>(root));
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop();
            bool clash = false;
            g.neighbors(u).for_each([&](Vertex w) {
                if (side[w] < 0) {
                    side[w] = 1 - side[u];
                    queue.push(w);
                } else if (side[w] == side[u]) {
                    clash = true;
                }
            });
            if (clash) return std::nullopt;
        }
    }
    return side;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    VertexSet seen = g.no_vertices();
    seen.insert(0);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet grown = open_neighborhood(g, frontier) - seen;
        seen |= grown;
        frontier = std::move(grown);
    }
    return seen.size() == g.order();
}

// Bron-Kerbosch --------------------------------------------------------------

namespace {

void bron_kerbosch(const std::vector<VertexSet>& adj, VertexSet& r, VertexSet p, VertexSet x,
                   const VertexSetSink& sink) {
    if (p.empty()) {
        if (x.empty()) sink(r);
        return;
    }
    // Tomita pivot: the vertex of P u X with the most neighbors in P.
    Vertex pivot = -1;
    std::size_t best = 0;
    auto consider = [&](Vertex u) {
        std::size_t c = (adj[u] & p).size();
        if (pivot < 0 || c > best) {
            pivot = u;
            best = c;
        }
    };
    p.for_each(consider);
    x.for_each(consider);

    VertexSet candidates = p - adj[pivot];
    candidates.for_each([&](Vertex v) {
        r.insert(v);
        bron_kerbosch(adj, r, p & adj[v], x & adj[v], sink);
        r.erase(v);
        p.erase(v);
        x.insert(v);
    });
}

std::vector<VertexSet> complement_adjacency(const Graph& g) {
    std::vector<VertexSet> adj;
    adj.reserve(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) {
        VertexSet s = g.neighbors(static_cast<Vertex>(v)).complement();
        s.erase(static_cast<Vertex>(v));
        adj.push_back(std::move(s));
    }
    return adj;
}

}  // namespace

void for_each_maximal_clique(const std::vector<VertexSet>& adj, const VertexSetSink& sink) {
    const std::size_t n = adj.size();
    VertexSet r(n);
    bron_kerbosch(adj, r, VertexSet::full(n), VertexSet(n), sink);
}

void for_each_maximal_independent_set(const Graph& g, const VertexSetSink& sink) {
    for_each_maximal_clique(complement_adjacency(g), sink);
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    for_each_maximal_independent_set(g, [&](const VertexSet& s) { out.push_back(s); });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> adj;
    adj.reserve(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) adj.push_back(g.neighbors(static_cast<Vertex>(v)));
    std::vector<VertexSet> out;
    for_each_maximal_clique(adj, [&](const VertexSet& s) { out.push_back(s); });
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t alpha(const Graph& g) { return maximum_independent_set(g).size(); }

VertexSet maximum_independent_set(const Graph& g) {
    std::optional<VertexSet> best;
    for_each_maximal_independent_set(g, [&](const VertexSet& s) {
        if (!best || s.size() > best->size() || (s.size() == best->size() && s < *best)) best = s;
    });
    return *best;
}

// Oracle ---------------------------------------------------------------------

void Guard::require(std::size_t n, const char* what) const {
    if (!force && n > max_n)
        throw ResourceError(std::string(what) + ": " + std::to_string(n) + " exceeds the limit of " +
                            std::to_string(max_n) + " (force to override)");
}

OracleVerdict is_well_covered_oracle(const Graph& g, const Guard& guard) {
    guard.require(g.order(), "oracle vertex count");
    std::optional<VertexSet> smallest, largest;
    OracleVerdict verdict;
    for_each_maximal_independent_set(g, [&](const VertexSet& s) {
        ++verdict.count;
        if (!smallest || s.size() < smallest->size() || (s.size() == smallest->size() && s < *smallest))
            smallest = s;
        if (!largest || s.size() > largest->size() || (s.size() == largest->size() && s < *largest))
            largest = s;
    });
    verdict.well_covered = smallest->size() == largest->size();
    if (verdict.well_covered) {
        verdict.common_size = largest->size();
    } else {
        verdict.smaller_witness = std::move(smallest);
        verdict.larger_witness = std::move(largest);
    }
    return verdict;
}

std::vector<VertexSet> minimal_vertex_covers(const Graph& g, const Guard& guard) {
    guard.require(g.order(), "vertex cover enumeration vertex count");
    std::vector<VertexSet> out = maximal_independent_sets(g);
    for (auto& s : out) s = s.complement();
    return out;
}

// Hopcroft-Karp --------------------------------------------------------------

std::vector<Edge> max_bipartite_matching(const Graph& g, const VertexSet& x, const VertexSet& y) {
    check_set(g, x);
    check_set(g, y);
    if (x.intersects(y)) throw InputError("matching parts overlap: " + (x & y).to_string());

    const std::vector<Vertex> left = x.members();
    const std::size_t n = g.order();
    std::vector<std::vector<Vertex>> adj(left.size());
    for (std::size_t i = 0; i < left.size(); ++i) adj[i] = (g.neighbors(left[i]) & y).members();

    constexpr int kFree = -1;
    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<int> match_left(left.size(), kFree);  // index -> right vertex
    std::vector<int> match_right(n, kFree);           // right vertex -> left index
    std::vector<int> dist(left.size());

    auto bfs = [&] {
        std::queue<int> queue;
        bool found = false;
        for (std::size_t i = 0; i < left.size(); ++i) {
            if (match_left[i] == kFree) {
                dist[i] = 0;
                queue.push(static_cast<int>(i));
            } else {
                dist[i] = kInf;
            }
        }
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop();
            for (Vertex w : adj[i]) {
                int j = match_right[w];
                if (j == kFree) {
                    found = true;
                } else if (dist[j] == kInf) {
                    dist[j] = dist[i] + 1;
                    queue.push(j);
                }
            }
        }
        return found;
    };

    std::function<bool(int)> dfs = [&](int i) {
        for (Vertex w : adj[i]) {
            int j = match_right[w];
            if (j == kFree || (dist[j] == dist[i] + 1 && dfs(j))) {
                match_left[i] = w;
                match_right[w] = i;
                return true;
            }
        }
        dist[i] = kInf;
        return false;
    };

    while (bfs())
        for (std::size_t i = 0; i < left.size(); ++i)
            if (match_left[i] == kFree) dfs(static_cast<int>(i));

    std::vector<Edge> out;
    for (std::size_t i = 0; i < left.size(); ++i)
        if (match_left[i] != kFree) out.emplace_back(left[i], match_left[i]);
    return out;
}

}  // namespace wcg
