#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "wcg/vertex_set.hpp"

namespace wcg {

using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on the dense vertex range 0..n-1.
///
/// Immutable after construction. Edges are stored normalized (u < v) and
/// sorted; construction rejects loops, duplicates and out-of-range endpoints.
class Graph {
public:
    Graph() = default;
    Graph(std::size_t n, const std::vector<Edge>& edges);

    static Graph empty(std::size_t n) { return Graph(n, {}); }

    std::size_t order() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    bool adjacent(Vertex u, Vertex v) const { return adj_.at(check(u)).contains(v); }
    const VertexSet& neighbors(Vertex v) const { return adj_.at(check(v)); }
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    VertexSet no_vertices() const { return VertexSet(n_); }
    VertexSet all_vertices() const { return VertexSet::full(n_); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t check(Vertex v) const;

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<VertexSet> adj_;
};

// Neighborhoods ------------------------------------------------------------

/// Open neighborhood N(v).
VertexSet neighbors(const Graph& g, Vertex v);
/// Union of the open neighborhoods of the members of s (may intersect s).
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);
/// N[S] = S together with every neighbor of a member of S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

// Predicates ---------------------------------------------------------------

bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
/// Every vertex of b lies in a or has a neighbor in a.
bool dominates(const Graph& g, const VertexSet& a, const VertexSet& b);
/// Every edge has at least one endpoint in s.
bool is_vertex_cover(const Graph& g, const VertexSet& s);
bool is_maximal_independent(const Graph& g, const VertexSet& s);

// Derived graphs -------------------------------------------------------------

Graph complement(const Graph& g);
/// Induced subgraph on s, relabeled to 0..|s|-1 in ascending vertex order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
/// Proper 2-coloring (side 0 / side 1), or nullopt when g has an odd cycle.
std::optional<std::vector<int>> two_coloring(const Graph& g);
bool is_connected(const Graph& g);

// Enumeration ----------------------------------------------------------------

using VertexSetSink = std::function<void(const VertexSet&)>;

/// Bron-Kerbosch with Tomita pivoting over an adjacency list; calls sink for
/// every maximal clique of the graph described by adj. Order is unspecified.
void for_each_maximal_clique(const std::vector<VertexSet>& adj, const VertexSetSink& sink);

/// Every inclusion-maximal independent set, sorted lexicographically by sorted
/// member list. The graph on zero vertices yields exactly the empty set.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);
/// Same sets, unsorted, streamed as found.
void for_each_maximal_independent_set(const Graph& g, const VertexSetSink& sink);

/// Every maximal clique, sorted like maximal_independent_sets.
std::vector<VertexSet> maximal_cliques(const Graph& g);

/// Independence number; 0 for the empty graph.
std::size_t alpha(const Graph& g);
/// One independent set of size alpha(g) (lexicographically smallest).
VertexSet maximum_independent_set(const Graph& g);

// Oracle ---------------------------------------------------------------------

/// Vertex-count limit for exhaustive routines.
struct Guard {
    std::size_t max_n = 32;
    bool force = false;

    void require(std::size_t n, const char* what) const;
};

struct OracleVerdict {
    bool well_covered = true;
    /// Shared cardinality of all maximal independent sets (equals alpha).
    std::optional<std::size_t> common_size;
    /// When not well-covered: a maximal independent set of minimum size and
    /// one of maximum size.
    std::optional<VertexSet> smaller_witness;
    std::optional<VertexSet> larger_witness;
    /// Number of maximal independent sets examined.
    std::size_t count = 0;
};

/// Decides well-coveredness by enumerating every maximal independent set.
/// Throws ResourceError when g.order() exceeds the guard.
OracleVerdict is_well_covered_oracle(const Graph& g, const Guard& guard = {});

/// Complements of the maximal independent sets, in the same order.
std::vector<VertexSet> minimal_vertex_covers(const Graph& g, const Guard& guard = {});

// Matching -------------------------------------------------------------------

/// Maximum matching of the bipartite subgraph between x and y (Hopcroft-Karp).
/// Each pair is (member of x, member of y), sorted by the x endpoint.
/// Throws InputError when x and y overlap.
std::vector<Edge> max_bipartite_matching(const Graph& g, const VertexSet& x, const VertexSet& y);

}  // namespace wcg
