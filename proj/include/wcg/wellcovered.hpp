#pragma once

#include <atomic>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wcg/clique_cover.hpp"
#include "wcg/graph.hpp"

namespace wcg {

// Domination criterion -------------------------------------------------------

struct DominatorSearch {
    /// Independent A with every target vertex adjacent to some member of A.
    std::optional<VertexSet> witness;
    /// Backtracking nodes visited; the exhaustion summary when no witness.
    std::size_t nodes = 0;
};

/// Exact backtracking search for an independent set A such that every vertex
/// of target has a neighbor in A. Such an A never meets target. Target
/// vertices are processed by ascending number of neighbors outside target;
/// candidates are tried in ascending order, so the result is deterministic.
DominatorSearch find_independent_dominator(const Graph& g, const VertexSet& target);

/// An independent A outside the clique q that dominates q, if one exists.
/// Throws PreconditionError when q is not a clique.
std::optional<VertexSet> dominating_independent_set(const Graph& g, const VertexSet& q);

struct CliqueCertificate {
    VertexSet clique;
    /// Present when the clique refutes well-coveredness.
    std::optional<VertexSet> refutation;
    /// Search nodes explored; certifies exhaustion when refutation is absent.
    std::size_t search_nodes = 0;
};

struct WitnessPair {
    /// Independent set of size alpha.
    VertexSet maximum;
    /// Maximal independent set of size < alpha extending a refutation.
    VertexSet smaller;
};

struct Verdict {
    bool well_covered = true;
    std::size_t alpha = 0;
    std::vector<CliqueCertificate> per_clique;
    std::optional<WitnessPair> witness_pair;
};

/// Decides well-coveredness of a class-G graph from a basic clique cover:
/// g is well-covered iff no cover clique is dominated by an independent set
/// lying outside it. Throws PreconditionError for an invalid cover.
Verdict check_well_covered(const Graph& g, const BasicCliqueCover& cover);

/// Greedy extension of an independent set to a maximal one, adding vertices
/// in ascending order.
VertexSet extend_to_maximal_independent(const Graph& g, VertexSet s);

// Bipartite matching criterion -------------------------------------------------

struct RavindraEvidence {
    Edge matched;  // (x, y) from the matching
    Edge missing;  // a in N(x), b in N(y) with a, b non-adjacent
};

struct RavindraResult {
    bool well_covered = false;
    /// The perfect matching certifying the verdict, or the matching that was
    /// tested (maximum, possibly imperfect) when the verdict is negative.
    std::vector<Edge> matching;
    bool perfect_matching_exists = false;
    /// When negative with a perfect matching: why its first bad edge fails.
    std::optional<RavindraEvidence> evidence;
    std::string reason;
};

/// Bipartite well-coveredness through perfect matchings whose matched edges
/// {x,y} have N(x) completely joined to N(y). Throws PreconditionError when g
/// is not bipartite or has an isolated vertex.
RavindraResult check_ravindra(const Graph& g);

/// Whether every neighbor of x is adjacent to every neighbor of y.
std::optional<Edge> ravindra_edge_defect(const Graph& g, Vertex x, Vertex y);

// s-partite consequences --------------------------------------------------------

enum class SpartiteStatus { consistent, premise_not_met, contradiction };

struct PartMatching {
    std::size_t first = 0;
    std::size_t second = 0;
    std::vector<Edge> matching;
    bool perfect = false;
};

struct SpartiteReport {
    SpartiteStatus status = SpartiteStatus::premise_not_met;
    std::string reason;
    std::vector<std::size_t> part_sizes;
    bool equal_sizes = false;
    std::vector<PartMatching> matchings;
};

/// For an s-partite well-covered graph whose maximal cliques all have size s,
/// checks that parts have equal size and are pairwise perfectly matchable.
/// Throws InputError when parts do not partition V(g) into independent sets.
/// Unmet premises yield premise_not_met; a failed consequence yields
/// contradiction.
SpartiteReport verify_spartite_consequences(const Graph& g, const std::vector<VertexSet>& parts,
                                            const Guard& guard = {});

struct PartitePremise {
    std::size_t s = 0;
    std::vector<VertexSet> parts;
};

/// If every maximal clique has the same size s >= 1 and g has a proper
/// s-coloring, returns s and the color classes.
std::optional<PartitePremise> uniform_clique_partition(const Graph& g);

// Minimal-cover shortcut ----------------------------------------------------------

/// EXPERIMENTAL. Literal test of whether q is a minimal vertex cover of the
/// subgraph induced on the closed neighborhood N[q]. A true result implies
/// N(q) \ q is an independent set dominating q; the converse does not hold.
/// Throws PreconditionError when q is not a clique.
bool shortcut_minimal_cover_claim(const Graph& g, const VertexSet& q);

// Conjecture hunt ---------------------------------------------------------------

struct HuntOptions {
    std::size_t workers = 1;
    /// Internal enumeration limit.
    std::size_t max_enumeration_n = 8;
    /// Set from another thread to stop early; the report is then partial.
    const std::atomic<bool>* cancel = nullptr;
};

struct Counterexample {
    Graph graph;
    std::size_t s = 0;
    std::vector<VertexSet> parts;
    std::size_t common_size = 0;
};

struct ShortcutRecord {
    Graph graph;
    VertexSet clique;
    bool shortcut = false;
    std::optional<VertexSet> witness;
};

struct HuntReport {
    bool complete = true;
    std::size_t scanned = 0;
    std::size_t premise_satisfying = 0;
    std::size_t premise_in_class_G = 0;
    std::vector<Counterexample> counterexamples;

    std::size_t cliques_audited = 0;
    std::size_t shortcut_agreements = 0;
    /// Shortcut false while a dominating independent set exists.
    std::vector<ShortcutRecord> shortcut_disagreements;
    /// Shortcut true while no dominating independent set exists. Must stay empty.
    std::vector<ShortcutRecord> shortcut_violations;
};

/// Scans graphs for well-covered s-partite graphs with uniform maximal clique
/// size s outside class G, and audits the minimal-cover shortcut against the
/// domination search on every cover clique of every class-G graph. The report
/// does not depend on the worker count.
HuntReport conjecture_hunt(std::span<const Graph> graphs, const HuntOptions& options = {});

/// Same over all non-isomorphic graphs on at most max_n vertices.
/// Throws ResourceError when max_n exceeds options.max_enumeration_n.
HuntReport conjecture_hunt(std::size_t max_n, const HuntOptions& options = {});

}  // namespace wcg
