#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "wcg/graph.hpp"

namespace wcg {

/// Cliques whose union is V(G); members may overlap.
struct CliqueCover {
    std::vector<VertexSet> cliques;
};

/// alpha(G) pairwise-disjoint non-empty cliques partitioning V(G).
struct BasicCliqueCover {
    std::vector<VertexSet> cliques;

    friend bool operator==(const BasicCliqueCover&, const BasicCliqueCover&) = default;
};

struct CoverReport {
    bool valid = true;
    std::vector<std::string> violations;

    explicit operator bool() const noexcept { return valid; }
};

/// Default vertex limit for the exact clique-partition search.
inline constexpr Guard kCoverSearchGuard{24, false};

/// Throws InputError unless every member of cover is a clique of g over g's
/// vertex set and the members jointly cover V(g).
void validate_clique_cover(const Graph& g, const CliqueCover& cover);

/// Turns a cover by alpha(g) cliques into a partition: the i-th clique keeps
/// only the vertices not claimed by cliques 0..i-1. Input order is preserved,
/// and the result depends on it.
/// Throws InputError for an invalid cover and PreconditionError when the cover
/// size differs from alpha(g).
BasicCliqueCover basify(const Graph& g, const CliqueCover& cover);

/// Checks every BasicCliqueCover invariant (count = alpha included) and lists
/// each violation found. Never throws for well-formed vertex sets.
CoverReport validate_basic_cover(const Graph& g, const BasicCliqueCover& cover);

/// Exact search for a partition of V(g) into alpha(g) cliques, i.e. an
/// alpha(g)-coloring of the complement. Cliques are ordered by smallest
/// member. Throws ResourceError above the guard.
std::optional<BasicCliqueCover> find_basic_clique_cover(const Graph& g,
                                                        const Guard& guard = kCoverSearchGuard);

struct ClassMembership {
    bool member = false;
    std::optional<BasicCliqueCover> witness;
};

/// Whether g is coverable by alpha(g) cliques. The empty graph is a member
/// with the empty cover.
ClassMembership is_in_class_G(const Graph& g, const Guard& guard = kCoverSearchGuard);

/// Every basic clique cover of g (as unordered partitions, each listed with
/// cliques ordered by smallest member), up to limit covers.
std::vector<BasicCliqueCover> all_basic_clique_covers(
    const Graph& g, std::size_t limit = std::numeric_limits<std::size_t>::max(),
    const Guard& guard = kCoverSearchGuard);

/// Proper coloring of g with at most `colors` colors, found by DSATUR-ordered
/// branch and bound, or nullopt if none exists. Colors are 0-based and first
/// used in increasing order.
std::optional<std::vector<int>> find_coloring(const Graph& g, std::size_t colors);

}  // namespace wcg
