#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "wcg/graph.hpp"

namespace wcg {

/// Largest order handled by the canonical-form routines (upper triangle fits
/// in 64 bits).
inline constexpr std::size_t kMaxCanonicalOrder = 11;

/// Canonical adjacency code: the upper triangle in graph6 pair order
/// (0,1),(0,2),(1,2),(0,3),... read as a big-endian integer, minimized over
/// the labelings reached by equitable partition refinement. Two graphs of the
/// same order are isomorphic iff their codes are equal.
std::uint64_t canonical_code(const Graph& g);

/// The graph whose adjacency code under the identity labeling is
/// canonical_code(g).
Graph canonical_form(const Graph& g);

/// Decodes an adjacency code produced by canonical_code.
Graph graph_from_code(std::size_t n, std::uint64_t code);

/// Membership test for a graph class closed under vertex deletion.
using HereditaryPredicate = std::function<bool(const Graph&)>;

/// One representative per isomorphism class of n-vertex graphs satisfying
/// keep, in canonical form, sorted by canonical code. keep must be
/// hereditary: every class member must arise from a smaller member by adding
/// one vertex.
std::vector<Graph> nonisomorphic_graphs(std::size_t n, const HereditaryPredicate& keep = {});

/// nonisomorphic_graphs for every order 0..max_n, concatenated by order.
std::vector<Graph> nonisomorphic_graphs_up_to(std::size_t max_n, const HereditaryPredicate& keep = {});

}  // namespace wcg
