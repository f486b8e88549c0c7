#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "wcg/clique_cover.hpp"
#include "wcg/edge_ring.hpp"
#include "wcg/graph.hpp"
#include "wcg/simplicial.hpp"

namespace wcg {

/// Largest order representable in the single-byte graph6 size form.
inline constexpr std::size_t kMaxGraph6Order = 62;

/// Edge list: first non-comment line "n m", then m lines "u v" (0-based).
/// '#' starts a comment; blank lines are skipped. Throws ParseError.
Graph parse_edgelist(std::string_view text);
/// Inverse of parse_edgelist.
std::string format_edgelist(const Graph& g);

/// One graph6 line (optional trailing newline, no ">>graph6<<" header).
Graph parse_graph6(std::string_view line);
/// Throws InputError above kMaxGraph6Order vertices.
std::string encode_graph6(const Graph& g);

/// Facet file: first non-comment line "n", then one facet per line.
/// Missing ground elements are repaired (see from_facets) unless strict.
SimplicialComplex parse_facets(std::string_view text, bool strict = false);

/// One vertex set per line, space-separated vertices below n.
std::vector<VertexSet> parse_vertex_sets(std::string_view text, std::size_t n);

/// Cover file: one clique per line, space-separated vertices. The result is
/// validated against g with validate_clique_cover.
CliqueCover parse_cover(std::string_view text, const Graph& g);

/// "x3+x7+x9", "2*x1-1/3*x4" (no spaces). Throws ParseError (line 1).
LinearForm parse_linear_form(std::string_view text, std::size_t variables);

}  // namespace wcg
