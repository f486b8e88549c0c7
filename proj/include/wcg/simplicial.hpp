#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "wcg/clique_cover.hpp"
#include "wcg/graph.hpp"

namespace wcg {

/// Sorted list of ground-set elements.
using Face = std::vector<int>;

/// A finite simplicial complex on {0, ..., n-1}, stored by its facets.
///
/// Facets are non-empty, form an antichain, and are sorted in (size, lex)
/// order. Every ground element belongs to some facet.
class SimplicialComplex {
public:
    std::size_t ground_size() const noexcept { return n_; }
    const std::vector<Face>& facets() const noexcept { return facets_; }
    /// Ground elements that were missing from the input and added as
    /// singleton facets by from_facets.
    const std::vector<int>& repaired_elements() const noexcept { return repaired_; }
    bool coverage_repaired() const noexcept { return !repaired_.empty(); }

    friend SimplicialComplex from_facets(std::size_t n, std::vector<Face> facets, bool strict);

private:
    std::size_t n_ = 0;
    std::vector<Face> facets_;
    std::vector<int> repaired_;
};

/// Normalizes a facet list: sorts each facet, drops duplicates and faces
/// contained in other listed faces. Elements of [n] that appear nowhere are
/// added as singleton facets (recorded in repaired_elements()); with strict
/// set they are rejected instead.
/// Throws InputError for an empty facet or an element >= n.
SimplicialComplex from_facets(std::size_t n, std::vector<Face> facets, bool strict = false);

/// Every non-empty face, deduplicated, in (dimension, lexicographic) order.
/// Throws ResourceError when more than max_faces faces exist.
std::vector<Face> faces(const SimplicialComplex& complex, std::size_t max_faces = std::size_t{1} << 15);

/// Largest facet size minus one; -1 for the void complex on zero elements.
int dimension(const SimplicialComplex& complex);

bool is_pure(const SimplicialComplex& complex);

/// The complex of independent sets of g; its facets are the maximal
/// independent sets. The empty graph gives the complex with no facets.
SimplicialComplex independence_complex(const Graph& g, const Guard& guard = {});

/// Bijection between the non-empty faces of a complex and the vertices of its
/// non-comparability graph. Vertex i is faces[i].
struct FaceVertexMap {
    std::vector<Face> faces;
    std::map<Face, Vertex> index;
};

struct NoncomparabilityGraph {
    Graph graph;
    FaceVertexMap map;
    /// Faces grouped by dimension, level i holding the i-dimensional faces.
    BasicCliqueCover cover;
};

/// Graph on the non-empty faces of the complex with an edge between two faces
/// iff neither contains the other, together with its dimension-level cover.
/// Throws ResourceError above max_faces faces.
NoncomparabilityGraph noncomparability_graph(const SimplicialComplex& complex,
                                             std::size_t max_faces = std::size_t{1} << 15);

}  // namespace wcg
