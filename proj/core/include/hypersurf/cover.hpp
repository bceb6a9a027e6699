#pragma once

#include <optional>
#include <vector>

#include "hypersurf/blowup.hpp"
#include "hypersurf/surface.hpp"

namespace hypersurf {

// Witness that a sphere in a path blow-up is doubly edge-covering: two
// facet families indexed by base-path edge, each family vertex-disjoint,
// and familyA[e] != familyB[e] for every base edge e.
struct DoubleCover {
    std::vector<Triangle> familyA;  // indexed by base edge (leftmost base vertex order)
    std::vector<Triangle> familyB;
};

// True iff base is exactly the tight path on its vertices.
bool is_tight_path(const Hypergraph& base);

// Faces reread as a 3-graph, for spanning checks.
Hypergraph surface_as_hypergraph(const Surface2& s);

// Checks a witness against the definition; cheap and independent of how the
// witness was produced.
bool validate_double_cover(const Surface2& s, const BlowUp& b, const DoubleCover& dc);

// Exact search for a witness: a system of distinct, family-disjoint
// representatives over the faces grouped by their base-edge projection.
// Preconditions: b.base is a tight path and s spans b.result.
std::optional<DoubleCover> check_doubly_edge_covering(const Surface2& s, const BlowUp& b);

}  // namespace hypersurf
