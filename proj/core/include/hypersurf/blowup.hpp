#pragma once

#include <span>
#include <vector>

#include "hypersurf/hypergraph.hpp"

namespace hypersurf {

// Complete blow-up of a base hypergraph: vertex x becomes the contiguous
// cluster V_x of sizes[x] result vertices, every base edge becomes the
// complete k-partite k-graph on its clusters. phi projects result vertices
// back onto base vertices.
struct BlowUp {
    Hypergraph base;
    std::vector<int> sizes;
    Hypergraph result;
    std::vector<int> phi;      // result vertex -> base vertex
    std::vector<int> offsets;  // cluster V_x = [offsets[x], offsets[x] + sizes[x])

    int clusterBegin(int x) const { return offsets[static_cast<std::size_t>(x)]; }
    int clusterSize(int x) const { return sizes[static_cast<std::size_t>(x)]; }
    int maxClusterSize() const;
};

BlowUp blow_up(const Hypergraph& base, const std::vector<int>& sizes);

// True iff h covers every vertex of b.result and every edge of h is an edge
// of b.result (equivalently, projects bijectively onto a base edge).
bool is_spanning_in_blowup(const Hypergraph& h, const BlowUp& b);

}  // namespace hypersurf
