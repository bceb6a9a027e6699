#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypersurf/blowup.hpp"
#include "hypersurf/hypergraph.hpp"
#include "hypersurf/surface.hpp"

namespace hypersurf {

// A generated hypergraph together with the named vertex ranges of its
// partition (contiguous, in layout order) and the size parameters used.
struct PartitionedGraph {
    Hypergraph graph;
    // part name -> [begin, end) in layout order Z, X, Y where applicable
    std::vector<std::pair<std::string, std::pair<int, int>>> parts;
    std::map<std::string, std::int64_t> params;

    std::pair<int, int> part(const std::string& name) const;
};

// Two-component 3-graph with edge types XXX, XYY, YYY, ZXX on the partition
// Z|X|Y. Defaults: xSize = floor(n/sqrt(2)), zSize = 1.
PartitionedGraph fig1(int n, int xSize = -1, int zSize = 1);

// Closed-form minimum degree of fig1(n, xSize, zSize); audited against the
// direct count in the tests.
std::int64_t fig1_min_degree_formula(int n, int xSize = -1, int zSize = 1);

// Two-part 3-graph (X|Y, edge types XXX, XYY, YYY) with |X| = ceil(2n/3)+4g;
// its sizes trip the Euler obstruction for genus-g spanning surfaces.
PartitionedGraph surface_lower_bound(int n, int g);

std::int64_t surface_lower_bound_min_degree_formula(int n, int g);

// k-graph with no spanning component: all k-sets on X|Y except those with
// k-1 vertices in X and one in Y, plus a vertex z joined to all (k-1)-sets
// of X. Layout z, X, Y with |X| = floor(2^{-1/(k-1)} (n-1)).
PartitionedGraph kgraph_lower_bound(int n, int k);

// Complete k-partite k-graph as a blow-up of a single edge.
BlowUp complete_kpartite(int k, const std::vector<int>& sizes);

Hypergraph tight_path(int k, int ell);
Hypergraph tight_cycle(int k, int n);
BlowUp path_blowup(int k, int ell, const std::vector<int>& sizes);
BlowUp cycle_blowup(int k, int n, const std::vector<int>& sizes);

enum class FixtureName { T9, P12 };

// The 9-vertex torus and 12-vertex projective-plane triangulations, indexed
// so that the 3-colouring classes are the clusters of their host blow-ups
// P3(3,3,3) and P3(4,4,4).
struct Fixture {
    Surface2 surface;
    BlowUp host;
};

const Fixture& fixture(FixtureName name);

}  // namespace hypersurf
