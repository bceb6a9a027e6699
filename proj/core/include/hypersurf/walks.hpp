#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "hypersurf/hypergraph.hpp"

namespace hypersurf {

struct WalkOptions {
    std::size_t maxStates = 1u << 20;          // ordered (k-1)-tuples
    std::uint64_t maxWitnessWork = 400'000'000;  // product-graph BFS budget
};

// Residues r mod k for which the graph has a closed walk of order r, with a
// shortest witness walk per achieved residue. A witness of order m is a
// vertex sequence of length m whose cyclic k-windows are all edges.
struct WalkResidues {
    int modulus = 0;
    std::set<int> residues;
    std::map<int, std::vector<int>> witnesses;

    bool aperiodic() const { return residues.count(1 % modulus) > 0; }
};

// State digraph on ordered (k-1)-tuples contained in edges, transitions
// appending a completing vertex. Residues come from per-SCC period gcds;
// witnesses from a BFS on the (state, length mod k) product graph.
WalkResidues closed_walk_residues(const Hypergraph& g, const WalkOptions& opts = {});

// Independent validation of one witness.
bool validate_closed_walk(const Hypergraph& g, const std::vector<int>& walk);

}  // namespace hypersurf
