#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hypersurf {

// Immutable k-uniform hypergraph on vertices 0..n-1.
//
// Edges are stored flat (k vertices per edge, each edge strictly ascending)
// and the edge list is kept sorted lexicographically with no duplicates, so
// structural equality is plain equality and file output is canonical.
class Hypergraph {
public:
    // Takes flat storage of size k*m; edges may arrive in any order and with
    // unsorted vertices, they are canonicalized here. Throws ParameterError
    // on repeated vertices inside an edge, out-of-range vertices, or
    // duplicate edges.
    Hypergraph(int k, int n, std::vector<int> flat);

    static Hypergraph fromEdges(int k, int n, const std::vector<std::vector<int>>& edges);

    int uniformity() const { return k_; }
    int vertexCount() const { return n_; }
    std::size_t edgeCount() const { return flat_.size() / static_cast<std::size_t>(k_); }

    std::span<const int> edge(std::size_t i) const {
        return {flat_.data() + i * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
    }
    const std::vector<int>& flat() const { return flat_; }

    // Binary search over the sorted edge list; verts must be ascending.
    bool hasEdge(std::span<const int> verts) const;
    std::optional<std::size_t> edgeIndex(std::span<const int> verts) const;

    // 1-degree of every vertex in one pass.
    std::vector<std::int64_t> vertexDegrees() const;

    bool operator==(const Hypergraph&) const = default;

private:
    int k_;
    int n_;
    std::vector<int> flat_;
};

// Partition of the edge set into tight components: parts are edge-index
// sets, each inducing a connected subgraph of the line graph, maximal under
// the "share k-1 vertices" adjacency.
struct ComponentDecomposition {
    std::vector<std::vector<std::uint32_t>> parts;  // ascending edge indices, parts ordered by first edge
    std::vector<std::vector<int>> vertexSets;       // union of each part's edge vertices, ascending
    std::optional<std::size_t> spanningPartIndex;   // set iff some part covers all of [0, n)
};

// Minimum d-degree: the least number of edges containing any d-set.
// Requires 1 <= d < k and n >= d.
std::int64_t min_d_degree(const Hypergraph& g, int d);

// Link of x in a 3-graph: the 2-graph on the same vertex set whose edges are
// the pairs completing an edge with x. x itself ends up isolated.
Hypergraph link_graph(const Hypergraph& g, int x);

// Tight components via (k-1)-subset bucketing + union-find; the line graph
// is never materialized.
ComponentDecomposition tight_components(const Hypergraph& g);

struct LinkComponentDiagnostics {
    std::vector<int> componentVertices;   // C_x: vertex set of a largest-order component of L(x)
    std::vector<std::size_t> witnessEdges;  // edge indices of G whose pair lies inside C_x
};

// Largest-order component of the link of x (ties broken by smallest minimum
// vertex) together with the edges of G it certifies. Requires k = 3 and
// deg(x) > 0.
LinkComponentDiagnostics link_component_diagnostics(const Hypergraph& g, int x);

// The 4-graph on V(G) with an edge for every 4-set spanning four edges of
// the 3-graph G.
Hypergraph tetrahedron_4graph(const Hypergraph& g);

}  // namespace hypersurf
