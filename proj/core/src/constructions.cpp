#include "hypersurf/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "hypersurf/error.hpp"
#include "hypersurf/util.hpp"

namespace hypersurf {

std::pair<int, int> PartitionedGraph::part(const std::string& name) const {
    for (const auto& [pname, range] : parts)
        if (pname == name) return range;
    throw ParameterError("no part named " + name);
}

namespace {

int defaultFig1XSize(int n) { return static_cast<int>(std::floor(static_cast<double>(n) / std::sqrt(2.0))); }

// Emits all ascending triples inside [lo, hi).
void emitTriplesWithin(std::vector<int>& flat, int lo, int hi) {
    for (int a = lo; a < hi; ++a)
        for (int b = a + 1; b < hi; ++b)
            for (int c = b + 1; c < hi; ++c) {
                flat.push_back(a);
                flat.push_back(b);
                flat.push_back(c);
            }
}

}  // namespace

PartitionedGraph fig1(int n, int xSize, int zSize) {
    if (n < 5) throw ParameterError("fig1 needs n >= 5");
    if (xSize < 0) xSize = defaultFig1XSize(n);
    if (zSize < 1 || xSize < 1) throw ParameterError("fig1 parts must be non-empty");
    if (xSize + zSize >= n) throw ParameterError("fig1 needs xSize + zSize < n");
    const int ySize = n - xSize - zSize;

    // Layout: Z = [0, z), X = [z, z+x), Y = [z+x, n).
    const int xLo = zSize, xHi = zSize + xSize;
    const int yLo = xHi, yHi = n;

    std::size_t count = static_cast<std::size_t>(zSize) * binomial(static_cast<std::uint64_t>(xSize), 2) +
                        binomial(static_cast<std::uint64_t>(xSize), 3) +
                        static_cast<std::size_t>(xSize) * binomial(static_cast<std::uint64_t>(ySize), 2) +
                        binomial(static_cast<std::uint64_t>(ySize), 3);
    std::vector<int> flat;
    flat.reserve(count * 3);

    // Generation order is globally lexicographic: all Z-leading edges (ZXX),
    // then per x in X its XXX and XYY continuations, then YYY.
    for (int z = 0; z < zSize; ++z)
        for (int a = xLo; a < xHi; ++a)
            for (int b = a + 1; b < xHi; ++b) {
                flat.push_back(z);
                flat.push_back(a);
                flat.push_back(b);
            }
    for (int a = xLo; a < xHi; ++a) {
        for (int b = a + 1; b < xHi; ++b)
            for (int c = b + 1; c < xHi; ++c) {
                flat.push_back(a);
                flat.push_back(b);
                flat.push_back(c);
            }
        for (int b = yLo; b < yHi; ++b)
            for (int c = b + 1; c < yHi; ++c) {
                flat.push_back(a);
                flat.push_back(b);
                flat.push_back(c);
            }
    }
    emitTriplesWithin(flat, yLo, yHi);

    PartitionedGraph out{Hypergraph(3, n, std::move(flat)),
                         {{"Z", {0, zSize}}, {"X", {xLo, xHi}}, {"Y", {yLo, yHi}}},
                         {{"n", n}, {"xSize", xSize}, {"zSize", zSize}, {"ySize", ySize}}};
    return out;
}

std::int64_t fig1_min_degree_formula(int n, int xSize, int zSize) {
    if (xSize < 0) xSize = defaultFig1XSize(n);
    const std::int64_t x = xSize, z = zSize, y = n - xSize - zSize;
    const std::int64_t degZ = static_cast<std::int64_t>(binomial(static_cast<std::uint64_t>(x), 2));
    const std::int64_t degX = static_cast<std::int64_t>(binomial(static_cast<std::uint64_t>(x - 1), 2)) +
                              z * (x - 1) +
                              static_cast<std::int64_t>(binomial(static_cast<std::uint64_t>(y), 2));
    const std::int64_t degY =
        x * (y - 1) + static_cast<std::int64_t>(binomial(static_cast<std::uint64_t>(y - 1), 2));
    return std::min({degZ, degX, degY});
}

PartitionedGraph surface_lower_bound(int n, int g) {
    if (g < 0) throw ParameterError("genus must be non-negative");
    const int xSize = static_cast<int>((2LL * n + 2) / 3 + 4LL * g);  // ceil(2n/3) + 4g
    if (xSize >= n) throw ParameterError("surface_lower_bound needs ceil(2n/3) + 4g < n");
    const int ySize = n - xSize;
    // Below these sizes the XXX or XYY/YYY side degenerates and the
    // two-component structure is lost.
    if (xSize < 3 || ySize < 2)
        throw ParameterError("surface_lower_bound needs |X| >= 3 and |Y| >= 2; increase n");

    std::vector<int> flat;
    const std::size_t count = binomial(static_cast<std::uint64_t>(xSize), 3) +
                              static_cast<std::size_t>(xSize) * binomial(static_cast<std::uint64_t>(ySize), 2) +
                              binomial(static_cast<std::uint64_t>(ySize), 3);
    flat.reserve(count * 3);
    for (int a = 0; a < xSize; ++a) {
        for (int b = a + 1; b < xSize; ++b)
            for (int c = b + 1; c < xSize; ++c) {
                flat.push_back(a);
                flat.push_back(b);
                flat.push_back(c);
            }
        for (int b = xSize; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                flat.push_back(a);
                flat.push_back(b);
                flat.push_back(c);
            }
    }
    emitTriplesWithin(flat, xSize, n);

    return PartitionedGraph{Hypergraph(3, n, std::move(flat)),
                            {{"X", {0, xSize}}, {"Y", {xSize, n}}},
                            {{"n", n}, {"g", g}, {"xSize", xSize}, {"ySize", ySize}}};
}

std::int64_t surface_lower_bound_min_degree_formula(int n, int g) {
    const std::int64_t x = (2LL * n + 2) / 3 + 4LL * g;
    const std::int64_t y = n - x;
    const std::int64_t degX = static_cast<std::int64_t>(binomial(static_cast<std::uint64_t>(x - 1), 2)) +
                              static_cast<std::int64_t>(binomial(static_cast<std::uint64_t>(y), 2));
    const std::int64_t degY =
        x * (y - 1) + static_cast<std::int64_t>(binomial(static_cast<std::uint64_t>(y - 1), 2));
    return std::min(degX, degY);
}

PartitionedGraph kgraph_lower_bound(int n, int k) {
    if (k < 3) throw ParameterError("kgraph_lower_bound needs k >= 3");
    const double factor = std::pow(2.0, -1.0 / static_cast<double>(k - 1));
    const int xSize = static_cast<int>(std::floor(factor * static_cast<double>(n - 1)));
    if (xSize < k) throw ParameterError("kgraph_lower_bound needs |X| >= k; increase n");
    const int ySize = n - 1 - xSize;
    if (ySize < 1) throw ParameterError("kgraph_lower_bound needs a non-empty Y");

    // Layout: z = 0, X = [1, 1+x), Y = [1+x, n).
    const int xLo = 1, xHi = 1 + xSize;

    std::vector<int> flat;
    // z-edges: {z} + each (k-1)-subset of X.
    for_each_subset(xSize, k - 1, [&](const std::vector<int>& pick) {
        flat.push_back(0);
        for (int p : pick) flat.push_back(xLo + p);
    });
    // All k-sets on X u Y except those with exactly k-1 vertices in X and
    // one in Y.
    for_each_subset(n - 1, k, [&](const std::vector<int>& pick) {
        int inX = 0;
        for (int p : pick)
            if (p < xSize) ++inX;
        if (inX == k - 1) return;
        for (int p : pick) flat.push_back(1 + p);
    });

    return PartitionedGraph{Hypergraph(k, n, std::move(flat)),
                            {{"Z", {0, 1}}, {"X", {xLo, xHi}}, {"Y", {xHi, n}}},
                            {{"n", n}, {"k", k}, {"xSize", xSize}, {"ySize", ySize}}};
}

BlowUp complete_kpartite(int k, const std::vector<int>& sizes) {
    if (k < 2) throw ParameterError("complete_kpartite needs k >= 2");
    if (static_cast<int>(sizes.size()) != k)
        throw ParameterError("complete_kpartite needs exactly k part sizes");
    std::vector<int> edge(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) edge[static_cast<std::size_t>(i)] = i;
    Hypergraph base(k, k, std::move(edge));
    return blow_up(base, sizes);
}

Hypergraph tight_path(int k, int ell) {
    if (ell < k) throw ParameterError("tight path needs at least k vertices to have an edge");
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(ell - k + 1) * static_cast<std::size_t>(k));
    for (int i = 0; i + k <= ell; ++i)
        for (int j = 0; j < k; ++j) flat.push_back(i + j);
    return Hypergraph(k, ell, std::move(flat));
}

Hypergraph tight_cycle(int k, int n) {
    if (n < k + 1) throw ParameterError("tight cycle needs at least k+1 vertices");
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) flat.push_back((i + j) % n);
    return Hypergraph(k, n, std::move(flat));
}

BlowUp path_blowup(int k, int ell, const std::vector<int>& sizes) {
    if (static_cast<int>(sizes.size()) != ell) throw ParameterError("path blow-up needs one size per path vertex");
    return blow_up(tight_path(k, ell), sizes);
}

BlowUp cycle_blowup(int k, int n, const std::vector<int>& sizes) {
    if (static_cast<int>(sizes.size()) != n) throw ParameterError("cycle blow-up needs one size per cycle vertex");
    return blow_up(tight_cycle(k, n), sizes);
}

}  // namespace hypersurf
