#include "hypersurf/blowup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hypersurf/error.hpp"

namespace hypersurf {

int BlowUp::maxClusterSize() const { return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end()); }

BlowUp blow_up(const Hypergraph& base, const std::vector<int>& sizes) {
    if (static_cast<int>(sizes.size()) != base.vertexCount())
        throw ParameterError("blow-up needs one cluster size per base vertex");
    for (int s : sizes)
        if (s < 1) throw ParameterError("cluster sizes must be positive, got " + std::to_string(s));

    const int k = base.uniformity();
    std::vector<int> offsets(sizes.size() + 1, 0);
    for (std::size_t i = 0; i < sizes.size(); ++i) offsets[i + 1] = offsets[i] + sizes[i];
    const int total = offsets.back();

    std::vector<int> phi(static_cast<std::size_t>(total));
    for (std::size_t x = 0; x < sizes.size(); ++x)
        for (int v = offsets[x]; v < offsets[x + 1]; ++v) phi[static_cast<std::size_t>(v)] = static_cast<int>(x);

    std::size_t edgeTotal = 0;
    for (std::size_t i = 0; i < base.edgeCount(); ++i) {
        std::size_t prod = 1;
        for (int x : base.edge(i)) prod *= static_cast<std::size_t>(sizes[static_cast<std::size_t>(x)]);
        edgeTotal += prod;
    }

    std::vector<int> flat;
    flat.reserve(edgeTotal * static_cast<std::size_t>(k));
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < base.edgeCount(); ++i) {
        auto e = base.edge(i);
        // Odometer over the clusters of this base edge. Base edge vertices
        // are ascending, so the transversals come out in sorted order too.
        for (int j = 0; j < k; ++j) pick[static_cast<std::size_t>(j)] = 0;
        while (true) {
            for (int j = 0; j < k; ++j)
                flat.push_back(offsets[static_cast<std::size_t>(e[j])] + pick[static_cast<std::size_t>(j)]);
            int j = k - 1;
            while (j >= 0 && pick[static_cast<std::size_t>(j)] + 1 == sizes[static_cast<std::size_t>(e[j])]) {
                pick[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            if (j < 0) break;
            ++pick[static_cast<std::size_t>(j)];
        }
    }

    BlowUp b{base, sizes, Hypergraph(k, total, std::move(flat)), std::move(phi), std::move(offsets)};
    return b;
}

bool is_spanning_in_blowup(const Hypergraph& h, const BlowUp& b) {
    if (h.vertexCount() != b.result.vertexCount() || h.uniformity() != b.result.uniformity())
        throw ParameterError("spanning check requires matching vertex set and uniformity");

    std::vector<char> covered(static_cast<std::size_t>(h.vertexCount()), 0);
    const int k = h.uniformity();
    std::vector<int> proj(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < h.edgeCount(); ++i) {
        auto e = h.edge(i);
        for (int j = 0; j < k; ++j) {
            covered[static_cast<std::size_t>(e[j])] = 1;
            proj[static_cast<std::size_t>(j)] = b.phi[static_cast<std::size_t>(e[j])];
        }
        // One vertex per cluster, and the clusters must form a base edge.
        std::sort(proj.begin(), proj.end());
        for (int j = 1; j < k; ++j)
            if (proj[static_cast<std::size_t>(j)] == proj[static_cast<std::size_t>(j - 1)]) return false;
        if (!b.base.hasEdge(proj)) return false;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

}  // namespace hypersurf
