#include "hypersurf/cover.hpp"

#include <algorithm>
#include <cstdint>

#include "hypersurf/error.hpp"

namespace hypersurf {

bool is_tight_path(const Hypergraph& base) {
    const int k = base.uniformity();
    const int n = base.vertexCount();
    if (n < k) return base.edgeCount() == 0;
    const std::size_t expected = static_cast<std::size_t>(n - k + 1);
    if (base.edgeCount() != expected) return false;
    for (std::size_t i = 0; i < expected; ++i) {
        auto e = base.edge(i);
        for (int j = 0; j < k; ++j)
            if (e[j] != static_cast<int>(i) + j) return false;
    }
    return true;
}

Hypergraph surface_as_hypergraph(const Surface2& s) {
    std::vector<int> flat;
    flat.reserve(s.faceCount() * 3);
    for (const auto& f : s.faces()) {
        flat.push_back(f[0]);
        flat.push_back(f[1]);
        flat.push_back(f[2]);
    }
    return Hypergraph(3, s.vertexCount(), std::move(flat));
}

namespace {

// Base-edge index a face projects onto, or -1 if it is not a transversal of
// consecutive clusters.
int baseEdgeOf(const Triangle& f, const BlowUp& b) {
    int c0 = b.phi[static_cast<std::size_t>(f[0])];
    int c1 = b.phi[static_cast<std::size_t>(f[1])];
    int c2 = b.phi[static_cast<std::size_t>(f[2])];
    int lo = std::min({c0, c1, c2});
    int hi = std::max({c0, c1, c2});
    if (hi - lo != 2 || c0 + c1 + c2 != 3 * lo + 3) return -1;
    if (c0 == c1 || c1 == c2 || c0 == c2) return -1;
    return lo;
}

bool disjoint(const Triangle& a, const Triangle& b) {
    for (int u : a)
        for (int v : b)
            if (u == v) return false;
    return true;
}

struct CoverSearch {
    const std::vector<std::vector<Triangle>>& groups;
    std::vector<Triangle> famA, famB;
    std::uint64_t nodes = 0;
    static constexpr std::uint64_t kNodeCap = 50'000'000;

    bool solve(std::size_t e) {
        if (++nodes > kNodeCap) throw ResourceError("double-cover search exceeded its node budget");
        if (e == groups.size()) return true;
        for (const auto& fa : groups[e]) {
            bool okA = true;
            for (const auto& prev : famA)
                if (!disjoint(prev, fa)) {
                    okA = false;
                    break;
                }
            if (!okA) continue;
            famA.push_back(fa);
            for (const auto& fb : groups[e]) {
                if (fb == fa) continue;
                bool okB = true;
                for (const auto& prev : famB)
                    if (!disjoint(prev, fb)) {
                        okB = false;
                        break;
                    }
                if (!okB) continue;
                famB.push_back(fb);
                if (solve(e + 1)) return true;
                famB.pop_back();
            }
            famA.pop_back();
        }
        return false;
    }
};

}  // namespace

bool validate_double_cover(const Surface2& s, const BlowUp& b, const DoubleCover& dc) {
    const std::size_t baseEdges = b.base.edgeCount();
    if (dc.familyA.size() != baseEdges || dc.familyB.size() != baseEdges) return false;
    for (std::size_t e = 0; e < baseEdges; ++e) {
        Triangle fa = dc.familyA[e], fb = dc.familyB[e];
        std::sort(fa.begin(), fa.end());
        std::sort(fb.begin(), fb.end());
        if (fa == fb) return false;
        if (!s.hasFace(fa) || !s.hasFace(fb)) return false;
        if (baseEdgeOf(fa, b) != static_cast<int>(e)) return false;
        if (baseEdgeOf(fb, b) != static_cast<int>(e)) return false;
    }
    for (std::size_t i = 0; i < baseEdges; ++i)
        for (std::size_t j = i + 1; j < baseEdges; ++j) {
            if (!disjoint(dc.familyA[i], dc.familyA[j])) return false;
            if (!disjoint(dc.familyB[i], dc.familyB[j])) return false;
        }
    return true;
}

std::optional<DoubleCover> check_doubly_edge_covering(const Surface2& s, const BlowUp& b) {
    if (!is_tight_path(b.base)) throw ParameterError("double-cover check requires a tight-path base");
    if (s.vertexCount() != b.result.vertexCount())
        throw ParameterError("surface and blow-up disagree on the vertex count");
    if (!is_spanning_in_blowup(surface_as_hypergraph(s), b))
        throw ParameterError("surface does not span the blow-up");

    const std::size_t baseEdges = b.base.edgeCount();
    std::vector<std::vector<Triangle>> groups(baseEdges);
    for (const auto& f : s.faces()) {
        int e = baseEdgeOf(f, b);
        // Spanning guarantees e >= 0 for every face.
        groups[static_cast<std::size_t>(e)].push_back(f);
    }
    for (const auto& grp : groups)
        if (grp.size() < 2) return std::nullopt;  // familyA = familyB would be forced

    CoverSearch search{groups, {}, {}, 0};
    if (!search.solve(0)) return std::nullopt;
    return DoubleCover{std::move(search.famA), std::move(search.famB)};
}

}  // namespace hypersurf
