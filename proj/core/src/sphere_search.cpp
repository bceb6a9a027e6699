#include <algorithm>
#include <array>
#include <cstdint>

#include "hypersurf/error.hpp"
#include "hypersurf/oracle.hpp"

namespace hypersurf::oracle {

namespace {

struct Search {
    int n = 0;
    int target = 0;
    std::vector<Triangle> cand;
    std::vector<std::array<int, 3>> candPairs;          // pair keys per candidate
    std::vector<std::vector<std::int32_t>> facesOfPair;  // pair key -> candidate indices
    std::vector<std::int8_t> pairUse;
    std::vector<char> faceUsed;
    std::vector<int> vertexCover;  // chosen faces per vertex
    int coveredVertices = 0;
    std::vector<std::int32_t> chosen;
    int firstIndex = -1;

    std::uint64_t nodes = 0;
    std::uint64_t maxNodes = 0;
    bool exhausted = false;
    std::optional<Surface2> found;

    int pairKey(int u, int v) const { return u * n + v; }

    bool place(std::int32_t f) {
        for (int key : candPairs[static_cast<std::size_t>(f)])
            if (pairUse[static_cast<std::size_t>(key)] >= 2) return false;
        for (int key : candPairs[static_cast<std::size_t>(f)]) ++pairUse[static_cast<std::size_t>(key)];
        faceUsed[static_cast<std::size_t>(f)] = 1;
        chosen.push_back(f);
        for (int v : cand[static_cast<std::size_t>(f)])
            if (vertexCover[static_cast<std::size_t>(v)]++ == 0) ++coveredVertices;
        return true;
    }

    void unplace(std::int32_t f) {
        for (int key : candPairs[static_cast<std::size_t>(f)]) --pairUse[static_cast<std::size_t>(key)];
        faceUsed[static_cast<std::size_t>(f)] = 0;
        chosen.pop_back();
        for (int v : cand[static_cast<std::size_t>(f)])
            if (--vertexCover[static_cast<std::size_t>(v)] == 0) --coveredVertices;
    }

    int smallestOpenPair() const {
        for (std::size_t key = 0; key < pairUse.size(); ++key)
            if (pairUse[key] == 1) return static_cast<int>(key);
        return -1;
    }

    // True once a solution is found; the search stops unwinding then.
    bool run() {
        if (++nodes > maxNodes) {
            exhausted = true;
            return false;
        }
        if (static_cast<int>(chosen.size()) == target) {
            if (coveredVertices != n) return false;
            std::vector<Triangle> faces;
            faces.reserve(chosen.size());
            for (std::int32_t f : chosen) faces.push_back(cand[static_cast<std::size_t>(f)]);
            Surface2 s(n, std::move(faces));
            if (smallestOpenPair() >= 0) return false;
            if (!check_closed_surface(s).closed) return false;
            found = s;
            return true;
        }
        // Coverage prune: each further face covers at most 3 new vertices.
        if (n - coveredVertices > 3 * (target - static_cast<int>(chosen.size()))) return false;

        const int open = smallestOpenPair();
        if (open < 0) {
            if (!chosen.empty()) return false;  // closed proper subcomplex, dead end
            for (std::int32_t f = 0; f < static_cast<std::int32_t>(cand.size()); ++f) {
                firstIndex = f;
                if (!place(f)) continue;
                if (run()) return true;
                unplace(f);
                if (exhausted) return false;
            }
            return false;
        }
        for (std::int32_t f : facesOfPair[static_cast<std::size_t>(open)]) {
            if (f <= firstIndex || faceUsed[static_cast<std::size_t>(f)]) continue;
            if (!place(f)) continue;
            if (run()) return true;
            unplace(f);
            if (exhausted) return false;
        }
        return false;
    }
};

// Greedy independent set in the "share a candidate face" graph; every
// closed surface needs at least three faces at each vertex and no face can
// serve two independent vertices.
int greedyCofacialIndependentSet(int n, const std::vector<Triangle>& cand) {
    std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                       std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<char> present(static_cast<std::size_t>(n), 0);
    for (const auto& f : cand) {
        for (int i = 0; i < 3; ++i) {
            present[static_cast<std::size_t>(f[static_cast<std::size_t>(i)])] = 1;
            for (int j = i + 1; j < 3; ++j) {
                adj[static_cast<std::size_t>(f[static_cast<std::size_t>(i)])]
                   [static_cast<std::size_t>(f[static_cast<std::size_t>(j)])] = 1;
                adj[static_cast<std::size_t>(f[static_cast<std::size_t>(j)])]
                   [static_cast<std::size_t>(f[static_cast<std::size_t>(i)])] = 1;
            }
        }
    }
    std::vector<int> order;
    for (int v = 0; v < n; ++v)
        if (present[static_cast<std::size_t>(v)]) order.push_back(v);
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (int v : order)
        for (int u : order) degree[static_cast<std::size_t>(v)] += adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return degree[static_cast<std::size_t>(a)] < degree[static_cast<std::size_t>(b)]; });
    std::vector<char> taken(static_cast<std::size_t>(n), 0), blocked(static_cast<std::size_t>(n), 0);
    int count = 0;
    for (int v : order) {
        if (blocked[static_cast<std::size_t>(v)]) continue;
        taken[static_cast<std::size_t>(v)] = 1;
        ++count;
        for (int u : order)
            if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) blocked[static_cast<std::size_t>(u)] = 1;
    }
    return count;
}

}  // namespace

SphereSearchResult search_spanning_sphere(const Hypergraph& h, const SearchBudget& budget) {
    if (h.uniformity() != 3) throw ParameterError("sphere search is defined for 3-graphs");
    SphereSearchResult out;
    const int n = h.vertexCount();
    if (n < 4) {
        out.status = SearchStatus::Absent;
        out.reason = "a sphere needs at least 4 vertices";
        return out;
    }
    const int target = 2 * n - 4;

    ComponentDecomposition comps = tight_components(h);
    std::vector<std::size_t> spanningParts;
    for (std::size_t p = 0; p < comps.parts.size(); ++p)
        if (static_cast<int>(comps.vertexSets[p].size()) == n) spanningParts.push_back(p);
    if (spanningParts.empty()) {
        out.status = SearchStatus::Absent;
        out.reason = "no spanning tight component to host the sphere";
        return out;
    }

    bool anyExhausted = false;
    std::string reasons;
    for (std::size_t p : spanningParts) {
        std::vector<Triangle> cand;
        cand.reserve(comps.parts[p].size());
        for (std::uint32_t ei : comps.parts[p]) {
            auto e = h.edge(ei);
            cand.push_back({e[0], e[1], e[2]});
        }
        std::sort(cand.begin(), cand.end());

        if (static_cast<int>(cand.size()) < target) {
            if (!reasons.empty()) reasons += "; ";
            reasons += "component " + std::to_string(p) + " has " + std::to_string(cand.size()) +
                       " candidate faces, a spanning sphere needs 2n-4 = " + std::to_string(target);
            continue;
        }
        {
            std::vector<int> incident(static_cast<std::size_t>(n), 0);
            for (const auto& f : cand)
                for (int v : f) ++incident[static_cast<std::size_t>(v)];
            int weakVertex = -1;
            for (int v = 0; v < n; ++v)
                if (incident[static_cast<std::size_t>(v)] < 3) {
                    weakVertex = v;
                    break;
                }
            if (weakVertex >= 0) {
                if (!reasons.empty()) reasons += "; ";
                reasons += "vertex " + std::to_string(weakVertex) + " lies in fewer than 3 candidate faces";
                continue;
            }
        }
        const int is = greedyCofacialIndependentSet(n, cand);
        if (3 * is > target) {
            if (!reasons.empty()) reasons += "; ";
            reasons += "counting bound: 3 * " + std::to_string(is) + " faces required at an independent set exceed " +
                       std::to_string(target);
            continue;
        }

        Search search;
        search.n = n;
        search.target = target;
        search.cand = std::move(cand);
        search.candPairs.resize(search.cand.size());
        search.facesOfPair.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), {});
        for (std::size_t f = 0; f < search.cand.size(); ++f) {
            const auto& t = search.cand[f];
            search.candPairs[f] = {search.pairKey(t[0], t[1]), search.pairKey(t[0], t[2]),
                                   search.pairKey(t[1], t[2])};
            for (int key : search.candPairs[f])
                search.facesOfPair[static_cast<std::size_t>(key)].push_back(static_cast<std::int32_t>(f));
        }
        search.pairUse.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
        search.faceUsed.assign(search.cand.size(), 0);
        search.vertexCover.assign(static_cast<std::size_t>(n), 0);
        search.maxNodes = budget.maxNodes;

        bool ok = search.run();
        out.nodes += search.nodes;
        if (ok) {
            out.status = SearchStatus::Found;
            out.sphere = search.found;
            return out;
        }
        if (search.exhausted) {
            anyExhausted = true;
        } else {
            if (!reasons.empty()) reasons += "; ";
            reasons += "component " + std::to_string(p) + " exhausted without a sphere";
        }
    }

    out.status = anyExhausted ? SearchStatus::BudgetExhausted : SearchStatus::Absent;
    out.reason = anyExhausted ? "search budget exhausted" : reasons;
    return out;
}

}  // namespace hypersurf::oracle
