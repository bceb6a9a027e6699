#include "hypersurf/walks.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "hypersurf/error.hpp"

namespace hypersurf {

namespace {

// State digraph on ordered (k-1)-tuples contained in edges. States and
// transitions stay flat; tuples are recovered from the states array.
struct StateGraph {
    int k = 0;
    std::size_t count = 0;
    std::vector<int> tuples;               // count x (k-1)
    std::vector<std::vector<std::int32_t>> out;  // adjacency

    std::span<const int> tuple(std::size_t s) const {
        return {tuples.data() + s * static_cast<std::size_t>(k - 1), static_cast<std::size_t>(k - 1)};
    }
};

StateGraph buildStateGraph(const Hypergraph& g, std::size_t maxStates) {
    const int k = g.uniformity();
    const int t = k - 1;
    StateGraph sg;
    sg.k = k;

    std::unordered_map<std::uint64_t, std::int32_t> packed;
    std::map<std::vector<int>, std::int32_t> generic;
    const bool usePacked = g.vertexCount() <= 65535 && t <= 4;

    auto intern = [&](const int* tup) -> std::int32_t {
        if (usePacked) {
            std::uint64_t key = 0;
            for (int i = 0; i < t; ++i) key = (key << 16) | static_cast<std::uint64_t>(tup[i]);
            auto [it, inserted] = packed.try_emplace(key, static_cast<std::int32_t>(sg.count));
            if (inserted) {
                sg.tuples.insert(sg.tuples.end(), tup, tup + t);
                ++sg.count;
            }
            return it->second;
        }
        std::vector<int> key(tup, tup + t);
        auto [it, inserted] = generic.try_emplace(key, static_cast<std::int32_t>(sg.count));
        if (inserted) {
            sg.tuples.insert(sg.tuples.end(), tup, tup + t);
            ++sg.count;
        }
        return it->second;
    };

    std::vector<int> rest(static_cast<std::size_t>(t));
    std::vector<int> next(static_cast<std::size_t>(t));
    struct Pending {
        std::int32_t from;
        std::int32_t to;
    };
    std::vector<Pending> pending;
    for (std::size_t e = 0; e < g.edgeCount(); ++e) {
        auto edge = g.edge(e);
        for (int skip = 0; skip < k; ++skip) {
            int w = edge[skip];
            int idx = 0;
            for (int j = 0; j < k; ++j)
                if (j != skip) rest[static_cast<std::size_t>(idx++)] = edge[j];
            std::sort(rest.begin(), rest.end());
            do {
                std::int32_t from = intern(rest.data());
                for (int j = 0; j + 1 < t; ++j) next[static_cast<std::size_t>(j)] = rest[static_cast<std::size_t>(j + 1)];
                next[static_cast<std::size_t>(t - 1)] = w;
                std::int32_t to = intern(next.data());
                pending.push_back({from, to});
                if (sg.count > maxStates)
                    throw ResourceError("walk state digraph exceeds the configured state cap (" +
                                        std::to_string(maxStates) + ")");
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
    }

    sg.out.resize(sg.count);
    for (const auto& p : pending) sg.out[static_cast<std::size_t>(p.from)].push_back(p.to);
    for (auto& adj : sg.out) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
    return sg;
}

// Iterative Tarjan.
std::vector<std::int32_t> stronglyConnectedComponents(const StateGraph& sg, std::int32_t& sccCount) {
    const std::size_t n = sg.count;
    std::vector<std::int32_t> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> onStack(n, 0);
    std::vector<std::int32_t> stack;
    std::int32_t nextIndex = 0;
    sccCount = 0;

    struct Frame {
        std::int32_t v;
        std::size_t child;
    };
    std::vector<Frame> call;
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        call.push_back({static_cast<std::int32_t>(root), 0});
        while (!call.empty()) {
            auto& fr = call.back();
            std::int32_t v = fr.v;
            if (fr.child == 0) {
                index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = nextIndex++;
                stack.push_back(v);
                onStack[static_cast<std::size_t>(v)] = 1;
            }
            bool descended = false;
            const auto& adj = sg.out[static_cast<std::size_t>(v)];
            while (fr.child < adj.size()) {
                std::int32_t w = adj[fr.child++];
                if (index[static_cast<std::size_t>(w)] < 0) {
                    call.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (onStack[static_cast<std::size_t>(w)])
                    low[static_cast<std::size_t>(v)] =
                        std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
            }
            if (descended) continue;
            if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                while (true) {
                    std::int32_t w = stack.back();
                    stack.pop_back();
                    onStack[static_cast<std::size_t>(w)] = 0;
                    comp[static_cast<std::size_t>(w)] = sccCount;
                    if (w == v) break;
                }
                ++sccCount;
            }
            call.pop_back();
            if (!call.empty()) {
                auto& parent = call.back();
                low[static_cast<std::size_t>(parent.v)] =
                    std::min(low[static_cast<std::size_t>(parent.v)], low[static_cast<std::size_t>(v)]);
            }
        }
    }
    return comp;
}

}  // namespace

WalkResidues closed_walk_residues(const Hypergraph& g, const WalkOptions& opts) {
    if (g.edgeCount() == 0) throw ParameterError("closed walks need at least one edge");
    const int k = g.uniformity();

    StateGraph sg = buildStateGraph(g, opts.maxStates);
    std::int32_t sccCount = 0;
    std::vector<std::int32_t> comp = stronglyConnectedComponents(sg, sccCount);

    // Period of each SCC by BFS layering: the gcd of |d(u)+1-d(v)| over
    // internal edges equals the gcd of its cycle lengths.
    std::vector<std::int64_t> period(static_cast<std::size_t>(sccCount), 0);
    std::vector<char> hasInternalEdge(static_cast<std::size_t>(sccCount), 0);
    {
        std::vector<std::int64_t> depth(sg.count, -1);
        std::vector<std::int32_t> firstOf(static_cast<std::size_t>(sccCount), -1);
        for (std::size_t s = 0; s < sg.count; ++s) {
            auto c = static_cast<std::size_t>(comp[s]);
            if (firstOf[c] < 0) firstOf[c] = static_cast<std::int32_t>(s);
        }
        std::queue<std::int32_t> bfs;
        for (std::int32_t c = 0; c < sccCount; ++c) {
            std::int32_t root = firstOf[static_cast<std::size_t>(c)];
            depth[static_cast<std::size_t>(root)] = 0;
            bfs.push(root);
            while (!bfs.empty()) {
                std::int32_t v = bfs.front();
                bfs.pop();
                for (std::int32_t w : sg.out[static_cast<std::size_t>(v)]) {
                    if (comp[static_cast<std::size_t>(w)] != c) continue;
                    if (depth[static_cast<std::size_t>(w)] < 0) {
                        depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
                        bfs.push(w);
                    }
                }
            }
        }
        for (std::size_t v = 0; v < sg.count; ++v) {
            for (std::int32_t w : sg.out[v]) {
                if (comp[v] != comp[static_cast<std::size_t>(w)]) continue;
                auto c = static_cast<std::size_t>(comp[v]);
                hasInternalEdge[c] = 1;
                std::int64_t disc = depth[v] + 1 - depth[static_cast<std::size_t>(w)];
                period[c] = std::gcd(period[c], disc < 0 ? -disc : disc);
            }
        }
    }

    WalkResidues out;
    out.modulus = k;
    std::vector<char> sccCyclic(static_cast<std::size_t>(sccCount), 0);
    for (std::int32_t c = 0; c < sccCount; ++c) {
        if (!hasInternalEdge[static_cast<std::size_t>(c)]) continue;  // no cycle through this SCC
        sccCyclic[static_cast<std::size_t>(c)] = 1;
        std::int64_t gg = std::gcd(period[static_cast<std::size_t>(c)], static_cast<std::int64_t>(k));
        for (std::int64_t r = 0; r < k; r += gg) out.residues.insert(static_cast<int>(r));
    }
    if (out.residues.empty()) return out;

    // Shortest witnesses: BFS over (state, length mod k) from every state in
    // a cyclic SCC; the first return to the start at residue r is the
    // shortest closed walk of that residue through the start.
    std::size_t startCount = 0;
    for (std::size_t s = 0; s < sg.count; ++s)
        if (sccCyclic[static_cast<std::size_t>(comp[s])]) ++startCount;
    std::uint64_t transitions = 0;
    for (const auto& adj : sg.out) transitions += adj.size();
    const std::uint64_t work =
        static_cast<std::uint64_t>(startCount) * (sg.count + transitions) * static_cast<std::uint64_t>(k);
    if (work > opts.maxWitnessWork)
        throw ResourceError("walk witness search exceeds the configured budget; raise maxWitnessWork");

    struct Best {
        std::int64_t length = -1;
        std::int32_t start = -1;
    };
    std::vector<Best> best(static_cast<std::size_t>(k));

    std::vector<std::int64_t> dist(sg.count * static_cast<std::size_t>(k));
    auto bfsFrom = [&](std::int32_t start, std::vector<std::int32_t>* pred, std::vector<int>* predVertex) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<std::int32_t> q;
        auto id = [&](std::int32_t state, int mod) {
            return static_cast<std::size_t>(state) * static_cast<std::size_t>(k) + static_cast<std::size_t>(mod);
        };
        dist[id(start, 0)] = 0;
        q.push(start * k + 0);
        while (!q.empty()) {
            std::int32_t node = q.front();
            q.pop();
            std::int32_t state = node / k;
            int mod = node % k;
            int nmod = (mod + 1) % k;
            for (std::int32_t w : sg.out[static_cast<std::size_t>(state)]) {
                std::size_t nid = id(w, nmod);
                if (dist[nid] >= 0) continue;
                dist[nid] = dist[id(state, mod)] + 1;
                if (pred) {
                    (*pred)[nid] = node;
                    (*predVertex)[nid] = sg.tuple(static_cast<std::size_t>(w))[static_cast<std::size_t>(sg.k - 2)];
                }
                q.push(w * k + nmod);
            }
        }
    };

    // Residue 0 is witnessed by any single edge traversed cyclically (order
    // exactly k, no closed walk is shorter). The BFS only hunts r != 0.
    if (out.residues.count(0)) {
        auto e = g.edge(0);
        out.witnesses[0] = std::vector<int>(e.begin(), e.end());
    }

    for (std::size_t s = 0; s < sg.count; ++s) {
        if (!sccCyclic[static_cast<std::size_t>(comp[s])]) continue;
        bfsFrom(static_cast<std::int32_t>(s), nullptr, nullptr);
        for (int r : out.residues) {
            if (r == 0) continue;
            std::int64_t d = dist[s * static_cast<std::size_t>(k) + static_cast<std::size_t>(r)];
            if (d <= 0) continue;
            auto& b = best[static_cast<std::size_t>(r)];
            if (b.length < 0 || d < b.length) b = {d, static_cast<std::int32_t>(s)};
        }
    }

    std::vector<std::int32_t> pred(sg.count * static_cast<std::size_t>(k));
    std::vector<int> predVertex(sg.count * static_cast<std::size_t>(k));
    for (int r : out.residues) {
        if (r == 0) continue;
        const auto& b = best[static_cast<std::size_t>(r)];
        if (b.start < 0) continue;
        std::fill(pred.begin(), pred.end(), -1);
        bfsFrom(b.start, &pred, &predVertex);
        std::vector<int> appended;
        std::size_t cur =
            static_cast<std::size_t>(b.start) * static_cast<std::size_t>(k) + static_cast<std::size_t>(r);
        while (static_cast<std::int64_t>(appended.size()) < b.length) {
            appended.push_back(predVertex[cur]);
            cur = static_cast<std::size_t>(pred[cur]);
        }
        std::reverse(appended.begin(), appended.end());
        out.witnesses[r] = std::move(appended);
    }
    return out;
}

bool validate_closed_walk(const Hypergraph& g, const std::vector<int>& walk) {
    const int k = g.uniformity();
    const std::size_t m = walk.size();
    if (m < static_cast<std::size_t>(k)) return false;
    std::vector<int> window(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < m; ++i) {
        for (int j = 0; j < k; ++j) window[static_cast<std::size_t>(j)] = walk[(i + static_cast<std::size_t>(j)) % m];
        std::sort(window.begin(), window.end());
        for (int j = 1; j < k; ++j)
            if (window[static_cast<std::size_t>(j)] == window[static_cast<std::size_t>(j - 1)]) return false;
        if (!g.hasEdge(window)) return false;
    }
    return true;
}

}  // namespace hypersurf
