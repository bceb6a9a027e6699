#include "hypersurf/hypergraph.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <string>
#include <unordered_map>

#include "hypersurf/error.hpp"
#include "hypersurf/util.hpp"

namespace hypersurf {

namespace {

bool lexLess(const int* a, const int* b, int k) {
    for (int i = 0; i < k; ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

bool lexEqual(const int* a, const int* b, int k) {
    return std::memcmp(a, b, sizeof(int) * static_cast<std::size_t>(k)) == 0;
}

}  // namespace

Hypergraph::Hypergraph(int k, int n, std::vector<int> flat) : k_(k), n_(n), flat_(std::move(flat)) {
    if (k_ < 2) throw ParameterError("uniformity must be at least 2, got " + std::to_string(k_));
    if (n_ < 0) throw ParameterError("vertex count must be non-negative");
    if (flat_.size() % static_cast<std::size_t>(k_) != 0)
        throw ParameterError("flat edge storage size is not a multiple of k");

    const std::size_t m = flat_.size() / static_cast<std::size_t>(k_);
    for (std::size_t i = 0; i < m; ++i) {
        int* e = flat_.data() + i * static_cast<std::size_t>(k_);
        std::sort(e, e + k_);
        for (int j = 0; j < k_; ++j) {
            if (e[j] < 0 || e[j] >= n_)
                throw ParameterError("edge vertex " + std::to_string(e[j]) + " out of range [0, " +
                                     std::to_string(n_) + ")");
            if (j > 0 && e[j] == e[j - 1])
                throw ParameterError("edge with repeated vertex " + std::to_string(e[j]));
        }
    }

    bool sorted = true;
    for (std::size_t i = 1; i < m; ++i) {
        const int* prev = flat_.data() + (i - 1) * static_cast<std::size_t>(k_);
        const int* cur = flat_.data() + i * static_cast<std::size_t>(k_);
        if (!lexLess(prev, cur, k_)) {
            sorted = false;
            break;
        }
    }
    if (!sorted) {
        std::vector<std::uint32_t> order(m);
        std::iota(order.begin(), order.end(), 0u);
        const int* base = flat_.data();
        const int kk = k_;
        std::sort(order.begin(), order.end(), [base, kk](std::uint32_t a, std::uint32_t b) {
            return lexLess(base + a * static_cast<std::size_t>(kk), base + b * static_cast<std::size_t>(kk), kk);
        });
        std::vector<int> out(flat_.size());
        for (std::size_t i = 0; i < m; ++i)
            std::memcpy(out.data() + i * static_cast<std::size_t>(kk),
                        base + order[i] * static_cast<std::size_t>(kk), sizeof(int) * static_cast<std::size_t>(kk));
        flat_ = std::move(out);
        for (std::size_t i = 1; i < m; ++i) {
            if (lexEqual(flat_.data() + (i - 1) * static_cast<std::size_t>(k_),
                         flat_.data() + i * static_cast<std::size_t>(k_), k_))
                throw ParameterError("duplicate edge in input");
        }
    }
}

Hypergraph Hypergraph::fromEdges(int k, int n, const std::vector<std::vector<int>>& edges) {
    std::vector<int> flat;
    flat.reserve(edges.size() * static_cast<std::size_t>(k));
    for (const auto& e : edges) {
        if (static_cast<int>(e.size()) != k)
            throw ParameterError("edge of size " + std::to_string(e.size()) + " in a " + std::to_string(k) +
                                 "-graph");
        flat.insert(flat.end(), e.begin(), e.end());
    }
    return Hypergraph(k, n, std::move(flat));
}

bool Hypergraph::hasEdge(std::span<const int> verts) const { return edgeIndex(verts).has_value(); }

std::optional<std::size_t> Hypergraph::edgeIndex(std::span<const int> verts) const {
    if (static_cast<int>(verts.size()) != k_) return std::nullopt;
    std::size_t lo = 0, hi = edgeCount();
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        const int* e = flat_.data() + mid * static_cast<std::size_t>(k_);
        if (lexLess(e, verts.data(), k_))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < edgeCount() && lexEqual(flat_.data() + lo * static_cast<std::size_t>(k_), verts.data(), k_))
        return lo;
    return std::nullopt;
}

std::vector<std::int64_t> Hypergraph::vertexDegrees() const {
    std::vector<std::int64_t> deg(static_cast<std::size_t>(n_), 0);
    for (int v : flat_) ++deg[static_cast<std::size_t>(v)];
    return deg;
}

std::int64_t min_d_degree(const Hypergraph& g, int d) {
    if (d < 1 || d >= g.uniformity())
        throw ParameterError("d-degree requires 1 <= d < k, got d=" + std::to_string(d));
    if (g.vertexCount() < d)
        throw ParameterError("d-degree needs at least d vertices, got n=" + std::to_string(g.vertexCount()));

    if (d == 1) {
        auto deg = g.vertexDegrees();
        return *std::min_element(deg.begin(), deg.end());
    }

    // Count edge incidences per d-subset; any d-subset not seen has count 0.
    const int k = g.uniformity();
    std::unordered_map<std::uint64_t, std::int64_t> counts;
    const bool packable = g.vertexCount() <= 65535 && d <= 4;
    std::vector<std::vector<int>> fallbackKeys;
    std::vector<int> sub(static_cast<std::size_t>(d));
    std::int64_t result = -1;
    if (packable) {
        counts.reserve(g.edgeCount() * 2);
        for (std::size_t ei = 0; ei < g.edgeCount(); ++ei) {
            auto e = g.edge(ei);
            for_each_subset(k, d, [&](const std::vector<int>& pick) {
                std::uint64_t key = 0;
                for (int j = 0; j < d; ++j) key = (key << 16) | static_cast<std::uint64_t>(e[pick[j]]);
                ++counts[key];
            });
        }
        const std::uint64_t total =
            binomial(static_cast<std::uint64_t>(g.vertexCount()), static_cast<std::uint64_t>(d));
        if (counts.size() < total) {
            result = 0;  // some d-subset lies in no edge at all
        } else {
            result = counts.begin()->second;
            for (const auto& [key, c] : counts) result = std::min(result, c);
        }
    } else {
        // Slow generic path for very large vertex ids / d; enumerate all
        // d-subsets directly.
        result = -1;
        for_each_subset(g.vertexCount(), d, [&](const std::vector<int>& pick) {
            std::int64_t c = 0;
            for (std::size_t ei = 0; ei < g.edgeCount(); ++ei) {
                auto e = g.edge(ei);
                std::size_t found = 0;
                for (int v : pick)
                    found += static_cast<std::size_t>(std::binary_search(e.begin(), e.end(), v));
                if (found == pick.size()) ++c;
            }
            if (result < 0 || c < result) result = c;
        });
        if (result < 0) result = 0;
    }
    return result;
}

Hypergraph link_graph(const Hypergraph& g, int x) {
    if (g.uniformity() != 3)
        throw ParameterError("link graph is defined for 3-graphs, got k=" + std::to_string(g.uniformity()));
    if (x < 0 || x >= g.vertexCount()) throw ParameterError("link vertex out of range");
    std::vector<int> flat;
    for (std::size_t i = 0; i < g.edgeCount(); ++i) {
        auto e = g.edge(i);
        if (e[0] == x) {
            flat.push_back(e[1]);
            flat.push_back(e[2]);
        } else if (e[1] == x) {
            flat.push_back(e[0]);
            flat.push_back(e[2]);
        } else if (e[2] == x) {
            flat.push_back(e[0]);
            flat.push_back(e[1]);
        }
    }
    return Hypergraph(2, g.vertexCount(), std::move(flat));
}

namespace {

// Merge edges sharing a (k-1)-subset. Keys are packed into uint64 when the
// vertex ids allow it; a direct array is used for pairs on small n since
// that is the hot case (3-graphs from the generators).
void uniteByRidges(const Hypergraph& g, UnionFind& uf) {
    const int k = g.uniformity();
    const std::size_t m = g.edgeCount();
    const int n = g.vertexCount();

    if (k == 2) {
        std::vector<std::int64_t> rep(static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < m; ++i) {
            for (int v : g.edge(i)) {
                auto& r = rep[static_cast<std::size_t>(v)];
                if (r < 0)
                    r = static_cast<std::int64_t>(i);
                else
                    uf.unite(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(i));
            }
        }
        return;
    }

    if (k == 3 && n <= 4096) {
        std::vector<std::int64_t> rep(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < m; ++i) {
            auto e = g.edge(i);
            const std::size_t keys[3] = {
                static_cast<std::size_t>(e[0]) * static_cast<std::size_t>(n) + static_cast<std::size_t>(e[1]),
                static_cast<std::size_t>(e[0]) * static_cast<std::size_t>(n) + static_cast<std::size_t>(e[2]),
                static_cast<std::size_t>(e[1]) * static_cast<std::size_t>(n) + static_cast<std::size_t>(e[2])};
            for (std::size_t key : keys) {
                auto& r = rep[key];
                if (r < 0)
                    r = static_cast<std::int64_t>(i);
                else
                    uf.unite(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(i));
            }
        }
        return;
    }

    if (n <= 65535 && k - 1 <= 4) {
        std::vector<std::pair<std::uint64_t, std::uint32_t>> entries;
        entries.reserve(m * static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < m; ++i) {
            auto e = g.edge(i);
            for (int skip = 0; skip < k; ++skip) {
                std::uint64_t key = 0;
                for (int j = 0; j < k; ++j) {
                    if (j == skip) continue;
                    key = (key << 16) | static_cast<std::uint64_t>(e[j]);
                }
                entries.emplace_back(key, static_cast<std::uint32_t>(i));
            }
        }
        std::sort(entries.begin(), entries.end());
        for (std::size_t i = 1; i < entries.size(); ++i) {
            if (entries[i].first == entries[i - 1].first) uf.unite(entries[i - 1].second, entries[i].second);
        }
        return;
    }

    // Generic fallback: hash on the ridge vertex list.
    std::unordered_map<std::string, std::uint32_t> rep;
    rep.reserve(m * static_cast<std::size_t>(k));
    std::string key;
    for (std::size_t i = 0; i < m; ++i) {
        auto e = g.edge(i);
        for (int skip = 0; skip < k; ++skip) {
            key.clear();
            for (int j = 0; j < k; ++j) {
                if (j == skip) continue;
                key.append(reinterpret_cast<const char*>(&e[j]), sizeof(int));
            }
            auto [it, inserted] = rep.try_emplace(key, static_cast<std::uint32_t>(i));
            if (!inserted) uf.unite(it->second, static_cast<std::uint32_t>(i));
        }
    }
}

}  // namespace

ComponentDecomposition tight_components(const Hypergraph& g) {
    const std::size_t m = g.edgeCount();
    ComponentDecomposition out;
    if (m == 0) return out;

    UnionFind uf(m);
    uniteByRidges(g, uf);

    // Parts ordered by their minimal edge index; edges ascending inside.
    std::vector<std::int64_t> partOf(m, -1);
    for (std::size_t i = 0; i < m; ++i) {
        std::uint32_t r = uf.find(static_cast<std::uint32_t>(i));
        if (partOf[r] < 0) {
            partOf[r] = static_cast<std::int64_t>(out.parts.size());
            out.parts.emplace_back();
        }
        out.parts[static_cast<std::size_t>(partOf[r])].push_back(static_cast<std::uint32_t>(i));
    }

    out.vertexSets.resize(out.parts.size());
    std::vector<std::int64_t> lastSeen(static_cast<std::size_t>(g.vertexCount()), -1);
    for (std::size_t p = 0; p < out.parts.size(); ++p) {
        auto& vs = out.vertexSets[p];
        for (std::uint32_t ei : out.parts[p]) {
            for (int v : g.edge(ei)) {
                if (lastSeen[static_cast<std::size_t>(v)] != static_cast<std::int64_t>(p)) {
                    lastSeen[static_cast<std::size_t>(v)] = static_cast<std::int64_t>(p);
                    vs.push_back(v);
                }
            }
        }
        std::sort(vs.begin(), vs.end());
        if (static_cast<int>(vs.size()) == g.vertexCount() && !out.spanningPartIndex)
            out.spanningPartIndex = p;
    }
    return out;
}

LinkComponentDiagnostics link_component_diagnostics(const Hypergraph& g, int x) {
    Hypergraph link = link_graph(g, x);
    if (link.edgeCount() == 0)
        throw ParameterError("vertex " + std::to_string(x) + " is isolated, its link has no component");

    ComponentDecomposition comps = tight_components(link);
    std::size_t best = 0;
    for (std::size_t p = 1; p < comps.parts.size(); ++p) {
        const auto& a = comps.vertexSets[p];
        const auto& b = comps.vertexSets[best];
        if (a.size() > b.size() || (a.size() == b.size() && a.front() < b.front())) best = p;
    }

    LinkComponentDiagnostics diag;
    diag.componentVertices = comps.vertexSets[best];
    std::vector<char> inComp(static_cast<std::size_t>(g.vertexCount()), 0);
    for (int v : diag.componentVertices) inComp[static_cast<std::size_t>(v)] = 1;
    for (std::size_t i = 0; i < g.edgeCount(); ++i) {
        auto e = g.edge(i);
        int others[2];
        if (e[0] == x) {
            others[0] = e[1];
            others[1] = e[2];
        } else if (e[1] == x) {
            others[0] = e[0];
            others[1] = e[2];
        } else if (e[2] == x) {
            others[0] = e[0];
            others[1] = e[1];
        } else {
            continue;
        }
        if (inComp[static_cast<std::size_t>(others[0])] && inComp[static_cast<std::size_t>(others[1])])
            diag.witnessEdges.push_back(i);
    }
    return diag;
}

Hypergraph tetrahedron_4graph(const Hypergraph& g) {
    if (g.uniformity() != 3)
        throw ParameterError("tetrahedron graph is defined for 3-graphs, got k=" +
                             std::to_string(g.uniformity()));
    std::vector<int> flat;
    // A 4-set {a<b<c<d} spans a tetrahedron iff all four triples are edges;
    // enumerate via the bottom triple plus the top vertex.
    for (std::size_t i = 0; i < g.edgeCount(); ++i) {
        auto e = g.edge(i);
        const int a = e[0], b = e[1], c = e[2];
        for (int d = c + 1; d < g.vertexCount(); ++d) {
            const int t1[3] = {a, b, d};
            const int t2[3] = {a, c, d};
            const int t3[3] = {b, c, d};
            if (g.hasEdge(t1) && g.hasEdge(t2) && g.hasEdge(t3)) {
                flat.push_back(a);
                flat.push_back(b);
                flat.push_back(c);
                flat.push_back(d);
            }
        }
    }
    return Hypergraph(4, g.vertexCount(), std::move(flat));
}

}  // namespace hypersurf
