#include "hypersurf/framework.hpp"

#include <algorithm>

#include "hypersurf/error.hpp"

namespace hypersurf {

const std::vector<ThresholdEntry>& threshold_table() {
    static const std::vector<ThresholdEntry> table = {
        {"hf", 1, std::nullopt, Rational(1, 2), std::nullopt, "known"},
        {"hf", 2, std::nullopt, Rational(5, 9), std::nullopt, "known"},
        {"hf", 3, std::nullopt, Rational(5, 8), std::nullopt, "known"},
        // Spanning-sphere threshold for 4-graphs at d=1: open, bounded above
        // through the framework threshold.
        {"hs", 3, 4, std::nullopt, Rational(5, 8), "open"},
        {"ham", 3, 4, std::nullopt, Rational(5, 8), "known"},
    };
    return table;
}

std::optional<Rational> hf_threshold(int k, int d) {
    for (const auto& e : threshold_table()) {
        if (e.family != "hf") continue;
        if (e.fixedK && *e.fixedK != k) continue;
        if (k - e.dBelowK == d) return e.value;
    }
    return std::nullopt;
}

std::vector<std::size_t> default_framework_subgraph(const Hypergraph& g) {
    ComponentDecomposition comps = tight_components(g);
    if (comps.parts.empty()) return {};
    std::size_t best = 0;
    for (std::size_t p = 1; p < comps.parts.size(); ++p) {
        const auto& a = comps.vertexSets[p];
        const auto& b = comps.vertexSets[best];
        if (a.size() != b.size()) {
            if (a.size() > b.size()) best = p;
        } else if (comps.parts[p].size() != comps.parts[best].size()) {
            if (comps.parts[p].size() > comps.parts[best].size()) best = p;
        } else if (a.front() < b.front()) {
            best = p;
        }
    }
    return {comps.parts[best].begin(), comps.parts[best].end()};
}

namespace {

Hypergraph subgraphFromIndices(const Hypergraph& g, const std::vector<std::size_t>& edges) {
    std::vector<int> flat;
    flat.reserve(edges.size() * static_cast<std::size_t>(g.uniformity()));
    for (std::size_t idx : edges) {
        if (idx >= g.edgeCount()) throw ParameterError("edge index out of range in subgraph selection");
        auto e = g.edge(idx);
        flat.insert(flat.end(), e.begin(), e.end());
    }
    return Hypergraph(g.uniformity(), g.vertexCount(), std::move(flat));
}

}  // namespace

FrameworkReport framework_report(const Hypergraph& g,
                                 const std::optional<std::vector<std::size_t>>& edgeSubset) {
    std::vector<std::size_t> chosen = edgeSubset ? *edgeSubset : default_framework_subgraph(g);
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());

    FrameworkReport rep;
    rep.thresholds = threshold_table();

    ComponentDecomposition comps = tight_components(g);
    rep.f1 = false;
    if (chosen.empty()) {
        rep.f1Reason = "empty subgraph";
    } else {
        std::optional<std::size_t> match;
        for (std::size_t p = 0; p < comps.parts.size(); ++p) {
            const auto& part = comps.parts[p];
            if (part.size() != chosen.size()) continue;
            if (std::equal(part.begin(), part.end(), chosen.begin(),
                           [](std::uint32_t a, std::size_t b) { return a == b; })) {
                match = p;
                break;
            }
        }
        if (!match) {
            rep.f1Reason = "F is not a tight component of G";
        } else if (static_cast<int>(comps.vertexSets[*match].size()) != g.vertexCount()) {
            rep.f1Reason = "component does not cover every vertex";
        } else {
            rep.f1 = true;
            rep.f1ComponentIndex = match;
        }
    }

    Hypergraph sub = subgraphFromIndices(g, chosen);
    rep.f2 = perfect_fractional_matching(sub);

    if (sub.edgeCount() > 0) {
        WalkResidues wr = closed_walk_residues(sub);
        rep.f3 = wr.aperiodic();
        auto it = wr.witnesses.find(1 % g.uniformity());
        if (rep.f3 && it != wr.witnesses.end()) rep.f3Witness = it->second;
    }
    return rep;
}

bool check_consistency(const Hypergraph& h, int x, int y, const Selector& selector) {
    if (x == y) throw ParameterError("consistency check needs two distinct vertices");
    if (x < 0 || x >= h.vertexCount() || y < 0 || y >= h.vertexCount())
        throw ParameterError("consistency vertices out of range");

    auto removeVertex = [&](int v) {
        std::vector<int> flat;
        for (std::size_t i = 0; i < h.edgeCount(); ++i) {
            auto e = h.edge(i);
            if (std::find(e.begin(), e.end(), v) != e.end()) continue;
            flat.insert(flat.end(), e.begin(), e.end());
        }
        // The vertex stays in the index space as an isolated vertex; edge
        // identity is what the union below needs.
        return Hypergraph(h.uniformity(), h.vertexCount(), std::move(flat));
    };

    Hypergraph hx = removeVertex(x);
    Hypergraph hy = removeVertex(y);
    std::vector<std::size_t> fx = selector(hx);
    std::vector<std::size_t> fy = selector(hy);

    std::vector<std::vector<int>> unionEdges;
    auto collect = [&](const Hypergraph& src, const std::vector<std::size_t>& sel) {
        for (std::size_t idx : sel) {
            if (idx >= src.edgeCount())
                throw ParameterError("selector returned an edge outside its graph");
            auto e = src.edge(idx);
            unionEdges.emplace_back(e.begin(), e.end());
        }
    };
    collect(hx, fx);
    collect(hy, fy);
    std::sort(unionEdges.begin(), unionEdges.end());
    unionEdges.erase(std::unique(unionEdges.begin(), unionEdges.end()), unionEdges.end());
    if (unionEdges.empty()) return false;

    Hypergraph u = Hypergraph::fromEdges(h.uniformity(), h.vertexCount(), unionEdges);
    return tight_components(u).parts.size() == 1;
}

}  // namespace hypersurf
