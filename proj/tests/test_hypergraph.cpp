#include <random>
#include <set>

#include "doctest.h"
#include "hypersurf/constructions.hpp"
#include "hypersurf/error.hpp"
#include "hypersurf/hypergraph.hpp"
#include "test_oracles.hpp"

using namespace hypersurf;

TEST_CASE("hypergraph canonical form and validation") {
    Hypergraph g = Hypergraph::fromEdges(3, 5, {{2, 1, 0}, {4, 3, 2}});
    CHECK(g.edgeCount() == 2);
    CHECK(g.edge(0)[0] == 0);
    CHECK(g.edge(0)[2] == 2);
    CHECK(g.hasEdge(std::vector<int>{2, 3, 4}));
    CHECK(!g.hasEdge(std::vector<int>{0, 1, 3}));

    CHECK_THROWS_AS(Hypergraph::fromEdges(3, 5, {{0, 1, 1}}), ParameterError);
    CHECK_THROWS_AS(Hypergraph::fromEdges(3, 5, {{0, 1, 5}}), ParameterError);
    CHECK_THROWS_AS(Hypergraph::fromEdges(3, 5, {{0, 1, 2}, {2, 1, 0}}), ParameterError);
    CHECK_THROWS_AS(Hypergraph(1, 5, {}), ParameterError);
}

TEST_CASE("min_d_degree on small complete graphs") {
    Hypergraph k5 = testoracle::complete_kgraph(3, 5);
    CHECK(min_d_degree(k5, 1) == 6);  // C(4,2)
    CHECK(min_d_degree(k5, 2) == 3);  // n - 2

    CHECK_THROWS_AS(min_d_degree(k5, 0), ParameterError);
    CHECK_THROWS_AS(min_d_degree(k5, 3), ParameterError);
    CHECK_THROWS_AS(min_d_degree(Hypergraph(3, 1, {}), 2), ParameterError);
}

TEST_CASE("min_d_degree of fig1(10) matches the direct count") {
    PartitionedGraph pg = fig1(10);
    CHECK(pg.params.at("xSize") == 7);
    CHECK(pg.params.at("ySize") == 2);
    CHECK(min_d_degree(pg.graph, 1) == 7);
    CHECK(testoracle::min_degree_by_scan(pg.graph) == 7);
}

TEST_CASE("min_d_degree is monotone under edge addition") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Hypergraph g = testoracle::random_kgraph(3, 7, 0.4, rng);
        Hypergraph k7 = testoracle::complete_kgraph(3, 7);
        // add one edge not already present
        std::vector<std::vector<int>> edges;
        for (std::size_t i = 0; i < g.edgeCount(); ++i) {
            auto e = g.edge(i);
            edges.push_back({e[0], e[1], e[2]});
        }
        bool added = false;
        for (std::size_t i = 0; i < k7.edgeCount() && !added; ++i) {
            auto e = k7.edge(i);
            if (!g.hasEdge(e)) {
                edges.push_back({e[0], e[1], e[2]});
                added = true;
            }
        }
        if (!added) continue;
        Hypergraph bigger = Hypergraph::fromEdges(3, 7, edges);
        for (int d = 1; d <= 2; ++d) CHECK(min_d_degree(bigger, d) >= min_d_degree(g, d));
    }
}

TEST_CASE("degree sum identity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Hypergraph g = testoracle::random_kgraph(3, 8, 0.3, rng);
        auto deg = g.vertexDegrees();
        std::int64_t sum = 0;
        for (auto d : deg) sum += d;
        CHECK(sum == 3 * static_cast<std::int64_t>(g.edgeCount()));
    }
}

TEST_CASE("link graph") {
    Hypergraph k4 = testoracle::complete_kgraph(3, 4);
    Hypergraph l0 = link_graph(k4, 0);
    CHECK(l0.uniformity() == 2);
    CHECK(l0.vertexCount() == 4);
    CHECK(l0.edgeCount() == 3);  // triangle on {1,2,3}
    CHECK(l0.hasEdge(std::vector<int>{1, 2}));
    CHECK(l0.hasEdge(std::vector<int>{1, 3}));
    CHECK(l0.hasEdge(std::vector<int>{2, 3}));

    PartitionedGraph pg = fig1(10);
    Hypergraph lz = link_graph(pg.graph, 0);  // z is vertex 0
    CHECK(lz.edgeCount() == 21);              // clique on X, C(7,2)

    Hypergraph empty(3, 4, {});
    CHECK(link_graph(empty, 2).edgeCount() == 0);

    CHECK_THROWS_AS(link_graph(testoracle::complete_kgraph(4, 5), 0), ParameterError);
}

TEST_CASE("link edge count equals vertex degree") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        Hypergraph g = testoracle::random_kgraph(3, 7, 0.35, rng);
        for (int v = 0; v < 7; ++v)
            CHECK(static_cast<std::int64_t>(link_graph(g, v).edgeCount()) == testoracle::degree_by_scan(g, v));
    }
}

TEST_CASE("tight components on named instances") {
    SUBCASE("fig1(10): two parts, none spanning") {
        ComponentDecomposition comps = tight_components(fig1(10).graph);
        CHECK(comps.parts.size() == 2);
        CHECK(!comps.spanningPartIndex.has_value());
    }
    SUBCASE("K4: one spanning part") {
        ComponentDecomposition comps = tight_components(testoracle::complete_kgraph(3, 4));
        CHECK(comps.parts.size() == 1);
        REQUIRE(comps.spanningPartIndex.has_value());
        CHECK(*comps.spanningPartIndex == 0);
    }
    SUBCASE("two disjoint edges: two parts, none spanning") {
        Hypergraph g = Hypergraph::fromEdges(3, 6, {{0, 1, 2}, {3, 4, 5}});
        ComponentDecomposition comps = tight_components(g);
        CHECK(comps.parts.size() == 2);
        CHECK(!comps.spanningPartIndex.has_value());
    }
    SUBCASE("edgeless graph: empty partition") {
        ComponentDecomposition comps = tight_components(Hypergraph(3, 4, {}));
        CHECK(comps.parts.empty());
        CHECK(!comps.spanningPartIndex.has_value());
    }
}

TEST_CASE("tight components agree with the line-graph oracle") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        int k = trial % 2 == 0 ? 3 : 4;
        Hypergraph g = testoracle::random_kgraph(k, 8, 0.12, rng);
        ComponentDecomposition comps = tight_components(g);
        auto expected = testoracle::components_by_line_graph(g);
        REQUIRE(comps.parts.size() == expected.size());
        CHECK(comps.parts == expected);

        // Partition property and cross-part separation.
        std::size_t total = 0;
        for (const auto& part : comps.parts) total += part.size();
        CHECK(total == g.edgeCount());
        for (std::size_t p = 0; p < comps.parts.size(); ++p)
            for (std::size_t q = p + 1; q < comps.parts.size(); ++q)
                for (std::uint32_t a : comps.parts[p])
                    for (std::uint32_t b : comps.parts[q]) {
                        auto ea = g.edge(a);
                        auto eb = g.edge(b);
                        std::vector<int> inter;
                        std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                                              std::back_inserter(inter));
                        CHECK(static_cast<int>(inter.size()) < k - 1);
                    }
    }
}

TEST_CASE("link component diagnostics") {
    SUBCASE("K4 at vertex 0") {
        auto diag = link_component_diagnostics(testoracle::complete_kgraph(3, 4), 0);
        CHECK(diag.componentVertices == std::vector<int>{1, 2, 3});
        CHECK(diag.witnessEdges.size() == 3);
    }
    SUBCASE("fig1(10) at z: component is X") {
        PartitionedGraph pg = fig1(10);
        auto [xLo, xHi] = pg.part("X");
        auto diag = link_component_diagnostics(pg.graph, 0);
        std::vector<int> expected;
        for (int v = xLo; v < xHi; ++v) expected.push_back(v);
        CHECK(diag.componentVertices == expected);
    }
    SUBCASE("tie-break: lexicographically first two-vertex component") {
        Hypergraph g = Hypergraph::fromEdges(3, 5, {{0, 1, 2}, {0, 3, 4}});
        auto diag = link_component_diagnostics(g, 0);
        CHECK(diag.componentVertices == std::vector<int>{1, 2});
        CHECK(diag.witnessEdges == std::vector<std::size_t>{0});
    }
    SUBCASE("isolated vertex is an error") {
        Hypergraph g = Hypergraph::fromEdges(3, 5, {{0, 1, 2}});
        CHECK_THROWS_AS(link_component_diagnostics(g, 4), ParameterError);
    }
}

TEST_CASE("link diagnostics witness lies inside one tight component") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        Hypergraph g = testoracle::random_kgraph(3, 7, 0.25, rng);
        ComponentDecomposition comps = tight_components(g);
        std::vector<int> partOf(g.edgeCount(), -1);
        for (std::size_t p = 0; p < comps.parts.size(); ++p)
            for (std::uint32_t e : comps.parts[p]) partOf[e] = static_cast<int>(p);
        for (int v = 0; v < 7; ++v) {
            if (testoracle::degree_by_scan(g, v) == 0) continue;
            auto diag = link_component_diagnostics(g, v);
            REQUIRE(!diag.witnessEdges.empty());
            int part = partOf[diag.witnessEdges.front()];
            for (std::size_t e : diag.witnessEdges) CHECK(partOf[e] == part);
        }
    }
}

TEST_CASE("blow_up") {
    Hypergraph path = tight_path(3, 3);
    SUBCASE("identity sizes reproduce the base") {
        BlowUp b = blow_up(path, {1, 1, 1});
        CHECK(b.result == path);
        CHECK(b.phi == std::vector<int>{0, 1, 2});
    }
    SUBCASE("single edge blown to 27 transversals") {
        BlowUp b = blow_up(path, {3, 3, 3});
        CHECK(b.result.vertexCount() == 9);
        CHECK(b.result.edgeCount() == 27);
    }
    SUBCASE("cycle C4 with sizes (2,1,1,1)") {
        BlowUp b = blow_up(tight_cycle(3, 4), {2, 1, 1, 1});
        CHECK(b.result.vertexCount() == 5);
        CHECK(b.result.edgeCount() == 7);  // 2 + 1 + 2 + 2
    }
    SUBCASE("invalid sizes") {
        CHECK_THROWS_AS(blow_up(path, {1, 0, 1}), ParameterError);
        CHECK_THROWS_AS(blow_up(path, {1, 1}), ParameterError);
    }
    SUBCASE("blow-up result spans itself") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 10; ++trial) {
            Hypergraph base = testoracle::random_kgraph(3, 5, 0.5, rng);
            if (base.edgeCount() == 0) continue;
            std::vector<int> sizes;
            for (int i = 0; i < 5; ++i) sizes.push_back(1 + static_cast<int>(rng() % 3));
            BlowUp b = blow_up(base, sizes);
            bool covered = true;
            auto deg = b.result.vertexDegrees();
            for (auto d : deg) covered = covered && d > 0;
            if (covered) CHECK(is_spanning_in_blowup(b.result, b));
        }
    }
}

TEST_CASE("is_spanning_in_blowup rejections") {
    BlowUp b = complete_kpartite(3, {2, 2, 2});
    SUBCASE("uncovered vertex") {
        std::vector<std::vector<int>> edges;
        for (std::size_t i = 0; i < b.result.edgeCount(); ++i) {
            auto e = b.result.edge(i);
            if (std::binary_search(e.begin(), e.end(), 5)) continue;
            edges.push_back({e[0], e[1], e[2]});
        }
        CHECK(!is_spanning_in_blowup(Hypergraph::fromEdges(3, 6, edges), b));
    }
    SUBCASE("edge with two vertices in one cluster") {
        std::vector<std::vector<int>> edges;
        for (std::size_t i = 0; i < b.result.edgeCount(); ++i) {
            auto e = b.result.edge(i);
            edges.push_back({e[0], e[1], e[2]});
        }
        edges.push_back({0, 1, 2});  // 0 and 1 share the first cluster
        CHECK(!is_spanning_in_blowup(Hypergraph::fromEdges(3, 6, edges), b));
    }
    SUBCASE("vertex-set mismatch is an error") {
        CHECK_THROWS_AS(is_spanning_in_blowup(Hypergraph(3, 5, {}), b), ParameterError);
    }
}

TEST_CASE("tetrahedron 4-graph") {
    Hypergraph k5 = testoracle::complete_kgraph(3, 5);
    Hypergraph h = tetrahedron_4graph(k5);
    CHECK(h.uniformity() == 4);
    CHECK(h.edgeCount() == 5);  // K5^(4)

    Hypergraph single = Hypergraph::fromEdges(3, 5, {{0, 1, 2}});
    CHECK(tetrahedron_4graph(single).edgeCount() == 0);

    PartitionedGraph pg = fig1(10);
    Hypergraph tets = tetrahedron_4graph(pg.graph);
    std::int64_t expected = testoracle::tetrahedra_by_scan(pg.graph);
    CHECK(expected == 70);  // C(7,4) pure-X plus C(7,3) with z
    CHECK(static_cast<std::int64_t>(tets.edgeCount()) == expected);

    CHECK_THROWS_AS(tetrahedron_4graph(testoracle::complete_kgraph(4, 5)), ParameterError);
}
