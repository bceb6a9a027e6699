#include <cmath>

#include "doctest.h"
#include "hypersurf/constructions.hpp"
#include "hypersurf/cover.hpp"
#include "hypersurf/error.hpp"
#include "hypersurf/util.hpp"
#include "test_oracles.hpp"

using namespace hypersurf;

TEST_CASE("fig1 shape and degrees") {
    PartitionedGraph pg = fig1(10);
    CHECK(pg.params.at("xSize") == 7);
    CHECK(pg.params.at("ySize") == 2);
    CHECK(pg.params.at("zSize") == 1);
    // Four edge types and nothing else.
    CHECK(pg.graph.edgeCount() ==
          binomial(7, 3) + 7 * binomial(2, 2) + binomial(2, 3) + binomial(7, 2));

    ComponentDecomposition comps = tight_components(pg.graph);
    CHECK(comps.parts.size() == 2);
    CHECK(!comps.spanningPartIndex.has_value());

    CHECK(min_d_degree(pg.graph, 1) == 7);
    CHECK(fig1_min_degree_formula(10) == 7);

    CHECK_THROWS_AS(fig1(4), ParameterError);
    CHECK_THROWS_AS(fig1(10, 9, 1), ParameterError);
}

TEST_CASE("fig1 closed-form degree matches the oracle for n <= 200") {
    for (int n = 7; n <= 200; n += (n < 40 ? 1 : 13)) {
        PartitionedGraph pg = fig1(n);
        CHECK(fig1_min_degree_formula(n) == min_d_degree(pg.graph, 1));
    }
}

TEST_CASE("fig1 components and degree bound across a range") {
    for (int n : {20, 35, 60, 101}) {
        PartitionedGraph pg = fig1(n);
        ComponentDecomposition comps = tight_components(pg.graph);
        CHECK(comps.parts.size() == 2);
        CHECK(!comps.spanningPartIndex.has_value());
        // delta_1 >= C(n,2)/2 - 3n, compared exactly as 2*delta >= C - 6n.
        std::int64_t delta = fig1_min_degree_formula(n);
        CHECK(2 * delta >= static_cast<std::int64_t>(binomial(static_cast<std::uint64_t>(n), 2)) - 6LL * n);
    }
}

TEST_CASE("surface_lower_bound at n = 9") {
    PartitionedGraph pg = surface_lower_bound(9, 0);
    CHECK(pg.params.at("xSize") == 6);
    CHECK(pg.params.at("ySize") == 3);
    CHECK(min_d_degree(pg.graph, 1) == 13);
    CHECK(surface_lower_bound_min_degree_formula(9, 0) == 13);

    ComponentDecomposition comps = tight_components(pg.graph);
    CHECK(comps.parts.size() == 2);
    REQUIRE(comps.spanningPartIndex.has_value());

    CHECK(euler_obstruction(6, 3, 0));
}

TEST_CASE("surface_lower_bound properties across feasible sizes") {
    for (int n : {12, 15, 30, 61}) {
        for (int g : {0, 1}) {
            std::int64_t x = (2LL * n + 2) / 3 + 4LL * g;
            if (x > n - 2) continue;
            PartitionedGraph pg = surface_lower_bound(n, g);
            ComponentDecomposition comps = tight_components(pg.graph);
            CHECK(comps.parts.size() == 2);
            CHECK(comps.spanningPartIndex.has_value());
            CHECK(euler_obstruction(pg.params.at("xSize"), pg.params.at("ySize"), g));
            CHECK(surface_lower_bound_min_degree_formula(n, g) == min_d_degree(pg.graph, 1));
        }
    }
    // delta_1 >= (5/9) C(n-1,2) - 5n for n >= 30, exact integer comparison.
    for (int n = 30; n <= 120; n += 17) {
        std::int64_t delta = surface_lower_bound_min_degree_formula(n, 0);
        std::int64_t c = static_cast<std::int64_t>(binomial(static_cast<std::uint64_t>(n - 1), 2));
        CHECK(9 * delta >= 5 * c - 45LL * n);
    }
}

TEST_CASE("kgraph_lower_bound has no spanning component") {
    for (int k : {3, 4}) {
        PartitionedGraph pg = kgraph_lower_bound(12, k);
        ComponentDecomposition comps = tight_components(pg.graph);
        CHECK(comps.parts.size() == 2);
        CHECK(!comps.spanningPartIndex.has_value());
        CHECK(!testoracle::has_spanning_component_by_line_graph(pg.graph));
    }
    CHECK_THROWS_AS(kgraph_lower_bound(5, 4), ParameterError);
}

TEST_CASE("kgraph_lower_bound degree ratio approaches 1/2") {
    {
        PartitionedGraph pg = kgraph_lower_bound(60, 3);
        double ratio = static_cast<double>(min_d_degree(pg.graph, 1)) /
                       static_cast<double>(binomial(59, 2));
        CHECK(ratio > 0.42);
        CHECK(ratio < 0.55);
    }
    {
        PartitionedGraph pg = kgraph_lower_bound(40, 4);
        double ratio = static_cast<double>(min_d_degree(pg.graph, 1)) /
                       static_cast<double>(binomial(39, 3));
        CHECK(ratio > 0.40);
        CHECK(ratio < 0.55);
    }
}

TEST_CASE("complete k-partite counts") {
    CHECK(complete_kpartite(3, {2, 2, 2}).result.edgeCount() == 8);
    CHECK(complete_kpartite(3, {2, 2, 2}).result.vertexCount() == 6);
    CHECK(complete_kpartite(3, {1, 1, 1}).result.edgeCount() == 1);
    CHECK(complete_kpartite(3, {2, 3, 3}).result.edgeCount() == 18);
    CHECK_THROWS_AS(complete_kpartite(3, {1, 1}), ParameterError);
    CHECK_THROWS_AS(complete_kpartite(3, {0, 1, 1}), ParameterError);
}

TEST_CASE("paths, cycles, and their blow-ups") {
    CHECK(tight_path(3, 5).edgeCount() == 3);
    CHECK(tight_cycle(3, 6).edgeCount() == 6);
    CHECK(path_blowup(3, 3, {3, 3, 3}).result.edgeCount() == 27);
    CHECK(cycle_blowup(3, 4, {2, 1, 1, 1}).result.edgeCount() == 7);
    CHECK_THROWS_AS(tight_path(3, 2), ParameterError);
    CHECK_THROWS_AS(tight_cycle(3, 3), ParameterError);

    // Edge-count formulas against direct enumeration.
    CHECK(tight_path(4, 9).edgeCount() == 6);
    CHECK(tight_cycle(4, 5).edgeCount() == 5);
}

TEST_CASE("fixtures span their hosts") {
    const Fixture& t9 = fixture(FixtureName::T9);
    CHECK(t9.host.sizes == std::vector<int>{3, 3, 3});
    CHECK(is_spanning_in_blowup(surface_as_hypergraph(t9.surface), t9.host));

    const Fixture& p12 = fixture(FixtureName::P12);
    CHECK(p12.host.sizes == std::vector<int>{4, 4, 4});
    CHECK(is_spanning_in_blowup(surface_as_hypergraph(p12.surface), p12.host));
}

TEST_CASE("generator outputs satisfy hypergraph invariants") {
    // Canonical construction already enforces them; double-check the edge
    // counts against closed forms.
    PartitionedGraph pg = fig1(23);
    std::int64_t x = pg.params.at("xSize"), y = pg.params.at("ySize"), z = pg.params.at("zSize");
    CHECK(pg.graph.edgeCount() == binomial(static_cast<std::uint64_t>(x), 3) +
                                      static_cast<std::uint64_t>(x) * binomial(static_cast<std::uint64_t>(y), 2) +
                                      binomial(static_cast<std::uint64_t>(y), 3) +
                                      static_cast<std::uint64_t>(z) * binomial(static_cast<std::uint64_t>(x), 2));

    PartitionedGraph slb = surface_lower_bound(20, 1);
    std::int64_t sx = slb.params.at("xSize"), sy = slb.params.at("ySize");
    CHECK(slb.graph.edgeCount() == binomial(static_cast<std::uint64_t>(sx), 3) +
                                       static_cast<std::uint64_t>(sx) * binomial(static_cast<std::uint64_t>(sy), 2) +
                                       binomial(static_cast<std::uint64_t>(sy), 3));

    PartitionedGraph kg = kgraph_lower_bound(14, 3);
    std::int64_t kx = kg.params.at("xSize"), ky = kg.params.at("ySize");
    CHECK(kg.graph.edgeCount() ==
          binomial(static_cast<std::uint64_t>(kx + ky), 3) -
              binomial(static_cast<std::uint64_t>(kx), 2) * static_cast<std::uint64_t>(ky) +
              binomial(static_cast<std::uint64_t>(kx), 2));
}
