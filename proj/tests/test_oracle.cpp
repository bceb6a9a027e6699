#include "doctest.h"
#include "hypersurf/constructions.hpp"
#include "hypersurf/cover.hpp"
#include "hypersurf/error.hpp"
#include "hypersurf/oracle.hpp"
#include "test_oracles.hpp"

using namespace hypersurf;
using namespace hypersurf::oracle;

TEST_CASE("exhaustive theorem audit at n = 4 and 5") {
    AuditResult r4 = verify_spanning_component_theorem(4);
    CHECK(r4.tested == 16);  // 2^C(4,3)
    CHECK(r4.counterexamples.empty());

    AuditResult r5 = verify_spanning_component_theorem(5);
    CHECK(r5.tested == 1024);  // 2^C(5,3)
    CHECK(r5.counterexamples.empty());
    REQUIRE(r5.extremal.has_value());
    // The extremal failure re-verifies under the production operations.
    CHECK(!tight_components(r5.extremal->second).spanningPartIndex.has_value());
    CHECK(min_d_degree(r5.extremal->second, 1) == r5.extremal->first);
}

TEST_CASE("threaded exhaustive audit merges to the same counts") {
    AuditResult single = verify_spanning_component_theorem(5, 1);
    AuditResult multi = verify_spanning_component_theorem(5, 4);
    CHECK(single.tested == multi.tested);
    CHECK(single.counterexamples.size() == multi.counterexamples.size());
    REQUIRE(single.extremal.has_value());
    REQUIRE(multi.extremal.has_value());
    CHECK(single.extremal->first == multi.extremal->first);
}

TEST_CASE("exhaustive audit is budget-guarded") {
    CHECK_THROWS_AS(verify_spanning_component_theorem(8), ResourceError);
}

TEST_CASE("sampled theorem audit") {
    SampleMode mode{10'000, 1, 0.7};
    AuditResult r = verify_spanning_component_theorem(7, mode);
    CHECK(r.tested == 10'000);
    CHECK(r.counterexamples.empty());
    CHECK(r.seed == 1);

    AuditResult again = verify_spanning_component_theorem(7, mode);
    CHECK(again.tested == r.tested);
    bool sameExtremal = r.extremal.has_value() == again.extremal.has_value();
    if (r.extremal && again.extremal)
        sameExtremal = sameExtremal && r.extremal->first == again.extremal->first &&
                       r.extremal->second == again.extremal->second;
    CHECK(sameExtremal);
}

TEST_CASE("exact component threshold") {
    ThresholdResult t4 = exact_component_threshold(4);
    CHECK(t4.threshold == 1);
    CHECK(t4.tested == 16);
    CHECK(!tight_components(t4.witness).spanningPartIndex.has_value());
    CHECK(min_d_degree(t4.witness, 1) == 0);

    ThresholdResult t5 = exact_component_threshold(5);
    CHECK(t5.threshold <= 4);  // at most the theorem bound C(4,2)/2 + 1
    CHECK(!tight_components(t5.witness).spanningPartIndex.has_value());
    CHECK(min_d_degree(t5.witness, 1) == t5.threshold - 1);
    CHECK(!testoracle::has_spanning_component_by_line_graph(t5.witness));
}

TEST_CASE("sphere search finds the octahedron") {
    BlowUp b = complete_kpartite(3, {2, 2, 2});
    SphereSearchResult res = search_spanning_sphere(b.result);
    REQUIRE(res.status == SearchStatus::Found);
    REQUIRE(res.sphere.has_value());
    CHECK(res.sphere->faceCount() == 8);
    CHECK(classify_surface(*res.sphere).kind == SurfaceKind::Sphere);
    // Subcomplex of the host.
    for (const auto& f : res.sphere->faces()) CHECK(b.result.hasEdge(std::vector<int>{f[0], f[1], f[2]}));
    // And spanning.
    CHECK(is_spanning_in_blowup(surface_as_hypergraph(*res.sphere), b));
}

TEST_CASE("sphere search proves absence by counting") {
    BlowUp b = complete_kpartite(3, {1, 2, 2});
    SphereSearchResult res = search_spanning_sphere(b.result);
    CHECK(res.status == SearchStatus::Absent);
    CHECK(res.reason.find("candidate faces") != std::string::npos);
}

TEST_CASE("sphere search proves absence on the lower-bound construction") {
    for (int n : {9, 10}) {
        SphereSearchResult res = search_spanning_sphere(surface_lower_bound(n, 0).graph);
        CHECK(res.status == SearchStatus::Absent);
    }
}

TEST_CASE("sphere search on K4 finds the tetrahedron") {
    SphereSearchResult res = search_spanning_sphere(testoracle::complete_kgraph(3, 4));
    REQUIRE(res.status == SearchStatus::Found);
    CHECK(res.sphere->faceCount() == 4);
}

TEST_CASE("sphere search distinguishes budget exhaustion") {
    BlowUp b = complete_kpartite(3, {3, 3, 3});
    SphereSearchResult res = search_spanning_sphere(b.result, SearchBudget{3});
    CHECK(res.status == SearchStatus::BudgetExhausted);
}

TEST_CASE("no spanning component means no sphere, immediately") {
    Hypergraph g = Hypergraph::fromEdges(3, 6, {{0, 1, 2}, {3, 4, 5}});
    SphereSearchResult res = search_spanning_sphere(g);
    CHECK(res.status == SearchStatus::Absent);
    CHECK(res.reason.find("spanning tight component") != std::string::npos);
}

TEST_CASE("codegree probe") {
    CodegreeProbe k6 = codegree_component_probe(testoracle::complete_kgraph(4, 6));
    CHECK(k6.codegree == 3);
    CHECK(k6.threshold == Rational(6, 4));
    CHECK(k6.applies);
    CHECK(k6.spanning);
    CHECK(!k6.counterexample);

    CodegreeProbe lb = codegree_component_probe(kgraph_lower_bound(12, 4).graph);
    CHECK(!lb.spanning);
    CHECK(!lb.counterexample);  // its codegree is 0: Y-pairs with z lie in no edge

    CodegreeBatchResult batch = codegree_probe_random(4, 10, 200, 7, 0.9);
    CHECK(batch.tested == 200);
    CHECK(batch.counterexamples.empty());
}
