#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "hypersurf/constructions.hpp"
#include "hypersurf/cover.hpp"
#include "hypersurf/error.hpp"
#include "hypersurf/surface.hpp"

using namespace hypersurf;

namespace {

Surface2 tetrahedron() {
    return Surface2(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

Surface2 octahedron_in(const BlowUp& b) {
    std::vector<Triangle> faces;
    for (std::size_t i = 0; i < b.result.edgeCount(); ++i) {
        auto e = b.result.edge(i);
        faces.push_back({e[0], e[1], e[2]});
    }
    return Surface2(b.result.vertexCount(), std::move(faces));
}

}  // namespace

TEST_CASE("closed surface certification") {
    CHECK(check_closed_surface(tetrahedron()).closed);

    Surface2 open(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
    auto res = check_closed_surface(open);
    CHECK(!res.closed);
    CHECK(res.reason.find("faces") != std::string::npos);

    Surface2 twoTriangles(4, {{0, 1, 2}, {0, 1, 3}});
    CHECK(!check_closed_surface(twoTriangles).closed);

    CHECK_THROWS_AS(check_closed_surface(Surface2(3, {})), ParameterError);
}

TEST_CASE("euler characteristic") {
    CHECK(euler_characteristic(tetrahedron()) == 2);
    BlowUp b = complete_kpartite(3, {2, 2, 2});
    CHECK(euler_characteristic(octahedron_in(b)) == 2);  // 6 - 12 + 8
    CHECK(euler_characteristic(fixture(FixtureName::T9).surface) == 0);
}

TEST_CASE("classification of the named complexes") {
    SurfaceClass tet = classify_surface(tetrahedron());
    CHECK(tet.kind == SurfaceKind::Sphere);
    CHECK(tet.genus == 0);
    CHECK(tet.euler == 2);

    SurfaceClass t9 = classify_surface(fixture(FixtureName::T9).surface);
    CHECK(t9.kind == SurfaceKind::Orientable);
    CHECK(t9.genus == 1);
    CHECK(t9.euler == 0);

    SurfaceClass p12 = classify_surface(fixture(FixtureName::P12).surface);
    CHECK(p12.kind == SurfaceKind::NonOrientable);
    CHECK(p12.genus == 1);
    CHECK(p12.euler == 1);

    Surface2 open(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
    CHECK(classify_surface(open).kind == SurfaceKind::NotAClosedSurface);
    CHECK(classify_surface(Surface2(3, {})).kind == SurfaceKind::NotAClosedSurface);
}

TEST_CASE("fixture counts are the transcription targets") {
    const auto& t9 = fixture(FixtureName::T9);
    CHECK(t9.surface.vertexCount() == 9);
    CHECK(t9.surface.faceCount() == 18);
    CHECK(t9.surface.edgeFaceIncidence().size() == 27);

    const auto& p12 = fixture(FixtureName::P12);
    CHECK(p12.surface.vertexCount() == 12);
    CHECK(p12.surface.faceCount() == 22);
    CHECK(p12.surface.edgeFaceIncidence().size() == 33);
}

TEST_CASE("triangulation identity 2e = 3f for closed surfaces") {
    for (const Surface2& s : {tetrahedron(), fixture(FixtureName::T9).surface, fixture(FixtureName::P12).surface}) {
        CHECK(2 * s.edgeFaceIncidence().size() == 3 * s.faceCount());
    }
}

TEST_CASE("classification is invariant under relabelling") {
    std::mt19937_64 rng(31);
    for (const Surface2& s : {tetrahedron(), fixture(FixtureName::T9).surface, fixture(FixtureName::P12).surface}) {
        SurfaceClass expected = classify_surface(s);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> perm(static_cast<std::size_t>(s.vertexCount()));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(classify_surface(relabel_surface(s, perm)) == expected);
        }
    }
}

TEST_CASE("connected sums") {
    SUBCASE("two tetrahedra make a bipyramid sphere") {
        Surface2 s = tetrahedron();
        Surface2 t(5, {{0, 1, 2}, {0, 1, 4}, {0, 2, 4}, {1, 2, 4}});
        Surface2 sum = connected_sum(s, t, {0, 1, 2});
        CHECK(sum.faceCount() == 6);
        CHECK(sum.supportVertices().size() == 5);
        SurfaceClass cls = classify_surface(sum);
        CHECK(cls.kind == SurfaceKind::Sphere);
        CHECK(cls.euler == 2);
    }
    SUBCASE("torus # sphere stays a torus") {
        const Surface2& t9 = fixture(FixtureName::T9).surface;
        Triangle f = t9.faces().front();
        Surface2 tet = relabel_for_sum(t9, tetrahedron(), f, {0, 1, 2});
        Surface2 sum = connected_sum(t9, tet, f);
        SurfaceClass cls = classify_surface(sum);
        CHECK(cls.kind == SurfaceKind::Orientable);
        CHECK(cls.genus == 1);
        CHECK(cls.euler == 0);
    }
    SUBCASE("projective plane # projective plane is the Klein bottle") {
        const Surface2& p12 = fixture(FixtureName::P12).surface;
        Triangle f = p12.faces().front();
        Surface2 other = relabel_for_sum(p12, p12, f, p12.faces().back());
        Surface2 sum = connected_sum(p12, other, f);
        SurfaceClass cls = classify_surface(sum);
        CHECK(cls.kind == SurfaceKind::NonOrientable);
        CHECK(cls.genus == 2);
        CHECK(cls.euler == 0);
    }
    SUBCASE("chi additivity") {
        const Surface2& t9 = fixture(FixtureName::T9).surface;
        const Surface2& p12 = fixture(FixtureName::P12).surface;
        Triangle f = t9.faces()[3];
        Surface2 other = relabel_for_sum(t9, p12, f, p12.faces()[5]);
        Surface2 sum = connected_sum(t9, other, f);
        CHECK(euler_characteristic(sum) == 0 + 1 - 2);
    }
    SUBCASE("glue precondition failures") {
        Surface2 s = tetrahedron();
        // Same vertex set: intersection is larger than one face.
        CHECK_THROWS_AS(connected_sum(s, s, {0, 1, 2}), ParameterError);
        Surface2 t(5, {{0, 1, 2}, {0, 1, 4}, {0, 2, 4}, {1, 2, 4}});
        CHECK_THROWS_AS(connected_sum(s, t, {0, 1, 3}), ParameterError);
    }
}

TEST_CASE("euler obstruction") {
    CHECK(euler_obstruction(6, 3, 0));
    CHECK(!euler_obstruction(2, 3, 0));
    // Boundary is strict.
    for (int y = 2; y <= 6; ++y)
        for (int g = 0; g <= 2; ++g) CHECK(!euler_obstruction(2 * y - 4 + 4 * g, y, g));
    CHECK_THROWS_AS(euler_obstruction(-1, 0, 0), ParameterError);
}

TEST_CASE("tight path recognition") {
    CHECK(is_tight_path(tight_path(3, 5)));
    CHECK(is_tight_path(tight_path(3, 3)));
    CHECK(!is_tight_path(tight_cycle(3, 5)));
    CHECK(!is_tight_path(Hypergraph::fromEdges(3, 5, {{0, 1, 2}, {1, 3, 4}})));
}

TEST_CASE("doubly edge-covering witnesses") {
    SUBCASE("octahedron over a single base edge") {
        BlowUp b = complete_kpartite(3, {2, 2, 2});
        Surface2 octa = octahedron_in(b);
        auto dc = check_doubly_edge_covering(octa, b);
        REQUIRE(dc.has_value());
        CHECK(validate_double_cover(octa, b, *dc));
    }
    SUBCASE("thin-path octahedron with two base edges") {
        BlowUp b = path_blowup(3, 4, {1, 2, 2, 1});
        Surface2 s = octahedron_in(b);  // all 8 transversals form the sphere
        REQUIRE(check_closed_surface(s).closed);
        auto dc = check_doubly_edge_covering(s, b);
        REQUIRE(dc.has_value());
        CHECK(validate_double_cover(s, b, *dc));
    }
    SUBCASE("single face per base edge forces absence") {
        BlowUp b = path_blowup(3, 4, {1, 2, 2, 1});
        Surface2 s(6, {{0, 1, 3}, {2, 4, 5}});
        CHECK(!check_doubly_edge_covering(s, b).has_value());
    }
    SUBCASE("non-path base is rejected") {
        BlowUp b = cycle_blowup(3, 4, {1, 1, 1, 1});
        Surface2 s = octahedron_in(complete_kpartite(3, {2, 2, 2}));
        CHECK_THROWS_AS(check_doubly_edge_covering(s, b), ParameterError);
    }
}
