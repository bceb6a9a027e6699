#include "doctest.h"
#include "hypersurf/constructions.hpp"
#include "hypersurf/cover.hpp"
#include "hypersurf/error.hpp"
#include "hypersurf/sphere_builder.hpp"

using namespace hypersurf;
using namespace hypersurf::builder;

namespace {

void checkSphereContract(const EmbeddedSurface& emb, int n, int clusterBound) {
    CHECK(emb.surface.vertexCount() == n);
    CHECK(emb.surface.faceCount() == static_cast<std::size_t>(2 * n - 4));
    CHECK(classify_surface(emb.surface).kind == SurfaceKind::Sphere);
    CHECK(is_spanning_in_blowup(surface_as_hypergraph(emb.surface), emb.host));
    CHECK(emb.host.maxClusterSize() <= clusterBound);
    CHECK(is_tight_path(emb.host.base));
}

}  // namespace

TEST_CASE("gadget spheres") {
    EmbeddedSurface octa = gadget_sphere(3, 'a', 2);
    checkSphereContract(octa, 6, 2);

    EmbeddedSurface a3 = gadget_sphere(3, 'a', 3);
    CHECK(a3.surface.vertexCount() == 8);
    CHECK(a3.surface.faceCount() == 12);
    CHECK(classify_surface(a3.surface).kind == SurfaceKind::Sphere);
    CHECK(is_spanning_in_blowup(surface_as_hypergraph(a3.surface), a3.host));

    EmbeddedSurface b3 = gadget_sphere(3, 'b', 3);
    CHECK(b3.surface.vertexCount() == 9);
    CHECK(b3.surface.faceCount() == 14);
    CHECK(classify_surface(b3.surface).kind == SurfaceKind::Sphere);

    CHECK_THROWS_AS(gadget_sphere(3, 'a', 1), ParameterError);
    CHECK_THROWS_AS(gadget_sphere(3, 'b', 2), ParameterError);
    CHECK_THROWS_AS(gadget_sphere(4, 'a', 2), ParameterError);
}

TEST_CASE("thin path base") {
    EmbeddedSurface base = thin_path_base(3);
    CHECK(base.host.sizes == std::vector<int>{1, 2, 2, 1});
    CHECK(base.host.base.edgeCount() == 2);
    CHECK(base.surface.vertexCount() == 6);
    CHECK(base.surface.faceCount() == 8);
    CHECK(classify_surface(base.surface).kind == SurfaceKind::Sphere);
    REQUIRE(base.cover.has_value());
    CHECK(validate_double_cover(base.surface, base.host, *base.cover));
}

TEST_CASE("grow step") {
    EmbeddedSurface s1 = grow_step(thin_path_base(3));
    CHECK(s1.host.sizes == std::vector<int>{1, 2, 3, 2, 1});
    CHECK(s1.surface.vertexCount() == 9);
    CHECK(s1.surface.faceCount() == 14);
    REQUIRE(s1.cover.has_value());
    CHECK(validate_double_cover(s1.surface, s1.host, *s1.cover));
    // The full search agrees a witness exists.
    CHECK(check_doubly_edge_covering(s1.surface, s1.host).has_value());

    EmbeddedSurface s2 = grow_step(s1);
    CHECK(s2.host.sizes == std::vector<int>{1, 2, 3, 3, 2, 1});
    CHECK(s2.surface.vertexCount() == 12);
    CHECK(classify_surface(s2.surface).kind == SurfaceKind::Sphere);
    REQUIRE(s2.cover.has_value());
    CHECK(validate_double_cover(s2.surface, s2.host, *s2.cover));

    // Adds exactly k vertices per step.
    CHECK(s2.surface.vertexCount() - s1.surface.vertexCount() == 3);

    EmbeddedSurface noCover = s1;
    noCover.cover.reset();
    CHECK_THROWS_AS(grow_step(noCover), ParameterError);
}

TEST_CASE("sphere builder feasibility constants") {
    CHECK(min_spanning_sphere_n() == kMinSphereN);
    CHECK(kMinSphereN == 20);
    CHECK(!spanning_sphere_feasible(19));
    for (int n = kMinSphereN; n < kMinSphereN + 12; ++n) CHECK(spanning_sphere_feasible(n));
}

TEST_CASE("build_spanning_sphere across residues") {
    for (int n : {20, 21, 22, 30, 31, 32}) {
        CAPTURE(n);
        EmbeddedSurface emb = build_spanning_sphere(3, n);
        checkSphereContract(emb, n, kSphereClusterBound);
    }
    CHECK_THROWS_AS(build_spanning_sphere(3, 19), ParameterError);
    CHECK_THROWS_AS(build_spanning_sphere(4, 30), ParameterError);
}

TEST_CASE("grown spheres keep their double cover") {
    EmbeddedSurface emb = build_spanning_sphere(3, 21);  // n = 0 mod 3: no gadgets
    REQUIRE(emb.cover.has_value());
    CHECK(validate_double_cover(emb.surface, emb.host, *emb.cover));
}

TEST_CASE("build_spanning_surface") {
    SUBCASE("torus") {
        EmbeddedSurface emb = build_spanning_surface(SurfaceKind::Orientable, 1, 40);
        SurfaceClass cls = classify_surface(emb.surface);
        CHECK(cls.kind == SurfaceKind::Orientable);
        CHECK(cls.genus == 1);
        CHECK(cls.euler == 0);
        CHECK(emb.surface.vertexCount() == 40);
        CHECK(is_spanning_in_blowup(surface_as_hypergraph(emb.surface), emb.host));
        CHECK(emb.host.maxClusterSize() <= surface_cluster_bound(SurfaceKind::Orientable));
    }
    SUBCASE("projective plane") {
        EmbeddedSurface emb = build_spanning_surface(SurfaceKind::NonOrientable, 1, 40);
        SurfaceClass cls = classify_surface(emb.surface);
        CHECK(cls.kind == SurfaceKind::NonOrientable);
        CHECK(cls.genus == 1);
        CHECK(cls.euler == 1);
        CHECK(emb.surface.vertexCount() == 40);
        CHECK(emb.host.maxClusterSize() <= surface_cluster_bound(SurfaceKind::NonOrientable));
    }
    SUBCASE("sphere request delegates to the sphere builder") {
        EmbeddedSurface emb = build_spanning_surface(SurfaceKind::Sphere, 0, 40);
        checkSphereContract(emb, 40, kSphereClusterBound);
    }
    SUBCASE("a 12-vertex torus is the smallest feasible build") {
        EmbeddedSurface emb = build_spanning_surface(SurfaceKind::Orientable, 1, 12);
        CHECK(classify_surface(emb.surface).kind == SurfaceKind::Orientable);
        CHECK(emb.surface.vertexCount() == 12);
    }
    SUBCASE("infeasible sizes throw") {
        CHECK_THROWS_AS(build_spanning_surface(SurfaceKind::Orientable, 1, 13), ParameterError);
        CHECK_THROWS_AS(build_spanning_surface(SurfaceKind::NonOrientable, 0, 40), ParameterError);
        CHECK_THROWS_AS(build_spanning_surface(SurfaceKind::NotAClosedSurface, 0, 40), ParameterError);
    }
}

TEST_CASE("surface feasibility probes") {
    for (SurfaceKind kind : {SurfaceKind::Orientable, SurfaceKind::NonOrientable}) {
        for (int genus = 1; genus <= 3; ++genus) {
            int n0 = min_spanning_surface_n(kind, genus);
            CHECK(!spanning_surface_feasible(kind, genus, n0 - 1));
            for (int n = n0; n < n0 + 6; ++n) CHECK(spanning_surface_feasible(kind, genus, n));
        }
    }
}
