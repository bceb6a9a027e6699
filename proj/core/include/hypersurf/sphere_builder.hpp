#pragma once

#include <optional>

#include "hypersurf/blowup.hpp"
#include "hypersurf/cover.hpp"
#include "hypersurf/surface.hpp"

namespace hypersurf::builder {

// A surface embedded spanningly in a path blow-up, possibly carrying a
// doubly-edge-covering witness.
struct EmbeddedSurface {
    Surface2 surface;
    BlowUp host;
    std::optional<DoubleCover> cover;
};

// Cluster-size bound achieved by the sphere builder (k + 2 for k = 3).
inline constexpr int kSphereClusterBound = 5;

// Smallest n from which build_spanning_sphere succeeds for every residue;
// discovered by the builder audit and pinned here.
inline constexpr int kMinSphereN = 20;

// Feasibility probe matching the builder's plan; exposed so audits can
// rediscover kMinSphereN instead of trusting it.
bool spanning_sphere_feasible(int n);
int min_spanning_sphere_n();

// Spanning sphere of the complete 3-partite host K(2,l,l) (variant 'a',
// l >= 2) or K(3,l,l) (variant 'b', l >= 3), obtained by exact search and
// certified by the classifier. Results are cached.
EmbeddedSurface gadget_sphere(int k, char variant, int ell);

// Spanning, doubly edge-covering sphere of the thin path blow-up
// P4(1,2,2,1).
EmbeddedSurface thin_path_base(int k);

// Extends a doubly-edge-covering sphere of P_l(a1, ..., al) to one of
// P_{l+1}(1, a1+1, a2+1, a3, ..., al) by capping the first family-A facet
// with an octahedral disk on three new vertices. Output re-verified per
// call, with a search fallback for the witness.
EmbeddedSurface grow_step(const EmbeddedSurface& s);

// Spanning n-vertex sphere in a path blow-up with clusters of size at most
// kSphereClusterBound: grow the thin base, then connected-sum K(2,3,3)
// gadget spheres for the vertex-count residue.
EmbeddedSurface build_spanning_sphere(int k, int n);

// Spanning surface of the requested kind: glue T9 (orientable genus) or P12
// (crosscap) copies onto a built sphere. genus 0 orientable means sphere.
EmbeddedSurface build_spanning_surface(SurfaceKind kind, int genus, int n);

bool spanning_surface_feasible(SurfaceKind kind, int genus, int n);
int min_spanning_surface_n(SurfaceKind kind, int genus);

// Cluster bound the surface builder achieves for a kind (5 orientable, 6
// non-orientable: P12 clusters merge three fresh vertices per cluster).
int surface_cluster_bound(SurfaceKind kind);

}  // namespace hypersurf::builder
