#include "hypersurf/sphere_builder.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

#include "hypersurf/constructions.hpp"
#include "hypersurf/error.hpp"
#include "hypersurf/oracle.hpp"

namespace hypersurf::builder {

namespace {

void requireSphere(const EmbeddedSurface& emb, const char* who) {
    SurfaceClass cls = classify_surface(emb.surface);
    if (cls.kind != SurfaceKind::Sphere)
        throw std::logic_error(std::string(who) + ": result failed sphere classification");
    if (!is_spanning_in_blowup(surface_as_hypergraph(emb.surface), emb.host))
        throw std::logic_error(std::string(who) + ": result does not span its host");
}

// Plan for an n-vertex sphere: how many K(2,3,3) gadgets settle the residue
// and how many grow steps the base needs. extraTriples reserves disjoint
// consecutive cluster triples for later surface gluings.
struct SpherePlan {
    int gadgets = 0;
    int grows = 0;
    int pathLen = 0;
};

std::optional<SpherePlan> spherePlan(int n, int extraTriples) {
    if (n < 6) return std::nullopt;
    static constexpr std::array<int, 3> kGadgetsByResidue = {0, 2, 1};
    const int t = kGadgetsByResidue[static_cast<std::size_t>(n % 3)];
    const int nGrown = n - 5 * t;  // each gadget contributes 8 - 3 vertices
    if (nGrown < 6 || nGrown % 3 != 0) return std::nullopt;
    const int s = (nGrown - 6) / 3;
    const int ell = s + 4;
    if (ell < 3 * (t + extraTriples)) return std::nullopt;
    return SpherePlan{t, s, ell};
}

}  // namespace

bool spanning_sphere_feasible(int n) { return spherePlan(n, 0).has_value(); }

int min_spanning_sphere_n() {
    // Smallest N such that every n >= N is feasible: scan residue classes.
    for (int n = 6; n < 1000; ++n) {
        if (spanning_sphere_feasible(n) && spanning_sphere_feasible(n + 1) && spanning_sphere_feasible(n + 2))
            return n;
    }
    throw std::logic_error("no feasible sphere size found");
}

EmbeddedSurface gadget_sphere(int k, char variant, int ell) {
    if (k != 3) throw ParameterError("gadget spheres are built exactly for k = 3");
    if (variant != 'a' && variant != 'b') throw ParameterError("gadget variant must be 'a' or 'b'");
    if (variant == 'a' && ell < 2) throw ParameterError("variant 'a' needs l >= 2");
    if (variant == 'b' && ell < 3) throw ParameterError("variant 'b' needs l >= 3");

    static std::mutex mtx;
    static std::map<std::pair<char, int>, EmbeddedSurface> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({variant, ell});
    if (it != cache.end()) return it->second;

    const int first = variant == 'a' ? 2 : 3;
    BlowUp host = complete_kpartite(3, {first, ell, ell});
    oracle::SphereSearchResult found = oracle::search_spanning_sphere(host.result);
    if (found.status != oracle::SearchStatus::Found)
        throw std::logic_error("gadget sphere search failed for K(" + std::to_string(first) + "," +
                               std::to_string(ell) + "," + std::to_string(ell) + ")");
    EmbeddedSurface emb{*found.sphere, std::move(host), std::nullopt};
    requireSphere(emb, "gadget_sphere");
    cache.emplace(std::make_pair(variant, ell), emb);
    return emb;
}

EmbeddedSurface thin_path_base(int k) {
    if (k != 3) throw ParameterError("thin path base is built exactly for k = 3");
    static const EmbeddedSurface base = [] {
        BlowUp host = path_blowup(3, 4, {1, 2, 2, 1});
        oracle::SphereSearchResult found = oracle::search_spanning_sphere(host.result);
        if (found.status != oracle::SearchStatus::Found)
            throw std::logic_error("thin path sphere search failed");
        std::optional<DoubleCover> cover = check_doubly_edge_covering(*found.sphere, host);
        if (!cover) throw std::logic_error("thin path sphere has no double cover");
        EmbeddedSurface emb{*found.sphere, std::move(host), std::move(cover)};
        requireSphere(emb, "thin_path_base");
        return emb;
    }();
    return base;
}

EmbeddedSurface grow_step(const EmbeddedSurface& s) {
    const int k = s.host.base.uniformity();
    if (k != 3) throw ParameterError("grow_step is built exactly for k = 3");
    if (!is_tight_path(s.host.base) || s.host.base.vertexCount() < 4)
        throw ParameterError("grow_step needs a path blow-up host on at least k+1 base vertices");
    if (!s.cover) throw ParameterError("grow_step needs a doubly-edge-covering witness");

    const auto& a = s.host.sizes;
    const int ell = static_cast<int>(a.size());
    std::vector<int> b(static_cast<std::size_t>(ell) + 1);
    b[0] = 1;
    b[1] = a[0] + 1;
    b[2] = a[1] + 1;
    for (int j = 3; j <= ell; ++j) b[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j - 1)];
    BlowUp host = path_blowup(3, ell + 1, b);

    // Old cluster j shifts to cluster j+1; positions inside clusters are
    // preserved, the fresh vertex sits in the last slot.
    auto mapVertex = [&](int v) {
        const int cl = s.host.phi[static_cast<std::size_t>(v)];
        return host.clusterBegin(cl + 1) + (v - s.host.clusterBegin(cl));
    };
    const int w0 = host.clusterBegin(0);
    const int u = host.clusterBegin(1) + a[0];
    const int v2 = host.clusterBegin(2) + a[1];

    Triangle glue = s.cover->familyA[0];
    int p = -1, q = -1, r = -1;
    for (int vtx : glue) {
        const int cl = s.host.phi[static_cast<std::size_t>(vtx)];
        if (cl == 0) p = mapVertex(vtx);
        if (cl == 1) q = mapVertex(vtx);
        if (cl == 2) r = mapVertex(vtx);
    }
    Triangle mappedGlue{p, q, r};
    std::sort(mappedGlue.begin(), mappedGlue.end());

    std::vector<Triangle> faces;
    faces.reserve(s.surface.faceCount() + 7);
    for (const auto& f : s.surface.faces()) {
        Triangle g{mapVertex(f[0]), mapVertex(f[1]), mapVertex(f[2])};
        std::sort(g.begin(), g.end());
        if (g == mappedGlue) continue;
        faces.push_back(g);
    }
    // Octahedral cap with antipodal pairs {p,u}, {q,v2}, {w0,r}; every face
    // is a transversal of the first or second new base edge.
    faces.push_back({p, q, w0});
    faces.push_back({p, v2, w0});
    faces.push_back({u, q, w0});
    faces.push_back({u, v2, w0});
    faces.push_back({p, v2, r});
    faces.push_back({u, q, r});
    faces.push_back({u, v2, r});

    DoubleCover cover;
    cover.familyA.push_back({w0, p, q});
    cover.familyA.push_back({u, v2, r});
    cover.familyB.push_back({w0, u, v2});
    auto mapFace = [&](const Triangle& f) {
        Triangle g{mapVertex(f[0]), mapVertex(f[1]), mapVertex(f[2])};
        std::sort(g.begin(), g.end());
        return g;
    };
    for (std::size_t e = 1; e < s.cover->familyA.size(); ++e)
        cover.familyA.push_back(mapFace(s.cover->familyA[e]));
    for (const auto& f : s.cover->familyB) cover.familyB.push_back(mapFace(f));

    EmbeddedSurface out{Surface2(host.result.vertexCount(), std::move(faces)), std::move(host), std::move(cover)};
    requireSphere(out, "grow_step");
    if (!validate_double_cover(out.surface, out.host, *out.cover)) {
        // Deterministic witness update failed; fall back to the exact search.
        out.cover = check_doubly_edge_covering(out.surface, out.host);
        if (!out.cover) throw std::logic_error("grow_step lost the double cover");
    }
    return out;
}

namespace {

// Connected-sums a 3-partite closed surface (piece, spanning its own
// complete 3-partite host) onto emb at the base edge covering host clusters
// (edge, edge+1, edge+2). Piece clusters are matched to host clusters
// largest-host-to-smallest-piece, fresh vertices are merged into the host
// clusters, and the whole embedding is renumbered to the canonical layout.
EmbeddedSurface gluePieceAt(const EmbeddedSurface& emb, const Surface2& piece, const BlowUp& pieceHost,
                            int edge, int clusterBound, const char* who) {
    const int nOld = emb.surface.vertexCount();
    const auto& sizes = emb.host.sizes;

    // Lowest facet meeting all three designated clusters; faces are sorted,
    // so the first hit is lexicographically smallest.
    Triangle facet{-1, -1, -1};
    for (const auto& f : emb.surface.faces()) {
        int c0 = emb.host.phi[static_cast<std::size_t>(f[0])];
        int c1 = emb.host.phi[static_cast<std::size_t>(f[1])];
        int c2 = emb.host.phi[static_cast<std::size_t>(f[2])];
        if (c0 == edge && c1 == edge + 1 && c2 == edge + 2) {
            facet = f;
            break;
        }
    }
    if (facet[0] < 0) throw std::logic_error(std::string(who) + ": no facet over the designated clusters");

    // Host triple positions by descending size (ties by index), piece
    // clusters by ascending size: big host clusters absorb small additions.
    std::array<int, 3> hostOrder{0, 1, 2};
    std::stable_sort(hostOrder.begin(), hostOrder.end(), [&](int x, int y) {
        return sizes[static_cast<std::size_t>(edge + x)] > sizes[static_cast<std::size_t>(edge + y)];
    });
    std::array<int, 3> pieceOrder{0, 1, 2};
    std::stable_sort(pieceOrder.begin(), pieceOrder.end(), [&](int x, int y) {
        return pieceHost.sizes[static_cast<std::size_t>(x)] < pieceHost.sizes[static_cast<std::size_t>(y)];
    });
    std::array<int, 3> hostClusterOfPiece{};  // piece cluster -> absolute host cluster
    for (int i = 0; i < 3; ++i)
        hostClusterOfPiece[static_cast<std::size_t>(pieceOrder[static_cast<std::size_t>(i)])] =
            edge + hostOrder[static_cast<std::size_t>(i)];

    // Relabel the piece: its lexicographically first face is identified with
    // the facet (respecting the cluster matching), everything else is fresh.
    const Triangle& pieceFace = piece.faces().front();
    std::vector<int> perm(static_cast<std::size_t>(piece.vertexCount()), -1);
    for (int m = 0; m < 3; ++m) {
        const int pv = pieceFace[static_cast<std::size_t>(m)];  // lives in piece cluster m
        const int hostCluster = hostClusterOfPiece[static_cast<std::size_t>(m)];
        for (int fv : facet)
            if (emb.host.phi[static_cast<std::size_t>(fv)] == hostCluster) perm[static_cast<std::size_t>(pv)] = fv;
    }
    int fresh = nOld;
    std::vector<int> freshCluster;  // host cluster of each fresh vertex, by id - nOld
    for (int v = 0; v < piece.vertexCount(); ++v) {
        if (perm[static_cast<std::size_t>(v)] >= 0) continue;
        perm[static_cast<std::size_t>(v)] = fresh++;
        freshCluster.push_back(hostClusterOfPiece[static_cast<std::size_t>(pieceHost.phi[static_cast<std::size_t>(v)])]);
    }
    std::vector<Triangle> pieceFaces;
    pieceFaces.reserve(piece.faceCount());
    for (const auto& f : piece.faces())
        pieceFaces.push_back({perm[static_cast<std::size_t>(f[0])], perm[static_cast<std::size_t>(f[1])],
                              perm[static_cast<std::size_t>(f[2])]});
    Surface2 pieceWide(fresh, std::move(pieceFaces));

    const int chiBefore = euler_characteristic(emb.surface);
    const int chiPiece = euler_characteristic(piece);
    Surface2 summed = connected_sum(Surface2(fresh, std::vector<Triangle>(emb.surface.faces())), pieceWide, facet);
    if (euler_characteristic(summed) != chiBefore + chiPiece - 2)
        throw std::logic_error(std::string(who) + ": Euler characteristic additivity failed");

    // Canonical renumbering: per cluster, old vertices first (ascending),
    // then fresh ones.
    std::vector<int> newSizes = sizes;
    for (int m = 0; m < 3; ++m)
        newSizes[static_cast<std::size_t>(hostClusterOfPiece[static_cast<std::size_t>(m)])] +=
            pieceHost.sizes[static_cast<std::size_t>(m)] - 1;
    for (std::size_t c = 0; c < newSizes.size(); ++c) {
        if (newSizes[c] > clusterBound)
            throw std::logic_error(std::string(who) + ": cluster bound exceeded");
    }
    BlowUp newHost = path_blowup(3, static_cast<int>(newSizes.size()), newSizes);

    std::vector<int> clusterOf(static_cast<std::size_t>(fresh));
    for (int v = 0; v < nOld; ++v) clusterOf[static_cast<std::size_t>(v)] = emb.host.phi[static_cast<std::size_t>(v)];
    for (int v = nOld; v < fresh; ++v)
        clusterOf[static_cast<std::size_t>(v)] = freshCluster[static_cast<std::size_t>(v - nOld)];
    std::vector<int> fill(newSizes.size(), 0);
    std::vector<int> renumber(static_cast<std::size_t>(fresh));
    for (int v = 0; v < fresh; ++v) {
        const int c = clusterOf[static_cast<std::size_t>(v)];
        renumber[static_cast<std::size_t>(v)] = newHost.clusterBegin(c) + fill[static_cast<std::size_t>(c)]++;
    }
    std::vector<Triangle> faces;
    faces.reserve(summed.faceCount());
    for (const auto& f : summed.faces())
        faces.push_back({renumber[static_cast<std::size_t>(f[0])], renumber[static_cast<std::size_t>(f[1])],
                         renumber[static_cast<std::size_t>(f[2])]});

    EmbeddedSurface out{Surface2(newHost.result.vertexCount(), std::move(faces)), std::move(newHost),
                        std::nullopt};
    if (!is_spanning_in_blowup(surface_as_hypergraph(out.surface), out.host))
        throw std::logic_error(std::string(who) + ": glued surface does not span its host");
    return out;
}

EmbeddedSurface buildSphereWithReserve(int n, int extraTriples, SpherePlan& planOut) {
    auto plan = spherePlan(n, extraTriples);
    if (!plan)
        throw ParameterError("no sphere plan for n = " + std::to_string(n) +
                             " (minimum supported n is " + std::to_string(min_spanning_sphere_n()) + ")");
    planOut = *plan;

    EmbeddedSurface emb = thin_path_base(3);
    for (int i = 0; i < plan->grows; ++i) emb = grow_step(emb);

    const bool keepCover = plan->gadgets == 0;
    for (int i = 0; i < plan->gadgets; ++i) {
        EmbeddedSurface gadget = gadget_sphere(3, 'a', 3);
        emb = gluePieceAt(emb, gadget.surface, gadget.host, 3 * i, kSphereClusterBound,
                          "build_spanning_sphere");
        SurfaceClass cls = classify_surface(emb.surface);
        if (cls.kind != SurfaceKind::Sphere)
            throw std::logic_error("build_spanning_sphere: gadget glue broke the sphere");
    }
    if (keepCover && !emb.cover)
        throw std::logic_error("build_spanning_sphere: grown sphere lost its double cover");
    if (!keepCover) emb.cover.reset();
    return emb;
}

}  // namespace

EmbeddedSurface build_spanning_sphere(int k, int n) {
    if (k != 3) throw ParameterError("spanning sphere builder supports k = 3");
    if (n < kMinSphereN)
        throw ParameterError("build_spanning_sphere needs n >= " + std::to_string(kMinSphereN));
    SpherePlan plan;
    EmbeddedSurface emb = buildSphereWithReserve(n, 0, plan);
    if (emb.surface.vertexCount() != n)
        throw std::logic_error("build_spanning_sphere produced the wrong vertex count");
    if (emb.surface.faceCount() != static_cast<std::size_t>(2 * n - 4))
        throw std::logic_error("build_spanning_sphere produced the wrong face count");
    if (emb.host.maxClusterSize() > kSphereClusterBound)
        throw std::logic_error("build_spanning_sphere exceeded the cluster bound");
    requireSphere(emb, "build_spanning_sphere");
    return emb;
}

bool spanning_surface_feasible(SurfaceKind kind, int genus, int n) {
    if (kind == SurfaceKind::Sphere || (kind == SurfaceKind::Orientable && genus == 0))
        return n >= kMinSphereN && spanning_sphere_feasible(n);
    if (kind == SurfaceKind::NotAClosedSurface || genus < 0) return false;
    const int extraPer = kind == SurfaceKind::Orientable ? 6 : 9;
    const int ns = n - extraPer * genus;
    return ns >= 6 && spherePlan(ns, genus).has_value();
}

int min_spanning_surface_n(SurfaceKind kind, int genus) {
    for (int n = 6; n < 4000; ++n) {
        if (spanning_surface_feasible(kind, genus, n) && spanning_surface_feasible(kind, genus, n + 1) &&
            spanning_surface_feasible(kind, genus, n + 2))
            return n;
    }
    throw std::logic_error("no feasible surface size found");
}

int surface_cluster_bound(SurfaceKind kind) {
    return kind == SurfaceKind::NonOrientable ? 6 : kSphereClusterBound;
}

EmbeddedSurface build_spanning_surface(SurfaceKind kind, int genus, int n) {
    if (kind == SurfaceKind::NotAClosedSurface)
        throw ParameterError("cannot build a non-surface");
    if (genus < 0) throw ParameterError("genus must be non-negative");
    if (kind == SurfaceKind::Sphere || (kind == SurfaceKind::Orientable && genus == 0)) {
        if (kind == SurfaceKind::Sphere && genus != 0) throw ParameterError("a sphere has genus 0");
        return build_spanning_sphere(3, n);
    }
    if (genus == 0) throw ParameterError("non-orientable surfaces need at least one crosscap");
    if (!spanning_surface_feasible(kind, genus, n))
        throw ParameterError("no surface plan for n = " + std::to_string(n) + " (minimum supported n is " +
                             std::to_string(min_spanning_surface_n(kind, genus)) + ")");

    const Fixture& fx = fixture(kind == SurfaceKind::Orientable ? FixtureName::T9 : FixtureName::P12);
    const int extraPer = kind == SurfaceKind::Orientable ? 6 : 9;
    const int ns = n - extraPer * genus;

    SpherePlan plan;
    EmbeddedSurface emb = buildSphereWithReserve(ns, genus, plan);
    const int bound = surface_cluster_bound(kind);
    for (int i = 0; i < genus; ++i)
        emb = gluePieceAt(emb, fx.surface, fx.host, 3 * (plan.gadgets + i), bound, "build_spanning_surface");

    SurfaceClass cls = classify_surface(emb.surface);
    if (cls.kind != kind || cls.genus != genus)
        throw std::logic_error("build_spanning_surface produced the wrong classification");
    if (emb.surface.vertexCount() != n)
        throw std::logic_error("build_spanning_surface produced the wrong vertex count");
    if (emb.host.maxClusterSize() > bound)
        throw std::logic_error("build_spanning_surface exceeded the cluster bound");
    return emb;
}

}  // namespace hypersurf::builder
