#include "hypersurf/surface.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "hypersurf/error.hpp"

namespace hypersurf {

Surface2::Surface2(int n, std::vector<Triangle> faces) : n_(n), faces_(std::move(faces)) {
    if (n_ < 0) throw ParameterError("vertex count must be non-negative");
    for (auto& f : faces_) {
        std::sort(f.begin(), f.end());
        if (f[0] == f[1] || f[1] == f[2]) throw ParameterError("face with repeated vertex");
        if (f[0] < 0 || f[2] >= n_) throw ParameterError("face vertex out of range");
    }
    std::sort(faces_.begin(), faces_.end());
    for (std::size_t i = 1; i < faces_.size(); ++i)
        if (faces_[i] == faces_[i - 1]) throw ParameterError("duplicate face");
}

bool Surface2::hasFace(const Triangle& t) const {
    Triangle s = t;
    std::sort(s.begin(), s.end());
    return std::binary_search(faces_.begin(), faces_.end(), s);
}

std::vector<int> Surface2::supportVertices() const {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (const auto& f : faces_)
        for (int v : f) seen[static_cast<std::size_t>(v)] = 1;
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (seen[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

std::vector<std::pair<std::array<int, 2>, std::vector<int>>> Surface2::edgeFaceIncidence() const {
    std::map<std::array<int, 2>, std::vector<int>> inc;
    for (std::size_t i = 0; i < faces_.size(); ++i) {
        const auto& f = faces_[i];
        inc[{f[0], f[1]}].push_back(static_cast<int>(i));
        inc[{f[0], f[2]}].push_back(static_cast<int>(i));
        inc[{f[1], f[2]}].push_back(static_cast<int>(i));
    }
    return {inc.begin(), inc.end()};
}

std::string to_string(SurfaceKind k) {
    switch (k) {
        case SurfaceKind::Sphere: return "sphere";
        case SurfaceKind::Orientable: return "orientable";
        case SurfaceKind::NonOrientable: return "nonorientable";
        case SurfaceKind::NotAClosedSurface: return "notaclosedsurface";
    }
    return "?";
}

namespace {

// Link of v: graph on the other vertices of the faces at v. A closed
// surface needs this to be one cycle through all of them.
bool linkIsSingleCycle(const std::vector<std::array<int, 2>>& linkEdges) {
    if (linkEdges.size() < 3) return false;
    std::map<int, std::vector<int>> adj;
    for (const auto& e : linkEdges) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    for (const auto& [v, nb] : adj)
        if (nb.size() != 2) return false;
    if (adj.size() != linkEdges.size()) return false;  // cycle: #vertices == #edges
    // Walk the cycle from the smallest vertex and require full coverage.
    const int start = adj.begin()->first;
    int prev = start;
    int cur = adj[start][0];
    std::size_t visited = 1;
    while (cur != start) {
        const auto& nb = adj[cur];
        int next = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        ++visited;
        if (visited > adj.size()) return false;
    }
    return visited == adj.size();
}

}  // namespace

ClosedSurfaceCheck check_closed_surface(const Surface2& s) {
    if (s.faceCount() == 0) throw ParameterError("closed-surface check on an empty complex");

    auto incidence = s.edgeFaceIncidence();
    for (const auto& [edge, fs] : incidence) {
        if (fs.size() != 2)
            return {false, "edge {" + std::to_string(edge[0]) + "," + std::to_string(edge[1]) + "} lies in " +
                               std::to_string(fs.size()) + " faces, expected 2"};
    }

    // Vertex links.
    std::map<int, std::vector<std::array<int, 2>>> links;
    for (const auto& f : s.faces()) {
        links[f[0]].push_back({f[1], f[2]});
        links[f[1]].push_back({f[0], f[2]});
        links[f[2]].push_back({f[0], f[1]});
    }
    for (const auto& [v, le] : links) {
        if (!linkIsSingleCycle(le))
            return {false, "link of vertex " + std::to_string(v) + " is not a single cycle"};
    }

    // Face adjacency connectivity via shared edges.
    std::vector<int> comp(s.faceCount(), -1);
    std::vector<std::size_t> stack{0};
    comp[0] = 0;
    std::vector<std::vector<int>> nbr(s.faceCount());
    for (const auto& [edge, fs] : incidence) {
        nbr[static_cast<std::size_t>(fs[0])].push_back(fs[1]);
        nbr[static_cast<std::size_t>(fs[1])].push_back(fs[0]);
    }
    while (!stack.empty()) {
        std::size_t f = stack.back();
        stack.pop_back();
        for (int g : nbr[f]) {
            if (comp[static_cast<std::size_t>(g)] < 0) {
                comp[static_cast<std::size_t>(g)] = 0;
                stack.push_back(static_cast<std::size_t>(g));
            }
        }
    }
    for (int c : comp)
        if (c < 0) return {false, "face-adjacency graph is disconnected"};

    return {true, ""};
}

int euler_characteristic(const Surface2& s) {
    const auto v = s.supportVertices().size();
    const auto e = s.edgeFaceIncidence().size();
    const auto f = s.faceCount();
    return static_cast<int>(v) - static_cast<int>(e) + static_cast<int>(f);
}

namespace {

// Coherent-orientation attempt over the face adjacency graph. Faces are
// oriented as even (given ascending order) or odd (one swap); two faces
// sharing an edge must induce that edge in opposite directions.
bool orientable(const Surface2& s) {
    auto incidence = s.edgeFaceIncidence();
    std::vector<std::vector<std::pair<int, std::array<int, 2>>>> nbr(s.faceCount());
    for (const auto& [edge, fs] : incidence) {
        nbr[static_cast<std::size_t>(fs[0])].push_back({fs[1], edge});
        nbr[static_cast<std::size_t>(fs[1])].push_back({fs[0], edge});
    }

    // Direction in which face f (with sign +1/-1) traverses edge {u,v}:
    // for the even cyclic order (a,b,c) the directed boundary is
    // a->b, b->c, c->a; odd orientation reverses it.
    auto traversesForward = [&](int face, int sign, const std::array<int, 2>& edge) {
        const auto& f = s.faces()[static_cast<std::size_t>(face)];
        int u = edge[0], v = edge[1];
        bool fwd;
        if (u == f[0] && v == f[1]) fwd = true;        // a->b
        else if (u == f[1] && v == f[2]) fwd = true;   // b->c
        else fwd = false;                              // edge {a,c}: boundary runs c->a
        return sign > 0 ? fwd : !fwd;
    };

    std::vector<int> sign(s.faceCount(), 0);
    for (std::size_t seed = 0; seed < s.faceCount(); ++seed) {
        if (sign[seed] != 0) continue;
        sign[seed] = 1;
        std::vector<std::size_t> stack{seed};
        while (!stack.empty()) {
            std::size_t f = stack.back();
            stack.pop_back();
            for (const auto& [g, edge] : nbr[f]) {
                // Opposite induced directions = coherent.
                int needed = traversesForward(static_cast<int>(f), sign[f], edge)
                                 ? (traversesForward(g, 1, edge) ? -1 : 1)
                                 : (traversesForward(g, 1, edge) ? 1 : -1);
                auto gi = static_cast<std::size_t>(g);
                if (sign[gi] == 0) {
                    sign[gi] = needed;
                    stack.push_back(gi);
                } else if (sign[gi] != needed) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

SurfaceClass classify_surface(const Surface2& s) {
    SurfaceClass out;
    if (s.faceCount() == 0) {
        out.kind = SurfaceKind::NotAClosedSurface;
        return out;
    }
    out.euler = euler_characteristic(s);
    auto chk = check_closed_surface(s);
    if (!chk.closed) {
        out.kind = SurfaceKind::NotAClosedSurface;
        return out;
    }
    if (orientable(s)) {
        out.genus = (2 - out.euler) / 2;
        out.kind = out.euler == 2 ? SurfaceKind::Sphere : SurfaceKind::Orientable;
    } else {
        out.genus = 2 - out.euler;  // crosscap number
        out.kind = SurfaceKind::NonOrientable;
    }
    return out;
}

Surface2 connected_sum(const Surface2& s, const Surface2& t, const Triangle& f) {
    Triangle ff = f;
    std::sort(ff.begin(), ff.end());
    if (!s.hasFace(ff) || !t.hasFace(ff))
        throw ParameterError("glue face must belong to both surfaces");

    // The two complexes may only share f and its sub-simplices.
    std::set<int> sv, tv;
    for (const auto& face : s.faces())
        for (int v : face) sv.insert(v);
    for (const auto& face : t.faces())
        for (int v : face) tv.insert(v);
    std::vector<int> commonV;
    std::set_intersection(sv.begin(), sv.end(), tv.begin(), tv.end(), std::back_inserter(commonV));
    if (commonV != std::vector<int>{ff[0], ff[1], ff[2]})
        throw ParameterError("surfaces must intersect exactly in the glue face's vertices");
    std::vector<Triangle> commonF;
    std::set_intersection(s.faces().begin(), s.faces().end(), t.faces().begin(), t.faces().end(),
                          std::back_inserter(commonF));
    if (commonF != std::vector<Triangle>{ff})
        throw ParameterError("surfaces must intersect exactly in the glue face");
    // Shared edges must be exactly the three sides of f. Any other shared
    // pair would pinch the sum.
    {
        std::set<std::array<int, 2>> se, te;
        for (const auto& [e, fs] : s.edgeFaceIncidence()) se.insert(e);
        for (const auto& [e, fs] : t.edgeFaceIncidence()) te.insert(e);
        std::vector<std::array<int, 2>> commonE;
        std::set_intersection(se.begin(), se.end(), te.begin(), te.end(), std::back_inserter(commonE));
        std::vector<std::array<int, 2>> expect{{ff[0], ff[1]}, {ff[0], ff[2]}, {ff[1], ff[2]}};
        if (commonE != expect) throw ParameterError("surfaces share an edge outside the glue face");
    }
    if (!check_closed_surface(s).closed || !check_closed_surface(t).closed)
        throw ParameterError("connected sum requires two closed surfaces");

    std::vector<Triangle> faces;
    faces.reserve(s.faceCount() + t.faceCount() - 2);
    for (const auto& face : s.faces())
        if (face != ff) faces.push_back(face);
    for (const auto& face : t.faces())
        if (face != ff) faces.push_back(face);
    return Surface2(std::max(s.vertexCount(), t.vertexCount()), std::move(faces));
}

Surface2 relabel_for_sum(const Surface2& s, const Surface2& t, const Triangle& faceS, const Triangle& faceT) {
    Triangle fs = faceS, ft = faceT;
    std::sort(fs.begin(), fs.end());
    std::sort(ft.begin(), ft.end());
    if (!s.hasFace(fs)) throw ParameterError("faceS is not a face of the first surface");
    if (!t.hasFace(ft)) throw ParameterError("faceT is not a face of the second surface");

    std::vector<int> perm(static_cast<std::size_t>(t.vertexCount()), -1);
    perm[static_cast<std::size_t>(ft[0])] = fs[0];
    perm[static_cast<std::size_t>(ft[1])] = fs[1];
    perm[static_cast<std::size_t>(ft[2])] = fs[2];
    int next = s.vertexCount();
    for (int v : t.supportVertices())
        if (perm[static_cast<std::size_t>(v)] < 0) perm[static_cast<std::size_t>(v)] = next++;
    for (auto& p : perm)
        if (p < 0) p = next++;  // vertices outside the support keep fresh ids too

    std::vector<Triangle> faces;
    faces.reserve(t.faceCount());
    for (const auto& f : t.faces())
        faces.push_back({perm[static_cast<std::size_t>(f[0])], perm[static_cast<std::size_t>(f[1])],
                         perm[static_cast<std::size_t>(f[2])]});
    return Surface2(next, std::move(faces));
}

Surface2 relabel_surface(const Surface2& s, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != s.vertexCount())
        throw ParameterError("permutation size must match vertex count");
    std::vector<Triangle> faces;
    faces.reserve(s.faceCount());
    for (const auto& f : s.faces())
        faces.push_back({perm[static_cast<std::size_t>(f[0])], perm[static_cast<std::size_t>(f[1])],
                         perm[static_cast<std::size_t>(f[2])]});
    return Surface2(s.vertexCount(), std::move(faces));
}

bool euler_obstruction(std::int64_t x, std::int64_t y, std::int64_t g) {
    if (x < 0 || y < 0 || g < 0) throw ParameterError("euler_obstruction arguments must be non-negative");
    return x > 2 * y - 4 + 4 * g;
}

}  // namespace hypersurf
