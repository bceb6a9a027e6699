#pragma once

#include <array>
#include <string>
#include <vector>

namespace hypersurf {

using Triangle = std::array<int, 3>;

// Pure 2-dimensional simplicial complex given by its triangles. Faces are
// kept ascending and lexicographically sorted, mirroring Hypergraph.
class Surface2 {
public:
    Surface2(int n, std::vector<Triangle> faces);

    int vertexCount() const { return n_; }
    const std::vector<Triangle>& faces() const { return faces_; }
    std::size_t faceCount() const { return faces_.size(); }
    bool hasFace(const Triangle& t) const;

    // Vertices incident to at least one face, ascending.
    std::vector<int> supportVertices() const;
    // Distinct 2-subsets of faces, each paired with the indices of the faces
    // containing it (sorted by edge).
    std::vector<std::pair<std::array<int, 2>, std::vector<int>>> edgeFaceIncidence() const;

    bool operator==(const Surface2&) const = default;

private:
    int n_;
    std::vector<Triangle> faces_;
};

enum class SurfaceKind { Sphere, Orientable, NonOrientable, NotAClosedSurface };

std::string to_string(SurfaceKind k);

// Classification outcome: orientable surfaces satisfy chi = 2 - 2*genus,
// non-orientable ones chi = 2 - genus (crosscap count). The sphere is the
// orientable genus-0 case.
struct SurfaceClass {
    SurfaceKind kind = SurfaceKind::NotAClosedSurface;
    int genus = 0;
    int euler = 0;

    bool operator==(const SurfaceClass&) const = default;
};

struct ClosedSurfaceCheck {
    bool closed = false;
    std::string reason;  // empty when closed
};

// Closed-2-manifold test: every edge in exactly two faces, every vertex link
// a single cycle, face-adjacency connected. Throws ParameterError on an
// empty face set.
ClosedSurfaceCheck check_closed_surface(const Surface2& s);

// v - e + f over the support of the complex.
int euler_characteristic(const Surface2& s);

SurfaceClass classify_surface(const Surface2& s);

// Connected sum: requires s and t to be closed surfaces intersecting in
// exactly the face f (and its sub-simplices); returns their union minus f.
Surface2 connected_sum(const Surface2& s, const Surface2& t, const Triangle& f);

// Relabels t so that faceT lands on faceS and every other vertex of t gets a
// fresh index above s's vertex range; the result is ready for connected_sum.
Surface2 relabel_for_sum(const Surface2& s, const Surface2& t, const Triangle& faceS, const Triangle& faceT);

// Applies a vertex permutation (perm[v] = new label of v) to all faces.
Surface2 relabel_surface(const Surface2& s, const std::vector<int>& perm);

// Counting obstruction: a spanning genus-g surface cannot exist over a part
// X whose vertices never share a face, if x > 2y - 4 + 4g.
bool euler_obstruction(std::int64_t x, std::int64_t y, std::int64_t g);

}  // namespace hypersurf
