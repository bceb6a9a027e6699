#include <array>

#include "hypersurf/constructions.hpp"
#include "hypersurf/error.hpp"

namespace hypersurf {

namespace {

// Face lists in the labelling of the source figure (1-based). T9 is the
// 3x3 grid torus (each grid square cut along its up-right diagonal, rows and
// columns wrapping); P12 is the 12-vertex triangulated projective plane with
// antipodally identified boundary.
constexpr std::array<std::array<int, 3>, 18> kT9Faces = {{
    {1, 4, 6}, {1, 3, 6}, {3, 5, 6}, {2, 3, 5}, {2, 4, 5}, {1, 2, 4},
    {4, 7, 9}, {4, 6, 9}, {6, 8, 9}, {5, 6, 8}, {5, 7, 8}, {4, 5, 7},
    {1, 3, 7}, {3, 7, 9}, {2, 3, 9}, {2, 8, 9}, {1, 2, 8}, {1, 7, 8},
}};

constexpr std::array<std::array<int, 3>, 22> kP12Faces = {{
    {1, 4, 7},  {1, 3, 4},   {4, 7, 8},  {4, 5, 8},  {4, 5, 6},  {3, 4, 6},
    {2, 3, 6},  {2, 6, 10},  {6, 9, 10}, {5, 6, 9},  {1, 9, 10}, {1, 2, 10},
    {1, 5, 9},  {1, 5, 11},  {5, 11, 12}, {3, 11, 12}, {1, 3, 11}, {2, 5, 12},
    {2, 3, 12}, {1, 2, 7},   {2, 7, 8},  {2, 5, 8},
}};

// Proper 3-colourings from the figure; the colour classes are the clusters
// of the host blow-ups.
constexpr std::array<std::array<int, 3>, 3> kT9Classes = {{{1, 5, 9}, {2, 6, 7}, {3, 4, 8}}};
constexpr std::array<std::array<int, 4>, 3> kP12Classes = {{{1, 6, 8, 12}, {2, 4, 9, 11}, {3, 5, 7, 10}}};

template <std::size_t NF, std::size_t NC>
Fixture buildFixture(const std::array<std::array<int, 3>, NF>& labelFaces,
                     const std::array<std::array<int, NC>, 3>& classes) {
    const int n = static_cast<int>(3 * NC);
    std::vector<int> toCluster(static_cast<std::size_t>(n) + 1, -1);
    int next = 0;
    for (const auto& cls : classes)
        for (int label : cls) toCluster[static_cast<std::size_t>(label)] = next++;

    std::vector<Triangle> faces;
    faces.reserve(NF);
    for (const auto& f : labelFaces)
        faces.push_back({toCluster[static_cast<std::size_t>(f[0])], toCluster[static_cast<std::size_t>(f[1])],
                         toCluster[static_cast<std::size_t>(f[2])]});

    BlowUp host = path_blowup(3, 3, {static_cast<int>(NC), static_cast<int>(NC), static_cast<int>(NC)});
    return Fixture{Surface2(n, std::move(faces)), std::move(host)};
}

void requireClass(const Fixture& fx, SurfaceKind kind, int genus, const char* name) {
    SurfaceClass cls = classify_surface(fx.surface);
    if (cls.kind != kind || cls.genus != genus)
        throw std::logic_error(std::string("fixture ") + name + " failed its classification check");
    std::vector<int> flat;
    for (const auto& f : fx.surface.faces()) flat.insert(flat.end(), f.begin(), f.end());
    Hypergraph h(3, fx.surface.vertexCount(), std::move(flat));
    if (!is_spanning_in_blowup(h, fx.host))
        throw std::logic_error(std::string("fixture ") + name + " does not span its host");
}

}  // namespace

const Fixture& fixture(FixtureName name) {
    static const Fixture t9 = [] {
        Fixture fx = buildFixture(kT9Faces, kT9Classes);
        requireClass(fx, SurfaceKind::Orientable, 1, "T9");
        return fx;
    }();
    static const Fixture p12 = [] {
        Fixture fx = buildFixture(kP12Faces, kP12Classes);
        requireClass(fx, SurfaceKind::NonOrientable, 1, "P12");
        return fx;
    }();
    return name == FixtureName::T9 ? t9 : p12;
}

}  // namespace hypersurf
