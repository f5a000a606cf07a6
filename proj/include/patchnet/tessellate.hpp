#pragma once

#include <array>
#include <vector>

#include "patchnet/geom.hpp"
#include "patchnet/hermite.hpp"

namespace patchnet::io {

struct TriangleMesh {
    std::vector<Vec3> vertices;
    std::vector<Vec3> normals;  // unit, parallel to vertices
    std::vector<std::array<int, 3>> triangles;
};

// Grid node whose normal was degenerate and copied from a neighbor.
struct GridWarning {
    int i = 0, j = 0;
};

struct Tessellation {
    TriangleMesh mesh;
    std::vector<GridWarning> warnings;
};

// Uniform (resolution+1)^2 grid over the patch: vertex (i, j) is
// patch_eval(i/n, j/n) laid out at index i*(n+1)+j, triangles wound
// counter-clockwise as seen from the normal side. resolution >= 2.
Tessellation tessellate(const hermite::PatchGeometry& g, int resolution);

// Concatenates meshes, offsetting triangle indices.
TriangleMesh merge(const std::vector<TriangleMesh>& meshes);

// Merges vertices closer than tol (first occurrence wins, including its
// normal) and drops triangles that collapse. Deterministic.
TriangleMesh weld_vertices(const TriangleMesh& mesh, double tol = 1e-9);

struct WatertightReport {
    int interior_edges = 0;     // shared by exactly 2 triangles
    int boundary_edges = 0;     // used once
    int nonmanifold_edges = 0;  // used 3+ times

    bool closed() const { return boundary_edges == 0 && nonmanifold_edges == 0; }
};

WatertightReport check_watertight(const TriangleMesh& mesh);

}  // namespace patchnet::io
