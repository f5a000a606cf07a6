#include "patchnet/tessellate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "patchnet/errors.hpp"

namespace patchnet::io {

Tessellation tessellate(const hermite::PatchGeometry& g, int resolution) {
    if (resolution < 2)
        throw InvalidIndexError("tessellation resolution must be >= 2, got " +
                                std::to_string(resolution));
    const int n = resolution;
    const int stride = n + 1;

    Tessellation out;
    TriangleMesh& mesh = out.mesh;
    mesh.vertices.resize(stride * stride);
    mesh.normals.resize(stride * stride);

    std::vector<char> valid(stride * stride, 0);
    for (int i = 0; i <= n; ++i) {
        const double u = double(i) / double(n);
        for (int j = 0; j <= n; ++j) {
            const double v = double(j) / double(n);
            const int idx = i * stride + j;
            mesh.vertices[idx] = patch_eval(g, u, v);
            try {
                const Vec3 nrm = patch_normal(g, u, v);
                mesh.normals[idx] = nrm / norm(nrm);
                valid[idx] = 1;
            } catch (const DegenerateTangentsError&) {
                out.warnings.push_back({i, j});
            }
        }
    }

    // Fill degenerate nodes from the nearest valid grid neighbor
    // (expanding rings, fixed scan order).
    if (!out.warnings.empty()) {
        bool any_valid =
            std::any_of(valid.begin(), valid.end(), [](char c) { return c != 0; });
        if (!any_valid)
            throw DegenerateTangentsError(
                "patch has no valid normal anywhere on the grid");
        for (const GridWarning& w : out.warnings) {
            bool filled = false;
            for (int r = 1; r <= n && !filled; ++r) {
                for (int di = -r; di <= r && !filled; ++di) {
                    for (int dj = -r; dj <= r && !filled; ++dj) {
                        if (std::max(std::abs(di), std::abs(dj)) != r) continue;
                        const int ii = w.i + di, jj = w.j + dj;
                        if (ii < 0 || ii > n || jj < 0 || jj > n) continue;
                        const int src = ii * stride + jj;
                        if (valid[src]) {
                            mesh.normals[w.i * stride + w.j] = mesh.normals[src];
                            filled = true;
                        }
                    }
                }
            }
        }
    }

    mesh.triangles.reserve(2 * n * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int v00 = i * stride + j;
            const int v10 = (i + 1) * stride + j;
            const int v11 = (i + 1) * stride + j + 1;
            const int v01 = i * stride + j + 1;
            mesh.triangles.push_back({v00, v10, v11});
            mesh.triangles.push_back({v00, v11, v01});
        }
    }
    return out;
}

TriangleMesh merge(const std::vector<TriangleMesh>& meshes) {
    TriangleMesh out;
    for (const TriangleMesh& m : meshes) {
        const int offset = static_cast<int>(out.vertices.size());
        out.vertices.insert(out.vertices.end(), m.vertices.begin(),
                            m.vertices.end());
        out.normals.insert(out.normals.end(), m.normals.begin(),
                           m.normals.end());
        for (const auto& t : m.triangles)
            out.triangles.push_back({t[0] + offset, t[1] + offset, t[2] + offset});
    }
    return out;
}

namespace {

struct CellKey {
    std::int64_t x, y, z;
    bool operator==(const CellKey&) const = default;
};

struct CellHash {
    std::size_t operator()(const CellKey& k) const {
        std::size_t h = std::hash<std::int64_t>()(k.x);
        h = h * 1000003u ^ std::hash<std::int64_t>()(k.y);
        h = h * 1000003u ^ std::hash<std::int64_t>()(k.z);
        return h;
    }
};

int find_root(std::vector<int>& parent, int i) {
    while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    return i;
}

// Union keeping the smaller index as root, so the representative of every
// group is its first occurrence.
void unite(std::vector<int>& parent, int a, int b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a == b) return;
    if (a < b)
        parent[b] = a;
    else
        parent[a] = b;
}

}  // namespace

TriangleMesh weld_vertices(const TriangleMesh& mesh, double tol) {
    const int nv = static_cast<int>(mesh.vertices.size());
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);

    // Spatial hash with tol-sized cells; candidates can sit in any of the
    // 27 neighboring cells.
    std::unordered_map<CellKey, std::vector<int>, CellHash> cells;
    const double inv = 1.0 / tol;
    const double tol2 = tol * tol;
    for (int i = 0; i < nv; ++i) {
        const Vec3& p = mesh.vertices[i];
        const CellKey key{static_cast<std::int64_t>(std::floor(p.x * inv)),
                          static_cast<std::int64_t>(std::floor(p.y * inv)),
                          static_cast<std::int64_t>(std::floor(p.z * inv))};
        for (std::int64_t dx = -1; dx <= 1; ++dx)
            for (std::int64_t dy = -1; dy <= 1; ++dy)
                for (std::int64_t dz = -1; dz <= 1; ++dz) {
                    auto it = cells.find({key.x + dx, key.y + dy, key.z + dz});
                    if (it == cells.end()) continue;
                    for (int j : it->second)
                        if (norm_squared(p - mesh.vertices[j]) <= tol2)
                            unite(parent, i, j);
                }
        cells[key].push_back(i);
    }

    std::vector<int> remap(nv, -1);
    TriangleMesh out;
    for (int i = 0; i < nv; ++i) {
        const int root = find_root(parent, i);
        if (remap[root] < 0) {
            remap[root] = static_cast<int>(out.vertices.size());
            out.vertices.push_back(mesh.vertices[root]);
            out.normals.push_back(mesh.normals[root]);
        }
        remap[i] = remap[root];
    }
    for (const auto& t : mesh.triangles) {
        const std::array<int, 3> w{remap[t[0]], remap[t[1]], remap[t[2]]};
        if (w[0] == w[1] || w[1] == w[2] || w[0] == w[2]) continue;
        out.triangles.push_back(w);
    }
    return out;
}

WatertightReport check_watertight(const TriangleMesh& mesh) {
    std::map<std::pair<int, int>, int> count;
    for (const auto& t : mesh.triangles)
        for (int k = 0; k < 3; ++k) {
            const int a = t[k], b = t[(k + 1) % 3];
            ++count[{std::min(a, b), std::max(a, b)}];
        }
    WatertightReport report;
    for (const auto& [edge, c] : count) {
        if (c == 1)
            ++report.boundary_edges;
        else if (c == 2)
            ++report.interior_edges;
        else
            ++report.nonmanifold_edges;
    }
    return report;
}

}  // namespace patchnet::io
