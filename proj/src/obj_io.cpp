#include "patchnet/obj_io.hpp"

#include <cstdio>
#include <fstream>

#include "patchnet/errors.hpp"

namespace patchnet::io {

namespace {

// Avoid "-0" in the output.
double clean(double v) { return v == 0.0 ? 0.0 : v; }

void append_vec(std::string& out, const char* tag, const Vec3& v) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s %.9g %.9g %.9g\n", tag, clean(v.x),
                  clean(v.y), clean(v.z));
    out += buf;
}

}  // namespace

std::string obj_to_string(const std::vector<TriangleMesh>& meshes) {
    std::string out;
    int offset = 0;
    for (const TriangleMesh& mesh : meshes) {
        for (const Vec3& v : mesh.vertices) append_vec(out, "v", v);
        for (const Vec3& n : mesh.normals) append_vec(out, "vn", n);
        for (const auto& t : mesh.triangles) {
            char buf[96];
            const int a = t[0] + offset + 1;
            const int b = t[1] + offset + 1;
            const int c = t[2] + offset + 1;
            std::snprintf(buf, sizeof buf, "f %d//%d %d//%d %d//%d\n", a, a, b,
                          b, c, c);
            out += buf;
        }
        offset += static_cast<int>(mesh.vertices.size());
    }
    return out;
}

void export_obj(const std::vector<TriangleMesh>& meshes,
                const std::filesystem::path& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw IoError("cannot open '" + path.string() + "' for writing");
    const std::string text = obj_to_string(meshes);
    file.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!file)
        throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace patchnet::io
