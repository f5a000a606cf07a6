#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "patchnet/tessellate.hpp"

namespace patchnet::io {

// Wavefront OBJ with per-vertex normals: v/vn lines followed by
// f a//a b//b c//c faces, 1-based, meshes concatenated with offset
// indices. Numbers carry 9 significant digits, LF line endings.
std::string obj_to_string(const std::vector<TriangleMesh>& meshes);

void export_obj(const std::vector<TriangleMesh>& meshes,
                const std::filesystem::path& path);

}  // namespace patchnet::io
