#pragma once

#include <filesystem>
#include <string>

#include "patchnet/network.hpp"

namespace patchnet::io {

// On-disk form of a patch network:
//   {"corners": [{"position": [x,y,z], "normal": [x,y,z]?}, ...],
//    "faces": [[i0,i1,i2,i3], ...],
//    "options": {"twist": "zero"|"adini", "chord_scale": number,
//                "normal_policy": "prescribed"|"average_cross"|"first_slot"}}
// "options" and its keys are optional; unknown keys are rejected.
struct NetworkFile {
    std::vector<net::CornerRecord> corners;
    std::vector<net::QuadFace> faces;
    net::NetworkOptions options;
};

NetworkFile parse_network_json(const std::string& text,
                               const std::string& origin = "<string>");
NetworkFile load_network_json(const std::filesystem::path& path);

std::string network_to_json(const NetworkFile& file);
void save_network_json(const NetworkFile& file,
                       const std::filesystem::path& path);

}  // namespace patchnet::io
