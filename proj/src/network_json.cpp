#include "patchnet/network_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "patchnet/errors.hpp"

namespace patchnet::io {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& object, const char* where,
                         std::initializer_list<const char*> known) {
    for (const auto& item : object.items()) {
        bool ok = false;
        for (const char* k : known)
            if (item.key() == k) ok = true;
        if (!ok)
            throw SchemaError(std::string(where) + ": unknown key '" +
                              item.key() + "'");
    }
}

Vec3 parse_vec3(const json& value, const std::string& where) {
    if (!value.is_array() || value.size() != 3)
        throw SchemaError(where + " must be an array of 3 numbers");
    for (const auto& c : value)
        if (!c.is_number())
            throw SchemaError(where + " must contain numbers only");
    return {value[0].get<double>(), value[1].get<double>(),
            value[2].get<double>()};
}

continuity::NormalMode parse_normal_policy(const std::string& s) {
    if (s == "prescribed") return continuity::NormalMode::Prescribed;
    if (s == "average_cross") return continuity::NormalMode::AverageCross;
    if (s == "first_slot") return continuity::NormalMode::FirstSlot;
    throw SchemaError("options.normal_policy must be 'prescribed', "
                      "'average_cross' or 'first_slot', got '" + s + "'");
}

}  // namespace

NetworkFile parse_network_json(const std::string& text,
                               const std::string& origin) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
    if (!root.is_object())
        throw SchemaError(origin + ": top level must be an object");
    reject_unknown_keys(root, "top level", {"corners", "faces", "options"});
    if (!root.contains("corners"))
        throw SchemaError(origin + ": missing required key 'corners'");
    if (!root.contains("faces"))
        throw SchemaError(origin + ": missing required key 'faces'");

    NetworkFile out;

    const json& corners = root["corners"];
    if (!corners.is_array())
        throw SchemaError("'corners' must be an array");
    for (std::size_t i = 0; i < corners.size(); ++i) {
        const json& c = corners[i];
        const std::string where = "corners[" + std::to_string(i) + "]";
        if (!c.is_object())
            throw SchemaError(where + " must be an object");
        reject_unknown_keys(c, where.c_str(), {"position", "normal"});
        if (!c.contains("position"))
            throw SchemaError(where + " is missing 'position'");
        net::CornerRecord record;
        record.position = parse_vec3(c["position"], where + ".position");
        if (c.contains("normal"))
            record.normal = parse_vec3(c["normal"], where + ".normal");
        out.corners.push_back(record);
    }

    const json& faces = root["faces"];
    if (!faces.is_array())
        throw SchemaError("'faces' must be an array");
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const json& f = faces[i];
        const std::string where = "faces[" + std::to_string(i) + "]";
        if (!f.is_array() || f.size() != 4)
            throw SchemaError(where + " must be an array of 4 corner indices");
        net::QuadFace face;
        for (int k = 0; k < 4; ++k) {
            if (!f[k].is_number_integer())
                throw SchemaError(where + " must contain integer indices");
            face.corner[k] = f[k].get<int>();
        }
        out.faces.push_back(face);
    }

    if (root.contains("options")) {
        const json& options = root["options"];
        if (!options.is_object())
            throw SchemaError("'options' must be an object");
        reject_unknown_keys(options, "options",
                            {"twist", "chord_scale", "normal_policy"});
        if (options.contains("twist")) {
            if (!options["twist"].is_string())
                throw SchemaError("options.twist must be a string");
            const std::string t = options["twist"].get<std::string>();
            if (t == "zero")
                out.options.twist = net::TwistKind::Zero;
            else if (t == "adini")
                out.options.twist = net::TwistKind::Adini;
            else
                throw SchemaError("options.twist must be 'zero' or 'adini', "
                                  "got '" + t + "'");
        }
        if (options.contains("chord_scale")) {
            if (!options["chord_scale"].is_number())
                throw SchemaError("options.chord_scale must be a number");
            out.options.chord_scale = options["chord_scale"].get<double>();
        }
        if (options.contains("normal_policy")) {
            if (!options["normal_policy"].is_string())
                throw SchemaError("options.normal_policy must be a string");
            out.options.normal_mode =
                parse_normal_policy(options["normal_policy"].get<std::string>());
        }
    }
    return out;
}

NetworkFile load_network_json(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_network_json(buffer.str(), path.string());
}

std::string network_to_json(const NetworkFile& file) {
    json root;
    root["corners"] = json::array();
    for (const net::CornerRecord& c : file.corners) {
        json corner;
        corner["position"] = {c.position.x, c.position.y, c.position.z};
        if (c.normal)
            corner["normal"] = {c.normal->x, c.normal->y, c.normal->z};
        root["corners"].push_back(corner);
    }
    root["faces"] = json::array();
    for (const net::QuadFace& f : file.faces)
        root["faces"].push_back({f.corner[0], f.corner[1], f.corner[2],
                                 f.corner[3]});
    json options;
    options["twist"] =
        file.options.twist == net::TwistKind::Adini ? "adini" : "zero";
    options["chord_scale"] = file.options.chord_scale;
    switch (file.options.normal_mode) {
        case continuity::NormalMode::Prescribed:
            options["normal_policy"] = "prescribed";
            break;
        case continuity::NormalMode::AverageCross:
            options["normal_policy"] = "average_cross";
            break;
        case continuity::NormalMode::FirstSlot:
            options["normal_policy"] = "first_slot";
            break;
        case continuity::NormalMode::Auto:
            break;  // the default; leave unset
    }
    root["options"] = options;
    return root.dump(2) + "\n";
}

void save_network_json(const NetworkFile& file,
                       const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    const std::string text = network_to_json(file);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out)
        throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace patchnet::io
