#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "patchnet/errors.hpp"
#include "patchnet/network.hpp"
#include "patchnet/network_json.hpp"
#include "patchnet/obj_io.hpp"
#include "patchnet/projective.hpp"
#include "patchnet/tessellate.hpp"
#include "support/oracles.hpp"

using namespace patchnet;
using namespace patchnet::io;

namespace {

hermite::PatchGeometry planar_patch() {
    hermite::PatchCornerGrid grid{};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            grid[a][b].position = {double(a), double(b), 0.0};
            grid[a][b].du = {1, 0, 0};
            grid[a][b].dv = {0, 1, 0};
        }
    return hermite::PatchGeometry::from_corners(grid);
}

void check_mesh_invariants(const TriangleMesh& mesh) {
    REQUIRE(mesh.normals.size() == mesh.vertices.size());
    const int nv = static_cast<int>(mesh.vertices.size());
    for (const Vec3& n : mesh.normals)
        CHECK(std::abs(norm(n) - 1.0) <= 1e-9);
    for (const auto& t : mesh.triangles) {
        for (int k = 0; k < 3; ++k) {
            CHECK(t[k] >= 0);
            CHECK(t[k] < nv);
        }
        CHECK(t[0] != t[1]);
        CHECK(t[1] != t[2]);
        CHECK(t[0] != t[2]);
    }
}

double mesh_area(const TriangleMesh& mesh) {
    double area = 0.0;
    for (const auto& t : mesh.triangles) {
        const Vec3 a = mesh.vertices[t[1]] - mesh.vertices[t[0]];
        const Vec3 b = mesh.vertices[t[2]] - mesh.vertices[t[0]];
        area += 0.5 * norm(projective::cross(a, b));
    }
    return area;
}

std::filesystem::path temp_file(const char* name) {
    const auto dir = std::filesystem::temp_directory_path() / "patchnet_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

int count_lines_with_prefix(const std::string& text, const std::string& prefix) {
    int count = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0) ++count;
    return count;
}

}  // namespace

TEST_CASE("tessellate produces the exact grid") {
    const hermite::PatchGeometry plane = planar_patch();
    const Tessellation t = tessellate(plane, 2);
    CHECK(t.mesh.vertices.size() == 9);
    CHECK(t.mesh.triangles.size() == 8);
    CHECK(t.warnings.empty());
    check_mesh_invariants(t.mesh);

    for (const Vec3& n : t.mesh.normals) {
        CHECK(n.x == doctest::Approx(0.0));
        CHECK(n.y == doctest::Approx(0.0));
        CHECK(n.z == doctest::Approx(1.0));
    }
    CHECK(mesh_area(t.mesh) == doctest::Approx(1.0).epsilon(1e-12));

    const int n = 4;
    const Tessellation t4 = tessellate(plane, n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            const Vec3 expect =
                patch_eval(plane, double(i) / n, double(j) / n);
            const Vec3 got = t4.mesh.vertices[i * (n + 1) + j];
            CHECK(norm(got - expect) == 0.0);
        }

    // Triangles wound counter-clockwise seen from the +z normal.
    for (const auto& tri : t4.mesh.triangles) {
        const Vec3 a = t4.mesh.vertices[tri[1]] - t4.mesh.vertices[tri[0]];
        const Vec3 b = t4.mesh.vertices[tri[2]] - t4.mesh.vertices[tri[0]];
        CHECK(projective::cross(a, b).z > 0.0);
    }

    CHECK_THROWS_AS(tessellate(plane, 1), InvalidIndexError);
}

TEST_CASE("tessellate patches a degenerate grid normal from a neighbor") {
    hermite::PatchCornerGrid grid{};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            grid[a][b].position = {double(a), double(b), 0.0};
            grid[a][b].du = {1, 0, 0};
            grid[a][b].dv = {0, 1, 0};
        }
    grid[0][0].du = {0, 0, 0};  // kills the normal at (u,v) = (0,0) only
    const hermite::PatchGeometry g = hermite::PatchGeometry::from_corners(grid);
    const Tessellation t = tessellate(g, 4);
    REQUIRE(t.warnings.size() == 1);
    CHECK(t.warnings[0].i == 0);
    CHECK(t.warnings[0].j == 0);
    check_mesh_invariants(t.mesh);
}

TEST_CASE("weld closes the cube tessellation watertight") {
    const net::SolvedNetwork solved = net::solve_network(net::demo_cube());
    std::vector<TriangleMesh> parts;
    for (const hermite::PatchGeometry& g : solved.patches)
        parts.push_back(tessellate(g, 4).mesh);
    const TriangleMesh merged = merge(parts);
    CHECK(merged.vertices.size() == 6 * 25);

    const WatertightReport before = check_watertight(merged);
    CHECK(before.boundary_edges > 0);
    CHECK_FALSE(before.closed());

    const TriangleMesh welded = weld_vertices(merged);
    check_mesh_invariants(welded);
    // 8 corners + 12 edges x 3 interior + 6 faces x 9 interior.
    CHECK(welded.vertices.size() == 98);
    CHECK(welded.triangles.size() == 192);
    const WatertightReport after = check_watertight(welded);
    CHECK(after.closed());
    CHECK(after.boundary_edges == 0);
    CHECK(after.nonmanifold_edges == 0);
    // Euler characteristic of the sphere: V - E + F = 2.
    CHECK(int(welded.vertices.size()) - after.interior_edges +
              int(welded.triangles.size()) ==
          2);
}

TEST_CASE("obj export format") {
    TriangleMesh tri;
    tri.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
    tri.normals = {{0, 0, 1}, {0, 0, 1}, {0, 0, 1}};
    tri.triangles = {{0, 1, 2}};
    const std::string text = obj_to_string({tri});
    CHECK(count_lines_with_prefix(text, "v ") == 3);
    CHECK(count_lines_with_prefix(text, "vn ") == 3);
    CHECK(count_lines_with_prefix(text, "f ") == 1);
    CHECK(text.find("f 1//1 2//2 3//3\n") != std::string::npos);
    CHECK(text.find("\r") == std::string::npos);

    // Two 9-vertex meshes: the second one's faces use indices 10..18.
    TriangleMesh nine;
    for (int i = 0; i < 9; ++i) {
        nine.vertices.push_back({double(i), 0, 0});
        nine.normals.push_back({0, 0, 1});
    }
    nine.triangles = {{0, 1, 2}, {6, 7, 8}};
    const std::string two = obj_to_string({nine, nine});
    CHECK(count_lines_with_prefix(two, "v ") == 18);
    CHECK(two.find("f 10//10 11//11 12//12\n") != std::string::npos);
    CHECK(two.find("f 16//16 17//17 18//18\n") != std::string::npos);
}

TEST_CASE("obj export is deterministic and round-trips coordinates") {
    const net::SolvedNetwork solved = net::solve_network(net::demo_cube());
    std::vector<TriangleMesh> parts;
    for (const hermite::PatchGeometry& g : solved.patches)
        parts.push_back(tessellate(g, 3).mesh);

    const std::string once = obj_to_string(parts);
    const std::string twice = obj_to_string(parts);
    CHECK(once == twice);

    // Re-read the v lines and compare at 9 significant digits.
    std::istringstream in(once);
    std::string line;
    std::size_t vi = 0;
    const TriangleMesh merged = merge(parts);
    while (std::getline(in, line)) {
        if (line.rfind("v ", 0) != 0) continue;
        double x, y, z;
        REQUIRE(std::sscanf(line.c_str(), "v %lf %lf %lf", &x, &y, &z) == 3);
        REQUIRE(vi < merged.vertices.size());
        const Vec3& expect = merged.vertices[vi++];
        CHECK(std::abs(x - expect.x) <= 1e-8 * std::max(1.0, std::abs(expect.x)));
        CHECK(std::abs(y - expect.y) <= 1e-8 * std::max(1.0, std::abs(expect.y)));
        CHECK(std::abs(z - expect.z) <= 1e-8 * std::max(1.0, std::abs(expect.z)));
    }
    CHECK(vi == merged.vertices.size());

    const auto path = temp_file("roundtrip.obj");
    export_obj(parts, path);
    std::ifstream file(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    CHECK(buffer.str() == once);
    std::filesystem::remove(path);
}

TEST_CASE("network json parses the schema with defaults") {
    const std::string minimal = R"({
      "corners": [
        {"position": [0,0,0]}, {"position": [1,0,0]},
        {"position": [1,1,0]}, {"position": [0,1,0]}
      ],
      "faces": [[0,1,2,3]]
    })";
    const NetworkFile file = parse_network_json(minimal);
    CHECK(file.corners.size() == 4);
    CHECK(file.faces.size() == 1);
    CHECK_FALSE(file.corners[0].normal.has_value());
    CHECK(file.options.twist == net::TwistKind::Zero);
    CHECK(file.options.chord_scale == 1.0);
    CHECK(file.options.normal_mode == continuity::NormalMode::Auto);
}

TEST_CASE("network json rejects malformed input") {
    CHECK_THROWS_AS(parse_network_json("{"), ParseError);
    CHECK_THROWS_AS(parse_network_json("[1,2,3]"), SchemaError);
    CHECK_THROWS_AS(parse_network_json(R"({"faces": []})"), SchemaError);
    CHECK_THROWS_AS(parse_network_json(R"({"corners": []})"), SchemaError);
    CHECK_THROWS_AS(
        parse_network_json(
            R"({"corners": [{"position": [0,0,0]}], "faces": [[0,1,2]]})"),
        SchemaError);
    CHECK_THROWS_AS(
        parse_network_json(
            R"({"corners": [{"position": [0,0]}], "faces": []})"),
        SchemaError);
    CHECK_THROWS_AS(
        parse_network_json(
            R"({"corners": [], "faces": [], "extra": 1})"),
        SchemaError);
    CHECK_THROWS_AS(
        parse_network_json(
            R"({"corners": [{"position": [0,0,0], "color": 3}], "faces": []})"),
        SchemaError);
    CHECK_THROWS_AS(
        parse_network_json(
            R"({"corners": [], "faces": [], "options": {"twist": "cubic"}})"),
        SchemaError);
    CHECK_THROWS_AS(
        parse_network_json(
            R"({"corners": [], "faces": [], "options": {"speed": 9}})"),
        SchemaError);
}

TEST_CASE("network json round trip is exact") {
    std::mt19937_64 rng(101);
    NetworkFile file;
    for (int i = 0; i < 5; ++i) {
        net::CornerRecord c;
        c.position = {testsupport::uniform(rng, -3, 3),
                      testsupport::uniform(rng, -3, 3),
                      testsupport::uniform(rng, -3, 3)};
        if (i % 2 == 0) {
            Vec3 n = {testsupport::uniform(rng, -1, 1),
                      testsupport::uniform(rng, -1, 1),
                      testsupport::uniform(rng, -1, 1)};
            c.normal = n / norm(n);
        }
        file.corners.push_back(c);
    }
    file.faces.push_back({{0, 1, 2, 3}});
    file.options.twist = net::TwistKind::Adini;
    file.options.chord_scale = 0.75;
    file.options.normal_mode = continuity::NormalMode::AverageCross;

    const NetworkFile back = parse_network_json(network_to_json(file));
    REQUIRE(back.corners.size() == file.corners.size());
    for (std::size_t i = 0; i < file.corners.size(); ++i) {
        CHECK(back.corners[i].position == file.corners[i].position);
        CHECK(back.corners[i].normal.has_value() ==
              file.corners[i].normal.has_value());
        if (file.corners[i].normal)
            CHECK(*back.corners[i].normal == *file.corners[i].normal);
    }
    REQUIRE(back.faces.size() == 1);
    CHECK(back.faces[0].corner == file.faces[0].corner);
    CHECK(back.options.twist == file.options.twist);
    CHECK(back.options.chord_scale == file.options.chord_scale);
    CHECK(back.options.normal_mode == file.options.normal_mode);
}

TEST_CASE("shipped cube.json matches the programmatic demo") {
    const NetworkFile file =
        load_network_json(std::filesystem::path(PATCHNET_DATA_DIR) /
                          "cube.json");
    const net::PatchNetwork demo = net::demo_cube();
    REQUIRE(file.corners.size() == demo.corners.size());
    for (std::size_t i = 0; i < demo.corners.size(); ++i) {
        CHECK(file.corners[i].position == demo.corners[i].position);
        REQUIRE(file.corners[i].normal.has_value());
        CHECK(*file.corners[i].normal == *demo.corners[i].normal);
    }
    REQUIRE(file.faces.size() == demo.faces.size());
    for (std::size_t i = 0; i < demo.faces.size(); ++i)
        CHECK(file.faces[i].corner == demo.faces[i].corner);
}
