#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "patchnet/errors.hpp"
#include "patchnet/network.hpp"
#include "patchnet/network_json.hpp"
#include "patchnet/obj_io.hpp"
#include "patchnet/tessellate.hpp"

namespace {

using namespace patchnet;

constexpr int kExitOk = 0;
constexpr int kExitInvariantViolation = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

constexpr double kCornerResidualTol = 1e-10;
constexpr double kC0RelTol = 1e-12;

std::vector<io::Tessellation> tessellate_all(
    const std::vector<hermite::PatchGeometry>& patches, int res,
    bool parallel) {
    std::vector<io::Tessellation> out(patches.size());
    if (!parallel || patches.size() < 2) {
        for (std::size_t i = 0; i < patches.size(); ++i)
            out[i] = io::tessellate(patches[i], res);
        return out;
    }
    const unsigned workers =
        std::min<unsigned>(std::thread::hardware_concurrency(),
                           static_cast<unsigned>(patches.size()));
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w)
        threads.emplace_back([&, w] {
            for (std::size_t i = w; i < patches.size(); i += workers)
                out[i] = io::tessellate(patches[i], res);
        });
    for (std::thread& t : threads) t.join();
    return out;
}

struct Sphericity {
    double r_min = 0.0, r_max = 0.0;
    double target = 0.0;
    double max_deviation = 0.0;
    double mid_face_deviation = 0.0;  // radial deviation at patch centers
};

Sphericity measure_sphericity(const net::SolvedNetwork& solved,
                              const io::TriangleMesh& mesh, double target) {
    Sphericity s;
    s.target = target;
    s.r_min = s.r_max = target;
    bool first = true;
    for (const Vec3& v : mesh.vertices) {
        const double r = norm(v);
        if (first) {
            s.r_min = s.r_max = r;
            first = false;
        } else {
            s.r_min = std::min(s.r_min, r);
            s.r_max = std::max(s.r_max, r);
        }
        s.max_deviation = std::max(s.max_deviation, std::abs(r - target));
    }
    for (const hermite::PatchGeometry& g : solved.patches) {
        const double r = norm(patch_eval(g, 0.5, 0.5));
        s.mid_face_deviation =
            std::max(s.mid_face_deviation, std::abs(r - target));
    }
    return s;
}

void print_verification(const net::NetworkVerification& v) {
    for (std::size_t i = 0; i < v.corner_reports.size(); ++i) {
        const auto& r = v.corner_reports[i];
        std::printf("corner %3zu: %zu slot(s), max residual %.3e%s\n", i,
                    r.slots.size(), r.max_residual,
                    r.vacuous ? " (vacuous)" : "");
    }
    std::printf("max corner residual: %.3e (tolerance %.0e) %s\n",
                v.max_corner_residual, kCornerResidualTol,
                v.max_corner_residual <= kCornerResidualTol ? "OK" : "FAIL");
    for (const net::EdgeReport& e : v.edge_reports)
        std::printf("edge %3d: C0 gap %.3e, normal deviation %.3e rad%s\n",
                    e.edge, e.c0_gap, e.normal_dev_max,
                    e.degenerate_samples > 0 ? " (degenerate samples)" : "");
    std::printf("max C0 gap: %.3e (tolerance %.0e * scale %.3g) %s\n",
                v.max_c0_gap, kC0RelTol, v.scale,
                v.max_c0_gap <= kC0RelTol * v.scale ? "OK" : "FAIL");
    std::printf("max normal deviation along edges: %.3e rad (informational)\n",
                v.max_normal_deviation);
}

nlohmann::json verification_json(const net::NetworkVerification& v) {
    nlohmann::json j;
    j["scale"] = v.scale;
    j["max_corner_residual"] = v.max_corner_residual;
    j["max_c0_gap"] = v.max_c0_gap;
    j["max_normal_deviation"] = v.max_normal_deviation;
    j["pass"] = v.pass(kCornerResidualTol, kC0RelTol);
    j["corner_residuals"] = nlohmann::json::array();
    for (const auto& r : v.corner_reports)
        j["corner_residuals"].push_back(r.max_residual);
    j["edges"] = nlohmann::json::array();
    for (const auto& e : v.edge_reports)
        j["edges"].push_back({{"edge", e.edge},
                              {"c0_gap", e.c0_gap},
                              {"normal_deviation", e.normal_dev_max},
                              {"degenerate_samples", e.degenerate_samples}});
    return j;
}

void write_json_report(const std::string& path, const nlohmann::json& j) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
}

// Shared tail of demo-cube and solve: tessellate, optionally weld, export,
// print diagnostics. A nonzero sphericity_target turns on the radial
// diagnostics of the demo.
int run_pipeline(const net::SolvedNetwork& solved, const std::string& out_path,
                 int res, bool weld, bool parallel,
                 const std::string& report_path, double sphericity_target,
                 const net::NetworkVerification& verification) {
    const auto tessellations = tessellate_all(solved.patches, res, parallel);
    std::vector<io::TriangleMesh> meshes;
    std::size_t warning_count = 0;
    for (const io::Tessellation& t : tessellations) {
        meshes.push_back(t.mesh);
        warning_count += t.warnings.size();
    }

    Sphericity sphericity_data;
    const Sphericity* sphericity = nullptr;
    if (sphericity_target > 0.0) {
        sphericity_data =
            measure_sphericity(solved, io::merge(meshes), sphericity_target);
        sphericity = &sphericity_data;
    }

    if (weld) {
        meshes = {io::weld_vertices(io::merge(meshes))};
    }
    io::export_obj(meshes, out_path);

    print_verification(verification);
    if (warning_count > 0)
        std::printf("tessellation: %zu grid normal(s) replaced from neighbors\n",
                    warning_count);
    if (sphericity) {
        std::printf("sphericity: radius min %.9g max %.9g target %.9g\n",
                    sphericity->r_min, sphericity->r_max, sphericity->target);
        std::printf("sphericity: max radial deviation %.9g, mid-face %.9g "
                    "(diagnostic)\n",
                    sphericity->max_deviation, sphericity->mid_face_deviation);
    }
    std::printf("wrote %s\n", out_path.c_str());

    if (!report_path.empty()) {
        nlohmann::json j = verification_json(verification);
        j["output"] = out_path;
        j["tessellation_warnings"] = warning_count;
        if (sphericity)
            j["sphericity"] = {{"r_min", sphericity->r_min},
                               {"r_max", sphericity->r_max},
                               {"target", sphericity->target},
                               {"max_deviation", sphericity->max_deviation},
                               {"mid_face_deviation",
                                sphericity->mid_face_deviation}};
        write_json_report(report_path, j);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Smooth bicubic Hermite patch networks over quad meshes"};
    app.require_subcommand(1);

    // demo-cube
    auto* demo = app.add_subcommand(
        "demo-cube", "Build and solve the valence-3 cube network");
    std::string demo_out, demo_out_json, demo_report;
    int demo_res = 16;
    double demo_chord = 1.0, demo_scale = 1.0;
    std::string demo_twist = "zero";
    bool demo_weld = false, demo_parallel = false;
    demo->add_option("--out", demo_out, "Output OBJ path")->required();
    demo->add_option("--res", demo_res, "Tessellation resolution per patch");
    demo->add_option("--chord-scale", demo_chord, "Seed tangent chord factor");
    demo->add_option("--twist", demo_twist, "Twist policy: zero|adini")
        ->check(CLI::IsMember({"zero", "adini"}));
    demo->add_option("--scale", demo_scale, "Cube half-extent");
    demo->add_option("--out-json", demo_out_json,
                     "Also write the network as JSON");
    demo->add_option("--json-report", demo_report,
                     "Write diagnostics as JSON to this path");
    demo->add_flag("--weld", demo_weld, "Weld shared boundary vertices");
    demo->add_flag("--parallel", demo_parallel, "Tessellate patches in parallel");

    // solve
    auto* solve = app.add_subcommand("solve", "Solve a network from JSON");
    std::string solve_in, solve_out, solve_report;
    int solve_res = 16;
    bool solve_weld = false, solve_parallel = false;
    solve->add_option("--in", solve_in, "Input network JSON")->required();
    solve->add_option("--out", solve_out, "Output OBJ path")->required();
    solve->add_option("--res", solve_res, "Tessellation resolution per patch");
    solve->add_option("--json-report", solve_report,
                      "Write diagnostics as JSON to this path");
    solve->add_flag("--weld", solve_weld, "Weld shared boundary vertices");
    solve->add_flag("--parallel", solve_parallel,
                    "Tessellate patches in parallel");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "Check corner residuals and shared-boundary gaps");
    std::string verify_in, verify_report;
    int verify_samples = 33;
    verify->add_option("--in", verify_in, "Input network JSON")->required();
    verify->add_option("--samples", verify_samples, "Samples per boundary");
    verify->add_option("--json-report", verify_report,
                       "Write diagnostics as JSON to this path");

    // eval
    auto* eval = app.add_subcommand(
        "eval", "Evaluate one face at a parameter point");
    std::string eval_in;
    int eval_face = 0;
    double eval_u = 0.0, eval_v = 0.0;
    eval->add_option("--in", eval_in, "Input network JSON")->required();
    eval->add_option("--face", eval_face, "Face index")->required();
    eval->add_option("--u", eval_u, "u parameter")->required();
    eval->add_option("--v", eval_v, "v parameter")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (demo->parsed()) {
            if (demo_scale <= 0.0)
                throw InvalidIndexError("--scale must be positive");
            const net::PatchNetwork network = net::demo_cube(demo_scale);
            net::NetworkOptions options;
            options.chord_scale = demo_chord;
            options.twist = demo_twist == "adini" ? net::TwistKind::Adini
                                                  : net::TwistKind::Zero;
            if (!demo_out_json.empty()) {
                io::NetworkFile file{network.corners, network.faces, options};
                io::save_network_json(file, demo_out_json);
                std::printf("wrote %s\n", demo_out_json.c_str());
            }
            const net::SolvedNetwork solved = net::solve_network(network, options);
            const net::NetworkVerification verification =
                net::verify_network(solved);
            return run_pipeline(solved, demo_out, demo_res, demo_weld,
                                demo_parallel, demo_report,
                                std::sqrt(3.0) * demo_scale, verification);
        }

        if (solve->parsed()) {
            const io::NetworkFile file = io::load_network_json(solve_in);
            const net::PatchNetwork network =
                net::build_network(file.corners, file.faces);
            const net::SolvedNetwork solved =
                net::solve_network(network, file.options);
            const net::NetworkVerification verification =
                net::verify_network(solved);
            return run_pipeline(solved, solve_out, solve_res, solve_weld,
                                solve_parallel, solve_report, 0.0,
                                verification);
        }

        if (verify->parsed()) {
            if (verify_samples < 2)
                throw InvalidIndexError("--samples must be >= 2");
            const io::NetworkFile file = io::load_network_json(verify_in);
            const net::PatchNetwork network =
                net::build_network(file.corners, file.faces);
            const net::SolvedNetwork solved =
                net::solve_network(network, file.options);
            const net::NetworkVerification verification =
                net::verify_network(solved, verify_samples);
            print_verification(verification);
            write_json_report(verify_report, verification_json(verification));
            if (!verification.pass(kCornerResidualTol, kC0RelTol)) {
                std::fprintf(stderr,
                             "error: InvariantViolation: corner residual or "
                             "C0 gap above tolerance\n");
                return kExitInvariantViolation;
            }
            return kExitOk;
        }

        if (eval->parsed()) {
            const io::NetworkFile file = io::load_network_json(eval_in);
            const net::PatchNetwork network =
                net::build_network(file.corners, file.faces);
            const net::SolvedNetwork solved =
                net::solve_network(network, file.options);
            if (eval_face < 0 ||
                eval_face >= static_cast<int>(solved.patches.size()))
                throw InvalidIndexError("face index " +
                                        std::to_string(eval_face) +
                                        " out of range");
            const hermite::PatchGeometry& g = solved.patches[eval_face];
            const Vec3 p = patch_eval(g, eval_u, eval_v);
            const Vec3 pu = patch_partial_u(g, eval_u, eval_v);
            const Vec3 pv = patch_partial_v(g, eval_u, eval_v);
            const Vec3 n = patch_normal(g, eval_u, eval_v);
            std::printf("position  %.9g %.9g %.9g\n", p.x, p.y, p.z);
            std::printf("partial_u %.9g %.9g %.9g\n", pu.x, pu.y, pu.z);
            std::printf("partial_v %.9g %.9g %.9g\n", pv.x, pv.y, pv.z);
            std::printf("normal    %.9g %.9g %.9g\n", n.x, n.y, n.z);
            return kExitOk;
        }
    } catch (const InputError& e) {
        std::fprintf(stderr, "error: %s: %s\n", e.category().c_str(), e.what());
        return kExitInputError;
    } catch (const GeometryError& e) {
        std::fprintf(stderr, "error: %s: %s\n", e.category().c_str(), e.what());
        return kExitInputError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: InternalError: %s\n", e.what());
        return kExitInternalError;
    }
    return kExitInternalError;
}
