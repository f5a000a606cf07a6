#include "patchnet/network.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "patchnet/errors.hpp"

namespace patchnet::net {

namespace {

// Face corner k -> patch corner code (u, v).
constexpr int kCornerU[4] = {0, 1, 1, 0};
constexpr int kCornerV[4] = {0, 0, 1, 1};

// Face corner adjacent to k along u resp. v.
constexpr int kUNeighbor[4] = {1, 0, 3, 2};
constexpr int kVNeighbor[4] = {3, 2, 1, 0};

struct SideSpec {
    hermite::PatchSide side;
    int k_start, k_end;  // face corners at boundary parameter 0 and 1
};

constexpr SideSpec kFaceSides[4] = {
    {hermite::PatchSide::V0, 0, 1},
    {hermite::PatchSide::U1, 1, 2},
    {hermite::PatchSide::V1, 3, 2},
    {hermite::PatchSide::U0, 0, 3},
};

}  // namespace

int PatchNetwork::valence(int corner_index) const {
    int n = 0;
    for (const QuadFace& f : faces)
        for (int k = 0; k < 4; ++k)
            if (f.corner[k] == corner_index) ++n;
    return n;
}

PatchNetwork build_network(std::vector<CornerRecord> corners,
                           std::vector<QuadFace> faces) {
    const int n_corners = static_cast<int>(corners.size());
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        const QuadFace& f = faces[fi];
        for (int k = 0; k < 4; ++k) {
            if (f.corner[k] < 0 || f.corner[k] >= n_corners)
                throw InvalidIndexError("face " + std::to_string(fi) +
                                        " references corner " +
                                        std::to_string(f.corner[k]) +
                                        " out of range");
            for (int l = k + 1; l < 4; ++l)
                if (f.corner[k] == f.corner[l])
                    throw DegenerateFaceError(
                        "face " + std::to_string(fi) +
                        " repeats corner " + std::to_string(f.corner[k]));
        }
    }

    PatchNetwork net;
    net.corners = std::move(corners);
    net.faces = std::move(faces);

    std::map<std::pair<int, int>, int> edge_index;
    for (std::size_t fi = 0; fi < net.faces.size(); ++fi) {
        const QuadFace& f = net.faces[fi];
        for (const SideSpec& s : kFaceSides) {
            const int a = f.corner[s.k_start];
            const int b = f.corner[s.k_end];
            const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
            auto [it, inserted] =
                edge_index.try_emplace(key, static_cast<int>(net.edges.size()));
            if (inserted)
                net.edges.push_back({key.first, key.second, {}});
            EdgeRecord& e = net.edges[it->second];
            if (e.faces.size() == 2)
                throw NonManifoldEdgeError(
                    "edge (" + std::to_string(key.first) + "," +
                    std::to_string(key.second) + ") is used by more than 2 faces");
            e.faces.push_back({static_cast<int>(fi), s.side, a == key.first});
        }
    }
    return net;
}

namespace {

continuity::TangentSlot make_seed_slot(const PatchNetwork& net, int face_id,
                                       int k, double chord_scale) {
    const QuadFace& f = net.faces[face_id];
    const Vec3 here = net.corners[f.corner[k]].position;
    const Vec3 to_u = net.corners[f.corner[kUNeighbor[k]]].position - here;
    const Vec3 to_v = net.corners[f.corner[kVNeighbor[k]]].position - here;
    const double su = kCornerU[k] == 0 ? 1.0 : -1.0;
    const double sv = kCornerV[k] == 0 ? 1.0 : -1.0;
    continuity::TangentSlot slot;
    slot.patch_id = face_id;
    slot.corner = {kCornerU[k], kCornerV[k]};
    slot.t_u = to_u * (su * chord_scale);
    slot.t_v = to_v * (sv * chord_scale);
    return slot;
}

}  // namespace

SolvedNetwork solve_network(const PatchNetwork& network,
                            const NetworkOptions& options) {
    SolvedNetwork out;
    out.network = network;

    // Per-corner stars, seeded from edge chords in each face's frame.
    out.corners.resize(network.corners.size());
    for (std::size_t ci = 0; ci < network.corners.size(); ++ci) {
        continuity::CornerStar star;
        star.position = network.corners[ci].position;
        star.normal = network.corners[ci].normal;
        for (std::size_t fi = 0; fi < network.faces.size(); ++fi)
            for (int k = 0; k < 4; ++k)
                if (network.faces[fi].corner[k] == static_cast<int>(ci))
                    star.slots.push_back(make_seed_slot(
                        network, static_cast<int>(fi), k, options.chord_scale));

        continuity::SolveOptions solve_options;
        solve_options.normal_mode = options.normal_mode;
        try {
            out.corners[ci] = solve_corner(star, solve_options);
        } catch (const GeometryError& e) {
            throw GeometryError(e.category(),
                                std::string(e.what()) + " at network corner " +
                                    std::to_string(ci));
        }
    }

    // Per-face patches. Boundary control data comes from the solved corner
    // slots; both faces of a shared edge see the same solved tangent (up to
    // the parametric sign), which makes the C0 match structural.
    out.patches.reserve(network.faces.size());
    for (std::size_t fi = 0; fi < network.faces.size(); ++fi) {
        const QuadFace& f = network.faces[fi];
        hermite::PatchCornerGrid grid{};
        for (int k = 0; k < 4; ++k) {
            const continuity::CornerStar& star = out.corners[f.corner[k]];
            const continuity::TangentSlot* slot = nullptr;
            for (const continuity::TangentSlot& s : star.slots)
                if (s.patch_id == static_cast<int>(fi) &&
                    s.corner.u == kCornerU[k] && s.corner.v == kCornerV[k])
                    slot = &s;
            hermite::PatchCornerData& c = grid[kCornerU[k]][kCornerV[k]];
            c.position = star.position;
            c.du = slot->t_u;
            c.dv = slot->t_v;
            c.twist = {0.0, 0.0, 0.0};
        }
        if (options.twist == TwistKind::Adini)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    grid[a][b].twist = adini_twist(grid, a, b);
        out.patches.push_back(hermite::PatchGeometry::from_corners(grid));
    }
    return out;
}

Vec3 adini_twist(const hermite::PatchCornerGrid& face, int cu, int cv) {
    // Mixed partial of the bilinearly blended Coons patch over the four
    // boundary curves, evaluated at the corner.
    const Vec3 bilinear = face[0][0].position - face[1][0].position -
                          face[0][1].position + face[1][1].position;
    return (face[cu][1].du - face[cu][0].du) +
           (face[1][cv].dv - face[0][cv].dv) - bilinear;
}

PatchNetwork demo_cube(double radius_scale) {
    const double s = radius_scale;
    std::vector<CornerRecord> corners(8);
    for (int i = 0; i < 8; ++i) {
        const Vec3 p{(i & 1) ? s : -s, (i & 2) ? s : -s, (i & 4) ? s : -s};
        corners[i].position = p;
        corners[i].normal = p / norm(p);
    }
    // Outward-wound faces: u cross v points away from the cube center.
    std::vector<QuadFace> faces = {
        {{4, 5, 7, 6}},  // z = +s
        {{0, 2, 3, 1}},  // z = -s
        {{1, 3, 7, 5}},  // x = +s
        {{0, 4, 6, 2}},  // x = -s
        {{2, 6, 7, 3}},  // y = +s
        {{0, 1, 5, 4}},  // y = -s
    };
    return build_network(std::move(corners), std::move(faces));
}

double model_scale(const PatchNetwork& network) {
    double s = 0.0;
    for (const CornerRecord& c : network.corners)
        s = std::max(s, norm(c.position));
    return s > 0.0 ? s : 1.0;
}

NetworkVerification verify_network(const SolvedNetwork& solved, int samples) {
    NetworkVerification v;
    v.scale = model_scale(solved.network);

    for (const continuity::CornerStar& star : solved.corners) {
        v.corner_reports.push_back(verify_corner(star));
        v.max_corner_residual =
            std::max(v.max_corner_residual, v.corner_reports.back().max_residual);
    }

    for (std::size_t ei = 0; ei < solved.network.edges.size(); ++ei) {
        const EdgeRecord& e = solved.network.edges[ei];
        if (!e.shared()) continue;
        const EdgeFaceRef& ra = e.faces[0];
        const EdgeFaceRef& rb = e.faces[1];
        EdgeReport report;
        report.edge = static_cast<int>(ei);
        report.c0_gap = continuity::verify_boundary_c0(
            solved.patches[ra.face], ra.side, solved.patches[rb.face], rb.side,
            samples, e.reversed());
        const continuity::NormalDeviationReport nd =
            continuity::measure_normal_deviation_along_boundary(
                solved.patches[ra.face], ra.side, solved.patches[rb.face],
                rb.side, samples, e.reversed());
        report.normal_dev_max = nd.max_angle;
        report.degenerate_samples =
            static_cast<int>(nd.degenerate_samples.size());
        v.max_c0_gap = std::max(v.max_c0_gap, report.c0_gap);
        v.max_normal_deviation =
            std::max(v.max_normal_deviation, report.normal_dev_max);
        v.edge_reports.push_back(report);
    }
    return v;
}

}  // namespace patchnet::net
