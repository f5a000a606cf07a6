#pragma once

#include <optional>
#include <vector>

#include "patchnet/continuity.hpp"
#include "patchnet/geom.hpp"
#include "patchnet/hermite.hpp"

namespace patchnet::net {

struct CornerRecord {
    Vec3 position;
    std::optional<Vec3> normal;  // prescribed corner normal
};

// Corner indices in parametric order (0,0), (1,0), (1,1), (0,1).
struct QuadFace {
    std::array<int, 4> corner{};
};

// One face's use of an edge. forward is true when the boundary parameter
// of that side runs from the edge's canonical corner c0 to c1.
struct EdgeFaceRef {
    int face = -1;
    hermite::PatchSide side = hermite::PatchSide::V0;
    bool forward = true;
};

struct EdgeRecord {
    int c0 = -1, c1 = -1;  // canonical corner indices, c0 < c1
    std::vector<EdgeFaceRef> faces;

    bool shared() const { return faces.size() == 2; }
    // Relative parameter orientation of the two incident sides.
    bool reversed() const { return faces[0].forward != faces[1].forward; }
};

struct PatchNetwork {
    std::vector<CornerRecord> corners;
    std::vector<QuadFace> faces;
    std::vector<EdgeRecord> edges;

    int valence(int corner_index) const;
};

// Validates indices and topology and derives the edge table. Throws
// InvalidIndexError, DegenerateFaceError or NonManifoldEdgeError.
PatchNetwork build_network(std::vector<CornerRecord> corners,
                           std::vector<QuadFace> faces);

enum class TwistKind { Zero, Adini };

struct NetworkOptions {
    continuity::NormalMode normal_mode = continuity::NormalMode::Auto;
    TwistKind twist = TwistKind::Zero;
    double chord_scale = 1.0;  // seed tangent = edge chord * chord_scale
};

struct SolvedNetwork {
    PatchNetwork network;
    std::vector<continuity::CornerStar> corners;   // parallel to network.corners
    std::vector<hermite::PatchGeometry> patches;   // parallel to network.faces
};

// Full pipeline: per-corner stars seeded from edge chords and solved for
// the corner conditions, then one PatchGeometry per face with shared
// boundary control data taken from the same solved tangents on both sides.
SolvedNetwork solve_network(const PatchNetwork& network,
                            const NetworkOptions& options = {});

// Twist estimate from the bilinearly blended boundary data; corner (cu, cv)
// in {0, 1}^2. The twist fields of the input grid are ignored.
Vec3 adini_twist(const hermite::PatchCornerGrid& face, int cu, int cv);

// The valence-3 test network: cube corners at (+-s, +-s, +-s) with
// prescribed normals pointing along the corner radius, faces wound
// outward.
PatchNetwork demo_cube(double radius_scale = 1.0);

// Largest corner distance from the origin; reference length for the
// network's relative tolerances. 1.0 for an empty or all-origin network.
double model_scale(const PatchNetwork& network);

struct EdgeReport {
    int edge = -1;
    double c0_gap = 0.0;
    double normal_dev_max = 0.0;
    int degenerate_samples = 0;
};

struct NetworkVerification {
    std::vector<continuity::CornerResidualReport> corner_reports;
    std::vector<EdgeReport> edge_reports;  // shared edges only
    double max_corner_residual = 0.0;
    double max_c0_gap = 0.0;
    double max_normal_deviation = 0.0;
    double scale = 1.0;

    bool pass(double residual_tol = 1e-10, double c0_rel_tol = 1e-12) const {
        return max_corner_residual <= residual_tol &&
               max_c0_gap <= c0_rel_tol * scale;
    }
};

// Measures every corner residual and every shared-edge C0 gap and normal
// deviation. Pure measurement; the pass() thresholds assert only the
// corner conditions and the C0 invariant.
NetworkVerification verify_network(const SolvedNetwork& solved,
                                   int samples = 33);

}  // namespace patchnet::net
