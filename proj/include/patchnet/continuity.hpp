#pragma once

#include <optional>
#include <vector>

#include "patchnet/geom.hpp"
#include "patchnet/hermite.hpp"

namespace patchnet::continuity {

// Which corner of a patch a tangent slot sits at; components in {0, 1}.
struct CornerCode {
    int u = 0;
    int v = 0;
};

// One incident patch corner: the patch's dp/du and dp/dv at that corner,
// expressed in the patch's own parameter frame.
struct TangentSlot {
    int patch_id = -1;
    CornerCode corner;
    Vec3 t_u, t_v;
};

// A mesh corner with every incident patch tangent pair. The normal is the
// one shared direction all slot tangents must be orthogonal to; it may be
// prescribed up front or derived while solving.
struct CornerStar {
    Vec3 position;
    std::optional<Vec3> normal;  // unit length when set
    std::vector<TangentSlot> slots;
};

// Where the corner normal comes from:
//   Prescribed   - the CornerStar carries it (error if absent)
//   FirstSlot    - cross product of slot 0's seed tangents
//   AverageCross - normalized sum of all slots' cross products
//   Auto         - Prescribed when a normal is present, else AverageCross
enum class NormalMode { Auto, Prescribed, FirstSlot, AverageCross };

struct SolveOptions {
    NormalMode normal_mode = NormalMode::Auto;
    // Restore each tangent to its seed magnitude after projection.
    bool rescale_to_seed = false;
};

// Tangent-pair normal, unit length: the solution of the homogeneous
// system [t_u; t_v] n = 0 via the cross product. Throws
// DegenerateTangentsError for parallel or zero inputs.
Vec3 normal_from_tangents(const Vec3& t_u, const Vec3& t_v);

// Minimal in-plane correction of t: subtracts the normal component.
// Requires a unit normal. Throws ProjectionCollapseError when t is
// essentially parallel to the normal.
Vec3 project_tangent(const Vec3& normal, const Vec3& t);

// Enforces the corner conditions: picks the normal per options, then
// projects every slot tangent into the corner's tangent plane. Slots whose
// projected pair turns parallel raise DegenerateTangentsError.
CornerStar solve_corner(const CornerStar& corner, const SolveOptions& options = {});

struct SlotResidual {
    int patch_id = -1;
    double res_u = 0.0;  // |n . t_u| / ||t_u||
    double res_v = 0.0;
};

struct CornerResidualReport {
    std::vector<SlotResidual> slots;
    double max_residual = 0.0;
    bool vacuous = false;  // no slots to measure
};

// Pure measurement of the corner conditions; never throws on bad geometry.
CornerResidualReport verify_corner(const CornerStar& corner);

// Maximum positional gap between two patch boundaries sampled at matched
// parameters; reversed flips the parameter direction of side b.
double verify_boundary_c0(const hermite::PatchGeometry& a, hermite::PatchSide side_a,
                          const hermite::PatchGeometry& b, hermite::PatchSide side_b,
                          int samples, bool reversed = false);

struct NormalDeviationReport {
    double max_angle = 0.0;               // radians, over valid samples
    std::vector<int> degenerate_samples;  // sample indices without a normal
};

// Diagnostic: largest angle between the two patches' unit normals along a
// shared boundary. Reported, never asserted.
NormalDeviationReport measure_normal_deviation_along_boundary(
    const hermite::PatchGeometry& a, hermite::PatchSide side_a,
    const hermite::PatchGeometry& b, hermite::PatchSide side_b,
    int samples, bool reversed = false);

}  // namespace patchnet::continuity
