#pragma once

#include <array>

#include "patchnet/geom.hpp"

namespace patchnet::hermite {

// Hermite basis matrix: F(t) = M_H [t^3, t^2, t, 1]^T gives the four blend
// functions (endpoint values F1, F2 and end tangents F3, F4).
inline constexpr double kHermiteMatrix[4][4] = {
    {2.0, -3.0, 0.0, 1.0},
    {-2.0, 3.0, 0.0, 0.0},
    {1.0, -2.0, 1.0, 0.0},
    {1.0, -1.0, 0.0, 0.0},
};

std::array<double, 4> basis_values(double t);
std::array<double, 4> basis_derivatives(double t);

// Cubic Hermite curve: endpoints and end tangents dp/dt.
struct CurveGeometry {
    Vec3 p0, p1;  // curve(0), curve(1)
    Vec3 t0, t1;  // dp/dt at t = 0 and t = 1
};

Vec3 curve_eval(const CurveGeometry& g, double t);
Vec3 curve_derivative(const CurveGeometry& g, double t);

enum class PatchSide { U0, U1, V0, V1 };

const char* side_name(PatchSide side);

// Control data of one patch corner in the patch's own (u,v) frame.
struct PatchCornerData {
    Vec3 position;
    Vec3 du;     // dp/du
    Vec3 dv;     // dp/dv
    Vec3 twist;  // d2p/dudv
};

using PatchCornerGrid = std::array<std::array<PatchCornerData, 2>, 2>;  // [u][v]

// Bicubic Hermite patch. Each coordinate has a 4x4 control matrix whose
// 2x2 blocks hold corner positions (top-left), u-tangents (bottom-left),
// v-tangents (top-right) and twists (bottom-right); row index follows u,
// column index follows v. Evaluation goes through coefficient matrices
// M_H^T C M_H cached at construction.
class PatchGeometry {
public:
    PatchGeometry(const Mat4& x, const Mat4& y, const Mat4& z);

    static PatchGeometry from_corners(const PatchCornerGrid& corners);

    const Mat4& control_x() const { return x_; }
    const Mat4& control_y() const { return y_; }
    const Mat4& control_z() const { return z_; }

    const Mat4& coeff_x() const { return cx_; }
    const Mat4& coeff_y() const { return cy_; }
    const Mat4& coeff_z() const { return cz_; }

    // Block accessors; ui, vi in {0, 1}.
    Vec3 corner_position(int ui, int vi) const;
    Vec3 corner_tangent_u(int ui, int vi) const;
    Vec3 corner_tangent_v(int ui, int vi) const;
    Vec3 corner_twist(int ui, int vi) const;

private:
    Mat4 x_, y_, z_;     // control values
    Mat4 cx_, cy_, cz_;  // cached M_H^T C M_H
};

Vec3 patch_eval(const PatchGeometry& g, double u, double v);
Vec3 patch_partial_u(const PatchGeometry& g, double u, double v);
Vec3 patch_partial_v(const PatchGeometry& g, double u, double v);

// Surface normal dp/du x dp/dv (not normalized). Throws
// DegenerateTangentsError when the partials are (near-)parallel.
Vec3 patch_normal(const PatchGeometry& g, double u, double v);

// Control data of one boundary, as a curve in the boundary parameter
// (v on sides U0/U1, u on sides V0/V1).
CurveGeometry boundary_curve(const PatchGeometry& g, PatchSide side);

// Boundary point at parameter t of the given side.
void side_params(PatchSide side, double t, double* u, double* v);

}  // namespace patchnet::hermite
