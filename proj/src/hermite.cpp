#include "patchnet/hermite.hpp"

#include <cmath>

#include "patchnet/errors.hpp"
#include "patchnet/projective.hpp"

namespace patchnet::hermite {

std::array<double, 4> basis_values(double t) {
    const double t2 = t * t;
    const double t3 = t2 * t;
    return {2.0 * t3 - 3.0 * t2 + 1.0,
            -2.0 * t3 + 3.0 * t2,
            t3 - 2.0 * t2 + t,
            t3 - t2};
}

std::array<double, 4> basis_derivatives(double t) {
    const double t2 = t * t;
    return {6.0 * t2 - 6.0 * t,
            -6.0 * t2 + 6.0 * t,
            3.0 * t2 - 4.0 * t + 1.0,
            3.0 * t2 - 2.0 * t};
}

namespace {

Vec3 blend(const CurveGeometry& g, const std::array<double, 4>& f) {
    return g.p0 * f[0] + g.p1 * f[1] + g.t0 * f[2] + g.t1 * f[3];
}

}  // namespace

Vec3 curve_eval(const CurveGeometry& g, double t) {
    return blend(g, basis_values(t));
}

Vec3 curve_derivative(const CurveGeometry& g, double t) {
    return blend(g, basis_derivatives(t));
}

const char* side_name(PatchSide side) {
    switch (side) {
        case PatchSide::U0: return "u0";
        case PatchSide::U1: return "u1";
        case PatchSide::V0: return "v0";
        case PatchSide::V1: return "v1";
    }
    return "?";
}

PatchGeometry::PatchGeometry(const Mat4& x, const Mat4& y, const Mat4& z)
    : x_(x), y_(y), z_(z) {
    Mat4 mh;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) mh.m[i][j] = kHermiteMatrix[i][j];
    const Mat4 mht = transpose(mh);
    cx_ = mht * x_ * mh;
    cy_ = mht * y_ * mh;
    cz_ = mht * z_ * mh;
}

PatchGeometry PatchGeometry::from_corners(const PatchCornerGrid& corners) {
    Mat4 x, y, z;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const PatchCornerData& c = corners[a][b];
            x.m[a][b] = c.position.x;
            y.m[a][b] = c.position.y;
            z.m[a][b] = c.position.z;
            x.m[2 + a][b] = c.du.x;
            y.m[2 + a][b] = c.du.y;
            z.m[2 + a][b] = c.du.z;
            x.m[a][2 + b] = c.dv.x;
            y.m[a][2 + b] = c.dv.y;
            z.m[a][2 + b] = c.dv.z;
            x.m[2 + a][2 + b] = c.twist.x;
            y.m[2 + a][2 + b] = c.twist.y;
            z.m[2 + a][2 + b] = c.twist.z;
        }
    }
    return PatchGeometry(x, y, z);
}

Vec3 PatchGeometry::corner_position(int ui, int vi) const {
    return {x_.m[ui][vi], y_.m[ui][vi], z_.m[ui][vi]};
}

Vec3 PatchGeometry::corner_tangent_u(int ui, int vi) const {
    return {x_.m[2 + ui][vi], y_.m[2 + ui][vi], z_.m[2 + ui][vi]};
}

Vec3 PatchGeometry::corner_tangent_v(int ui, int vi) const {
    return {x_.m[ui][2 + vi], y_.m[ui][2 + vi], z_.m[ui][2 + vi]};
}

Vec3 PatchGeometry::corner_twist(int ui, int vi) const {
    return {x_.m[2 + ui][2 + vi], y_.m[2 + ui][2 + vi], z_.m[2 + ui][2 + vi]};
}

namespace {

std::array<double, 4> monomials(double t) {
    const double t2 = t * t;
    return {t2 * t, t2, t, 1.0};
}

std::array<double, 4> monomial_derivatives(double t) {
    return {3.0 * t * t, 2.0 * t, 1.0, 0.0};
}

double quad_form(const Mat4& c, const std::array<double, 4>& mu,
                 const std::array<double, 4>& mv) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        double row = 0.0;
        for (int j = 0; j < 4; ++j) row += c.m[i][j] * mv[j];
        s += mu[i] * row;
    }
    return s;
}

Vec3 eval_coeff(const PatchGeometry& g, const std::array<double, 4>& mu,
                const std::array<double, 4>& mv) {
    return {quad_form(g.coeff_x(), mu, mv),
            quad_form(g.coeff_y(), mu, mv),
            quad_form(g.coeff_z(), mu, mv)};
}

}  // namespace

Vec3 patch_eval(const PatchGeometry& g, double u, double v) {
    return eval_coeff(g, monomials(u), monomials(v));
}

Vec3 patch_partial_u(const PatchGeometry& g, double u, double v) {
    return eval_coeff(g, monomial_derivatives(u), monomials(v));
}

Vec3 patch_partial_v(const PatchGeometry& g, double u, double v) {
    return eval_coeff(g, monomials(u), monomial_derivatives(v));
}

Vec3 patch_normal(const PatchGeometry& g, double u, double v) {
    const Vec3 pu = patch_partial_u(g, u, v);
    const Vec3 pv = patch_partial_v(g, u, v);
    const Vec3 n = projective::cross(pu, pv);
    if (norm(n) <= 1e-12 * norm(pu) * norm(pv))
        throw DegenerateTangentsError(
            "surface partials are parallel, normal undefined");
    return n;
}

CurveGeometry boundary_curve(const PatchGeometry& g, PatchSide side) {
    switch (side) {
        case PatchSide::U0:
            return {g.corner_position(0, 0), g.corner_position(0, 1),
                    g.corner_tangent_v(0, 0), g.corner_tangent_v(0, 1)};
        case PatchSide::U1:
            return {g.corner_position(1, 0), g.corner_position(1, 1),
                    g.corner_tangent_v(1, 0), g.corner_tangent_v(1, 1)};
        case PatchSide::V0:
            return {g.corner_position(0, 0), g.corner_position(1, 0),
                    g.corner_tangent_u(0, 0), g.corner_tangent_u(1, 0)};
        case PatchSide::V1:
        default:
            return {g.corner_position(0, 1), g.corner_position(1, 1),
                    g.corner_tangent_u(0, 1), g.corner_tangent_u(1, 1)};
    }
}

void side_params(PatchSide side, double t, double* u, double* v) {
    switch (side) {
        case PatchSide::U0: *u = 0.0; *v = t; break;
        case PatchSide::U1: *u = 1.0; *v = t; break;
        case PatchSide::V0: *u = t;   *v = 0.0; break;
        case PatchSide::V1: *u = t;   *v = 1.0; break;
    }
}

}  // namespace patchnet::hermite
