#include "patchnet/projective.hpp"

#include <cmath>

#include "patchnet/errors.hpp"

namespace patchnet::projective {

double dot(const HVec3& u, const HVec3& v) {
    return u.a * v.a + u.b * v.b + u.c * v.c;
}

double dot(const HVec4& u, const HVec4& v) {
    return u.x * v.x + u.y * v.y + u.z * v.z + u.w * v.w;
}

double norm(const HVec3& v) { return std::sqrt(dot(v, v)); }

double norm(const HVec4& v) { return std::sqrt(dot(v, v)); }

HVec3 cross3(const HVec3& u, const HVec3& v) {
    return {u.b * v.c - u.c * v.b,
            u.c * v.a - u.a * v.c,
            u.a * v.b - u.b * v.a};
}

HVec4 cross4(const HVec4& u, const HVec4& v, const HVec4& t) {
    // Signed cofactors of the 3x4 matrix [u; v; t], expanded along a
    // symbolic first row. Each entry is a 3x3 determinant built from the
    // 2x2 minors of [v; t].
    const double vt_xy = v.x * t.y - v.y * t.x;
    const double vt_xz = v.x * t.z - v.z * t.x;
    const double vt_xw = v.x * t.w - v.w * t.x;
    const double vt_yz = v.y * t.z - v.z * t.y;
    const double vt_yw = v.y * t.w - v.w * t.y;
    const double vt_zw = v.z * t.w - v.w * t.z;

    return {+(u.y * vt_zw - u.z * vt_yw + u.w * vt_yz),
            -(u.x * vt_zw - u.z * vt_xw + u.w * vt_xz),
            +(u.x * vt_yw - u.y * vt_xw + u.w * vt_xy),
            -(u.x * vt_yz - u.y * vt_xz + u.z * vt_xy)};
}

HVec3 null_space_2x3(const HVec3& row0, const HVec3& row1) {
    return cross3(row0, row1);
}

bool is_degenerate(const HVec3& result, const HVec3& u, const HVec3& v) {
    return norm(result) <= kDegenerateRel * norm(u) * norm(v);
}

bool is_degenerate(const HVec4& result, const HVec4& u, const HVec4& v,
                   const HVec4& t) {
    return norm(result) <= kDegenerateRel * norm(u) * norm(v) * norm(t);
}

Vec2 dehomogenize(const HVec3& v, double eps) {
    if (std::abs(v.c) <= eps)
        throw IdealPointError("cannot dehomogenize ideal point, |w| <= eps");
    return {v.a / v.c, v.b / v.c};
}

Vec3 dehomogenize(const HVec4& v, double eps) {
    if (std::abs(v.w) <= eps)
        throw IdealPointError("cannot dehomogenize ideal point, |w| <= eps");
    return {v.x / v.w, v.y / v.w, v.z / v.w};
}

namespace {

// Shared canonicalization over a fixed-size component span.
template <int N>
void canonicalize(double (&c)[N]) {
    double n2 = 0.0;
    for (int i = 0; i < N; ++i) n2 += c[i] * c[i];
    if (n2 == 0.0)
        throw ZeroVectorError("cannot normalize the zero projective element");
    const double n = std::sqrt(n2);
    for (int i = 0; i < N; ++i) c[i] /= n;

    for (int i = 0; i < N; ++i) {
        if (std::abs(c[i]) <= kSignZeroRel) continue;
        if (c[i] < 0.0)
            for (int j = 0; j < N; ++j) c[j] = -c[j];
        break;
    }
}

}  // namespace

HVec3 normalize_projective(const HVec3& v) {
    double c[3] = {v.a, v.b, v.c};
    canonicalize(c);
    return {c[0], c[1], c[2]};
}

HVec4 normalize_projective(const HVec4& v) {
    double c[4] = {v.x, v.y, v.z, v.w};
    canonicalize(c);
    return {c[0], c[1], c[2], c[3]};
}

Vec3 cross(const Vec3& u, const Vec3& v) {
    const HVec3 r = cross3({u.x, u.y, u.z}, {v.x, v.y, v.z});
    return {r.a, r.b, r.c};
}

}  // namespace patchnet::projective
