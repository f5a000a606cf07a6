#pragma once

#include "patchnet/geom.hpp"

namespace patchnet::projective {

// Homogeneous element of the projective plane: a point [x, y, w] or the
// coefficients [a, b, c] of a line ax + by + c = 0. Defined up to nonzero
// scale; the all-zero triple is not a valid element.
struct HVec3 {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

// Homogeneous element of projective 3-space: a point [x, y, z, w] or the
// coefficients of a plane. Same scale-equivalence rules as HVec3.
struct HVec4 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double w = 0.0;
};

// A cross-product result whose norm falls below this fraction of the
// product of the input norms is treated as the zero element.
inline constexpr double kDegenerateRel = 1e-12;

// Default |last component| threshold below which a homogeneous point is
// considered ideal (at infinity).
inline constexpr double kIdealEps = 1e-12;

double dot(const HVec3& u, const HVec3& v);
double dot(const HVec4& u, const HVec4& v);
double norm(const HVec3& v);
double norm(const HVec4& v);

// Line through two homogeneous points, or dually the intersection point of
// two lines. A (near-)zero result signals projectively coincident inputs;
// use is_degenerate to test.
HVec3 cross3(const HVec3& u, const HVec3& v);

// Generalized 4-component cross product: the plane through three
// homogeneous points, or dually the point common to three planes. Zero
// result signals linearly dependent inputs.
HVec4 cross4(const HVec4& u, const HVec4& v, const HVec4& t);

// Nontrivial solution of the homogeneous system with the two given rows,
// i.e. cross3 of the rows. Zero result means the rows are proportional
// (rank-deficient system).
HVec3 null_space_2x3(const HVec3& row0, const HVec3& row1);

bool is_degenerate(const HVec3& result, const HVec3& u, const HVec3& v);
bool is_degenerate(const HVec4& result, const HVec4& u, const HVec4& v,
                   const HVec4& t);

// Divide through by the last component. Throws IdealPointError when
// |last| <= eps.
Vec2 dehomogenize(const HVec3& v, double eps = kIdealEps);
Vec3 dehomogenize(const HVec4& v, double eps = kIdealEps);

// Canonical representative of the projective class: unit Euclidean norm,
// first nonzero component positive. Components below kSignZeroRel of the
// norm do not take part in the sign decision. Throws ZeroVectorError on
// all-zero input.
HVec3 normalize_projective(const HVec3& v);
HVec4 normalize_projective(const HVec4& v);

inline constexpr double kSignZeroRel = 1e-9;

// Euclidean 3-vector cross product, routed through the homogeneous kernel.
Vec3 cross(const Vec3& u, const Vec3& v);

}  // namespace patchnet::projective
