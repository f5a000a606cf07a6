#include "patchnet/continuity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "patchnet/errors.hpp"
#include "patchnet/projective.hpp"

namespace patchnet::continuity {

Vec3 normal_from_tangents(const Vec3& t_u, const Vec3& t_v) {
    const Vec3 n = projective::cross(t_u, t_v);
    const double nn = norm(n);
    if (nn <= 1e-12 * norm(t_u) * norm(t_v))
        throw DegenerateTangentsError("tangents are parallel or zero");
    return n / nn;
}

Vec3 project_tangent(const Vec3& normal, const Vec3& t) {
    const Vec3 r = t - dot(normal, t) * normal;
    if (norm(r) <= 1e-10 * norm(t))
        throw ProjectionCollapseError(
            "tangent is parallel to the corner normal");
    return r;
}

namespace {

Vec3 pick_normal(const CornerStar& corner, NormalMode mode) {
    if (mode == NormalMode::Auto)
        mode = corner.normal ? NormalMode::Prescribed : NormalMode::AverageCross;

    switch (mode) {
        case NormalMode::Prescribed: {
            if (!corner.normal)
                throw MissingNormalError(
                    "normal policy is 'prescribed' but the corner has none");
            const double nn = norm(*corner.normal);
            if (nn == 0.0)
                throw ZeroVectorError("prescribed corner normal is zero");
            return *corner.normal / nn;
        }
        case NormalMode::FirstSlot: {
            if (corner.slots.empty())
                throw DegenerateTangentsError(
                    "normal policy 'first_slot' needs at least one slot");
            const TangentSlot& s = corner.slots.front();
            return normal_from_tangents(s.t_u, s.t_v);
        }
        case NormalMode::AverageCross:
        default: {
            if (corner.slots.empty())
                throw DegenerateTangentsError(
                    "normal policy 'average_cross' needs at least one slot");
            Vec3 sum;
            Vec3 first;
            for (std::size_t i = 0; i < corner.slots.size(); ++i) {
                Vec3 n = normal_from_tangents(corner.slots[i].t_u,
                                              corner.slots[i].t_v);
                if (i == 0)
                    first = n;
                else if (dot(n, first) < 0.0)
                    n = -n;  // align orientation with slot 0
                sum += n;
            }
            const double nn = norm(sum);
            if (nn <= 1e-12)
                throw DegenerateTangentsError(
                    "per-slot normals cancel, average undefined");
            return sum / nn;
        }
    }
}

}  // namespace

CornerStar solve_corner(const CornerStar& corner, const SolveOptions& options) {
    CornerStar out = corner;
    const Vec3 n = pick_normal(corner, options.normal_mode);
    out.normal = n;

    for (TangentSlot& slot : out.slots) {
        Vec3 tu, tv;
        try {
            tu = project_tangent(n, slot.t_u);
            tv = project_tangent(n, slot.t_v);
        } catch (const ProjectionCollapseError& e) {
            throw ProjectionCollapseError(
                std::string(e.what()) + " (patch " +
                std::to_string(slot.patch_id) + ", corner (" +
                std::to_string(slot.corner.u) + "," +
                std::to_string(slot.corner.v) + "))");
        }
        if (options.rescale_to_seed) {
            tu = tu * (norm(slot.t_u) / norm(tu));
            tv = tv * (norm(slot.t_v) / norm(tv));
        }
        if (norm(projective::cross(tu, tv)) <= 1e-10 * norm(tu) * norm(tv))
            throw DegenerateTangentsError(
                "projected tangents are parallel (patch " +
                std::to_string(slot.patch_id) + ")");
        slot.t_u = tu;
        slot.t_v = tv;
    }
    return out;
}

namespace {

double normalized_residual(const Vec3& n, const Vec3& t) {
    const double tn = norm(t);
    if (tn == 0.0) return 0.0;
    return std::abs(dot(n, t)) / tn;
}

}  // namespace

CornerResidualReport verify_corner(const CornerStar& corner) {
    CornerResidualReport report;
    if (corner.slots.empty() || !corner.normal) {
        report.vacuous = true;
        return report;
    }
    const Vec3 n = *corner.normal;
    for (const TangentSlot& slot : corner.slots) {
        SlotResidual r;
        r.patch_id = slot.patch_id;
        r.res_u = normalized_residual(n, slot.t_u);
        r.res_v = normalized_residual(n, slot.t_v);
        report.max_residual =
            std::max({report.max_residual, r.res_u, r.res_v});
        report.slots.push_back(r);
    }
    return report;
}

double verify_boundary_c0(const hermite::PatchGeometry& a, hermite::PatchSide side_a,
                          const hermite::PatchGeometry& b, hermite::PatchSide side_b,
                          int samples, bool reversed) {
    double max_gap = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = samples > 1 ? double(i) / double(samples - 1) : 0.0;
        const double s = reversed ? 1.0 - t : t;
        double ua, va, ub, vb;
        hermite::side_params(side_a, t, &ua, &va);
        hermite::side_params(side_b, s, &ub, &vb);
        const double gap = distance(hermite::patch_eval(a, ua, va),
                                    hermite::patch_eval(b, ub, vb));
        max_gap = std::max(max_gap, gap);
    }
    return max_gap;
}

NormalDeviationReport measure_normal_deviation_along_boundary(
    const hermite::PatchGeometry& a, hermite::PatchSide side_a,
    const hermite::PatchGeometry& b, hermite::PatchSide side_b,
    int samples, bool reversed) {
    NormalDeviationReport report;
    for (int i = 0; i < samples; ++i) {
        const double t = samples > 1 ? double(i) / double(samples - 1) : 0.0;
        const double s = reversed ? 1.0 - t : t;
        double ua, va, ub, vb;
        hermite::side_params(side_a, t, &ua, &va);
        hermite::side_params(side_b, s, &ub, &vb);
        try {
            const Vec3 na = hermite::patch_normal(a, ua, va);
            const Vec3 nb = hermite::patch_normal(b, ub, vb);
            const Vec3 ua_n = na / norm(na);
            const Vec3 ub_n = nb / norm(nb);
            const double c = std::clamp(dot(ua_n, ub_n), -1.0, 1.0);
            const double angle =
                std::atan2(norm(projective::cross(ua_n, ub_n)), c);
            report.max_angle = std::max(report.max_angle, angle);
        } catch (const DegenerateTangentsError&) {
            report.degenerate_samples.push_back(i);
        }
    }
    return report;
}

}  // namespace patchnet::continuity
