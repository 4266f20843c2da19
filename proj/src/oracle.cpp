#include "kitecc/oracle.hpp"

#include <cmath>

#include "kitecc/errors.hpp"
#include "kitecc/parallel.hpp"

namespace kitecc {
namespace {

constexpr double kCollisionTol = 1e-12;
constexpr double kMasslessTol = 1e-13;
constexpr double kResidualFloor = 1e-300;

double config_extent(const KiteConfiguration& c) {
    double ext = 0.0;
    for (const Vec2& r : c.positions) ext = std::max(ext, r.norm());
    return ext;
}

} // namespace

std::array<Vec2, 4> accelerations(const KiteConfiguration& c) {
    std::array<Vec2, 4> acc{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            const Vec2 d = c.positions[j] - c.positions[i];
            const double r = d.norm();
            if (r < kCollisionTol)
                throw CollisionSingularity("bodies " + std::to_string(i) + " and " +
                                           std::to_string(j) + " coincide");
            acc[i] = acc[i] + d * (c.masses[j] / (r * r * r));
        }
    }
    return acc;
}

CentralityReport verify_central(const KiteConfiguration& c) {
    if (std::abs(c.total_mass() - 1.0) > 1e-12)
        throw OutOfDomain("nbody_oracle", "masses must sum to 1");

    CentralityReport rep;
    Vec2 bary{0.0, 0.0};
    for (int i = 0; i < 4; ++i) bary = bary + c.positions[i] * c.masses[i];
    rep.barycenter_shift = bary;

    KiteConfiguration shifted = c;
    for (Vec2& r : shifted.positions) r = r - bary;
    const auto acc = accelerations(shifted);

    const double extent = config_extent(shifted);
    const double bary_tol = 1e-10 * std::max(extent, 1.0);
    double acc_scale = 0.0;
    for (const Vec2& a : acc) acc_scale = std::max(acc_scale, a.norm());

    // Per-body lambda where defined; bodies at the barycenter are flagged and
    // count as trivially central only with negligible acceleration.
    const double nan = std::numeric_limits<double>::quiet_NaN();
    rep.per_body_lambda.fill(nan);
    double wsum = 0.0;
    double wlambda = 0.0;
    double usum = 0.0;
    double ulambda = 0.0;
    for (int i = 0; i < 4; ++i) {
        const Vec2 r = shifted.positions[i];
        const double r2 = r.dot(r);
        if (std::sqrt(r2) < bary_tol) {
            rep.degenerate[i] = true;
            continue;
        }
        const double li = -acc[i].dot(r) / r2;
        rep.per_body_lambda[i] = li;
        if (c.masses[i] > kMasslessTol) {
            wsum += c.masses[i];
            wlambda += c.masses[i] * li;
        } else {
            usum += 1.0;
            ulambda += li;
        }
    }
    // Mass-weighted estimate over the massive bodies; when only massless
    // bodies remain off the barycenter, average those instead.
    if (wsum > 0.0)
        rep.lambda = wlambda / wsum;
    else if (usum > 0.0)
        rep.lambda = ulambda / usum;
    else
        rep.lambda = 0.0;

    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
        if (rep.degenerate[i]) {
            // Trivially central only if the body is not being pulled anywhere.
            const double rel = acc[i].norm() / std::max(acc_scale, kResidualFloor);
            worst = std::max(worst, rel < 1e-9 ? 0.0 : rel);
            continue;
        }
        const Vec2 r = shifted.positions[i];
        const Vec2 dev = acc[i] + r * rep.lambda;
        const double denom = std::max(std::abs(rep.lambda) * r.norm(), kResidualFloor);
        worst = std::max(worst, dev.norm() / denom);
    }
    rep.max_relative_residual = worst;
    return rep;
}

void attach_oracle(CurveFamily& family) {
    const ConfigKind kind = kind_of(family.id);
    auto& pts = family.points;
    parallel_for(pts.size(), [&](std::size_t i) {
        CurvePoint& pt = pts[i];
        if (!pt.mass.ok()) return;
        const auto cfg = make_configuration(pt.angles(), kind, pt.mass.value);
        const CentralityReport rep = verify_central(cfg);
        pt.oracle_residual = rep.max_relative_residual;
        pt.lambda = rep.lambda;
    });
}

} // namespace kitecc
