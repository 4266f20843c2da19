#include "kitecc/mass_model.hpp"

#include <cmath>
#include <limits>

#include "kitecc/errors.hpp"

namespace kitecc {
namespace {

constexpr double kDegenerateTol = 1e-12;
constexpr double kSingularRelTol = 1e-12;
// Near the singular point, cancellation in the small denominator can push
// a boundary-exact mass past its bound by ~1e-12; genuine out-of-region
// violations are orders of magnitude larger.
constexpr double kBoundsTol = 1e-9;

double cube(double x) { return x * x * x; }

} // namespace

Coefficients coefficients(AnglePair p, ConfigKind kind) {
    const double ta = std::tan(p.alpha);
    const double tb = std::tan(p.beta);
    const double ca3 = cube(std::cos(p.alpha));
    const double cb3 = cube(std::cos(p.beta));

    if (kind == ConfigKind::Convex) {
        const double s = ta + tb;
        if (std::abs(s) < kDegenerateTol)
            throw DegenerateGeometry("mass_model", "tan(alpha) + tan(beta) underflow");
        const double inv2 = 1.0 / (s * s);
        return {
            (ca3 - 0.125) * ta,
            inv2 + (0.125 - ca3 - cb3) * tb - 0.125 * ta,
            (cb3 - 0.125) * tb,
            inv2 + (0.125 - ca3 - cb3) * ta - 0.125 * tb,
        };
    }

    const double s = ta - tb;
    if (std::abs(s) < kDegenerateTol)
        throw DegenerateGeometry("mass_model", "tan(alpha) - tan(beta) underflow (concave)");
    const double inv2 = 1.0 / (s * s);
    return {
        (ca3 - 0.125) * ta,
        inv2 - (0.125 - ca3 - cb3) * tb - 0.125 * ta,
        -(cb3 - 0.125) * tb,
        inv2 + (0.125 - ca3 - cb3) * ta + 0.125 * tb,
    };
}

MassResult masses(AnglePair p, ConfigKind kind) {
    const Coefficients c = coefficients(p, kind);

    MassResult r;
    r.denominator = c.a0 * c.b1 + c.a1 * c.b0 - c.a1 * c.b1;
    const double scale =
        1.0 + std::abs(c.a0 * c.b1) + std::abs(c.a1 * c.b0) + std::abs(c.a1 * c.b1);
    if (std::abs(r.denominator) < kSingularRelTol * scale) {
        r.status = MassStatus::SingularDenominator;
        const double nan = std::numeric_limits<double>::quiet_NaN();
        r.value = {nan, nan, nan};
        return r;
    }

    const double mu1 = (c.b1 + c.a0 - c.b0) * c.b0 / r.denominator;
    const double mu2 = (c.a1 + c.b0 - c.a0) * c.a0 / r.denominator;
    r.value = {mu1, mu2, 0.5 * (1.0 - mu1 - mu2)};

    const bool valid = mu1 >= -kBoundsTol && mu1 <= 1.0 + kBoundsTol && mu2 >= -kBoundsTol &&
                       mu2 <= 1.0 + kBoundsTol && mu1 + mu2 <= 1.0 + kBoundsTol;
    r.status = valid ? MassStatus::Ok : MassStatus::InvalidMasses;
    return r;
}

std::string_view mass_status_name(MassStatus s) {
    switch (s) {
    case MassStatus::Ok: return "ok";
    case MassStatus::SingularDenominator: return "singular-denominator";
    default: return "invalid-masses";
    }
}

} // namespace kitecc
