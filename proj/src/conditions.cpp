#include "kitecc/conditions.hpp"

#include <cmath>

#include "kitecc/errors.hpp"

namespace kitecc {
namespace {

constexpr double kDegenerateTol = 1e-12;
const double kSqrt5 = std::sqrt(5.0);

double cube(double x) { return x * x * x; }

struct Trig {
    double ta, tb, ca3, cb3, s; // s: tan sum (convex) or difference (concave)
};

Trig trig_terms(AnglePair p, ConfigKind kind) {
    Trig t;
    t.ta = std::tan(p.alpha);
    t.tb = std::tan(p.beta);
    t.ca3 = cube(std::cos(p.alpha));
    t.cb3 = cube(std::cos(p.beta));
    t.s = kind == ConfigKind::Convex ? t.ta + t.tb : t.ta - t.tb;
    if (std::abs(t.s) < kDegenerateTol)
        throw DegenerateGeometry("equal_mass_conditions", "tangent sum/difference underflow");
    return t;
}

} // namespace

double residual_full(AnglePair p, FamilyId family) {
    const Trig t = trig_terms(p, kind_of(family));
    const double inv2 = 1.0 / (t.s * t.s);
    switch (family) {
    case FamilyId::ConvexMu1:
        return t.tb * (t.ca3 - 2.0 * t.cb3 + 0.25) + t.ta * t.ca3 - inv2;
    case FamilyId::ConcaveMu1:
        return -t.tb * (t.ca3 - 2.0 * t.cb3 + 0.25) + t.ta * t.ca3 - inv2;
    case FamilyId::ConvexMu2:
        return t.ta * (t.cb3 - 2.0 * t.ca3 + 0.25) + t.tb * t.cb3 - inv2;
    default: // ConcaveMu2
        return t.ta * (t.cb3 - 2.0 * t.ca3 + 0.25) - t.tb * t.cb3 - inv2;
    }
}

double residual_reduced(AnglePair p, FamilyId family) {
    const Coefficients c = coefficients(p, kind_of(family));
    return is_mu1_family(family) ? c.a0 - c.a1 - 3.0 * c.b0 : c.b0 - c.b1 - 3.0 * c.a0;
}

double residual_scale(AnglePair p, FamilyId family) {
    const Trig t = trig_terms(p, kind_of(family));
    const double inv2 = 1.0 / (t.s * t.s);
    const bool mu1 = is_mu1_family(family);
    const double first = mu1 ? std::abs(t.tb * (t.ca3 - 2.0 * t.cb3 + 0.25))
                             : std::abs(t.ta * (t.cb3 - 2.0 * t.ca3 + 0.25));
    const double second = mu1 ? std::abs(t.ta * t.ca3) : std::abs(t.tb * t.cb3);
    return 1.0 + first + second + std::abs(inv2);
}

std::optional<ExceptionalCase> exceptional_line_check(AnglePair p, ConfigKind kind) {
    const double ninety = deg2rad(90.0);
    if (kind == ConfigKind::Convex) {
        if (std::abs(p.alpha + 2.0 * p.beta - ninety) / kSqrt5 <= kLineTol)
            return ExceptionalCase{CriticalLine::AlphaPlus2Beta90, 1.0, 0.0};
        return std::nullopt;
    }
    if (std::abs(2.0 * p.alpha - p.beta - ninety) / kSqrt5 <= kLineTol)
        return ExceptionalCase{CriticalLine::TwoAlphaMinusBeta90, 0.0, 1.0};
    return std::nullopt;
}

} // namespace kitecc
