#include "kitecc/angles.hpp"

#include <cmath>

#include "kitecc/errors.hpp"
#include "kitecc/kite.hpp"

namespace kitecc {
namespace {

constexpr double kHalfPi = kPi / 2.0;
const double kSqrt5 = std::sqrt(5.0);

constexpr double kDeg15 = deg2rad(15.0);
constexpr double kDeg30 = deg2rad(30.0);
constexpr double kDeg45 = deg2rad(45.0);
constexpr double kDeg60 = deg2rad(60.0);
constexpr double kDeg75 = deg2rad(75.0);
constexpr double kDeg90 = deg2rad(90.0);

bool within(double v, double lo, double hi, double tol) { return v >= lo - tol && v <= hi + tol; }

} // namespace

AnglePair AnglePair::from_radians(double alpha, double beta) {
    if (!(alpha >= 0.0 && alpha < kHalfPi) || !(beta >= 0.0 && beta < kHalfPi)) {
        throw OutOfDomain("angles_domain", "angles must lie in [0, 90 deg): alpha=" +
                                               std::to_string(rad2deg(alpha)) +
                                               " beta=" + std::to_string(rad2deg(beta)));
    }
    return AnglePair{alpha, beta};
}

AnglePair AnglePair::from_degrees(double alpha_deg, double beta_deg) {
    return from_radians(deg2rad(alpha_deg), deg2rad(beta_deg));
}

std::string_view critical_line_name(CriticalLine line) {
    switch (line) {
    case CriticalLine::Alpha60Convex: return "alpha=60 (convex)";
    case CriticalLine::AlphaEqualsBeta: return "alpha=beta";
    case CriticalLine::AlphaPlus2Beta90: return "alpha+2beta=90";
    case CriticalLine::Beta0: return "beta=0";
    case CriticalLine::Alpha60Concave: return "alpha=60 (concave)";
    case CriticalLine::TwoAlphaMinusBeta90: return "2alpha-beta=90";
    default: return "beta=60";
    }
}

std::string_view region_kind_name(Region::Kind kind) {
    switch (kind) {
    case Region::Kind::ConvexInterior: return "convex-interior";
    case Region::Kind::ConcaveC1: return "concave-C1";
    case Region::Kind::ConcaveC2: return "concave-C2";
    case Region::Kind::OnCriticalLine: return "on-critical-line";
    case Region::Kind::SingularPoint: return "singular-point";
    default: return "outside";
    }
}

Region classify_region(AnglePair p) {
    const double a = p.alpha;
    const double b = p.beta;

    // Singular points take precedence over the lines meeting there.
    if (std::abs(b - kDeg30) <= kLineTol && std::abs(a - kDeg30) <= kLineTol)
        return {Region::Kind::SingularPoint, {}, SingularPointId::SConvex};
    if (std::abs(b - kDeg30) <= kLineTol && std::abs(a - kDeg60) <= kLineTol)
        return {Region::Kind::SingularPoint, {}, SingularPointId::SConcave};

    // Edge tests: point-line distance within tolerance and inside the edge's
    // span along the region boundary.  Fixed priority keeps corner points
    // deterministic.
    if (std::abs(b) <= kLineTol && within(a, kDeg45, kDeg60, kLineTol))
        return {Region::Kind::OnCriticalLine, CriticalLine::Beta0, {}};
    if (std::abs(b - kDeg60) <= kLineTol && within(a, kDeg60, kDeg75, kLineTol))
        return {Region::Kind::OnCriticalLine, CriticalLine::Beta60, {}};
    if (std::abs(a + 2.0 * b - kDeg90) / kSqrt5 <= kLineTol && within(b, kDeg15, kDeg30, kLineTol))
        return {Region::Kind::OnCriticalLine, CriticalLine::AlphaPlus2Beta90, {}};
    if (std::abs(2.0 * a - b - kDeg90) / kSqrt5 <= kLineTol && within(b, 0.0, kDeg60, kLineTol))
        return {Region::Kind::OnCriticalLine, CriticalLine::TwoAlphaMinusBeta90, {}};
    if (std::abs(a - kDeg60) <= kLineTol && within(b, 0.0, kDeg60, kLineTol)) {
        const CriticalLine id =
            b >= kDeg15 ? CriticalLine::Alpha60Convex : CriticalLine::Alpha60Concave;
        return {Region::Kind::OnCriticalLine, id, {}};
    }
    // The alpha=beta diagonal bounds the convex triangle but is interior to
    // the full convex chart (swapping alpha and beta relabels A and B), so it
    // deliberately never classifies as OnCriticalLine; points on it fall
    // through to the folded interior test below.

    if (b > 0.0 && a < kDeg60 && 2.0 * a - b > kDeg90)
        return {Region::Kind::ConcaveC1, {}, {}};
    if (a > kDeg60 && b < kDeg60 && 2.0 * a - b < kDeg90)
        return {Region::Kind::ConcaveC2, {}, {}};

    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    if (hi < kDeg60 && hi + 2.0 * lo > kDeg90)
        return {Region::Kind::ConvexInterior, {}, {}};

    return {Region::Kind::Outside, {}, {}};
}

bool in_admissible_region(AnglePair p, ConfigKind kind, double tol) {
    const double a = p.alpha;
    const double b = p.beta;
    const double t = 3.0 * tol;
    if (kind == ConfigKind::Convex) {
        const double hi = std::max(a, b);
        const double lo = std::min(a, b);
        return hi <= kDeg60 + t && hi + 2.0 * lo >= kDeg90 - t;
    }
    const bool c1 = b >= -t && a <= kDeg60 + t && 2.0 * a - b >= kDeg90 - t;
    const bool c2 = a >= kDeg60 - t && b <= kDeg60 + t && 2.0 * a - b <= kDeg90 + t;
    return c1 || c2;
}

KLPoint to_kl(AnglePair p, FamilyId family) {
    const double ta = std::tan(p.alpha);
    const double tb = std::tan(p.beta);
    switch (family) {
    case FamilyId::ConvexMu1: return {ta, tb};
    case FamilyId::ConvexMu2: return {tb, ta}; // chart swap of the relabeled branch
    case FamilyId::ConcaveMu1: return {ta, -tb};
    default: return {-tb, ta};
    }
}

AnglePair from_kl(KLPoint q, FamilyId family) {
    double ta = 0.0;
    double tb = 0.0;
    switch (family) {
    case FamilyId::ConvexMu1: ta = q.k, tb = q.l; break;
    case FamilyId::ConvexMu2: ta = q.l, tb = q.k; break;
    case FamilyId::ConcaveMu1: ta = q.k, tb = -q.l; break;
    default: ta = q.l, tb = -q.k; break;
    }
    return AnglePair::from_radians(std::atan(ta), std::atan(tb));
}

KiteConfiguration reconstruct_positions(AnglePair p, ConfigKind kind) {
    if (kHalfPi - p.alpha < kLineTol || kHalfPi - p.beta < kLineTol)
        throw DegenerateGeometry("angles_domain", "tangent overflow near 90 deg");
    if (kind == ConfigKind::Concave && p.alpha <= p.beta)
        throw DegenerateGeometry("angles_domain", "concave kite requires alpha > beta");

    const double ta = std::tan(p.alpha);
    const double tb = std::tan(p.beta);
    KiteConfiguration c;
    c.positions[KiteConfiguration::A] = {0.0, ta};
    c.positions[KiteConfiguration::B] = {0.0, kind == ConfigKind::Convex ? -tb : tb};
    c.positions[KiteConfiguration::E] = {1.0, 0.0};
    c.positions[KiteConfiguration::EPrime] = {-1.0, 0.0};
    return c;
}

KiteConfiguration make_configuration(AnglePair p, ConfigKind kind, MassTriple m) {
    KiteConfiguration c = reconstruct_positions(p, kind);
    c.masses = {m.mu1, m.mu2, m.mu, m.mu};
    return c;
}

std::optional<FamilyId> family_from_name(std::string_view name) {
    for (FamilyId f : kAllFamilies)
        if (family_name(f) == name) return f;
    return std::nullopt;
}

} // namespace kitecc
