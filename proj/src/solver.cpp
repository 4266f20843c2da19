#include "kitecc/solver.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include "kitecc/analysis.hpp"
#include "kitecc/errors.hpp"
#include "kitecc/rootfind.hpp"

namespace kitecc {
namespace {

constexpr double kDeg15 = deg2rad(15.0);
constexpr double kDeg30 = deg2rad(30.0);
constexpr double kDeg45 = deg2rad(45.0);
constexpr double kDeg60 = deg2rad(60.0);
constexpr double kDeg90 = deg2rad(90.0);
const double kScanStep = deg2rad(0.1);
const double kScanMargin = deg2rad(0.3);
// Merge tolerance for grid/endpoint dedup (radians).
constexpr double kMergeTol = 1e-11;

double residual_at(FamilyId f, double alpha, double beta) {
    return residual_full(AnglePair{alpha, beta}, f);
}

// Admissible alpha extent of the family's regions at fixed beta, widened so
// roots sitting exactly on a critical line still get bracketed.
std::pair<double, double> alpha_scan_range(FamilyId f, double beta) {
    double lo = 0.0;
    double hi = 0.0;
    if (kind_of(f) == ConfigKind::Convex) {
        lo = std::max(beta, kDeg90 - 2.0 * beta) - kScanMargin;
        hi = kDeg60 + kScanMargin;
    } else if (beta < kDeg30) {
        lo = kDeg45 + 0.5 * beta - kScanMargin; // C1: above 2*alpha - beta = 90
        hi = kDeg60 + kScanMargin;
    } else {
        lo = kDeg60 - kScanMargin; // C2: between alpha = 60 and 2*alpha - beta = 90
        hi = kDeg45 + 0.5 * beta + kScanMargin;
    }
    lo = std::max(lo, deg2rad(1.0));
    if (kind_of(f) == ConfigKind::Concave) lo = std::max(lo, beta + deg2rad(1e-4));
    hi = std::min(hi, deg2rad(89.5));
    return {lo, hi};
}

std::vector<double> admissible_roots(FamilyId f, double beta, double scan_step) {
    const auto [lo, hi] = alpha_scan_range(f, beta);
    const auto fn = [&](double a) { return residual_at(f, a, beta); };
    auto brackets = scan_brackets(fn, lo, hi, scan_step);
    if (brackets.empty()) brackets = scan_brackets(fn, lo, hi, scan_step * 0.1);

    std::vector<double> roots;
    for (const auto& [blo, bhi] : brackets) {
        const double a = blo == bhi ? blo : find_root(fn, blo, bhi);
        if (!in_admissible_region(AnglePair{a, beta}, kind_of(f))) continue;
        if (!roots.empty() && std::abs(roots.back() - a) < 1e-9) continue;
        roots.push_back(a);
    }
    return roots;
}

const char* family_module = "solver";

SpecialPoint make_point(SpecialPoint::Label label, AnglePair angles, ConfigKind kind) {
    SpecialPoint sp;
    sp.label = label;
    sp.angles = angles;
    const MassResult m = masses(angles, kind);
    if (m.ok()) sp.masses = m.value;
    return sp;
}

// One critical-line edge: a 1-D slice of the condition, parametrized by beta
// (or alpha for the vertical edges), scanned for endpoint roots.
struct EdgeCandidate {
    CriticalLine line;
    double t_lo, t_hi;
    bool t_is_alpha;
};

AnglePair edge_point(const EdgeCandidate& e, double t) {
    switch (e.line) {
    case CriticalLine::AlphaEqualsBeta: return {t, t};
    case CriticalLine::Alpha60Convex:
    case CriticalLine::Alpha60Concave: return {kDeg60, t};
    case CriticalLine::AlphaPlus2Beta90: return {kDeg90 - 2.0 * t, t};
    case CriticalLine::TwoAlphaMinusBeta90: return {0.5 * (kDeg90 + t), t};
    case CriticalLine::Beta0: return {t, 0.0};
    default: return {t, kDeg60}; // Beta60
    }
}

std::vector<EdgeCandidate> edge_candidates(ConfigKind kind) {
    if (kind == ConfigKind::Convex) {
        return {
            {CriticalLine::AlphaEqualsBeta, deg2rad(30.2), deg2rad(59.8), false},
            {CriticalLine::Alpha60Convex, deg2rad(15.05), deg2rad(59.95), false},
            {CriticalLine::AlphaPlus2Beta90, deg2rad(15.05), deg2rad(29.7), false},
        };
    }
    // The spans around beta = 30 are left out: both concave curves cross the
    // singular point there rather than terminating.
    return {
        {CriticalLine::Alpha60Concave, deg2rad(0.0), deg2rad(29.5), false},
        {CriticalLine::Alpha60Concave, deg2rad(30.5), deg2rad(59.9), false},
        {CriticalLine::TwoAlphaMinusBeta90, deg2rad(0.0), deg2rad(29.5), false},
        {CriticalLine::TwoAlphaMinusBeta90, deg2rad(30.5), deg2rad(59.9), false},
        {CriticalLine::Beta0, deg2rad(45.05), deg2rad(59.95), true},
        {CriticalLine::Beta60, deg2rad(60.05), deg2rad(74.95), true},
    };
}

std::optional<SpecialPoint::Label> endpoint_label(FamilyId f, CriticalLine line) {
    using L = SpecialPoint::Label;
    switch (f) {
    case FamilyId::ConvexMu1:
        if (line == CriticalLine::AlphaEqualsBeta) return L::G;
        if (line == CriticalLine::Alpha60Convex) return L::P1;
        return std::nullopt;
    case FamilyId::ConvexMu2:
        if (line == CriticalLine::AlphaEqualsBeta) return L::G;
        if (line == CriticalLine::AlphaPlus2Beta90) return L::P2;
        return std::nullopt;
    case FamilyId::ConcaveMu1:
        if (line == CriticalLine::Alpha60Concave) return L::P5;
        if (line == CriticalLine::TwoAlphaMinusBeta90) return L::P7;
        return std::nullopt;
    default:
        if (line == CriticalLine::Beta0) return L::P4;
        if (line == CriticalLine::Beta60) return L::P3;
        return std::nullopt;
    }
}

bool near_singular_S(FamilyId f, double alpha, double beta) {
    return kind_of(f) == ConfigKind::Concave && std::abs(beta - kDeg30) < kLineTol &&
           std::abs(alpha - kDeg60) < kLineTol;
}

CurvePoint solve_point(FamilyId f, double beta) {
    CurvePoint pt;
    pt.beta = beta;
    pt.alpha = solve_alpha(f, beta);
    pt.residual = residual_at(f, pt.alpha, beta);
    pt.mass = masses(AnglePair{pt.alpha, pt.beta}, kind_of(f));
    if (!pt.singular() && near_singular_S(f, pt.alpha, pt.beta)) {
        pt.mass.status = MassStatus::SingularDenominator;
        const double nan = std::numeric_limits<double>::quiet_NaN();
        pt.mass.value = {nan, nan, nan};
    }
    return pt;
}

} // namespace

std::string_view SpecialPoint::name() const {
    switch (label) {
    case Label::G: return "G";
    case Label::SConvex: return "S-convex";
    case Label::SConcave: return "S-concave";
    case Label::P1: return "P1";
    case Label::P2: return "P2";
    case Label::P3: return "P3";
    case Label::P4: return "P4";
    case Label::P5: return "P5";
    case Label::P7: return "P7";
    case Label::FourEqualCrossing: return "four-equal-crossing";
    case Label::PalmorePoint: return "palmore-point";
    default: return "m-star";
    }
}

double solve_alpha(FamilyId family, double beta, double alpha_lo, double alpha_hi) {
    const auto fn = [&](double a) { return residual_at(family, a, beta); };
    const double a = find_root(fn, alpha_lo, alpha_hi);
    return a;
}

double solve_alpha(FamilyId family, double beta) {
    const auto roots = admissible_roots(family, beta, kScanStep);
    if (roots.empty()) {
        std::ostringstream os;
        os << family_name(family) << ": no admissible root at beta=" << rad2deg(beta) << " deg";
        throw NoBracket(os.str());
    }
    if (roots.size() > 1) {
        std::ostringstream os;
        os << family_name(family) << ": " << roots.size()
           << " admissible roots at beta=" << rad2deg(beta) << " deg";
        throw ConvergenceFailure(family_module, os.str());
    }
    return roots.front();
}

std::pair<SpecialPoint, SpecialPoint> family_endpoints(FamilyId family) {
    const ConfigKind kind = kind_of(family);
    std::vector<SpecialPoint> found;
    for (const EdgeCandidate& edge : edge_candidates(kind)) {
        const auto fn = [&](double t) { return residual_full(edge_point(edge, t), family); };
        for (const auto& [lo, hi] : scan_brackets(fn, edge.t_lo, edge.t_hi, kScanStep)) {
            const double t = lo == hi ? lo : find_root(fn, lo, hi);
            const AnglePair at = edge_point(edge, t);
            if (!in_admissible_region(at, kind)) continue;
            const auto label = endpoint_label(family, edge.line);
            if (!label) {
                std::ostringstream os;
                os << family_name(family) << ": unexpected endpoint on "
                   << critical_line_name(edge.line);
                throw ConvergenceFailure(family_module, os.str());
            }
            found.push_back(make_point(*label, at, kind));
        }
    }
    if (found.size() != 2) {
        std::ostringstream os;
        os << family_name(family) << ": expected 2 endpoints, found " << found.size();
        throw ConvergenceFailure(family_module, os.str());
    }
    if (found[0].angles.beta > found[1].angles.beta) std::swap(found[0], found[1]);
    return {found[0], found[1]};
}

std::pair<double, double> family_beta_domain(FamilyId family) {
    const auto [lo, hi] = family_endpoints(family);
    return {lo.angles.beta, hi.angles.beta};
}

CurveFamily trace_family(FamilyId family, double step_deg) {
    if (!(step_deg > 0.0))
        throw OutOfDomain(family_module, "trace step must be positive");

    CurveFamily fam;
    fam.id = family;
    auto endpoints = family_endpoints(family);
    fam.endpoints = {endpoints.first, endpoints.second};
    fam.beta_lo = endpoints.first.angles.beta;
    fam.beta_hi = endpoints.second.angles.beta;

    const double blo_deg = rad2deg(fam.beta_lo);
    const double bhi_deg = rad2deg(fam.beta_hi);
    const auto klo = static_cast<long>(std::ceil(blo_deg / step_deg - 1e-9));
    const auto khi = static_cast<long>(std::floor(bhi_deg / step_deg + 1e-9));

    std::size_t failures = 0;
    std::string first_failure;
    std::vector<CurvePoint> pts;
    for (long k = klo; k <= khi; ++k) {
        const double beta = deg2rad(static_cast<double>(k) * step_deg);
        try {
            pts.push_back(solve_point(family, beta));
        } catch (const Error& e) {
            if (failures++ == 0) first_failure = e.what();
        }
    }
    const std::size_t grid_size = pts.size() + failures;
    if (grid_size > 0 && failures * 100 > grid_size) {
        std::ostringstream os;
        os << family_name(family) << ": " << failures << "/" << grid_size
           << " grid solves failed; first: " << first_failure;
        throw ConvergenceFailure(family_module, os.str());
    }

    // Exact endpoint rows when the grid missed them.
    const auto endpoint_row = [&](const SpecialPoint& sp) {
        CurvePoint pt;
        pt.beta = sp.angles.beta;
        pt.alpha = sp.angles.alpha;
        pt.residual = residual_full(sp.angles, family);
        pt.mass = masses(sp.angles, kind_of(family));
        return pt;
    };
    if (pts.empty() || std::abs(pts.front().beta - fam.beta_lo) > kMergeTol)
        pts.insert(pts.begin(), endpoint_row(endpoints.first));
    if (std::abs(pts.back().beta - fam.beta_hi) > kMergeTol)
        pts.push_back(endpoint_row(endpoints.second));

    fam.points = std::move(pts);
    return fam;
}

MassTriple singular_limit_masses(FamilyId family) {
    if (kind_of(family) != ConfigKind::Concave)
        throw OutOfDomain(family_module, "singular passage exists only for concave families");

    // The singular point itself only pins 3*mu1 + mu2 = 1.  For the mu2
    // family the equal-mass constraint mu1 + 3*mu2 = 1 is independent, so the
    // two linear conditions determine the split outright.
    if (!is_mu1_family(family)) {
        const double mu1 = (3.0 - 1.0) / (9.0 - 1.0);
        const double mu2 = (3.0 - 1.0) / (9.0 - 1.0);
        return {mu1, mu2, mu2};
    }

    // For the mu1 family the constraint coincides with the singular
    // condition, leaving the ratio mu2/mu1 to the curve itself: Richardson-
    // extrapolate it from both sides of the passage.
    const auto ratio = [&](double beta) {
        const double alpha = solve_alpha(family, beta);
        const MassResult m = masses(AnglePair{alpha, beta}, kind_of(family));
        if (!m.ok()) throw ConvergenceFailure(family_module, "mass ratio undefined near S");
        return m.value.mu2 / m.value.mu1;
    };
    const double eps = deg2rad(0.05);
    const double below = 2.0 * ratio(kDeg30 - 0.5 * eps) - ratio(kDeg30 - eps);
    const double above = 2.0 * ratio(kDeg30 + 0.5 * eps) - ratio(kDeg30 + eps);
    const double r = 0.5 * (below + above);
    const double mu1 = 1.0 / (3.0 + r);
    return {mu1, r * mu1, mu1};
}

std::vector<BranchPoint> branch_values(FamilyId family, double alpha) {
    const CurveFamily& fine = cached_fine_trace(family);
    const auto& pts = fine.points;

    std::vector<double> roots;
    const auto refine = [&](std::size_t i) {
        // Root of alpha(beta) - alpha over [beta_i, beta_i+1], with the alpha
        // solve restricted to a local bracket around the two grid values.
        const double alo =
            std::min(pts[i].alpha, pts[i + 1].alpha) - deg2rad(0.05);
        const double ahi =
            std::max(pts[i].alpha, pts[i + 1].alpha) + deg2rad(0.05);
        const auto h = [&](double beta) { return solve_alpha(family, beta, alo, ahi) - alpha; };
        return find_root(h, pts[i].beta, pts[i + 1].beta);
    };

    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double d0 = pts[i].alpha - alpha;
        const double d1 = pts[i + 1].alpha - alpha;
        if (d0 == 0.0) {
            roots.push_back(pts[i].beta);
        } else if (d1 != 0.0 && std::signbit(d0) != std::signbit(d1)) {
            roots.push_back(refine(i));
        }
    }
    if (!pts.empty() && pts.back().alpha == alpha) roots.push_back(pts.back().beta);

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                roots.end());
    if (roots.empty()) {
        std::ostringstream os;
        os << family_name(family) << ": alpha=" << rad2deg(alpha) << " deg outside codomain";
        throw NoSolution(os.str());
    }

    std::vector<BranchPoint> out;
    for (double beta : roots) {
        const MassResult m = masses(AnglePair{alpha, beta}, kind_of(family));
        out.push_back({beta, m.ok() ? m.value : singular_limit_masses(family)});
    }
    return out;
}

const CurveFamily& cached_fine_trace(FamilyId family) {
    static std::array<std::once_flag, 4> flags;
    static std::array<CurveFamily, 4> cache;
    const auto i = static_cast<std::size_t>(family);
    std::call_once(flags[i], [&] { cache[i] = trace_family(family, 0.01); });
    return cache[i];
}

std::vector<SpecialPoint> special_points() {
    using L = SpecialPoint::Label;
    std::vector<SpecialPoint> out;

    const auto cvx1 = family_endpoints(FamilyId::ConvexMu1);
    const auto cvx2 = family_endpoints(FamilyId::ConvexMu2);
    const auto ccv1 = family_endpoints(FamilyId::ConcaveMu1);
    const auto ccv2 = family_endpoints(FamilyId::ConcaveMu2);

    out.push_back(cvx1.first); // G

    // Singular corner points from crossing their two critical lines.
    // alpha = beta and alpha + 2*beta = 90 meet at (30, 30);
    // alpha = 60 and 2*alpha - beta = 90 meet at (30, 60).
    SpecialPoint sconvex;
    sconvex.label = L::SConvex;
    sconvex.angles = AnglePair::from_radians(kDeg90 / 3.0, kDeg90 / 3.0);
    sconvex.mass_note = "mu1+mu2=1, mu=0; split undetermined";
    out.push_back(sconvex);

    SpecialPoint sconcave;
    sconcave.label = L::SConcave;
    sconcave.angles = AnglePair::from_radians(2.0 * kDeg90 / 3.0, kDeg90 / 3.0);
    sconcave.mass_note = "3*mu1+mu2=1, mu=mu1; split undetermined";
    out.push_back(sconcave);

    out.push_back(cvx1.second);  // P1
    out.push_back(cvx2.first);   // P2
    out.push_back(ccv2.second);  // P3
    out.push_back(ccv2.first);   // P4
    out.push_back(ccv1.first);   // P5
    out.push_back(ccv1.second);  // P7

    // Second four-equal-mass point: the concave mu2 condition vanishing along
    // the concave mu1 curve, away from the singular passage.
    {
        const auto fn = [&](double beta) {
            const double alpha = solve_alpha(FamilyId::ConcaveMu1, beta);
            return residual_full(AnglePair{alpha, beta}, FamilyId::ConcaveMu2);
        };
        const auto brackets = scan_brackets(fn, deg2rad(30.8), deg2rad(39.5), kScanStep);
        if (brackets.size() != 1)
            throw ConvergenceFailure(family_module, "four-equal crossing: bracket count != 1");
        const double beta = find_root(fn, brackets[0].first, brackets[0].second);
        const double alpha = solve_alpha(FamilyId::ConcaveMu1, beta);
        out.push_back(make_point(L::FourEqualCrossing, AnglePair::from_radians(alpha, beta),
                                 ConfigKind::Concave));
    }

    // Mass limits at the singular passage of the concave mu1 curve.
    {
        SpecialPoint palmore;
        palmore.label = L::PalmorePoint;
        palmore.angles = sconcave.angles;
        palmore.masses = singular_limit_masses(FamilyId::ConcaveMu1);
        palmore.mass_note = "limit along concave-mu1";
        out.push_back(palmore);
    }

    // Extremal mass-ratio point of the concave mu2 curve.
    {
        const AnglePair at = find_M_minimum();
        out.push_back(make_point(L::MStarPoint, at, ConfigKind::Concave));
    }

    return out;
}

} // namespace kitecc
