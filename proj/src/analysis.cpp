#include "kitecc/analysis.hpp"

#include <cmath>
#include <sstream>

#include "kitecc/errors.hpp"
#include "kitecc/rootfind.hpp"

namespace kitecc {
namespace {

constexpr const char* kModule = "analysis";
constexpr double kOnCurveTol = 1e-9;
constexpr double kZeroDenTol = 1e-12;
const double kMDomainLo = deg2rad(30.0);
const double kMDomainHi = deg2rad(33.093);

struct Trig {
    double sa, ca, ta;
    double sb, cb, tb;
};

Trig trig(AnglePair p) {
    return {std::sin(p.alpha), std::cos(p.alpha), std::tan(p.alpha),
            std::sin(p.beta),  std::cos(p.beta),  std::tan(p.beta)};
}

double cube(double x) { return x * x * x; }

DerivativeEval slope_parts(FamilyId f, AnglePair p) {
    const Trig t = trig(p);
    const double ca2 = t.ca * t.ca;
    const double cb2 = t.cb * t.cb;
    const double ca3 = cube(t.ca);
    const double cb3 = cube(t.cb);
    const double sum3 = cube(t.ta + t.tb);
    const double dif3 = cube(t.ta - t.tb);

    double num = 0.0;
    double den = 0.0;
    switch (f) {
    case FamilyId::ConvexMu1:
        num = 2.0 * t.cb * (3.0 * t.sb * t.sb - 1.0) +
              (0.25 + ca3 + 2.0 / sum3) / cb2;
        den = t.ca * (3.0 * t.sa * t.sa - 1.0) + 3.0 * t.sa * ca2 * t.tb -
              2.0 / (sum3 * ca2);
        break;
    case FamilyId::ConvexMu2:
        num = t.cb * (3.0 * t.sb * t.sb - 1.0) + 3.0 * t.sb * cb2 * t.ta -
              2.0 / (sum3 * cb2);
        den = 2.0 * t.ca * (3.0 * t.sa * t.sa - 1.0) +
              (0.25 + cb3 + 2.0 / sum3) / ca2;
        break;
    case FamilyId::ConcaveMu1:
        num = 2.0 * t.cb * (3.0 * t.sb * t.sb - 1.0) +
              (0.25 + ca3 + 2.0 / dif3) / cb2;
        den = 3.0 * t.sa * ca2 * t.tb + t.ca - 3.0 * t.sa * t.sa * t.ca +
              2.0 / (dif3 * ca2);
        break;
    default: // ConcaveMu2
        num = 3.0 * t.sb * t.cb * (t.cb * t.ta - t.sb) + t.cb + 2.0 / (dif3 * cb2);
        den = 2.0 * t.ca * (3.0 * t.sa * t.sa - 1.0) +
              (0.25 + cb3 + 2.0 / dif3) / ca2;
        break;
    }
    return {num / den, num, den};
}

AnglePair on_curve(FamilyId f, double beta) {
    return AnglePair::from_radians(solve_alpha(f, beta), beta);
}

} // namespace

DerivativeEval g_eval(FamilyId family, AnglePair p) {
    const double res = residual_full(p, family);
    if (std::abs(res) > kOnCurveTol * residual_scale(p, family)) {
        std::ostringstream os;
        os << family_name(family) << ": point (" << p.alpha_deg() << ", " << p.beta_deg()
           << ") deg is off the solution curve";
        throw OutOfDomain(kModule, os.str());
    }
    DerivativeEval e = slope_parts(family, p);
    if (std::abs(e.denominator) < kZeroDenTol)
        throw ZeroDenominator("slope denominator underflow");
    return e;
}

std::optional<CurveExtremum> find_curve_extremum(FamilyId family) {
    const auto [blo, bhi] = family_beta_domain(family);
    const double pad = deg2rad(0.05);
    const auto numerator = [&](double beta) {
        return slope_parts(family, on_curve(family, beta)).numerator;
    };

    const auto brackets = scan_brackets(numerator, blo + pad, bhi - pad, deg2rad(0.1));
    if (brackets.empty()) return std::nullopt; // strictly monotone family
    if (brackets.size() > 1)
        throw ConvergenceFailure(kModule, "multiple slope-numerator roots on curve");

    const double beta = find_root(numerator, brackets[0].first, brackets[0].second);
    const AnglePair at = on_curve(family, beta);

    // Extremum type from a finite-difference slope of g along the curve.
    const double h = 1e-4;
    const double gp = g_eval(family, on_curve(family, beta + h)).value;
    const double gm = g_eval(family, on_curve(family, beta - h)).value;
    const double second = (gp - gm) / (2.0 * h);
    return CurveExtremum{at, second > 0.0 ? CurveExtremum::Type::Minimum
                                          : CurveExtremum::Type::Maximum};
}

double mass_ratio_M(double beta) {
    if (!(beta >= kMDomainLo - kLineTol && beta <= kMDomainHi + kLineTol)) {
        std::ostringstream os;
        os << "mass-ratio function defined on [30, 33.093] deg; got " << rad2deg(beta);
        throw OutOfDomain(kModule, os.str());
    }
    const AnglePair p = on_curve(FamilyId::ConcaveMu2, beta);
    const Trig t = trig(p);
    const double ca3 = cube(t.ca);
    const double cb3 = cube(t.cb);
    const double num = ca3 * (3.0 * t.ta - t.tb) - cb3 * (t.ta - t.tb) - 0.25 * t.ta;
    const double den = (0.25 - 2.0 * cb3) * t.tb;
    if (std::abs(den) < kZeroDenTol) throw ZeroDenominator("mass-ratio denominator underflow");
    return num / den;
}

double mass_ratio_M_derivative(double beta) {
    const AnglePair p = on_curve(FamilyId::ConcaveMu2, beta);
    const Trig t = trig(p);
    const double ca2 = t.ca * t.ca;
    const double cb2 = t.cb * t.cb;
    const double ca3 = cube(t.ca);
    const double cb3 = cube(t.cb);
    const double g4 = g_eval(FamilyId::ConcaveMu2, p).value;

    const double n51 =
        g4 * (3.0 * t.ca - 3.0 * t.sa * ca2 * (3.0 * t.ta - t.tb) - (cb3 + 0.25) / ca2) +
        3.0 * t.sb * cb2 * (t.ta - t.tb) - ca3 / cb2 + t.cb;
    const double n52 = (0.25 - 2.0 * cb3) * t.tb;
    const double n53 = ca3 * (3.0 * t.ta - t.tb) - cb3 * (t.ta - t.tb) - 0.25 * t.ta;
    const double n54 = 2.0 * t.cb * (3.0 * t.sb * t.sb - 1.0) + 0.25 / cb2;
    const double d5 = t.tb * t.tb * (4.0 * cb3 * cb3 - cb3 + 1.0 / 16.0);
    if (std::abs(d5) < kZeroDenTol) throw ZeroDenominator("ratio-derivative denominator underflow");
    return (n51 * n52 - n53 * n54) / d5;
}

AnglePair find_M_minimum() {
    const auto brackets =
        scan_brackets(mass_ratio_M_derivative, kMDomainLo + deg2rad(0.1),
                      kMDomainHi - deg2rad(0.05), deg2rad(0.05));
    if (brackets.size() != 1)
        throw ConvergenceFailure(kModule, "mass-ratio derivative: expected a single root bracket");
    const double beta = find_root(mass_ratio_M_derivative, brackets[0].first, brackets[0].second);
    return on_curve(FamilyId::ConcaveMu2, beta);
}

double palmore_ratio() {
    const MassTriple m = singular_limit_masses(FamilyId::ConcaveMu1);
    return m.mu2 / m.mu1;
}

void annotate_extremum(CurveFamily& family) {
    if (const auto ext = find_curve_extremum(family.id)) family.extremum = ext->at;
}

} // namespace kitecc
