#ifndef KITECC_ANALYSIS_HPP
#define KITECC_ANALYSIS_HPP

#include <optional>

#include "kitecc/angles.hpp"
#include "kitecc/solver.hpp"

namespace kitecc {

// Closed-form slope d(alpha)/d(beta) of a family curve, reported with its
// numerator and denominator so sign claims can be checked separately.
struct DerivativeEval {
    double value;
    double numerator;
    double denominator;
};

// Evaluates the family's curve-slope function at an on-curve point (the
// condition residual must vanish to 1e-9 scaled; throws OutOfDomain
// otherwise, ZeroDenominator when the denominator underflows).
DerivativeEval g_eval(FamilyId family, AnglePair p);

struct CurveExtremum {
    AnglePair at;
    enum class Type { Minimum, Maximum } type;
};

// Locates the root of the slope numerator along the curve for the two
// noninjective families (ConvexMu2, ConcaveMu1); empty for the strictly
// monotone ones.  The extremum type comes from a finite-difference estimate
// of the slope's derivative.
std::optional<CurveExtremum> find_curve_extremum(FamilyId family);

// Mass ratio mu2/mu1 along the ConcaveMu2 curve, evaluated by the closed
// form that remains determinate at the singular passage.  Domain:
// beta in [30 deg, 33.093 deg]; throws OutOfDomain outside it.
double mass_ratio_M(double beta);

// Derivative dM/d(beta) of the ratio above (closed form).
double mass_ratio_M_derivative(double beta);

// The unique interior minimum of M, located as the bracketed root of its
// derivative; the result satisfies the ConcaveMu2 condition.
AnglePair find_M_minimum();

// Limit of mu2/mu1 along the ConcaveMu1 curve at its singular passage
// (beta -> 30 deg), by two-sided Richardson extrapolation.
double palmore_ratio();

// Fills CurveFamily::extremum for noninjective families.
void annotate_extremum(CurveFamily& family);

} // namespace kitecc

#endif
