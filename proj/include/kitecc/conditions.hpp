#ifndef KITECC_CONDITIONS_HPP
#define KITECC_CONDITIONS_HPP

#include <optional>

#include "kitecc/angles.hpp"
#include "kitecc/mass_model.hpp"

namespace kitecc {

// Residual of the three-equal-mass condition in its cleared trigonometric
// form.  Zero exactly on the family's solution curve.  This is the canonical
// function for root finding.
double residual_full(AnglePair p, FamilyId family);

// The same condition expressed through the mass coefficients:
// a0 - a1 - 3*b0 for mu=mu1 families, b0 - b1 - 3*a0 for mu=mu2 families.
// Algebraically identical to residual_full; kept for cross-validation.
double residual_reduced(AnglePair p, FamilyId family);

// Magnitude scale of the residual's constituent terms at p, for converting
// raw residuals into relative tolerances.
double residual_scale(AnglePair p, FamilyId family);

// A line on which the equal-mass condition is satisfied degenerately, with
// one axis mass pinned to 1 and everything else massless.
struct ExceptionalCase {
    CriticalLine line;
    double mu1;
    double mu2;
};

// Nonempty when p lies (within kLineTol) on the kind's exceptional line:
// alpha + 2*beta = 90 deg for convex (mu1 = 1), 2*alpha - beta = 90 deg for
// concave (mu2 = 1).
std::optional<ExceptionalCase> exceptional_line_check(AnglePair p, ConfigKind kind);

} // namespace kitecc

#endif
