#ifndef KITECC_MASS_MODEL_HPP
#define KITECC_MASS_MODEL_HPP

#include <string_view>

#include "kitecc/angles.hpp"

namespace kitecc {

// Trigonometric coefficients of the linear system whose solution gives the
// axis masses.  Convex and concave kinds use different sign patterns.
struct Coefficients {
    double a0;
    double a1;
    double b0;
    double b1;
};

// Throws DegenerateGeometry when the tangent difference (concave) or sum
// (convex) underflows, or when a concave pair has alpha <= beta.
Coefficients coefficients(AnglePair p, ConfigKind kind);

// Nondimensional masses: mu1 (body A), mu2 (body B), mu (each wing body),
// normalized so that mu1 + mu2 + 2*mu = 1.
struct MassTriple {
    double mu1;
    double mu2;
    double mu;
};

enum class MassStatus {
    Ok,
    SingularDenominator, // mass solution undetermined (singular point S)
    InvalidMasses,       // solution exists but leaves [0,1]: outside admissible region
};

// Raw mass solution.  Values are reported unclamped even when invalid so
// callers can inspect how the bounds were violated.
struct MassResult {
    MassStatus status = MassStatus::InvalidMasses;
    MassTriple value{0.0, 0.0, 0.0};
    double denominator = 0.0;

    bool ok() const { return status == MassStatus::Ok; }
};

MassResult masses(AnglePair p, ConfigKind kind);

std::string_view mass_status_name(MassStatus s);

} // namespace kitecc

#endif
