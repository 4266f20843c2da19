#ifndef KITECC_SOLVER_HPP
#define KITECC_SOLVER_HPP

#include <array>
#include <limits>
#include <utility>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kitecc/angles.hpp"
#include "kitecc/conditions.hpp"
#include "kitecc/mass_model.hpp"

namespace kitecc {

// One traced solution point.  oracle_residual and lambda stay NaN until a
// verification pass fills them.
struct CurvePoint {
    double beta = 0.0;  // radians
    double alpha = 0.0; // radians
    MassResult mass;
    double residual = 0.0;
    double oracle_residual = std::numeric_limits<double>::quiet_NaN();
    double lambda = std::numeric_limits<double>::quiet_NaN();

    bool singular() const { return mass.status == MassStatus::SingularDenominator; }
    AnglePair angles() const { return AnglePair::from_radians(alpha, beta); }
};

struct SpecialPoint {
    enum class Label {
        G,
        SConvex,
        SConcave,
        P1,
        P2,
        P3,
        P4,
        P5,
        P7,
        FourEqualCrossing,
        PalmorePoint,
        MStarPoint,
    };

    Label label;
    AnglePair angles;
    std::optional<MassTriple> masses; // empty for the degenerate S points
    std::string mass_note;            // constraint description when degenerate

    std::string_view name() const;
};

struct CurveFamily {
    FamilyId id;
    std::vector<CurvePoint> points; // strictly increasing beta
    std::array<SpecialPoint, 2> endpoints;
    std::optional<AnglePair> extremum; // attached by the analysis layer
    double beta_lo = 0.0;
    double beta_hi = 0.0;
};

// Solves the family condition for alpha at fixed beta inside an explicit
// bracket (residual signs must differ at the ends).
double solve_alpha(FamilyId family, double beta, double alpha_lo, double alpha_hi);

// Same, but the bracket is discovered by scanning the admissible alpha
// extent of the family's regions at the given beta.
double solve_alpha(FamilyId family, double beta);

// Endpoint pair of a family's beta-domain, discovered by solving the
// condition constrained to each bordering critical line.
std::pair<SpecialPoint, SpecialPoint> family_endpoints(FamilyId family);
std::pair<double, double> family_beta_domain(FamilyId family);

// Traces the family over a beta grid anchored at integer multiples of the
// step (degrees), with the exact endpoint points prepended/appended when the
// grid misses them.  Concave families store a singular marker at the S
// passage.
CurveFamily trace_family(FamilyId family, double step_deg = 0.05);

// All beta values on the family curve at the given alpha (one or two), with
// masses.  Throws NoSolution when alpha is outside the family codomain.
struct BranchPoint {
    double beta; // radians
    MassTriple masses;
};
std::vector<BranchPoint> branch_values(FamilyId family, double alpha);

// Limiting masses at the singular passage S along a concave family curve,
// obtained by extrapolating the mass ratio mu2/mu1 from both sides.
MassTriple singular_limit_masses(FamilyId family);

// The full catalog of labeled points, each obtained from a constrained solve.
std::vector<SpecialPoint> special_points();

// Shared fine-grained trace (0.01 deg) used for branch queries; computed once
// per family.
const CurveFamily& cached_fine_trace(FamilyId family);

} // namespace kitecc

#endif
