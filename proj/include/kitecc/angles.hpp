#ifndef KITECC_ANGLES_HPP
#define KITECC_ANGLES_HPP

#include <optional>
#include <string_view>

#include "kitecc/family.hpp"

namespace kitecc {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Angular tolerance (radians) for on-line and singular-point classification.
inline constexpr double kLineTol = 1e-9;

constexpr double deg2rad(double d) { return d * (kPi / 180.0); }
constexpr double rad2deg(double r) { return r * (180.0 / kPi); }

// Angle coordinates (alpha, beta) of a kite configuration, stored in radians.
// Both angles must lie in [0, 90 deg) so that their tangents are finite.
// Degrees appear only at I/O boundaries; use the explicit factories.
struct AnglePair {
    double alpha; // radians
    double beta;  // radians

    static AnglePair from_radians(double alpha, double beta);
    static AnglePair from_degrees(double alpha_deg, double beta_deg);

    double alpha_deg() const { return rad2deg(alpha); }
    double beta_deg() const { return rad2deg(beta); }
};

// The critical lines bounding the admissible regions in the (beta, alpha)
// plane.  Alpha60 appears twice because the line borders both the convex
// triangle and the concave ones; classification reports the convex id for
// beta >= 15 deg (the span adjacent to the convex region) and the concave id
// below it.
enum class CriticalLine {
    Alpha60Convex,
    AlphaEqualsBeta,
    AlphaPlus2Beta90,
    Beta0,
    Alpha60Concave,
    TwoAlphaMinusBeta90,
    Beta60,
};

enum class SingularPointId { SConvex, SConcave };

struct Region {
    enum class Kind { ConvexInterior, ConcaveC1, ConcaveC2, OnCriticalLine, SingularPoint, Outside };

    Kind kind = Kind::Outside;
    std::optional<CriticalLine> line;       // set iff kind == OnCriticalLine
    std::optional<SingularPointId> point;   // set iff kind == SingularPoint
};

std::string_view critical_line_name(CriticalLine line);
std::string_view region_kind_name(Region::Kind kind);

// Classifies a point of the (beta, alpha) plane against the admissible
// regions.  Convex and concave charts overlap in a sliver near their shared
// corner; the concave C1 region takes precedence there.  The alpha=beta
// diagonal is an axis of the relabeling symmetry A<->B of the convex chart,
// so points on it inside the convex span classify as ConvexInterior rather
// than OnCriticalLine.
Region classify_region(AnglePair p);

// Membership of the closed admissible set of one configuration kind
// (interior, bounding lines, or singular point).  Used by the solver to
// filter roots.
bool in_admissible_region(AnglePair p, ConfigKind kind, double tol = kLineTol);

// Coordinates of the comparison chart: k and l are signed tangents of the
// angles, with family-dependent roles and signs.
struct KLPoint {
    double k;
    double l;
};

KLPoint to_kl(AnglePair p, FamilyId family);
AnglePair from_kl(KLPoint q, FamilyId family);

} // namespace kitecc

#endif
