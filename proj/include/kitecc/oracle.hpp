#ifndef KITECC_ORACLE_HPP
#define KITECC_ORACLE_HPP

#include <array>

#include "kitecc/kite.hpp"
#include "kitecc/solver.hpp"

namespace kitecc {

// Newtonian gravitational accelerations (G = 1) of the four bodies from
// their mutual attraction.  Throws CollisionSingularity when two bodies
// come closer than 1e-12.
std::array<Vec2, 4> accelerations(const KiteConfiguration& c);

// Result of the first-principles centrality check: after shifting to the
// barycentric frame, every body's acceleration must equal -lambda * r with a
// common positive lambda.
struct CentralityReport {
    double lambda = 0.0;
    double max_relative_residual = 0.0;
    std::array<double, 4> per_body_lambda{}; // NaN where undefined
    std::array<bool, 4> degenerate{};        // body at the barycenter
    Vec2 barycenter_shift;
};

// Verifies the centrality condition.  Zero-mass bodies contribute their own
// lambda consistency but are excluded from the weighted lambda estimate; a
// massive body sitting at the barycenter with negligible acceleration is
// trivially central and reported via the degenerate flags.
CentralityReport verify_central(const KiteConfiguration& c);

// Batch verification pass: fills oracle_residual and lambda on every
// nonsingular traced point.  Parallel over points (capped by the
// KITECC_THREADS environment variable); output is order-deterministic.
void attach_oracle(CurveFamily& family);

} // namespace kitecc

#endif
