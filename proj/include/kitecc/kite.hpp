#ifndef KITECC_KITE_HPP
#define KITECC_KITE_HPP

#include <array>
#include <cmath>

#include "kitecc/angles.hpp"
#include "kitecc/mass_model.hpp"

namespace kitecc {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
};

// Four planar bodies of a kite: A and B on the symmetry axis, E and E' the
// equal-mass pair mirror-symmetric about it.  Positions use the frame with
// E = (1, 0), E' = (-1, 0); masses sum to 1 when attached.
struct KiteConfiguration {
    enum Body { A = 0, B = 1, E = 2, EPrime = 3 };

    std::array<Vec2, 4> positions{};
    std::array<double, 4> masses{}; // zero until attached

    double total_mass() const { return masses[0] + masses[1] + masses[2] + masses[3]; }
};

// Places the bodies for the given angles: A = (0, tan alpha) above the wing
// line, B below it for convex kites and inside the wing triangle for concave
// ones.  Masses are left unset.
KiteConfiguration reconstruct_positions(AnglePair p, ConfigKind kind);

// reconstruct_positions plus mass attachment (A: mu1, B: mu2, wings: mu).
KiteConfiguration make_configuration(AnglePair p, ConfigKind kind, MassTriple m);

} // namespace kitecc

#endif
