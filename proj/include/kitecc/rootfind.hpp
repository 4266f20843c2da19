#ifndef KITECC_ROOTFIND_HPP
#define KITECC_ROOTFIND_HPP

#include <functional>
#include <utility>
#include <vector>

namespace kitecc {

using ScalarFn = std::function<double(double)>;

struct RootOptions {
    double bisect_width = 1e-6;  // bisection phase target width (radians)
    double polish_width = 1e-12; // secant polish target width
    int max_iter = 200;
};

// Bracketed hybrid root finder: bisection down to bisect_width, then secant
// steps confined to the bracket, falling back to bisection whenever a secant
// step fails to contract.  Deterministic for fixed inputs.  Requires a sign
// change over [lo, hi]; throws NoBracket otherwise and ConvergenceFailure if
// the iteration cap trips.
double find_root(const ScalarFn& fn, double lo, double hi, RootOptions opt = {});

// Scans [lo, hi] at the given step and returns all sign-change brackets.
// Endpoints evaluating exactly to zero are returned as degenerate brackets.
std::vector<std::pair<double, double>> scan_brackets(const ScalarFn& fn, double lo, double hi,
                                                     double step);

} // namespace kitecc

#endif
