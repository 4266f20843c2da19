#include "kitecc/rootfind.hpp"

#include <cmath>

#include "kitecc/errors.hpp"

namespace kitecc {

double find_root(const ScalarFn& fn, double lo, double hi, RootOptions opt) {
    if (!(lo < hi)) throw NoBracket("empty interval");
    double flo = fn(lo);
    double fhi = fn(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::signbit(flo) == std::signbit(fhi))
        throw NoBracket("no sign change over bracket");

    // Phase 1: plain bisection down to a safe width.
    int iter = 0;
    while (hi - lo > opt.bisect_width) {
        if (++iter > opt.max_iter)
            throw ConvergenceFailure("solver", "bisection iteration cap reached");
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // interval exhausted in floating point
        const double fmid = fn(mid);
        if (fmid == 0.0) return mid;
        if (std::signbit(fmid) == std::signbit(flo)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }

    // Phase 2: secant steps inside the bracket; fall back to bisection when a
    // step leaves the interval or fails to contract it.
    while (hi - lo > opt.polish_width) {
        if (++iter > opt.max_iter)
            throw ConvergenceFailure("solver", "polish iteration cap reached");
        double next = lo - flo * (hi - lo) / (fhi - flo);
        const double width = hi - lo;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next <= lo || next >= hi) break;
        const double fnext = fn(next);
        if (fnext == 0.0) return next;
        if (std::signbit(fnext) == std::signbit(flo)) {
            lo = next;
            flo = fnext;
        } else {
            hi = next;
            fhi = fnext;
        }
        if (hi - lo > 0.5 * width) {
            // Secant stalled against one end; bisect once to guarantee progress.
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            const double fmid = fn(mid);
            if (fmid == 0.0) return mid;
            if (std::signbit(fmid) == std::signbit(flo)) {
                lo = mid;
                flo = fmid;
            } else {
                hi = mid;
                fhi = fmid;
            }
        }
    }
    // Return the end with the smaller residual magnitude.
    return std::abs(flo) <= std::abs(fhi) ? lo : hi;
}

std::vector<std::pair<double, double>> scan_brackets(const ScalarFn& fn, double lo, double hi,
                                                     double step) {
    std::vector<std::pair<double, double>> out;
    if (!(step > 0.0) || !(lo < hi)) return out;
    double xprev = lo;
    double fprev = fn(lo);
    const auto n = static_cast<long>(std::ceil((hi - lo) / step));
    for (long i = 1; i <= n; ++i) {
        const double x = i == n ? hi : lo + static_cast<double>(i) * step;
        const double f = fn(x);
        if (fprev == 0.0)
            out.emplace_back(xprev, xprev);
        else if (f != 0.0 && std::signbit(f) != std::signbit(fprev))
            out.emplace_back(xprev, x);
        xprev = x;
        fprev = f;
    }
    if (fprev == 0.0) out.emplace_back(xprev, xprev);
    return out;
}

} // namespace kitecc
