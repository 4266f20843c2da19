#ifndef KITECC_TEST_HELPERS_HPP
#define KITECC_TEST_HELPERS_HPP

#include <cmath>
#include <random>

#include "kitecc/angles.hpp"

namespace kitecc::test {

// Radical-inverse (van der Corput) sequence: deterministic low-discrepancy
// samples for the sign-claim sweeps.
inline double halton(std::size_t index, unsigned base = 2) {
    double f = 1.0;
    double r = 0.0;
    for (std::size_t i = index + 1; i > 0; i /= base) {
        f /= base;
        r += f * static_cast<double>(i % base);
    }
    return r;
}

inline std::mt19937_64 rng(std::uint64_t seed = 0x5eed5eed) { return std::mt19937_64(seed); }

inline bool approx(double actual, double expected, double tol) {
    return std::abs(actual - expected) <= tol;
}

} // namespace kitecc::test

#endif
