#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "kitecc/errors.hpp"
#include "kitecc/mass_model.hpp"

using namespace kitecc;

TEST_CASE("coefficients at the square point") {
    const auto c = coefficients(AnglePair::from_degrees(45.0, 45.0), ConfigKind::Convex);
    // tan 45 = 1, cos^3 45 = 2^(-3/2): a0 = 2^(-3/2) - 1/8.
    const double expected = std::pow(2.0, -1.5) - 0.125;
    CHECK(c.a0 == doctest::Approx(expected).epsilon(1e-15));
    CHECK(c.b0 == doctest::Approx(expected).epsilon(1e-15));
    CHECK(std::abs(c.a0 - 0.22855339059327373) < 1e-15);
    CHECK(c.a1 == doctest::Approx(c.b1).epsilon(1e-15));
}

TEST_CASE("convex coefficients are symmetric on the diagonal") {
    auto gen = test::rng(11);
    std::uniform_real_distribution<double> dist(deg2rad(30.5), deg2rad(59.5));
    for (int i = 0; i < 100; ++i) {
        const double x = dist(gen);
        const auto c = coefficients(AnglePair{x, x}, ConfigKind::Convex);
        CHECK(std::abs(c.a0 - c.b0) < 1e-14);
        CHECK(std::abs(c.a1 - c.b1) < 1e-14);
    }
}

TEST_CASE("degenerate geometry guards") {
    // Concave evaluation divides by (tan a - tan b)^2.
    CHECK_THROWS_AS(coefficients(AnglePair::from_degrees(40.0, 40.0), ConfigKind::Concave),
                    DegenerateGeometry);
    CHECK_THROWS_AS(masses(AnglePair::from_degrees(25.0, 25.0), ConfigKind::Concave),
                    DegenerateGeometry);
}

TEST_CASE("mass anchors") {
    const MassResult g = masses(AnglePair::from_degrees(45.0, 45.0), ConfigKind::Convex);
    REQUIRE(g.ok());
    CHECK(std::abs(g.value.mu1 - 0.25) < 1e-13);
    CHECK(std::abs(g.value.mu2 - 0.25) < 1e-13);
    CHECK(std::abs(g.value.mu - 0.25) < 1e-13);

    const MassResult cvx = masses(AnglePair::from_degrees(42.500, 24.883), ConfigKind::Convex);
    REQUIRE(cvx.ok());
    CHECK(std::abs(cvx.value.mu1 - 0.8723) < 5e-5);
    CHECK(std::abs(cvx.value.mu2 - 0.0426) < 5e-5);
    CHECK(std::abs(cvx.value.mu - cvx.value.mu2) < 5e-5); // three equal masses branch

    const MassResult ccv = masses(AnglePair::from_degrees(58.0, 9.059), ConfigKind::Concave);
    REQUIRE(ccv.ok());
    CHECK(std::abs(ccv.value.mu1 - 0.3242) < 5e-5);
    CHECK(std::abs(ccv.value.mu2 - 0.0273) < 5e-5);
    CHECK(std::abs(ccv.value.mu - ccv.value.mu1) < 5e-5);
}

TEST_CASE("singular denominator at the concave corner point") {
    const MassResult s = masses(AnglePair::from_degrees(60.0, 30.0), ConfigKind::Concave);
    CHECK(s.status == MassStatus::SingularDenominator);
    CHECK(std::isnan(s.value.mu1));
}

TEST_CASE("invalid masses outside the admissible regions") {
    const MassResult a = masses(AnglePair::from_degrees(59.0, 14.0), ConfigKind::Convex);
    CHECK(a.status == MassStatus::InvalidMasses);
    CHECK(a.value.mu1 > 1.0); // raw value reported, not clamped

    const MassResult b = masses(AnglePair::from_degrees(65.0, 20.0), ConfigKind::Concave);
    CHECK(b.status == MassStatus::InvalidMasses);
    CHECK(b.value.mu2 < 0.0);
}

TEST_CASE("normalization holds wherever masses are defined") {
    auto gen = test::rng(23);
    std::uniform_real_distribution<double> da(deg2rad(31.0), deg2rad(59.0));
    std::uniform_real_distribution<double> db(deg2rad(1.0), deg2rad(59.0));
    int checked = 0;
    for (int i = 0; i < 5000; ++i) {
        const AnglePair p{da(gen), db(gen)};
        for (ConfigKind kind : {ConfigKind::Convex, ConfigKind::Concave}) {
            if (kind == ConfigKind::Concave && p.alpha <= p.beta + 1e-3) continue;
            const MassResult m = masses(p, kind);
            if (!m.ok()) continue;
            CHECK(std::abs(m.value.mu1 + m.value.mu2 + 2.0 * m.value.mu - 1.0) < 1e-14);
            ++checked;
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("mu2 vanishes on the convex alpha=60 line") {
    auto gen = test::rng(31);
    std::uniform_real_distribution<double> db(deg2rad(15.1), deg2rad(59.9));
    for (int i = 0; i < 100; ++i) {
        const MassResult m = masses(AnglePair{deg2rad(60.0), db(gen)}, ConfigKind::Convex);
        REQUIRE(m.ok());
        CHECK(std::abs(m.value.mu2) < 1e-10);
    }
}

TEST_CASE("exceptional concave line pins mu1=0, mu2=1") {
    auto gen = test::rng(37);
    std::uniform_real_distribution<double> db(deg2rad(0.5), deg2rad(59.5));
    for (int i = 0; i < 100; ++i) {
        const double b = db(gen);
        const double a = 0.5 * (deg2rad(90.0) + b);
        const MassResult m = masses(AnglePair{a, b}, ConfigKind::Concave);
        REQUIRE(m.ok());
        CHECK(std::abs(m.value.mu1) < 1e-10);
        CHECK(std::abs(m.value.mu2 - 1.0) < 1e-10);
    }
}

TEST_CASE("mu1 vanishes toward the concave beta=0 line") {
    for (double a_deg : {48.0, 52.0, 58.0}) {
        const MassResult exact = masses(AnglePair::from_degrees(a_deg, 0.0), ConfigKind::Concave);
        REQUIRE(exact.ok());
        CHECK(exact.value.mu1 == 0.0);
        const MassResult near = masses(AnglePair{deg2rad(a_deg), 1e-9}, ConfigKind::Concave);
        REQUIRE(near.ok());
        CHECK(std::abs(near.value.mu1) < 1e-8);
    }
}

TEST_CASE("concave beta constraint separates the two regions") {
    // C1 points sit below the bound tan(b) < mu1 tan(a) / (1 - mu2),
    // C2 points above it.  Sample the interiors of both triangles.
    auto gen = test::rng(41);
    std::uniform_real_distribution<double> unit(0.05, 0.95);

    int c1_checked = 0;
    while (c1_checked < 200) {
        const double b = deg2rad(30.0) * unit(gen);
        const double lo = deg2rad(45.0) + 0.5 * b;
        const double a = lo + (deg2rad(60.0) - lo) * unit(gen);
        const MassResult m = masses(AnglePair{a, b}, ConfigKind::Concave);
        if (!m.ok() || m.value.mu2 >= 1.0) continue;
        CHECK(std::tan(b) < m.value.mu1 * std::tan(a) / (1.0 - m.value.mu2));
        ++c1_checked;
    }

    int c2_checked = 0;
    while (c2_checked < 200) {
        const double b = deg2rad(30.0) + deg2rad(30.0) * unit(gen);
        const double hi = deg2rad(45.0) + 0.5 * b;
        const double a = deg2rad(60.0) + (hi - deg2rad(60.0)) * unit(gen);
        const MassResult m = masses(AnglePair{a, b}, ConfigKind::Concave);
        if (!m.ok() || m.value.mu2 >= 1.0) continue;
        CHECK(std::tan(b) > m.value.mu1 * std::tan(a) / (1.0 - m.value.mu2));
        ++c2_checked;
    }
}
