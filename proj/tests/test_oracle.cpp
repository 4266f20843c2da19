#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "kitecc/errors.hpp"
#include "kitecc/oracle.hpp"

using namespace kitecc;

namespace {

KiteConfiguration square_quarter_masses() {
    return make_configuration(AnglePair::from_degrees(45.0, 45.0), ConfigKind::Convex,
                              {0.25, 0.25, 0.25});
}

} // namespace

TEST_CASE("square with equal masses is central to machine precision") {
    const auto cfg = square_quarter_masses();
    const auto acc = accelerations(cfg);
    // Symmetry: all four acceleration magnitudes equal, each pointing at the
    // barycenter (the origin).
    const double mag = acc[0].norm();
    for (int i = 0; i < 4; ++i) {
        CHECK(acc[i].norm() == doctest::Approx(mag).epsilon(1e-14));
        const Vec2 r = cfg.positions[i];
        const double cross = acc[i].x * r.y - acc[i].y * r.x;
        CHECK(std::abs(cross) < 1e-15);
        CHECK(acc[i].dot(r) < 0.0);
    }

    const CentralityReport rep = verify_central(cfg);
    CHECK(rep.max_relative_residual < 1e-13);
    CHECK(rep.lambda > 0.0);
    CHECK(rep.lambda == doctest::Approx(0.23927669529663692).epsilon(1e-12));
}

TEST_CASE("two-body reduction gives the pairwise law") {
    KiteConfiguration cfg =
        reconstruct_positions(AnglePair::from_degrees(45.0, 45.0), ConfigKind::Convex);
    cfg.masses = {0.5, 0.5, 0.0, 0.0};
    const auto acc = accelerations(cfg);
    // A at (0,1), B at (0,-1): |a| = m / d^2 = 0.5 / 4.
    CHECK(acc[KiteConfiguration::A].y == doctest::Approx(-0.125).epsilon(1e-14));
    CHECK(acc[KiteConfiguration::B].y == doctest::Approx(0.125).epsilon(1e-14));
    // Massless wings feel both bodies but exert nothing.
    CHECK(std::abs(acc[KiteConfiguration::A].x) < 1e-16);
}

TEST_CASE("zero-mass bodies do not load the others") {
    const AnglePair p1 = AnglePair::from_degrees(60.0, 52.28226996202492);
    KiteConfiguration cfg =
        make_configuration(p1, ConfigKind::Convex, {1.0 / 3.0, 0.0, 1.0 / 3.0});
    const auto acc = accelerations(cfg);

    // Recompute A's acceleration from the two wings only.
    Vec2 expect{0.0, 0.0};
    for (int j : {KiteConfiguration::E, KiteConfiguration::EPrime}) {
        const Vec2 d = cfg.positions[j] - cfg.positions[KiteConfiguration::A];
        const double r = d.norm();
        expect = expect + d * (cfg.masses[j] / (r * r * r));
    }
    CHECK(std::abs(acc[KiteConfiguration::A].x - expect.x) < 1e-16);
    CHECK(std::abs(acc[KiteConfiguration::A].y - expect.y) < 1e-16);

    // The massless body must still ride the centrality condition.
    const CentralityReport rep = verify_central(cfg);
    CHECK(rep.max_relative_residual < 1e-9);
    CHECK(rep.lambda > 0.0);
}

TEST_CASE("equilateral triangle limits") {
    // Lagrange point of the blue concave family: triangle of equal masses
    // with a massless axis body placed by the condition.
    const AnglePair p5 = AnglePair::from_degrees(60.0, 5.678463201631307);
    const auto rep =
        verify_central(make_configuration(p5, ConfigKind::Concave, {1.0 / 3.0, 0.0, 1.0 / 3.0}));
    CHECK(rep.max_relative_residual < 1e-9);
    CHECK(rep.lambda > 0.0);

    // Triangle with the fourth body at its center: central for any split
    // satisfying the axis constraint; the center body sits at the barycenter.
    const AnglePair s = AnglePair::from_degrees(60.0, 30.0);
    auto cfg = reconstruct_positions(s, ConfigKind::Concave);
    const double mu2 = 0.4;
    const double mu1 = (1.0 - mu2) / 3.0;
    cfg.masses = {mu1, mu2, mu1, mu1};
    const auto rep2 = verify_central(cfg);
    CHECK(rep2.degenerate[KiteConfiguration::B]);
    CHECK(rep2.max_relative_residual < 1e-12);
    CHECK(rep2.lambda > 0.0);
}

TEST_CASE("one-body reduction is handled via the degenerate path") {
    const AnglePair p2 = AnglePair::from_degrees(42.63914042947232, 23.68042978526384);
    const auto rep = verify_central(make_configuration(p2, ConfigKind::Convex, {1.0, 0.0, 0.0}));
    CHECK(rep.degenerate[KiteConfiguration::A]);
    CHECK(rep.max_relative_residual < 1e-9);
    CHECK(rep.lambda > 0.0);
    // All three massless bodies are equidistant from A, so lambda = 1/d^3.
    const double d = 1.0 / std::cos(p2.alpha);
    CHECK(rep.lambda == doctest::Approx(1.0 / (d * d * d)).epsilon(1e-10));
}

TEST_CASE("translation invariance of the centrality check") {
    auto cfg = make_configuration(AnglePair::from_degrees(60.0, 52.28226996202492),
                                  ConfigKind::Convex, {1.0 / 3.0, 0.0, 1.0 / 3.0});
    const auto base = verify_central(cfg);
    for (Vec2& r : cfg.positions) r = r + Vec2{0.37, -1.2};
    const auto moved = verify_central(cfg);
    CHECK(std::abs(moved.max_relative_residual - base.max_relative_residual) < 1e-13);
    CHECK(std::abs(moved.lambda - base.lambda) < 1e-13 * base.lambda);
    CHECK(moved.barycenter_shift.x == doctest::Approx(base.barycenter_shift.x + 0.37));
}

TEST_CASE("scale covariance of lambda") {
    auto cfg = square_quarter_masses();
    const auto base = verify_central(cfg);
    const double s = 2.0;
    for (Vec2& r : cfg.positions) r = r * s;
    const auto scaled = verify_central(cfg);
    CHECK(std::abs(scaled.lambda - base.lambda / (s * s * s)) < 1e-12 * base.lambda);
    CHECK(std::abs(scaled.max_relative_residual - base.max_relative_residual) < 1e-12);
}

TEST_CASE("collisions are rejected") {
    auto cfg = square_quarter_masses();
    cfg.positions[KiteConfiguration::B] = cfg.positions[KiteConfiguration::A];
    CHECK_THROWS_AS(accelerations(cfg), CollisionSingularity);
    CHECK_THROWS_AS(verify_central(cfg), CollisionSingularity);
}

TEST_CASE("mass normalization is enforced") {
    auto cfg = square_quarter_masses();
    cfg.masses = {0.3, 0.3, 0.3, 0.3};
    CHECK_THROWS_AS(verify_central(cfg), OutOfDomain);
}

TEST_CASE("oracle pass over a coarse trace") {
    CurveFamily fam = trace_family(FamilyId::ConvexMu2, 0.5);
    attach_oracle(fam);
    for (const CurvePoint& pt : fam.points) {
        REQUIRE(pt.mass.ok());
        CHECK(pt.oracle_residual < 1e-9);
        CHECK(pt.lambda > 0.0);
    }
}
