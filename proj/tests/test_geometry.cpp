#include <catch2/catch_amalgamated.hpp>

#include "curveballs/curveballs.hpp"
#include "test_support.hpp"

using namespace curveballs;
using namespace testsupport;

TEST_CASE("compare_sqrt orders square-root expressions") {
    CHECK(compare_sqrt(0, 4, 0, 9) == Ordering::LT);
    CHECK(compare_sqrt(1, 0, 1, 0) == Ordering::EQ);
    // 2 + sqrt(2) = 3.4142... > 3
    CHECK(compare_sqrt(2, 2, 0, 9) == Ordering::GT);

    CHECK_THROWS_AS(compare_sqrt(0, -1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(compare_sqrt(0, 0, 0, -2), std::invalid_argument);
    CHECK_THROWS_AS(compare_sqrt(std::numeric_limits<double>::quiet_NaN(), 0, 0, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(compare_sqrt(std::numeric_limits<double>::infinity(), 0, 0, 0),
                    std::invalid_argument);
}

TEST_CASE("compare_sqrt agrees with an extended-precision sign test") {
    Rng rng(101);
    int checked = 0;
    while (checked < 5000) {
        const double a = uniform_in(rng, -50, 50);
        const double b = uniform_in(rng, 0, 2500);
        const double c = uniform_in(rng, -50, 50);
        const double d = uniform_in(rng, 0, 2500);
        const long double diff = (static_cast<long double>(a) + std::sqrt(static_cast<long double>(b))) -
                                 (static_cast<long double>(c) + std::sqrt(static_cast<long double>(d)));
        if (std::abs(static_cast<double>(diff)) <= 10 * kEta) continue;
        const Ordering expected = diff < 0 ? Ordering::LT : Ordering::GT;
        REQUIRE(compare_sqrt(a, b, c, d) == expected);
        ++checked;
    }
}

TEST_CASE("compare is antisymmetric and handles mixed signs") {
    Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        const SqrtExpr x{uniform_in(rng, -10, 10), uniform_in(rng, 0, 100),
                         rng() % 2 ? 1 : -1};
        const SqrtExpr y{uniform_in(rng, -10, 10), uniform_in(rng, 0, 100),
                         rng() % 2 ? 1 : -1};
        const long double diff = (x.offset + x.sign * std::sqrt(static_cast<long double>(x.radicand))) -
                                 (y.offset + y.sign * std::sqrt(static_cast<long double>(y.radicand)));
        if (std::abs(static_cast<double>(diff)) <= 10 * kEta) continue;
        const Ordering forward = compare(x, y);
        const Ordering backward = compare(y, x);
        REQUIRE(forward == (diff < 0 ? Ordering::LT : Ordering::GT));
        REQUIRE(backward == (diff < 0 ? Ordering::GT : Ordering::LT));
    }
}

TEST_CASE("SqrtExpr normal form clamps discriminant jitter") {
    CHECK(SqrtExpr::make(1, -kEta / 2, 1).radicand == 0);
    CHECK_THROWS_AS(SqrtExpr::make(1, -1e-3, 1), std::invalid_argument);
    CHECK(SqrtExpr::make(2, 9, -1).value() == Catch::Approx(-1));
}

TEST_CASE("interval intersection respects emptiness and eta ties") {
    const auto a = make_interval(SqrtExpr::rational(0), SqrtExpr::rational(1));
    const auto b = make_interval(SqrtExpr::rational(2), SqrtExpr::rational(3));
    CHECK(a);
    CHECK_FALSE(intersect(a, b));
    // Endpoints within eta still make a degenerate (closed) intersection.
    const auto c = make_interval(SqrtExpr::rational(1 + kEta / 2), SqrtExpr::rational(3));
    CHECK(intersect(a, c));
    CHECK_FALSE(make_interval(SqrtExpr::rational(1), SqrtExpr::rational(0)));
}

TEST_CASE("contains handles the four shapes with closed boundaries") {
    CHECK(contains(Ball{{0, 0}, 1}, Point{0, 0}));
    CHECK(contains(Ball{{0, 0}, 1}, Point{1, 0}));
    CHECK_FALSE(contains(Ball{{0, 0}, 1}, Point{1.001, 0}));

    // Boundary point at distance exactly 1 from the segment end.
    CHECK(contains(Stadium{Segment({0, 0}, {1, 0}), 1}, Point{2, 0}));
    CHECK_FALSE(contains(Cylinder{Segment({0, 0}, {1, 0}), 1}, Point{0, 2}));
    // The infinite cylinder extends past the caps, the capped one does not.
    CHECK(contains(Cylinder{Segment({0, 0}, {1, 0}), 1}, Point{5, 0.5}));
    CHECK_FALSE(contains(CappedCylinder{Segment({0, 0}, {1, 0}), 1}, Point{5, 0.5}));
    CHECK(contains(CappedCylinder{Segment({0, 0}, {1, 0}), 1}, Point{0.5, 1}));
    // End caps belong to the stadium via the end balls only.
    CHECK(contains(Stadium{Segment({0, 0}, {1, 0}), 1}, Point{1.5, 0}));
    CHECK_FALSE(contains(CappedCylinder{Segment({0, 0}, {1, 0}), 1}, Point{1.5, 0}));

    CHECK_THROWS_AS(contains(Ball{{0, 0}, 1}, Point{0, 0, 0}), std::invalid_argument);
}

TEST_CASE("degenerate segments collapse shapes to balls") {
    const Segment zero({0.5, 0.5}, {0.5, 0.5});
    for (const Point& x : {Point{0.5, 1.4}, Point{0.5, 1.6}, Point{2, 2}}) {
        const bool in_ball = contains(Ball{{0.5, 0.5}, 1}, x);
        CHECK(contains(Stadium{zero, 1}, x) == in_ball);
        CHECK(contains(Cylinder{zero, 1}, x) == in_ball);
        CHECK(contains(CappedCylinder{zero, 1}, x) == in_ball);
    }
}

TEST_CASE("contains agrees with closed-form distances on random instances") {
    Rng rng(11);
    for (int i = 0; i < 2000; ++i) {
        const std::size_t d = 2 + rng() % 2;
        const Segment seg = random_segment(rng, d);
        const Point x = random_point(rng, d, -1, 2);
        const double r = uniform_in(rng, 0.05, 1.0);

        const double stadium_margin = oracle_point_segment_dist(x, seg.start, seg.end) - r;
        if (std::abs(stadium_margin) > 1e-7) {
            CHECK(contains(Stadium{seg, r}, x) == (stadium_margin < 0));
        }
        const double line_margin = oracle_line_dist(x, seg) - r;
        if (std::abs(line_margin) > 1e-7) {
            CHECK(contains(Cylinder{seg, r}, x) == (line_margin < 0));
        }
        const double lambda = oracle_axis_param(x, seg);
        if (std::abs(line_margin) > 1e-7 && std::abs(lambda) > 1e-7 && std::abs(lambda - 1) > 1e-7) {
            CHECK(contains(CappedCylinder{seg, r}, x) ==
                  (line_margin < 0 && lambda > 0 && lambda < 1));
        }
    }
}

TEST_CASE("line_ball_interval matches the quadratic") {
    const auto full = line_ball_interval(Segment({0, 0}, {1, 0}), Point{0.5, 0}, 0.5);
    REQUIRE(full);
    CHECK(full->lo_value() == Catch::Approx(0).margin(1e-12));
    CHECK(full->hi_value() == Catch::Approx(1).margin(1e-12));

    CHECK_FALSE(line_ball_interval(Segment({0, 0}, {1, 0}), Point{0.5, 1}, 0.5));
    const auto tangent = line_ball_interval(Segment({0, 0}, {1, 0}), Point{0.5, 1}, 1.0);
    REQUIRE(tangent);
    CHECK(tangent->lo_value() == Catch::Approx(0.5).margin(1e-6));
    CHECK(tangent->hi_value() == Catch::Approx(0.5).margin(1e-6));

    // The diagonal line misses the unit ball at (2,0): the supporting-line
    // distance is sqrt(2) > 1, so the oracle discriminant is negative.
    const Segment diag({0, 0}, {1, 1});
    CHECK(oracle_line_ball_interval(diag, Point{2, 0}, 1.0).empty);
    CHECK_FALSE(line_ball_interval(diag, Point{2, 0}, 1.0));
    // At r = 1.5 the intersection is [1 - sqrt(2)/4, 1 + sqrt(2)/4].
    const auto hit = line_ball_interval(diag, Point{2, 0}, 1.5);
    REQUIRE(hit);
    CHECK(hit->lo_value() == Catch::Approx(1 - std::sqrt(2.0) / 4).epsilon(1e-12));
    CHECK(hit->hi_value() == Catch::Approx(1 + std::sqrt(2.0) / 4).epsilon(1e-12));

    CHECK_THROWS_AS(line_ball_interval(Segment({0, 0}, {0, 0}), Point{1, 1}, 1),
                    std::invalid_argument);
}

TEST_CASE("line_ball_interval agrees with the extended-precision oracle") {
    Rng rng(13);
    for (int i = 0; i < 3000; ++i) {
        const std::size_t d = 1 + rng() % 3;
        const Segment seg = random_segment(rng, d);
        const Point c = random_point(rng, d, -1, 2);
        const double r = uniform_in(rng, 0.05, 1.5);
        const auto oracle = oracle_line_ball_interval(seg, c, r);
        const auto got = line_ball_interval(seg, c, r);
        if (std::abs(static_cast<double>(oracle.disc)) < 1e-7) continue; // tangency band
        REQUIRE(got.has_value() == !oracle.empty);
        if (got) {
            CHECK(got->lo_value() == Catch::Approx(static_cast<double>(oracle.lo)).margin(1e-9));
            CHECK(got->hi_value() == Catch::Approx(static_cast<double>(oracle.hi)).margin(1e-9));
        }
    }
}

TEST_CASE("line_capped_cylinder_interval special cases") {
    // Collinear: the line runs along the axis; the caps do all the clipping.
    const auto collinear = line_capped_cylinder_interval(Segment({0, 0}, {1, 0}),
                                                         Segment({0.25, 0}, {0.75, 0}), 0.1);
    REQUIRE(collinear);
    CHECK(collinear->lo_value() == Catch::Approx(0.25));
    CHECK(collinear->hi_value() == Catch::Approx(0.75));

    // Perpendicular crossing through the tube.
    const auto perp = line_capped_cylinder_interval(Segment({0.5, -1}, {0.5, 1}),
                                                    Segment({0, 0}, {1, 0}), 0.5);
    REQUIRE(perp);
    CHECK(perp->lo_value() == Catch::Approx(0.25));
    CHECK(perp->hi_value() == Catch::Approx(0.75));

    // Parallel at distance beyond r.
    CHECK_FALSE(line_capped_cylinder_interval(Segment({0, 2}, {1, 2}), Segment({0, 0}, {1, 0}), 0.5));
    // Parallel inside the tube: clipped by the caps alone.
    const auto parallel = line_capped_cylinder_interval(Segment({-1, 0.2}, {1, 0.2}),
                                                        Segment({0, 0}, {1, 0}), 0.5);
    REQUIRE(parallel);
    CHECK(parallel->lo_value() == Catch::Approx(0.5));
    CHECK(parallel->hi_value() == Catch::Approx(1.0));
    // Line inside the slab planes but never inside the tube.
    CHECK_FALSE(line_capped_cylinder_interval(Segment({0.5, 5}, {0.5, -5}), Segment({0, 0}, {0, 1}), 0.2));

    CHECK_THROWS_AS(line_capped_cylinder_interval(Segment({0, 0}, {1, 0}), Segment({1, 1}, {1, 1}), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(line_capped_cylinder_interval(Segment({1, 1}, {1, 1}), Segment({0, 0}, {1, 0}), 1),
                    std::invalid_argument);
}

TEST_CASE("line_capped_cylinder_interval matches dense sampling on skew 3d instances") {
    Rng rng(17);
    int checked = 0;
    while (checked < 25) {
        const Segment seg = random_segment(rng, 3, -1, 1);
        const Segment axis = random_segment(rng, 3, -1, 1);
        const double r = uniform_in(rng, 0.2, 0.8);
        const auto got = line_capped_cylinder_interval(seg, axis, r);
        const auto sampled = oracle_sampled_interval(seg, -3, 4, 1e-5, [&](const Point& p) {
            return oracle_in_capped_cylinder(p, axis, r);
        });
        if (sampled.empty != !got.has_value()) {
            // Tangential configurations can disagree inside the sampling
            // resolution; require the interval to be tiny and move on.
            if (got) REQUIRE(got->hi_value() - got->lo_value() < 1e-3);
            continue;
        }
        if (!sampled.empty) {
            REQUIRE(got);
            CHECK(got->lo_value() == Catch::Approx(sampled.lo).margin(1e-4));
            CHECK(got->hi_value() == Catch::Approx(sampled.hi).margin(1e-4));
        }
        ++checked;
    }
}

TEST_CASE("line_stadium_interval merges the tube and the end balls") {
    // A segment on its own stadium axis: the interval extends past [0,1].
    const auto axis = line_stadium_interval(Segment({0, 0}, {1, 0}), Segment({0, 0}, {1, 0}), 0.3);
    REQUIRE(axis);
    CHECK(axis->lo_value() == Catch::Approx(-0.3));
    CHECK(axis->hi_value() == Catch::Approx(1.3));

    CHECK_FALSE(line_stadium_interval(Segment({0, 0}, {1, 0}), Segment({0.5, 2}, {0.5, 3}), 1.0));

    // Degenerate stadium segment collapses to a ball.
    const auto collapsed = line_stadium_interval(Segment({0, 0}, {1, 0}), Segment({0.5, 0}, {0.5, 0}), 0.25);
    const auto ball = line_ball_interval(Segment({0, 0}, {1, 0}), Point{0.5, 0}, 0.25);
    REQUIRE(collapsed);
    REQUIRE(ball);
    CHECK(collapsed->lo_value() == ball->lo_value());
    CHECK(collapsed->hi_value() == ball->hi_value());
}

TEST_CASE("line_stadium_interval matches dense sampling") {
    Rng rng(19);
    int checked = 0;
    while (checked < 25) {
        const std::size_t d = 2 + rng() % 2;
        const Segment seg = random_segment(rng, d, -1, 1);
        const Segment e = random_segment(rng, d, -1, 1);
        const double r = uniform_in(rng, 0.2, 0.8);
        const auto got = line_stadium_interval(seg, e, r);
        const auto sampled = oracle_sampled_interval(
            seg, -4, 5, 1e-5, [&](const Point& p) { return oracle_in_stadium(p, e, r); });
        if (sampled.empty != !got.has_value()) {
            if (got) REQUIRE(got->hi_value() - got->lo_value() < 1e-3);
            continue;
        }
        if (!sampled.empty) {
            REQUIRE(got);
            CHECK(got->lo_value() == Catch::Approx(sampled.lo).margin(1e-4));
            CHECK(got->hi_value() == Catch::Approx(sampled.hi).margin(1e-4));
        }
        ++checked;
    }
}

TEST_CASE("intervals are sound and monotone in r") {
    Rng rng(23);
    for (int i = 0; i < 500; ++i) {
        const std::size_t d = 2 + rng() % 2;
        const Segment seg = random_segment(rng, d, -1, 1);
        const Segment e = random_segment(rng, d, -1, 1);
        const double r = uniform_in(rng, 0.1, 0.8);
        const double r2 = r + uniform_in(rng, 0.05, 0.5);

        const auto small = line_stadium_interval(seg, e, r);
        const auto big = line_stadium_interval(seg, e, r2);
        if (small) {
            REQUIRE(big);
            CHECK(big->lo_value() <= small->lo_value() + 1e-9);
            CHECK(big->hi_value() >= small->hi_value() - 1e-9);
            // Interior points of the interval lie in the shape.
            for (double f : {0.25, 0.5, 0.75}) {
                const double t = small->lo_value() + f * (small->hi_value() - small->lo_value());
                CHECK(contains(Stadium{e, r}, seg.at(t)));
            }
        }
    }
}
