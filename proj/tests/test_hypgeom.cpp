#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "negcurve/hypgeom.hpp"
#include "oracles.hpp"

using namespace negcurve;

// Frozen from a 40-digit evaluation of the defining formulas.
namespace frozen {
constexpr double equilateral_angle = 0.9187978721780274;   // acos(cosh1/(cosh1+1))
constexpr double pyth_hypotenuse = 1.5133740065965040;     // acosh(cosh^2 1)
constexpr double theta_c_1 = 0.7050268435552380;           // asin(1/cosh 1)
constexpr double lambert_1_2 = 0.4226232106567819;         // asin(cosh1/cosh2)
constexpr double cbar_right = 0.8813735870195430;          // acosh(1/sin(pi/4))
constexpr double k_right_1_2 = -0.1942048499739240;        // -(cbar/2)^2
constexpr double summit_right_1_2 = 0.8897065085520226;    // asin(cosh(cbar/2)/cosh cbar)
constexpr double corner_right_2_4 = 1.7794130171040452;    // 2 * summit
}  // namespace frozen

TEST_CASE("distance basics") {
    Curvature k(-1.0);
    PlanePoint o({1, 0, 0}, k);
    PlanePoint p({std::cosh(1.0), std::sinh(1.0), 0}, k);
    CHECK(distance(o, o) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(distance(o, p) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(distance(p, o) == doctest::Approx(distance(o, p)).epsilon(1e-15));

    // Same model points tagged with k = -4 are half as far apart.
    Curvature k4(-4.0);
    PlanePoint o4({1, 0, 0}, k4);
    PlanePoint p4({std::cosh(1.0), std::sinh(1.0), 0}, k4);
    CHECK(distance(o4, p4) == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(distance(o, p4), InputError);
    CHECK_THROWS_AS(PlanePoint({2, 0, 0}, k), InputError);
}

TEST_CASE("angle_at") {
    Curvature k(-1.0);
    PlanePoint apex({1, 0, 0}, k);
    PlanePoint p({std::cosh(1.0), std::sinh(1.0), 0}, k);
    PlanePoint p2({std::cosh(2.0), std::sinh(2.0), 0}, k);
    PlanePoint q({std::cosh(1.0), -std::sinh(1.0), 0}, k);

    CHECK(angle_at(apex, p, p2) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(angle_at(apex, p, q) == doctest::Approx(kPi).epsilon(1e-9));
    CHECK_THROWS_AS(angle_at(apex, apex, p), InputError);

    // Equilateral triangle of side 1: both corners of the realization.
    auto tri = realize_triangle(1.0, 1.0, 1.0, k);
    CHECK(angle_at(tri[0], tri[1], tri[2]) ==
          doctest::Approx(frozen::equilateral_angle).epsilon(1e-9));
}

TEST_CASE("triangle_angles against the law-of-cosines oracle") {
    Curvature k(-1.0);
    auto ang = triangle_angles(1.0, 1.0, 1.0, k);
    for (double a : ang) CHECK(a == doctest::Approx(frozen::equilateral_angle).epsilon(1e-9));
    CHECK(ang[0] + ang[1] + ang[2] < kPi);

    // Right angle opposite the Pythagorean hypotenuse, eq. cosh a cosh b = cosh x.
    auto right = triangle_angles(1.0, 1.0, frozen::pyth_hypotenuse, k);
    CHECK(right[2] == doctest::Approx(kPi / 2).epsilon(1e-9));

    CHECK_THROWS_AS(triangle_angles(1.0, 1.0, 10.0, k), InputError);
    CHECK_THROWS_AS(triangle_angles(1.0, 1.0, 2.0, k), InputError);  // degenerate
    CHECK_THROWS_AS(triangle_angles(0.0, 1.0, 1.0, k), InputError);
}

TEST_CASE("triangle_angles properties on random triangles") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> side(0.1, 5.0);
    for (int trial = 0; trial < 300; ++trial) {
        double a = side(rng), b = side(rng);
        double lo = std::fabs(a - b) * 1.001 + 1e-3, hi = (a + b) * 0.999;
        if (lo >= hi) { --trial; continue; }
        std::uniform_real_distribution<double> third(lo, hi);
        double c = third(rng);

        Curvature k(-1.0);
        auto ang = triangle_angles(a, b, c, k);
        CHECK(ang[0] == doctest::Approx(oracles::angle_opposite(a, b, c)).epsilon(1e-9));
        CHECK(ang[1] == doctest::Approx(oracles::angle_opposite(b, a, c)).epsilon(1e-9));
        CHECK(ang[2] == doctest::Approx(oracles::angle_opposite(c, a, b)).epsilon(1e-9));
        CHECK(ang[0] + ang[1] + ang[2] < kPi);

        // Rescaling lengths while dividing curvature by s^2 fixes the angles.
        double s = 2.75;
        auto scaled = triangle_angles(a * s, b * s, c * s, Curvature(-1.0 / (s * s)));
        for (int i = 0; i < 3; ++i)
            CHECK(scaled[i] == doctest::Approx(ang[i]).epsilon(1e-9));

        // Weaker curvature, same sides: every angle strictly increases.
        auto weaker = triangle_angles(a, b, c, Curvature(-0.5));
        for (int i = 0; i < 3; ++i) CHECK(weaker[i] > ang[i]);

        // Kernel cross-check: realized coordinates reproduce the angles.
        auto pts = realize_triangle(a, b, c, k);
        CHECK(angle_at(pts[0], pts[1], pts[2]) == doctest::Approx(ang[0]).epsilon(1e-9));
        CHECK(distance(pts[1], pts[2]) == doctest::Approx(a).epsilon(1e-9));
    }
}

TEST_CASE("fin_third_side") {
    Curvature k(-1.0);
    CHECK(fin_third_side(FinSpec(1.0, kPi / 2, 1.0, k)) ==
          doctest::Approx(frozen::pyth_hypotenuse).epsilon(1e-9));

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> side(0.2, 3.0), angle(0.1, kPi - 0.1);
    for (int trial = 0; trial < 200; ++trial) {
        double a = side(rng), b = side(rng), th = angle(rng);
        double third = fin_third_side(FinSpec(a, th, b, k));
        CHECK(fin_third_side(FinSpec(b, th, a, k)) == doctest::Approx(third).epsilon(1e-12));
        // Round trip: the angle opposite the third side is theta again.
        auto ang = triangle_angles(a, b, third, k);
        CHECK(ang[2] == doctest::Approx(th).epsilon(1e-9));
    }

    // Monotone in theta; approaches a + b as theta -> pi.
    double prev = 0.0;
    for (double th = 0.5; th < kPi - 1e-4; th += 0.1) {
        double third = fin_third_side(FinSpec(1.0, th, 1.0, k));
        CHECK(third > prev);
        prev = third;
    }
    CHECK(fin_third_side(FinSpec(1.0, kPi - 1e-6, 1.0, k)) ==
          doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("lambert_summit_angle") {
    CHECK(lambert_summit_angle(0.0, 1.0) == doctest::Approx(frozen::theta_c_1).epsilon(1e-9));
    CHECK(lambert_summit_angle(1.0, 2.0) == doctest::Approx(frozen::lambert_1_2).epsilon(1e-9));
    CHECK(lambert_summit_angle(2.0 - 1e-7, 2.0) == doctest::Approx(kPi / 2).epsilon(1e-3));
    CHECK_THROWS_AS(lambert_summit_angle(2.0, 1.0), InputError);
    CHECK_THROWS_AS(lambert_summit_angle(1.0, 1.0), InputError);

    // sin(theta) cosh c = cosh a, and theta exceeds theta_c for a > 0.
    for (double c = 0.3; c <= 5.0; c += 0.47) {
        const double theta_c = std::asin(1.0 / std::cosh(c));
        for (double a = 0.05; a < c - 1e-9; a += c / 7.0) {
            const double th = lambert_summit_angle(a, c);
            CHECK(std::sin(th) * std::cosh(c) == doctest::Approx(std::cosh(a)).epsilon(1e-9));
            CHECK(th > theta_c);
            CHECK(th < kPi / 2);
        }
    }
}

TEST_CASE("lambert_base inverts lambert_summit_angle") {
    for (double c : {0.5, 1.0, 2.0, 4.0}) {
        const double theta_c = std::asin(1.0 / std::cosh(c));
        CHECK_THROWS_AS(lambert_base(c, theta_c - 1e-6), InputError);
        const double a = lambert_base(c, theta_c + 1e-3);
        CHECK(lambert_summit_angle(a, c) == doctest::Approx(theta_c + 1e-3).epsilon(1e-9));
        CHECK_THROWS_AS(lambert_base(c, kPi / 2), InputError);
    }
}

TEST_CASE("lambert_for_ratio") {
    LambertSpec q = lambert_for_ratio(kPi / 2, 1.0, 2.0);
    CHECK(q.curvature.value() == doctest::Approx(frozen::k_right_1_2).epsilon(1e-9));
    CHECK(q.summit_angle == doctest::Approx(frozen::summit_right_1_2).epsilon(1e-9));
    CHECK(q.summit_angle > kPi / 4);
    CHECK(q.base == 1.0);
    CHECK(q.summit == 2.0);

    // Self-consistency: rescaled into the unit plane, the summit angle is
    // lambert_summit_angle(abar, cbar).
    const double s = q.curvature.scale();
    CHECK(q.summit * s == doctest::Approx(frozen::cbar_right).epsilon(1e-9));
    CHECK(lambert_summit_angle(q.base * s, q.summit * s) ==
          doctest::Approx(q.summit_angle).epsilon(1e-12));

    // Summit angle beats theta/2 across parameter space; ratio -> 1 gives pi/2.
    for (double theta : {0.3, 1.2, 2.2, 3.0})
        for (double ratio : {0.15, 0.5, 0.9, 0.999}) {
            LambertSpec qq = lambert_for_ratio(theta, ratio * 3.0, 3.0);
            CHECK(qq.summit_angle > theta / 2);
        }
    CHECK(lambert_for_ratio(3.1, 2.999999, 3.0).summit_angle ==
          doctest::Approx(kPi / 2).epsilon(1e-2));
}

TEST_CASE("annulus_params") {
    AnnulusSpec an = annulus_params(kPi / 2, 2.0, 4.0);
    CHECK(an.corner_angle == doctest::Approx(frozen::corner_right_2_4).epsilon(1e-9));
    CHECK(an.corner_angle > kPi / 2);
    CHECK(an.geodesic_len == 2.0);
    CHECK(an.outer_len == 4.0);
    CHECK(an.quad.base == doctest::Approx(1.0));
    CHECK(an.quad.summit == doctest::Approx(2.0));
    CHECK_THROWS_AS(annulus_params(kPi / 2, 4.0, 2.0), InputError);
    CHECK_THROWS_AS(annulus_params(kPi / 2, 2.0, 2.0), InputError);

    // Corner angle decreases monotonically towards theta as C/A grows.
    double prev = kPi;
    for (double C = 1.1; C < 8.0; C += 0.6) {
        AnnulusSpec a2 = annulus_params(1.0, 1.0, C);
        CHECK(a2.corner_angle > 1.0);
        CHECK(a2.corner_angle < prev);
        prev = a2.corner_angle;
    }
}

TEST_CASE("realize_lambert matches the closed forms") {
    for (double a : {0.3, 0.7, 1.5})
        for (double c : {2.0, 3.2}) {
            auto v = realize_lambert(a, c);
            CHECK(distance(v[3], v[0]) == doctest::Approx(a).epsilon(1e-9));   // base V4V1
            CHECK(distance(v[1], v[2]) == doctest::Approx(c).epsilon(1e-9));   // summit V2V3
            CHECK(angle_at(v[0], v[3], v[1]) == doctest::Approx(kPi / 2).epsilon(1e-9));
            CHECK(angle_at(v[1], v[0], v[2]) == doctest::Approx(kPi / 2).epsilon(1e-9));
            CHECK(angle_at(v[3], v[0], v[2]) == doctest::Approx(kPi / 2).epsilon(1e-9));
            CHECK(angle_at(v[2], v[1], v[3]) ==
                  doctest::Approx(lambert_summit_angle(a, c)).epsilon(1e-9));
        }
}

TEST_CASE("point_between interpolates geodesics") {
    Curvature k(-1.0);
    PlanePoint p({1, 0, 0}, k);
    PlanePoint q({std::cosh(2.0), 0, std::sinh(2.0)}, k);
    PlanePoint m = point_between(p, q, 0.75);
    CHECK(distance(p, m) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(distance(m, q) == doctest::Approx(1.25).epsilon(1e-12));
}
