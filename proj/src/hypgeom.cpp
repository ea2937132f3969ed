#include "negcurve/hypgeom.hpp"

#include <algorithm>
#include <cmath>

namespace negcurve {

namespace {

// Minkowski bilinear form of signature (+, +, -): points of the unit
// hyperboloid satisfy <p, p> = -1.
double mdot(const std::array<double, 3>& p, const std::array<double, 3>& q) {
    return p[1] * q[1] + p[2] * q[2] - p[0] * q[0];
}

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

// acosh with the argument clamped up to 1; values below 1 come only from
// rounding in well-conditioned expressions.
double acosh_safe(double x) { return std::acosh(std::max(1.0, x)); }

// Unit tangent vector at `a` pointing towards `x`.
std::array<double, 3> tangent_towards(const std::array<double, 3>& a,
                                      const std::array<double, 3>& x) {
    const double m = mdot(a, x);
    std::array<double, 3> v{x[0] + m * a[0], x[1] + m * a[1], x[2] + m * a[2]};
    const double n = std::sqrt(std::max(0.0, mdot(v, v)));
    if (n < tol::degenerate)
        throw InputError("degenerate direction: coincident points");
    for (double& c : v) c /= n;
    return v;
}

}  // namespace

PlanePoint::PlanePoint(std::array<double, 3> c, Curvature k) : coords(c), curvature(k) {
    const double q = mdot(coords, coords);
    if (std::fabs(q + 1.0) > 1e-9 || coords[0] < 1.0 - 1e-9)
        throw InputError("point does not lie on the upper hyperboloid sheet");
}

double distance(const PlanePoint& p, const PlanePoint& q) {
    if (!(p.curvature == q.curvature))
        throw InputError("curvature mismatch between points");
    return acosh_safe(-mdot(p.coords, q.coords)) / p.curvature.scale();
}

double angle_at(const PlanePoint& apex, const PlanePoint& p, const PlanePoint& q) {
    if (!(apex.curvature == p.curvature) || !(apex.curvature == q.curvature))
        throw InputError("curvature mismatch between points");
    const auto u = tangent_towards(apex.coords, p.coords);
    const auto v = tangent_towards(apex.coords, q.coords);
    return std::acos(clamp_unit(mdot(u, v)));
}

PlanePoint geodesic_point(const PlanePoint& base, double dir, double d) {
    const double t = d * base.curvature.scale();
    // Reference frame at an arbitrary base point: transport the frame of
    // (1,0,0) along the geodesic. For kernel use the base is always (1,0,0).
    const std::array<double, 3>& b = base.coords;
    std::array<double, 3> e1{0, 1, 0}, e2{0, 0, 1};
    if (b[1] != 0.0 || b[2] != 0.0) {
        // Parallel-transported radial/angular frame from the origin.
        const double r = std::sqrt(b[1] * b[1] + b[2] * b[2]);
        e1 = {r, b[0] * b[1] / r, b[0] * b[2] / r};
        e2 = {0, -b[2] / r, b[1] / r};
    }
    const double c = std::cos(dir), s = std::sin(dir);
    std::array<double, 3> w{c * e1[0] + s * e2[0], c * e1[1] + s * e2[1],
                            c * e1[2] + s * e2[2]};
    std::array<double, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = b[i] * std::cosh(t) + w[i] * std::sinh(t);
    return PlanePoint(out, base.curvature);
}

PlanePoint point_between(const PlanePoint& p, const PlanePoint& q, double d) {
    if (!(p.curvature == q.curvature))
        throw InputError("curvature mismatch between points");
    const double t = d * p.curvature.scale();
    const auto u = tangent_towards(p.coords, q.coords);
    std::array<double, 3> out;
    for (int i = 0; i < 3; ++i)
        out[i] = p.coords[i] * std::cosh(t) + u[i] * std::sinh(t);
    return PlanePoint(out, p.curvature);
}

FinSpec::FinSpec(double a_, double theta_, double b_, Curvature k)
    : a(a_), theta(theta_), b(b_), curvature(k) {
    if (!(a > 0.0) || !(b > 0.0))
        throw InputError("fin sides must be positive");
    if (!(theta > 0.0) || !(theta < kPi))
        throw InputError("fin angle must lie in (0, pi)");
}

std::array<double, 3> triangle_angles(double a, double b, double c, Curvature k) {
    const double s = k.scale();
    const double as = a * s, bs = b * s, cs = c * s;
    if (!(as > tol::degenerate) || !(bs > tol::degenerate) || !(cs > tol::degenerate))
        throw InputError("no such simplex: side lengths must be positive");
    const double p = (as + bs + cs) / 2.0;
    // Strict triangle inequalities, with the degeneracy guard.
    if (p - as <= tol::degenerate || p - bs <= tol::degenerate || p - cs <= tol::degenerate)
        throw InputError("no such simplex: hyperbolic triangle inequality fails");
    // Half-angle form of the hyperbolic law of cosines; each factor is
    // positive for a valid triangle, so thin triangles stay well conditioned.
    const double sp = std::sinh(p);
    const double sa = std::sinh(p - as), sb = std::sinh(p - bs), sc = std::sinh(p - cs);
    const double alpha = 2.0 * std::atan(std::sqrt(sb * sc / (sp * sa)));
    const double beta = 2.0 * std::atan(std::sqrt(sa * sc / (sp * sb)));
    const double gamma = 2.0 * std::atan(std::sqrt(sa * sb / (sp * sc)));
    return {alpha, beta, gamma};
}

std::array<PlanePoint, 3> realize_triangle(double a, double b, double c, Curvature k) {
    const auto angles = triangle_angles(a, b, c, k);
    const double s = k.scale();
    PlanePoint p0({1, 0, 0}, k);
    PlanePoint p1({std::cosh(c * s), std::sinh(c * s), 0}, k);
    // Angle at P0 is opposite side a.
    const double alpha = angles[0];
    PlanePoint p2({std::cosh(b * s), std::sinh(b * s) * std::cos(alpha),
                   std::sinh(b * s) * std::sin(alpha)},
                  k);
    return {p0, p1, p2};
}

double fin_third_side(const FinSpec& spec) {
    const double s = spec.curvature.scale();
    const double as = spec.a * s, bs = spec.b * s;
    // Hyperbolic law of cosines for the side opposite theta.
    const double ch = std::cosh(as) * std::cosh(bs) -
                      std::sinh(as) * std::sinh(bs) * std::cos(spec.theta);
    return acosh_safe(ch) / s;
}

double lambert_summit_angle(double a, double c) {
    if (!(a >= 0.0) || !(c > 0.0) || a >= c - tol::degenerate)
        throw InputError("no such quadrilateral: requires 0 <= a < c");
    return std::asin(clamp_unit(std::cosh(a) / std::cosh(c)));
}

double lambert_base(double c, double theta) {
    if (!(c > 0.0))
        throw InputError("no such quadrilateral: summit must be positive");
    const double theta_c = std::asin(clamp_unit(1.0 / std::cosh(c)));
    if (theta <= theta_c || theta >= kPi / 2.0)
        throw InputError("no such quadrilateral: summit angle outside (theta_c, pi/2)");
    return std::acosh(std::sin(theta) * std::cosh(c));
}

LambertSpec lambert_for_ratio(double theta, double a, double c) {
    if (!(theta > 0.0) || !(theta < kPi))
        throw InputError("angle must lie in (0, pi)");
    if (!(c > a) || !(a > 0.0))
        throw InputError("requires c > a > 0");
    const double cbar = std::acosh(1.0 / std::sin(theta / 2.0));
    const double abar = (a / c) * cbar;
    const double ratio = cbar / c;
    Curvature k(-ratio * ratio);
    const double summit_angle = lambert_summit_angle(abar, cbar);
    return LambertSpec{a, c, summit_angle, k};
}

AnnulusSpec annulus_params(double theta, double A, double C) {
    if (!(C > A) || !(A > 0.0))
        throw InputError("no such annulus: requires C > A > 0");
    LambertSpec quad = lambert_for_ratio(theta, A / 2.0, C / 2.0);
    return AnnulusSpec{A, C, 2.0 * quad.summit_angle, quad.curvature, quad};
}

std::array<PlanePoint, 4> realize_lambert(double a, double c) {
    if (!(a > 0.0) || !(c > a))
        throw InputError("no such quadrilateral: requires c > a > 0");
    Curvature unit(-1.0);
    // Legs: p joins base corner V1 to summit corner V2 (right angles at
    // both ends), q joins base corner V4 to the summit-angle corner V3.
    const double cosh_q = std::sinh(c) / std::sinh(a);
    const double cosh_p = std::cosh(a) * std::sinh(c) / (std::sinh(a) * std::cosh(c));
    const double sinh_q = std::sqrt(cosh_q * cosh_q - 1.0);
    const double sinh_p = std::sqrt(cosh_p * cosh_p - 1.0);
    PlanePoint v1({1, 0, 0}, unit);
    PlanePoint v2({cosh_p, 0, sinh_p}, unit);
    PlanePoint v3({std::cosh(a) * cosh_q, std::sinh(a) * cosh_q, sinh_q}, unit);
    PlanePoint v4({std::cosh(a), std::sinh(a), 0}, unit);
    return {v1, v2, v3, v4};
}

}  // namespace negcurve
