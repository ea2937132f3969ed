#ifndef NEGCURVE_HYPGEOM_HPP
#define NEGCURVE_HYPGEOM_HPP

#include <array>
#include <tuple>

#include "negcurve/base.hpp"

namespace negcurve {

/// A point of M^2_k in hyperboloid-sheet coordinates of the unit-curvature
/// model: (x0, x1, x2) with x1^2 + x2^2 - x0^2 = -1 and x0 >= 1. The
/// curvature tag rescales distances; angles are model-invariant.
struct PlanePoint {
    std::array<double, 3> coords;
    Curvature curvature;

    PlanePoint(std::array<double, 3> c, Curvature k);
};

/// Two sides of lengths a, b meeting at angle theta; the third side closes a
/// geodesic triangle in M^2_k.
struct FinSpec {
    double a;
    double theta;
    double b;
    Curvature curvature;

    FinSpec(double a_, double theta_, double b_, Curvature k);
};

/// Quadrilateral with three right angles: base a, summit c, summit angle
/// theta, living in M^2_k.
struct LambertSpec {
    double base;
    double summit;
    double summit_angle;
    Curvature curvature;
};

/// Annulus assembled from two mirror-image Lambert quadrilaterals: one
/// geodesic boundary circle of length A, one boundary circle of length C
/// which is geodesic except at a single corner of angle corner_angle.
struct AnnulusSpec {
    double geodesic_len;   // A
    double outer_len;      // C
    double corner_angle;   // 2 * quad.summit_angle, > the requested theta
    Curvature curvature;
    LambertSpec quad;
};

// --- hyperbolic plane kernel (unit model + per-object curvature) ---

/// Geodesic distance between two points of the same M^2_k.
double distance(const PlanePoint& p, const PlanePoint& q);

/// Angle at `apex` between the geodesics towards p and q, in [0, pi].
double angle_at(const PlanePoint& apex, const PlanePoint& p, const PlanePoint& q);

/// Point at geodesic distance d from `base` in the direction making angle
/// `dir` with the reference direction at base. Used to realize simplices.
PlanePoint geodesic_point(const PlanePoint& base, double dir, double d);

/// Point at geodesic distance d from p along the geodesic towards q
/// (0 <= d <= |pq|).
PlanePoint point_between(const PlanePoint& p, const PlanePoint& q, double d);

/// Interior angles of the geodesic triangle with side lengths (a, b, c) in
/// M^2_k, returned opposite (a, b, c) in that order. Throws InputError with
/// "no such simplex" if the strict triangle inequalities fail at curvature k.
std::array<double, 3> triangle_angles(double a, double b, double c, Curvature k);

/// Realizes the (a, b, c) triangle in coordinates: returns corners
/// (P0, P1, P2) with |P0P1| = c, |P1P2| = a, |P2P0| = b.
std::array<PlanePoint, 3> realize_triangle(double a, double b, double c, Curvature k);

/// Length of the side opposite theta in an (a, theta, b)-fin.
double fin_third_side(const FinSpec& spec);

/// Summit angle of the unit-curvature Lambert quadrilateral with base a and
/// summit c: asin(cosh a / cosh c). Requires 0 <= a < c.
double lambert_summit_angle(double a, double c);

/// Base of the unit-curvature Lambert quadrilateral with summit c and summit
/// angle theta. Exists iff theta_c < theta < pi/2 where
/// theta_c = asin(1 / cosh c); otherwise throws "no such quadrilateral".
double lambert_base(double c, double theta);

/// A Lambert quadrilateral in some M^2_k with base a, summit c and summit
/// angle strictly greater than theta/2. Always exists for c > a > 0 and
/// 0 < theta < pi: take cbar = acosh(1/sin(theta/2)), abar = (a/c) cbar and
/// rescale by c/cbar, i.e. k = -(cbar/c)^2.
LambertSpec lambert_for_ratio(double theta, double a, double c);

/// Negatively curved annulus with geodesic boundary length A, outer boundary
/// length C and a single outer corner subtending more than theta. Requires
/// 0 < theta < pi and C > A > 0.
AnnulusSpec annulus_params(double theta, double A, double C);

// --- Lambert quadrilateral realization (unit curvature) ---

/// Realized corners of the unit-curvature Lambert quadrilateral with base a
/// and summit c: [V1, V2, V3, V4] where the base runs V4 -> V1, the summit
/// V2 -> V3, the summit angle sits at V3 and right angles at V1, V2, V4.
std::array<PlanePoint, 4> realize_lambert(double a, double c);

}  // namespace negcurve

#endif
