#ifndef NEGCURVE_COMPARISON_HPP
#define NEGCURVE_COMPARISON_HPP

#include <optional>
#include <vector>

#include "negcurve/complex.hpp"
#include "negcurve/geodesics.hpp"

namespace negcurve {

/// A complex together with its comparison complex: identical combinatorics
/// and edge lengths, every curvature multiplied by factor in (0, 1). Every
/// corner angle of `compared` strictly exceeds the corresponding angle of
/// `original`; the corner tables record both.
struct ComparisonPair {
    Complex original;
    Complex compared;
    double factor;

    struct CornerGain {
        int triangle;
        int slot;
        VertexId vertex;
        double original_angle;
        double compared_angle;
    };
    std::vector<CornerGain> corner_map;
};

/// Excess angle delta = inf { theta' - theta } over the scope. Scope is
/// either every corner or only the corners at vertices visited by a loop
/// family. An empty scope yields the cap (infinite excess); the cap keeps
/// pi - delta positive downstream.
struct ExcessAngle {
    double delta;
    bool loop_scoped;
    int corners_in_scope;
};

ComparisonPair comparison_complex(const Complex& K, double factor);

ExcessAngle excess_angle(const ComparisonPair& pair,
                         const std::vector<ClosedLoop>* loops = nullptr,
                         double cap = kPi);

/// Effective excess of a closed geodesic: (min subtended angle - pi) / 2,
/// capped at `ceiling` (disconnected links subtend +inf). Requires the loop
/// to pass is_closed_geodesic.
double geodesic_excess(const Complex& K, const ClosedLoop& loop,
                       double ceiling = kPi);

}  // namespace negcurve

#endif
