#ifndef NEGCURVE_ANNULUS_HPP
#define NEGCURVE_ANNULUS_HPP

#include <vector>

#include "negcurve/complex.hpp"
#include "negcurve/hypgeom.hpp"

namespace negcurve {

/// Instructions for triangulating an annulus into an existing complex. Both
/// boundary circles must already exist as closed edge walks: the outer walk
/// starts at the corner vertex and its breakpoints must include the halfway
/// point C/2; the geodesic walk starts at the vertex below the corner and
/// must include A/2 (where the legs of the two Lambert quadrilaterals land).
struct AnnulusGlueSpec {
    AnnulusSpec spec;
    std::vector<EdgeId> outer_edges;
    std::vector<EdgeId> geodesic_edges;
};

struct AnnulusBuildStats {
    int triangles = 0;
    int new_edge_pairs = 0;
    double corner_angle = 0.0;
    double curvature = 0.0;
};

/// Fans the two mirror-image Lambert quadrilaterals over the given boundary
/// subdivisions: each quadrilateral is split by its corner-to-base diagonal,
/// the lower triangle fanned from the annulus corner over the geodesic-side
/// breakpoints and the upper triangle fanned from the diagonal's base end
/// over the outer breakpoints. All interior edge lengths come from the
/// hyperbolic-plane realization of the quadrilateral.
AnnulusBuildStats glue_annulus(Complex& K, const AnnulusGlueSpec& g);

/// Standalone triangulated annulus, for direct inspection: boundary circles
/// are created fresh. The outer pattern lists segment lengths clockwise from
/// the corner (the halfway breakpoint is inserted if missing); the geodesic
/// circle is cut into d equal arcs plus the halfway breakpoint if needed.
struct AnnulusFragment {
    Complex complex;
    AnnulusSpec spec;
    std::vector<EdgeId> outer_edges;
    std::vector<EdgeId> geodesic_edges;
    VertexId corner;
    AnnulusBuildStats stats;
};

AnnulusFragment build_annulus(double theta, double A, double C,
                              const std::vector<double>& outer_pattern,
                              int d = 2);

}  // namespace negcurve

#endif
