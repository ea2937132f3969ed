#include "negcurve/annulus.hpp"

#include <algorithm>
#include <cmath>

namespace negcurve {

namespace {

struct Walk {
    std::vector<EdgeId> edges;
    std::vector<VertexId> starts;   // starts[i] = src of edges[i]
    std::vector<double> positions;  // positions[i] = arc position of starts[i]
    double total = 0.0;
    size_t half = 0;                // index of the vertex at total/2
};

Walk analyze_walk(const Complex& K, const std::vector<EdgeId>& edges,
                  const char* which) {
    Walk w;
    w.edges = edges;
    if (edges.empty()) throw InputError(std::string(which) + " boundary walk is empty");
    for (size_t i = 0; i < edges.size(); ++i) {
        const auto& e = K.edge(edges[i]);
        const auto& f = K.edge(edges[(i + 1) % edges.size()]);
        if (e.dst != f.src)
            throw InputError(std::string(which) + " boundary walk does not chain");
        w.starts.push_back(e.src);
        w.positions.push_back(w.total);
        w.total += e.length;
    }
    const double target = w.total / 2.0;
    const double eps = tol::angle * std::max(1.0, w.total);
    auto it = std::find_if(w.positions.begin(), w.positions.end(),
                           [&](double p) { return std::fabs(p - target) <= eps; });
    if (it == w.positions.end())
        throw InputError(std::string(which) +
                         " boundary walk has no breakpoint at the halfway length");
    w.half = static_cast<size_t>(it - w.positions.begin());
    return w;
}

}  // namespace

AnnulusBuildStats glue_annulus(Complex& K, const AnnulusGlueSpec& g) {
    const AnnulusSpec& spec = g.spec;
    Walk outer = analyze_walk(K, g.outer_edges, "outer");
    Walk geod = analyze_walk(K, g.geodesic_edges, "geodesic");
    const double eps = tol::angle * std::max(1.0, spec.outer_len);
    if (std::fabs(outer.total - spec.outer_len) > eps)
        throw InputError("outer boundary walk length does not match C");
    if (std::fabs(geod.total - spec.geodesic_len) > eps)
        throw InputError("geodesic boundary walk length does not match A");

    const Curvature k = spec.curvature;
    const double A = spec.geodesic_len, C = spec.outer_len;

    // Realize one quadrilateral in the unit model and re-tag the corners
    // with the annulus curvature so distances come out in complex units.
    const double s = k.scale();
    auto unit = realize_lambert(A / 2.0 * s, C / 2.0 * s);
    const PlanePoint v1(unit[0].coords, k), v2(unit[1].coords, k),
        v3(unit[2].coords, k), v4(unit[3].coords, k);

    // Arc positions measured from the corner (outer) and from the vertex
    // below it (geodesic). The mirror copy reuses the same chart with
    // reflected parameters.
    auto outer_point = [&](double u) {
        if (u > C / 2.0) u = C - u;
        return point_between(v3, v2, u);
    };
    auto geod_point = [&](double gpos) {
        if (gpos > A / 2.0) gpos = A - gpos;
        return point_between(v4, v1, gpos);
    };

    AnnulusBuildStats stats;
    stats.corner_angle = spec.corner_angle;
    stats.curvature = k.value();

    const VertexId corner = K.edge(g.outer_edges[0]).src;
    const size_t m = outer.edges.size(), l = geod.edges.size();

    // Shared edges between the two quadrilaterals.
    const EdgeId leg_q = K.add_edge(corner, geod.starts[0],
                                    distance(v3, v4));
    const EdgeId leg_p = K.add_edge(outer.starts[outer.half], geod.starts[geod.half],
                                    distance(v2, v1));
    stats.new_edge_pairs += 2;

    // One quadrilateral spans boundary indices [lo, hi) on each circle.
    struct QuadRange {
        size_t geo_lo, geo_hi;    // fan triangles over geodesic edges lo..hi-1
        size_t out_lo, out_hi;    // and over outer edges lo..hi-1
    };
    const QuadRange quads[2] = {{0, geod.half, 0, outer.half},
                                {geod.half, l, outer.half, m}};

    for (const QuadRange& q : quads) {
        // Diagonal from the corner to the halfway vertex of the geodesic side.
        const EdgeId diag = K.add_edge(corner, geod.starts[geod.half],
                                       distance(v3, v1));
        ++stats.new_edge_pairs;

        // Lower fan, from the corner over the geodesic breakpoints. The fan
        // edge at index j runs corner -> geod.starts[j]; the range ends are
        // the leg below the corner and the diagonal.
        EdgeId prev = (q.geo_lo == 0) ? leg_q : diag;
        for (size_t j = q.geo_lo; j < q.geo_hi; ++j) {
            EdgeId next;
            if (j + 1 == q.geo_hi) {
                next = (q.geo_hi == geod.half) ? diag : leg_q;
            } else {
                next = K.add_edge(corner, geod.starts[j + 1],
                                  distance(v3, geod_point(geod.positions[j + 1])));
                ++stats.new_edge_pairs;
            }
            K.add_triangle(prev, geod.edges[j], K.reverse(next), spec.curvature);
            ++stats.triangles;
            prev = next;
        }

        // Upper fan, from the halfway geodesic vertex over the outer
        // breakpoints; ends are the reversed diagonal and the reversed leg
        // under the outer halfway vertex.
        prev = (q.out_lo == 0) ? K.reverse(diag) : K.reverse(leg_p);
        for (size_t i = q.out_lo; i < q.out_hi; ++i) {
            EdgeId next;
            if (i + 1 == q.out_hi) {
                next = (q.out_hi == outer.half) ? K.reverse(leg_p) : K.reverse(diag);
            } else {
                next = K.add_edge(geod.starts[geod.half], outer.starts[i + 1],
                                  distance(v1, outer_point(outer.positions[i + 1])));
                ++stats.new_edge_pairs;
            }
            K.add_triangle(prev, outer.edges[i], K.reverse(next), spec.curvature);
            ++stats.triangles;
            prev = next;
        }
    }
    return stats;
}

AnnulusFragment build_annulus(double theta, double A, double C,
                              const std::vector<double>& outer_pattern, int d) {
    if (d < 1) throw InputError("winding degree must be at least 1");
    const AnnulusSpec spec = annulus_params(theta, A, C);

    double sum = 0.0;
    for (double x : outer_pattern) {
        if (!(x > 0.0)) throw InputError("outer pattern entries must be positive");
        sum += x;
    }
    if (std::fabs(sum - C) > tol::angle * std::max(1.0, C))
        throw InputError("outer pattern must sum to C");

    // Insert the halfway breakpoint into the outer pattern if it is missing.
    std::vector<double> pattern;
    double acc = 0.0;
    const double eps = tol::angle * std::max(1.0, C);
    for (double x : outer_pattern) {
        if (acc < C / 2.0 - eps && acc + x > C / 2.0 + eps) {
            pattern.push_back(C / 2.0 - acc);
            pattern.push_back(acc + x - C / 2.0);
        } else {
            pattern.push_back(x);
        }
        acc += x;
    }

    // Geodesic circle: d equal arcs, halved when d is odd so that the leg
    // landing at A/2 hits a breakpoint.
    std::vector<double> geo_pattern;
    const double arc = A / d;
    if (d % 2 == 0) geo_pattern.assign(d, arc);
    else geo_pattern.assign(2 * d, arc / 2.0);

    Complex K;
    auto make_circle = [&K](const std::vector<double>& lens) {
        std::vector<VertexId> vs;
        for (size_t i = 0; i < lens.size(); ++i) vs.push_back(K.fresh_vertex());
        std::vector<EdgeId> es;
        for (size_t i = 0; i < lens.size(); ++i)
            es.push_back(K.add_edge(vs[i], vs[(i + 1) % vs.size()], lens[i]));
        return es;
    };
    std::vector<EdgeId> outer_edges = make_circle(pattern);
    std::vector<EdgeId> geodesic_edges = make_circle(geo_pattern);
    const VertexId corner = K.edge(outer_edges[0]).src;

    AnnulusBuildStats stats =
        glue_annulus(K, AnnulusGlueSpec{spec, outer_edges, geodesic_edges});
    return AnnulusFragment{std::move(K), spec, std::move(outer_edges),
                           std::move(geodesic_edges), corner, stats};
}

}  // namespace negcurve
