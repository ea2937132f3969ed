#include "negcurve/comparison.hpp"

#include <algorithm>
#include <set>

namespace negcurve {

ComparisonPair comparison_complex(const Complex& K, double factor) {
    if (!(factor > 0.0) || !(factor < 1.0))
        throw InputError("comparison factor must lie in (0, 1)");
    ComparisonPair pair;
    pair.original = K;
    pair.compared = K;
    pair.factor = factor;
    for (auto& t : pair.compared.triangles) t.k = Curvature(t.k.value() * factor);
    for (size_t t = 0; t < K.triangles.size(); ++t)
        for (int s = 0; s < 3; ++s)
            pair.corner_map.push_back(ComparisonPair::CornerGain{
                static_cast<int>(t), s, K.corner_vertex(static_cast<int>(t), s),
                corner_angle(pair.original, static_cast<int>(t), s),
                corner_angle(pair.compared, static_cast<int>(t), s)});
    return pair;
}

ExcessAngle excess_angle(const ComparisonPair& pair,
                         const std::vector<ClosedLoop>* loops, double cap) {
    std::set<VertexId> scope_vertices;
    if (loops) {
        for (const auto& loop : *loops)
            for (EdgeId e : loop.edges) {
                scope_vertices.insert(pair.original.edge(e).src);
                scope_vertices.insert(pair.original.edge(e).dst);
            }
    }
    double delta = kInf;
    int in_scope = 0;
    for (const auto& c : pair.corner_map) {
        if (loops && !scope_vertices.count(c.vertex)) continue;
        ++in_scope;
        delta = std::min(delta, c.compared_angle - c.original_angle);
    }
    return ExcessAngle{std::min(delta, cap), loops != nullptr, in_scope};
}

double geodesic_excess(const Complex& K, const ClosedLoop& loop, double ceiling) {
    GeodesicReport r = is_closed_geodesic(K, loop);
    if (!r.geodesic)
        throw InputError("loop is not a closed geodesic (min angle " +
                         std::to_string(r.min_angle) + ")");
    if (r.min_angle == kInf) return ceiling;
    return std::min((r.min_angle - kPi) / 2.0, ceiling);
}

}  // namespace negcurve
