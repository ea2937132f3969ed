// Independent test oracles. These deliberately use different algorithms (and
// extended precision) than the library: the plain hyperbolic law of cosines
// instead of the half-angle form, exhaustive cycle enumeration instead of
// edge deletion, and exhaustive rotation instead of period arithmetic.
#ifndef NEGCURVE_TESTS_ORACLES_HPP
#define NEGCURVE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "negcurve/complex.hpp"

namespace oracles {

/// Angle opposite side a via the hyperbolic law of cosines in long double.
inline double angle_opposite(double a, double b, double c) {
    const long double num = coshl((long double)b) * coshl((long double)c) - coshl((long double)a);
    const long double den = sinhl((long double)b) * sinhl((long double)c);
    long double x = num / den;
    x = std::min((long double)1, std::max((long double)-1, x));
    return (double)acosl(x);
}

/// Same, with sides first rescaled into the unit-curvature plane.
inline double angle_opposite_at(double a, double b, double c, double k) {
    const double s = std::sqrt(-k);
    return angle_opposite(a * s, b * s, c * s);
}

/// Brute-force systole: enumerates every simple cycle (self-arcs, parallel
/// arc pairs, longer vertex-disjoint cycles) by DFS over arcs. Exponential,
/// fine for links with at most ~12 nodes.
inline double brute_force_systole(const negcurve::LinkGraph& L) {
    double best = negcurve::kInf;
    const int n = (int)L.nodes.size();
    const auto& arcs = L.arcs;

    for (const auto& a : arcs)
        if (a.u == a.w) best = std::min(best, a.length);

    // Cycles with >= 2 arcs: paths of distinct vertices from a start node,
    // closed by an arc back to the start. Each cycle is found at its
    // smallest vertex, so cycles are not missed.
    std::vector<bool> used(n, false);
    std::vector<int> arc_used(arcs.size(), false);

    std::function<void(int, int, double, double&, int)> dfs =
        [&](int start, int here, double len, double& acc, int arcs_on_path) {
            for (size_t i = 0; i < arcs.size(); ++i) {
                const auto& a = arcs[i];
                if (arc_used[i] || a.u == a.w) continue;
                int other;
                if (a.u == here) other = a.w;
                else if (a.w == here) other = a.u;
                else continue;
                if (other == start) {
                    if (arcs_on_path >= 1) acc = std::min(acc, len + a.length);
                    continue;
                }
                if (other < start || used[other]) continue;
                used[other] = true;
                arc_used[i] = true;
                dfs(start, other, len + a.length, acc, arcs_on_path + 1);
                arc_used[i] = false;
                used[other] = false;
            }
        };

    for (int s = 0; s < n; ++s) {
        used[s] = true;
        dfs(s, s, 0.0, best, 0);
        used[s] = false;
    }
    return best;
}

/// Conjugacy up to inversion by exhaustive rotation of short words.
inline bool brute_force_conjugate(const std::string& w1, const std::string& w2,
                                  char (*inv)(char)) {
    auto rotations = [](const std::string& w) {
        std::vector<std::string> out;
        for (size_t i = 0; i < w.size(); ++i)
            out.push_back(w.substr(i) + w.substr(0, i));
        return out;
    };
    std::string w1inv;
    for (auto it = w1.rbegin(); it != w1.rend(); ++it) w1inv.push_back(inv(*it));
    for (const auto& r : rotations(w1))
        if (r == w2) return true;
    for (const auto& r : rotations(w1inv))
        if (r == w2) return true;
    return false;
}

/// Proper power by trying every explicit u^k decomposition.
inline bool brute_force_power(const std::string& w) {
    for (size_t p = 1; p <= w.size() / 2; ++p) {
        if (w.size() % p != 0) continue;
        std::string rep;
        for (size_t k = 0; k < w.size() / p; ++k) rep += w.substr(0, p);
        if (rep == w) return true;
    }
    return false;
}

}  // namespace oracles

#endif
