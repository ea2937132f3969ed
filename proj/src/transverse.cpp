#include "negcurve/transverse.hpp"

#include "negcurve/hypgeom.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

namespace negcurve {

namespace {

EdgeId undirected(const Complex& K, EdgeId e) { return std::min(e, K.reverse(e)); }

struct Label {
    int loop;
    bool rev;
    size_t rot;
};

std::vector<EdgeId> realize_label(const Complex& K, const std::vector<ClosedLoop>& loops,
                                  const Label& l) {
    ClosedLoop base = l.rev ? reversed(K, loops[l.loop]) : loops[l.loop];
    return rotated(base, l.rot).edges;
}

// Replaces every cyclic, non-overlapping occurrence of (first, second) with
// repl, scanning greedily from position 0.
ClosedLoop rewrite_pair(const ClosedLoop& loop, EdgeId first, EdgeId second,
                        EdgeId repl) {
    const size_t n = loop.size();
    if (n < 2) return loop;
    std::vector<bool> consumed(n, false);
    std::vector<bool> starts(n, false);
    for (size_t i = 0; i < n; ++i) {
        const size_t next = (i + 1) % n;
        if (consumed[i] || consumed[next] || next == i) continue;
        if (loop.edges[i] == first && loop.edges[next] == second) {
            consumed[i] = consumed[next] = true;
            starts[i] = true;
        }
    }
    ClosedLoop out;
    for (size_t i = 0; i < n; ++i) {
        if (starts[i]) out.edges.push_back(repl);
        else if (!consumed[i]) out.edges.push_back(loop.edges[i]);
    }
    return out;
}

}  // namespace

int intersection_count(const Complex& K, const std::vector<ClosedLoop>& loops) {
    std::map<EdgeId, int> count;
    for (const auto& loop : loops)
        for (EdgeId e : loop.edges) ++count[undirected(K, e)];
    int total = 0;
    for (const auto& [e, c] : count) total += std::max(0, c - 1);
    return total;
}

std::variant<Branch, FullOverlap> find_branch(const Complex& K,
                                              const std::vector<ClosedLoop>& loops) {
    std::vector<Label> labels;
    for (int i = 0; i < static_cast<int>(loops.size()); ++i)
        for (bool rev : {false, true})
            for (size_t rot = 0; rot < loops[i].size(); ++rot)
                labels.push_back(Label{i, rev, rot});

    std::optional<Branch> branch;
    for (const auto& l1 : labels) {
        const auto seq1 = realize_label(K, loops, l1);
        for (const auto& l2 : labels) {
            if (l1.loop == l2.loop && l1.rev == l2.rev && l1.rot == l2.rot) continue;
            const auto seq2 = realize_label(K, loops, l2);
            if (seq1[0] != seq2[0]) continue;
            const size_t r = seq1.size(), s = seq2.size();
            const size_t period = std::lcm(r, s);
            size_t j = 0;  // matched prefix length
            while (j < period && seq1[j % r] == seq2[j % s]) ++j;
            if (j == period) {
                std::ostringstream why;
                if (l1.loop != l2.loop)
                    why << "loops " << l1.loop << " and " << l2.loop
                        << " are powers of a common loop";
                else if (l1.rev == l2.rev)
                    why << "loop " << l1.loop << " is a proper power";
                else
                    why << "loop " << l1.loop << " fully overlaps its own reversal";
                return FullOverlap{l1.loop, l2.loop, l1.rev, l2.rev,
                                   l1.rot, l2.rot, why.str()};
            }
            if (!branch) {
                branch = Branch{l1.loop, l2.loop, l1.rev, l2.rev, l1.rot, l2.rot,
                                j, seq2[(j - 1) % s], seq2[j % s]};
            }
        }
    }
    if (!branch)
        throw InputError("find_branch requires a positive intersection count");
    return *branch;
}

std::pair<Complex, FinGlueRecord> glue_fin(const Complex& K, EdgeId e1, EdgeId e2,
                                           double delta) {
    if (!(delta > 0.0) || !(delta < kPi))
        throw InputError("fin excess angle must lie in (0, pi)");
    const auto &d1 = K.edge(e1), &d2 = K.edge(e2);
    if (d1.dst != d2.src)
        throw InputError("fin host edges do not chain");

    double kappa = -1.0;
    for (const auto& t : K.triangles) kappa = std::max(kappa, t.k.value());
    Curvature k(kappa);

    const double apex_angle = kPi - delta;
    const double third =
        fin_third_side(FinSpec(d1.length, apex_angle, d2.length, k));

    // Distance in link(apex) between the two directions the fin will join.
    LinkGraph L = build_link(K, d1.dst);
    const double gap =
        link_distance(L, L.node_index(K.reverse(e1)), L.node_index(e2));

    Complex out = K;
    const EdgeId top = out.add_edge(d1.src, d2.dst, third);
    out.add_triangle(e1, e2, out.reverse(top), k);

    FinGlueRecord rec{0,    e1,    e2,    d1.dst, apex_angle,
                      delta, top,  third, kappa,  gap};
    return {std::move(out), rec};
}

TransversalizeResult transversalize(const TransversalityProblem& p, double factor) {
    for (const auto& loop : p.loops) {
        GeodesicReport r = is_closed_geodesic(p.complex, loop);
        if (!r.geodesic)
            throw InputError("transversalize requires closed geodesics (min angle " +
                             std::to_string(r.min_angle) + ")");
    }

    TransversalizeResult result;
    result.complex = p.complex;
    result.loops = p.loops;
    result.initial_intersections = intersection_count(p.complex, p.loops);

    int remaining = result.initial_intersections;
    int iteration = 0;
    while (remaining > 0) {
        ++iteration;
        if (iteration > result.initial_intersections)
            throw std::logic_error("transversalize failed to reduce intersections");

        auto found = find_branch(result.complex, result.loops);
        if (std::holds_alternative<FullOverlap>(found)) {
            const auto& o = std::get<FullOverlap>(found);
            if (o.loop1 == o.loop2 && o.rev1 != o.rev2)
                throw InputError("loop " + std::to_string(o.loop1) +
                                 " overlaps its own reversal; not a valid geodesic family");
            throw MalnormalError("transversalize: malnormal family hypothesis violated",
                                 o.reason);
        }
        const Branch b = std::get<Branch>(found);

        ComparisonPair pair = comparison_complex(result.complex, factor);
        result.complex = pair.compared;
        const double delta =
            excess_angle(pair, &result.loops, kPi / 2.0).delta;

        auto [glued, rec] = glue_fin(result.complex, b.shared, b.successor, delta);
        result.complex = std::move(glued);
        rec.iteration = iteration;
        result.fins.push_back(rec);
        result.retraction[rec.new_edge] = {b.shared, b.successor};

        const EdgeId rev_new = result.complex.reverse(rec.new_edge);
        const EdgeId rev_shared = result.complex.reverse(b.shared);
        const EdgeId rev_succ = result.complex.reverse(b.successor);
        for (auto& loop : result.loops) {
            loop = rewrite_pair(loop, b.shared, b.successor, rec.new_edge);
            loop = rewrite_pair(loop, rev_succ, rev_shared, rev_new);
        }

        const int now = intersection_count(result.complex, result.loops);
        if (now >= remaining)
            throw std::logic_error("transversalize: intersection count did not drop");
        remaining = now;
    }
    return result;
}

}  // namespace negcurve
