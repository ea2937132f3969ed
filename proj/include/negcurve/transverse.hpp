#ifndef NEGCURVE_TRANSVERSE_HPP
#define NEGCURVE_TRANSVERSE_HPP

#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "negcurve/comparison.hpp"
#include "negcurve/complex.hpp"
#include "negcurve/geodesics.hpp"

namespace negcurve {

enum class Attestation { verified, assumed };

struct TransversalityProblem {
    Complex complex;
    std::vector<ClosedLoop> loops;
    Attestation malnormal_attestation = Attestation::assumed;
};

/// Two relabellings (rotation + optional reversal) of the loop family that
/// agree on their first j edges and then diverge. The fin is glued along
/// `shared` (the j-th common edge) and `successor` (the next edge of the
/// second relabelling).
struct Branch {
    int loop1, loop2;
    bool rev1, rev2;
    size_t rot1, rot2;
    size_t j;
    EdgeId shared;
    EdgeId successor;
};

/// Two relabellings that agree on every edge cyclically: the loops are
/// powers of a common loop, violating the malnormal-family hypothesis.
struct FullOverlap {
    int loop1, loop2;
    bool rev1, rev2;
    size_t rot1, rot2;
    std::string reason;
};

struct FinGlueRecord {
    int iteration;
    EdgeId host_first;    // e_j, shared between the two relabellings
    EdgeId host_second;   // e'_{j+1}
    VertexId apex;
    double apex_angle;    // pi - delta
    double delta;
    EdgeId new_edge;
    double new_length;
    double curvature;
    double link_gap;      // link distance bridged by the new arc, >= pi + 2 delta
};

struct TransversalizeResult {
    Complex complex;
    std::vector<ClosedLoop> loops;
    std::vector<FinGlueRecord> fins;
    /// Each fin's new edge maps back to the two-edge path it replaced;
    /// substituting newest-first retracts the rewritten loops onto the
    /// originals.
    std::map<EdgeId, std::pair<EdgeId, EdgeId>> retraction;
    int initial_intersections = 0;
};

/// Failures of transversality: for each undirected edge, occurrences across
/// all loops (in either orientation) minus one, summed. Zero iff the loops
/// intersect themselves and each other transversely.
int intersection_count(const Complex& K, const std::vector<ClosedLoop>& loops);

/// Finds a branch point among all rotations/reversals sharing a first edge,
/// scanning pairs lexicographically. Any fully overlapping pair wins and is
/// reported instead. Requires intersection_count > 0.
std::variant<Branch, FullOverlap> find_branch(const Complex& K,
                                              const std::vector<ClosedLoop>& loops);

/// Glues an (|e1|, pi - delta, |e2|)-fin along the two-edge path e1, e2.
/// One new edge pair and one new triangle at the prevailing (maximal)
/// curvature of K; links change only at the three fin corners.
std::pair<Complex, FinGlueRecord> glue_fin(const Complex& K, EdgeId e1, EdgeId e2,
                                           double delta);

/// Repeatedly: take a comparison complex, measure the loop-restricted excess
/// angle, glue a fin at a branch point and reroute the loops over it, until
/// the loops are pairwise and self transverse. Terminates in at most
/// intersection_count iterations. Throws MalnormalError on full overlaps.
TransversalizeResult transversalize(const TransversalityProblem& p,
                                    double factor = 0.5);

}  // namespace negcurve

#endif
