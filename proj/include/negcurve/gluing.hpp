#ifndef NEGCURVE_GLUING_HPP
#define NEGCURVE_GLUING_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "negcurve/annulus.hpp"
#include "negcurve/complex.hpp"
#include "negcurve/geodesics.hpp"
#include "negcurve/transverse.hpp"

namespace negcurve {

enum class VertexType { P, N, M };
enum class EdgeKind { point, circle };

struct GosVertex {
    VertexId id;
    VertexType type;
    std::optional<Complex> payload;  // type M only
};

/// Directed edge of the underlying Serre graph. A circle edge carries its
/// attaching data on the directed records: `gamma` (the attaching closed
/// geodesic) on the record whose source is the type M end, `degree` (the
/// covering degree of the attaching map) on the record whose source is the
/// type N end.
struct GosEdge {
    EdgeId id;
    EdgeId rev;
    VertexId src;
    VertexId dst;
    EdgeKind kind;
    std::optional<ClosedLoop> gamma;
    int degree = 1;
};

struct GraphOfSpaces {
    std::map<VertexId, GosVertex> vertices;
    std::map<EdgeId, GosEdge> edges;
};

struct NormalizationEvent {
    EdgeId split_edge;    // original M-M circle edge pair (forward id)
    VertexId inserted;    // fresh N vertex
    EdgeId first, second; // replacement circle edges
};

struct MalnormalAttestation {
    VertexId vertex;
    Attestation status;
    std::string detail;
};

struct SubdivisionEvent {
    EdgeId edge;       // payload edge split (pre-split id)
    double position;   // distance from the edge source
    VertexId vertex;   // the flat vertex created
};

struct MVertexLog {
    VertexId vertex;
    int initial_intersections = 0;
    std::vector<FinGlueRecord> fins;
    std::vector<SubdivisionEvent> subdivisions;
    bool extra_comparison = false;
    double delta_v = 0.0;
};

struct NVertexLog {
    VertexId vertex;
    double a_w = 0.0;
    bool halved = false;  // circle realized with a midpoint vertex
};

struct CircleEdgeLog {
    EdgeId edge;  // forward id of the pair
    double theta;
    double A, C;
    int degree;
    AnnulusSpec spec;
    AnnulusBuildStats stats;
};

struct GluingReport {
    std::vector<NormalizationEvent> normalization;
    std::vector<MalnormalAttestation> attestations;
    std::map<VertexId, MVertexLog> m_vertices;
    std::map<VertexId, NVertexLog> n_vertices;
    std::vector<CircleEdgeLog> circle_edges;
    /// Final attaching geodesics in the glued complex's edge ids, keyed by
    /// the M-side directed edge id of the graph.
    std::map<EdgeId, ClosedLoop> final_gammas;
    LinkReport link;
    std::optional<double> kbar;
    int expected_chi = 0;
    int actual_chi = 0;
    bool pass = false;
};

struct GluedComplex {
    Complex complex;
    GluingReport report;
};

/// Splits every M-M circle edge by inserting a fresh type N vertex with
/// degree-1 attachment. N-N circle edges are invalid input.
GraphOfSpaces normalize(const GraphOfSpaces& g,
                        std::vector<NormalizationEvent>* log = nullptr);

/// Structural validation of a normalized graph: Serre axioms, payload/type
/// consistency, circle edges joining N to M, attaching loops lying in their
/// payloads and passing is_closed_geodesic, degrees >= 1.
void validate_gos(const GraphOfSpaces& g);

/// Decidable malnormal-family check for triangle-free (free group) vertex
/// spaces: no attaching loop a proper power, no two conjugate up to
/// inversion. Payloads with triangles are attested `assumed`. Throws
/// MalnormalError with a witness on violation.
std::vector<MalnormalAttestation> check_malnormal_family(const GraphOfSpaces& g);

/// a_w = half of min { l(gamma_e) / d(e) } over incident circle edges;
/// isolated type N circles get length 1.
std::map<VertexId, double> choose_circle_lengths(const GraphOfSpaces& g);

/// Runs the whole pipeline: normalize, validate, attest, transversalize each
/// type M space, choose circle lengths, build and triangulate an annulus per
/// circle edge, attach point edges, certify with the link condition and the
/// Euler characteristic audit.
GluedComplex glue(const GraphOfSpaces& g);

struct AuditResult {
    int expected_chi;
    int actual_chi;
    bool chi_ok;
    LinkReport link;
};

/// Recomputes the certification of a glued complex against its recipe:
/// chi(result) must equal sum of vertex space chis minus edge space chis.
AuditResult audit(const Complex& result, const GraphOfSpaces& g);

}  // namespace negcurve

#endif
