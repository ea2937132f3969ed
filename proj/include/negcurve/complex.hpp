#ifndef NEGCURVE_COMPLEX_HPP
#define NEGCURVE_COMPLEX_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "negcurve/base.hpp"

namespace negcurve {

using VertexId = int;
using EdgeId = int;

/// One direction of an edge pair. The involution `rev` satisfies the Serre
/// axioms: rev != id, rev(rev) = id, dst = src(rev), and both directions
/// carry the same length.
struct DirectedEdge {
    EdgeId id;
    EdgeId rev;
    VertexId src;
    VertexId dst;
    double length;
};

/// Triangle given by its three directed boundary edges, forming a closed
/// walk, together with the curvature of the model plane it lives in.
struct Triangle {
    std::array<EdgeId, 3> sides;
    Curvature k;
};

/// Delta-style triangle complex: triangles may share or repeat vertices and
/// edges, loop edges are allowed, and edges without triangles make the
/// 1-skeleton a metric graph.
class Complex {
  public:
    std::set<VertexId> vertices;
    std::map<EdgeId, DirectedEdge> edges;
    std::vector<Triangle> triangles;

    VertexId add_vertex(VertexId id);
    VertexId fresh_vertex();
    /// Adds the edge pair (id, id+1 by default) and returns the forward id.
    EdgeId add_edge(VertexId src, VertexId dst, double length);
    void add_triangle(EdgeId a, EdgeId b, EdgeId c, Curvature k);

    const DirectedEdge& edge(EdgeId id) const;
    bool has_edge(EdgeId id) const { return edges.count(id) > 0; }
    EdgeId reverse(EdgeId id) const { return edge(id).rev; }

    /// Number of undirected edge pairs.
    int edge_pairs() const { return static_cast<int>(edges.size()) / 2; }

    /// Walk corners: corner i of a triangle sits at dst(sides[i]), between
    /// the incoming side i and the outgoing side i+1 (mod 3).
    VertexId corner_vertex(int tri, int slot) const;

  private:
    EdgeId next_edge_id_ = 0;
};

/// Location of one triangle corner plus its interior angle.
struct Corner {
    int triangle;
    int slot;           // 0..2, at dst(sides[slot])
    VertexId vertex;
    double angle;
};

/// Diagnostics from validate(): empty `violations` means all invariants
/// hold.
struct Diagnostics {
    bool valid = true;
    std::vector<std::string> violations;
};

/// The metric graph link(v, K): one node per directed edge issuing from v,
/// one arc per triangle corner at v, with arc length the corner angle.
/// Self-arcs and parallel arcs are kept.
struct LinkGraph {
    VertexId vertex;
    std::vector<EdgeId> nodes;  // sorted directed-edge ids with src == v

    struct Arc {
        int u, w;       // indices into `nodes`, u <= w
        double length;  // corner angle, in (0, pi)
        int triangle;   // provenance
        int slot;
    };
    std::vector<Arc> arcs;  // canonically sorted

    int node_index(EdgeId e) const;
};

/// Per-vertex link-condition margins and the overall verdict.
struct LinkReport {
    bool pass = true;
    std::map<VertexId, double> systoles;  // may be +inf
    std::optional<double> kbar;           // max (closest to 0) simplex curvature
};

Diagnostics validate(const Complex& K);
void require_valid(const Complex& K);  // throws InputError on violations

/// Interior angle at a triangle corner, from the hyperbolic law of cosines
/// at the triangle's own curvature.
double corner_angle(const Complex& K, int tri, int slot);

/// All corners of K in (triangle, slot) order.
std::vector<Corner> corners(const Complex& K);

LinkGraph build_link(const Complex& K, VertexId v);

/// Shortest-path distance between two nodes; +inf when disconnected.
double link_distance(const LinkGraph& L, int n1, int n2);

/// Shortest essential cycle length: min over arcs a = (u, w, l) of
/// l + d(u, w in L minus a); self-arcs count as cycles of their own length;
/// +inf when the link is a forest.
double systole(const LinkGraph& L);

/// Gromov link condition for 2-complexes: every vertex link must have
/// systole >= 2*pi (within tolerance).
LinkReport check_link_condition(const Complex& K);

/// Vertices - edge pairs + triangles.
int euler_characteristic(const Complex& K);

/// All lengths scaled by s, every curvature divided by s^2. Corner angles
/// and the link-condition verdict are invariant.
Complex scale_metric(const Complex& K, double s);

/// Result of splitting an edge pair at an interior point: the two pieces
/// replacing it (in the direction of the original edge) and the new vertex.
struct EdgeSubdivision {
    VertexId new_vertex;
    EdgeId first, second;  // e = first * second as directed paths
};

/// Splits edge e at distance t from its source (0 < t < length). Every
/// triangle bordering e (or its reverse, possibly several times) is cut by
/// geodesic cevians from the new vertex, realized in coordinates at the
/// triangle's curvature. Euler characteristic is preserved.
EdgeSubdivision subdivide_edge(Complex& K, EdgeId e, double t);

}  // namespace negcurve

#endif
