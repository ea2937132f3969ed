#include "negcurve/complex.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include "negcurve/hypgeom.hpp"

namespace negcurve {

VertexId Complex::add_vertex(VertexId id) {
    vertices.insert(id);
    return id;
}

VertexId Complex::fresh_vertex() {
    VertexId id = vertices.empty() ? 0 : (*vertices.rbegin() + 1);
    vertices.insert(id);
    return id;
}

EdgeId Complex::add_edge(VertexId src, VertexId dst, double length) {
    if (!std::isfinite(length) || length <= 0.0)
        throw InputError("edge length must be positive and finite");
    if (!vertices.count(src) || !vertices.count(dst))
        throw InputError("edge endpoints must be existing vertices");
    EdgeId id = edges.empty() ? 0 : (edges.rbegin()->first + 1);
    edges[id] = DirectedEdge{id, id + 1, src, dst, length};
    edges[id + 1] = DirectedEdge{id + 1, id, dst, src, length};
    return id;
}

void Complex::add_triangle(EdgeId a, EdgeId b, EdgeId c, Curvature k) {
    const auto &ea = edge(a), &eb = edge(b), &ec = edge(c);
    if (ea.dst != eb.src || eb.dst != ec.src || ec.dst != ea.src)
        throw InputError("triangle sides do not form a closed walk");
    triangle_angles(ea.length, eb.length, ec.length, k);  // existence check
    triangles.push_back(Triangle{{a, b, c}, k});
}

const DirectedEdge& Complex::edge(EdgeId id) const {
    auto it = edges.find(id);
    if (it == edges.end())
        throw InputError("unknown edge id " + std::to_string(id));
    return it->second;
}

VertexId Complex::corner_vertex(int tri, int slot) const {
    return edge(triangles.at(tri).sides[slot]).dst;
}

Diagnostics validate(const Complex& K) {
    Diagnostics d;
    auto flag = [&](const std::string& msg) {
        d.valid = false;
        d.violations.push_back(msg);
    };
    for (const auto& [id, e] : K.edges) {
        std::ostringstream at;
        at << "edge " << id << ": ";
        if (e.id != id) flag(at.str() + "id field mismatch");
        auto rit = K.edges.find(e.rev);
        if (rit == K.edges.end()) {
            flag(at.str() + "reverse edge missing");
            continue;
        }
        const auto& r = rit->second;
        if (r.id == e.id) flag(at.str() + "edge equals its own reverse");
        if (r.rev != e.id) flag(at.str() + "reverse involution broken");
        if (r.src != e.dst || r.dst != e.src)
            flag(at.str() + "reverse endpoints do not swap");
        if (std::fabs(r.length - e.length) > tol::degenerate * std::max(1.0, e.length))
            flag(at.str() + "length differs from reverse");
        if (!std::isfinite(e.length) || e.length <= 0.0)
            flag(at.str() + "non-positive length");
        if (!K.vertices.count(e.src) || !K.vertices.count(e.dst))
            flag(at.str() + "endpoint vertex missing");
    }
    for (size_t t = 0; t < K.triangles.size(); ++t) {
        const auto& tri = K.triangles[t];
        std::ostringstream at;
        at << "triangle " << t << ": ";
        bool edges_ok = true;
        for (EdgeId s : tri.sides)
            if (!K.has_edge(s)) {
                flag(at.str() + "side edge missing");
                edges_ok = false;
            }
        if (!edges_ok) continue;
        const auto &a = K.edge(tri.sides[0]), &b = K.edge(tri.sides[1]),
                   &c = K.edge(tri.sides[2]);
        if (a.dst != b.src || b.dst != c.src || c.dst != a.src)
            flag(at.str() + "sides do not form a closed walk");
        try {
            triangle_angles(a.length, b.length, c.length, tri.k);
        } catch (const InputError& err) {
            flag(at.str() + err.what());
        }
    }
    return d;
}

void require_valid(const Complex& K) {
    Diagnostics d = validate(K);
    if (!d.valid) {
        std::string msg = "invalid complex:";
        for (const auto& v : d.violations) msg += "\n  " + v;
        throw InputError(msg);
    }
}

double corner_angle(const Complex& K, int tri, int slot) {
    const auto& t = K.triangles.at(tri);
    const double l0 = K.edge(t.sides[0]).length;
    const double l1 = K.edge(t.sides[1]).length;
    const double l2 = K.edge(t.sides[2]).length;
    // Corner `slot` sits between sides slot and slot+1; the opposite side is
    // slot+2, and triangle_angles returns angles opposite each given side.
    return triangle_angles(l0, l1, l2, t.k)[(slot + 2) % 3];
}

std::vector<Corner> corners(const Complex& K) {
    std::vector<Corner> out;
    out.reserve(K.triangles.size() * 3);
    for (size_t t = 0; t < K.triangles.size(); ++t)
        for (int s = 0; s < 3; ++s)
            out.push_back(Corner{static_cast<int>(t), s,
                                 K.corner_vertex(static_cast<int>(t), s),
                                 corner_angle(K, static_cast<int>(t), s)});
    return out;
}

int LinkGraph::node_index(EdgeId e) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), e);
    if (it == nodes.end() || *it != e)
        throw InputError("directed edge " + std::to_string(e) + " is not a link node");
    return static_cast<int>(it - nodes.begin());
}

LinkGraph build_link(const Complex& K, VertexId v) {
    if (!K.vertices.count(v))
        throw InputError("vertex " + std::to_string(v) + " not in complex");
    LinkGraph L;
    L.vertex = v;
    for (const auto& [id, e] : K.edges)
        if (e.src == v) L.nodes.push_back(id);
    for (size_t t = 0; t < K.triangles.size(); ++t) {
        const auto& tri = K.triangles[t];
        for (int s = 0; s < 3; ++s) {
            if (K.corner_vertex(static_cast<int>(t), s) != v) continue;
            // Directions at the corner: reversed incoming side and outgoing side.
            int u = L.node_index(K.reverse(tri.sides[s]));
            int w = L.node_index(tri.sides[(s + 1) % 3]);
            if (u > w) std::swap(u, w);
            L.arcs.push_back(LinkGraph::Arc{u, w, corner_angle(K, static_cast<int>(t), s),
                                            static_cast<int>(t), s});
        }
    }
    std::sort(L.arcs.begin(), L.arcs.end(), [](const auto& a, const auto& b) {
        return std::tie(a.u, a.w, a.length, a.triangle, a.slot) <
               std::tie(b.u, b.w, b.length, b.triangle, b.slot);
    });
    return L;
}

namespace {

// Dijkstra over the multigraph, optionally skipping one arc.
double shortest_path(const LinkGraph& L, int from, int to, int skip_arc = -1) {
    const int n = static_cast<int>(L.nodes.size());
    std::vector<double> dist(n, kInf);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[from] = 0.0;
    pq.emplace(0.0, from);
    while (!pq.empty()) {
        auto [d, x] = pq.top();
        pq.pop();
        if (d > dist[x]) continue;
        if (x == to) return d;
        for (size_t i = 0; i < L.arcs.size(); ++i) {
            if (static_cast<int>(i) == skip_arc) continue;
            const auto& a = L.arcs[i];
            int y;
            if (a.u == x) y = a.w;
            else if (a.w == x) y = a.u;
            else continue;
            if (d + a.length < dist[y]) {
                dist[y] = d + a.length;
                pq.emplace(dist[y], y);
            }
        }
    }
    return dist[to];
}

}  // namespace

double link_distance(const LinkGraph& L, int n1, int n2) {
    if (n1 < 0 || n2 < 0 || n1 >= static_cast<int>(L.nodes.size()) ||
        n2 >= static_cast<int>(L.nodes.size()))
        throw InputError("link node index out of range");
    if (n1 == n2) return 0.0;
    return shortest_path(L, n1, n2);
}

double systole(const LinkGraph& L) {
    double best = kInf;
    for (size_t i = 0; i < L.arcs.size(); ++i) {
        const auto& a = L.arcs[i];
        if (a.u == a.w) {
            best = std::min(best, a.length);
            continue;
        }
        const double through = shortest_path(L, a.u, a.w, static_cast<int>(i));
        best = std::min(best, a.length + through);
    }
    return best;
}

LinkReport check_link_condition(const Complex& K) {
    LinkReport r;
    for (VertexId v : K.vertices) {
        const double sys = systole(build_link(K, v));
        r.systoles[v] = sys;
        if (sys < 2.0 * kPi - tol::angle) r.pass = false;
    }
    for (const auto& t : K.triangles) {
        if (!r.kbar || t.k.value() > *r.kbar) r.kbar = t.k.value();
    }
    return r;
}

int euler_characteristic(const Complex& K) {
    return static_cast<int>(K.vertices.size()) - K.edge_pairs() +
           static_cast<int>(K.triangles.size());
}

Complex scale_metric(const Complex& K, double s) {
    if (!std::isfinite(s) || s <= 0.0)
        throw InputError("scale factor must be positive");
    Complex out = K;
    for (auto& [id, e] : out.edges) e.length *= s;
    for (auto& t : out.triangles) t.k = Curvature(t.k.value() / (s * s));
    return out;
}

EdgeSubdivision subdivide_edge(Complex& K, EdgeId e, double t) {
    const DirectedEdge de = K.edge(e);
    if (!(t > tol::degenerate) || !(t < de.length - tol::degenerate))
        throw InputError("subdivision parameter outside the edge interior");
    const EdgeId erev = de.rev;
    const double len = de.length;

    // Snapshot triangles bordering the edge before mutating anything.
    std::vector<Triangle> keep, affected;
    for (const auto& tri : K.triangles) {
        bool hit = tri.sides[0] == e || tri.sides[1] == e || tri.sides[2] == e ||
                   tri.sides[0] == erev || tri.sides[1] == erev || tri.sides[2] == erev;
        (hit ? affected : keep).push_back(tri);
    }

    const VertexId x = K.fresh_vertex();
    K.edges.erase(e);
    K.edges.erase(erev);
    const EdgeId e1 = K.add_edge(de.src, x, t);
    const EdgeId e2 = K.add_edge(x, de.dst, len - t);
    EdgeSubdivision result{x, e1, e2};

    K.triangles = std::move(keep);
    // Worklist of realized triangles still containing the split edge.
    struct Piece {
        std::array<EdgeId, 3> sides;
        std::array<PlanePoint, 3> pts;
        Curvature k;
    };
    std::vector<Piece> work;
    for (const auto& tri : affected) {
        const double l0 = (tri.sides[0] == e || tri.sides[0] == erev) ? len
                          : K.edge(tri.sides[0]).length;
        const double l1 = (tri.sides[1] == e || tri.sides[1] == erev) ? len
                          : K.edge(tri.sides[1]).length;
        const double l2 = (tri.sides[2] == e || tri.sides[2] == erev) ? len
                          : K.edge(tri.sides[2]).length;
        // realize_triangle(a, b, c) gives |P0P1| = c, |P1P2| = a, |P2P0| = b.
        auto pts = realize_triangle(l1, l2, l0, tri.k);
        work.push_back(Piece{tri.sides, {pts[0], pts[1], pts[2]}, tri.k});
    }
    while (!work.empty()) {
        Piece p = work.back();
        work.pop_back();
        int hit = -1;
        for (int i = 0; i < 3; ++i)
            if (p.sides[i] == e || p.sides[i] == erev) {
                hit = i;
                break;
            }
        if (hit < 0) {
            K.triangles.push_back(Triangle{p.sides, p.k});
            continue;
        }
        const bool forward = (p.sides[hit] == e);
        const double along = forward ? t : len - t;  // from the side's start
        const PlanePoint& A = p.pts[hit];
        const PlanePoint& B = p.pts[(hit + 1) % 3];
        const PlanePoint& O = p.pts[(hit + 2) % 3];  // opposite corner
        const PlanePoint X = point_between(A, B, along);
        const VertexId ov = K.edge(p.sides[(hit + 1) % 3]).dst;
        const EdgeId g = K.add_edge(x, ov, distance(X, O));
        const EdgeId first = forward ? e1 : K.edge(e2).rev;
        const EdgeId second = forward ? e2 : K.edge(e1).rev;
        // (A -> X, X -> O, O -> A) and (X -> B, B -> O, O -> X).
        work.push_back(Piece{{first, g, p.sides[(hit + 2) % 3]}, {A, X, O}, p.k});
        work.push_back(Piece{{second, p.sides[(hit + 1) % 3], K.edge(g).rev}, {X, B, O}, p.k});
    }
    return result;
}

}  // namespace negcurve
