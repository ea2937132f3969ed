#include "negcurve/geodesics.hpp"

#include <algorithm>
#include <cctype>

namespace negcurve {

void require_loop_in(const Complex& K, const ClosedLoop& loop) {
    if (loop.edges.empty()) throw InputError("empty loop");
    for (size_t i = 0; i < loop.size(); ++i) {
        const auto& e = K.edge(loop.at(i));
        const auto& f = K.edge(loop.at(i + 1));
        if (e.dst != f.src)
            throw InputError("loop breaks at position " + std::to_string(i) +
                             ": edge endpoints do not chain");
    }
}

bool has_backtrack(const Complex& K, const ClosedLoop& loop) {
    for (size_t i = 0; i < loop.size(); ++i)
        if (loop.at(i + 1) == K.reverse(loop.at(i))) return true;
    return false;
}

ClosedLoop rotated(const ClosedLoop& loop, size_t offset) {
    ClosedLoop out;
    const size_t n = loop.size();
    out.edges.reserve(n);
    for (size_t i = 0; i < n; ++i) out.edges.push_back(loop.at(offset + i));
    return out;
}

ClosedLoop reversed(const Complex& K, const ClosedLoop& loop) {
    ClosedLoop out;
    out.edges.reserve(loop.size());
    for (auto it = loop.edges.rbegin(); it != loop.edges.rend(); ++it)
        out.edges.push_back(K.reverse(*it));
    return out;
}

double subtended_angle(const Complex& K, const ClosedLoop& loop, size_t i) {
    const EdgeId incoming = loop.at(i);
    const EdgeId outgoing = loop.at(i + 1);
    const VertexId v = K.edge(incoming).dst;
    LinkGraph L = build_link(K, v);
    return link_distance(L, L.node_index(K.reverse(incoming)),
                         L.node_index(outgoing));
}

GeodesicReport is_closed_geodesic(const Complex& K, const ClosedLoop& loop) {
    require_loop_in(K, loop);
    GeodesicReport r;
    for (size_t i = 0; i < loop.size(); ++i) {
        const double ang = subtended_angle(K, loop, i);
        r.angles.push_back(ang);
        r.min_angle = std::min(r.min_angle, ang);
        if (ang < kPi - tol::angle) r.geodesic = false;
    }
    return r;
}

double loop_length(const Complex& K, const ClosedLoop& loop) {
    double total = 0.0;
    for (EdgeId e : loop.edges) total += K.edge(e).length;
    return total;
}

char inverse_letter(char c) {
    if (std::islower(static_cast<unsigned char>(c)))
        return static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

CyclicWord::CyclicWord(std::string s) : letters(std::move(s)) {
    if (letters.empty()) throw InputError("empty cyclic word");
    for (char c : letters)
        if (!std::isalpha(static_cast<unsigned char>(c)))
            throw InputError("cyclic word letters must be in [a-zA-Z]");
    for (size_t i = 0; i < letters.size(); ++i) {
        char next = letters[(i + 1) % letters.size()];
        if (next == inverse_letter(letters[i]))
            throw InputError("cyclic word is not cyclically reduced");
    }
}

namespace {

// w = u^k for k >= 2 iff rotating by some proper divisor period fixes w.
template <typename Seq>
bool sequence_proper_power(const Seq& s) {
    const size_t n = s.size();
    for (size_t d = 1; d <= n / 2; ++d) {
        if (n % d != 0) continue;
        bool period = true;
        for (size_t i = 0; i < n && period; ++i)
            if (s[i] != s[(i + d) % n]) period = false;
        if (period) return true;
    }
    return false;
}

template <typename Seq>
bool is_rotation(const Seq& a, const Seq& b) {
    if (a.size() != b.size()) return false;
    const size_t n = a.size();
    for (size_t off = 0; off < n; ++off) {
        bool same = true;
        for (size_t i = 0; i < n && same; ++i)
            if (a[i] != b[(i + off) % n]) same = false;
        if (same) return true;
    }
    return false;
}

}  // namespace

bool is_proper_power(const CyclicWord& w) {
    return sequence_proper_power(w.letters);
}

bool conjugate_or_inverse_conjugate(const CyclicWord& w1, const CyclicWord& w2) {
    if (is_rotation(w1.letters, w2.letters)) return true;
    std::string inv;
    for (auto it = w1.letters.rbegin(); it != w1.letters.rend(); ++it)
        inv.push_back(inverse_letter(*it));
    return is_rotation(inv, w2.letters);
}

bool is_proper_power(const ClosedLoop& loop) {
    if (loop.edges.empty()) throw InputError("empty loop");
    return sequence_proper_power(loop.edges);
}

bool conjugate_or_inverse_conjugate(const Complex& K, const ClosedLoop& l1,
                                    const ClosedLoop& l2) {
    if (is_rotation(l1.edges, l2.edges)) return true;
    return is_rotation(reversed(K, l1).edges, l2.edges);
}

}  // namespace negcurve
