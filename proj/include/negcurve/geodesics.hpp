#ifndef NEGCURVE_GEODESICS_HPP
#define NEGCURVE_GEODESICS_HPP

#include <string>
#include <vector>

#include "negcurve/complex.hpp"

namespace negcurve {

/// Cyclic sequence of directed edges with matching endpoints. Geodesic
/// candidates must be cyclically reduced (no e followed by its reverse).
struct ClosedLoop {
    std::vector<EdgeId> edges;

    size_t size() const { return edges.size(); }
    EdgeId at(size_t i) const { return edges[i % edges.size()]; }
};

/// Checks endpoints match cyclically; throws InputError otherwise.
void require_loop_in(const Complex& K, const ClosedLoop& loop);

/// True when some e_{i+1} equals the reverse of e_i, cyclically.
bool has_backtrack(const Complex& K, const ClosedLoop& loop);

ClosedLoop rotated(const ClosedLoop& loop, size_t offset);
ClosedLoop reversed(const Complex& K, const ClosedLoop& loop);

/// Angle the loop subtends at position i, i.e. the link distance at the
/// vertex dst(e_i) between the reversed incoming edge and the outgoing edge
/// e_{i+1}. May be +inf when the link is disconnected there.
double subtended_angle(const Complex& K, const ClosedLoop& loop, size_t i);

struct GeodesicReport {
    bool geodesic = true;
    std::vector<double> angles;  // subtended angle per position
    double min_angle = kInf;
};

/// Local geodesic test: every subtended angle >= pi (within tolerance).
GeodesicReport is_closed_geodesic(const Complex& K, const ClosedLoop& loop);

double loop_length(const Complex& K, const ClosedLoop& loop);

/// Cyclically reduced word over [a-z], capital letters denoting inverses.
struct CyclicWord {
    std::string letters;

    explicit CyclicWord(std::string s);
    size_t size() const { return letters.size(); }
};

char inverse_letter(char c);

/// True iff w = u^k for some k >= 2 as a cyclic word.
bool is_proper_power(const CyclicWord& w);

/// True iff w2 is a cyclic rotation of w1 or of w1 inverted.
bool conjugate_or_inverse_conjugate(const CyclicWord& w1, const CyclicWord& w2);

/// Same tests on edge loops, with edge reversal as inversion. Used for the
/// decidable malnormal-family checks on triangle-free (free group) vertex
/// spaces.
bool is_proper_power(const ClosedLoop& loop);
bool conjugate_or_inverse_conjugate(const Complex& K, const ClosedLoop& l1,
                                    const ClosedLoop& l2);

}  // namespace negcurve

#endif
