#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cuspgauge {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double c, Vec2 v) { return {c * v.x, c * v.y}; }
double norm(Vec2 v);
double det(Vec2 a, Vec2 b);

// Euclidean cross-section lattice of a torus cusp: basis v1, v2.
// claimed_maximal marks data said to come from a maximal cusp section, which
// gates operations that assume shortest >= 1 and area >= sqrt(3).
struct CuspLattice {
    Vec2 v1;
    Vec2 v2;
    bool claimed_maximal = false;
};

// Throws InvalidInputError if the basis is degenerate (|det| below the
// geometry tolerance relative to |v1||v2|).
void validate_lattice(const CuspLattice& lat);

// Primitive slope class in canonical form: q > 0, or q == 0 and p == 1.
struct Slope {
    long long p = 1;
    long long q = 0;
};

inline bool operator==(Slope a, Slope b) { return a.p == b.p && a.q == b.q; }
inline bool operator!=(Slope a, Slope b) { return !(a == b); }
// Lexicographic on (p, q); used for deterministic tie-breaks.
inline bool operator<(Slope a, Slope b) { return a.p != b.p ? a.p < b.p : a.q < b.q; }

// Reduces (p, q) by gcd and orients canonically. (0, 0) is invalid.
Slope normalize_slope(long long p, long long q);

struct SlopeMeasurement {
    Slope slope;
    double length = 0.0;
};

// |p v1 + q v2| for the canonical representative of s.
SlopeMeasurement slope_length(const CuspLattice& lat, Slope s);

// Geometric intersection number |p1 q2 - p2 q1|.
long long intersection_number(Slope a, Slope b);

// |det(v1, v2)|, area of the fundamental parallelogram.
double lattice_area(const CuspLattice& lat);

// Checks |det(w1, w2)| == delta(s1, s2) * |det(v1, v2)| for the translations
// w_i realizing the slopes. Degenerate pair (s1 == s2) is an error.
struct ParallelogramReport {
    long long delta = 0;
    double spanned_area = 0.0;
    double fundamental_area = 0.0;
    bool consistent = false;
};
ParallelogramReport parallelogram_identity_check(const CuspLattice& lat, Slope s1, Slope s2);

// Shortest-vector length and fundamental area, with admissibility verdicts
// against a uniform lower bound L (shortest >= L, area >= sqrt(3) L^2).
struct AdmissibilityReport {
    double shortest = 0.0;
    double area = 0.0;
    double bound = 1.0;
    bool shortest_ok = false;
    bool area_ok = false;
    bool admissible = false;
};
AdmissibilityReport check_admissibility(const CuspLattice& lat, double L);

// All canonical slopes with length <= max_length (inclusive at the geometry
// tolerance), sorted by (length, p, q). The search rectangle bound
// B = ceil(L * |basis| / |det|) comes from the distance between adjacent
// basis-aligned lattice lines, so the list is provably complete.
std::vector<SlopeMeasurement> enumerate_slopes(const CuspLattice& lat, double max_length);

// Globally shortest slope; length ties resolved lexicographically on (p, q).
SlopeMeasurement minimal_slope(const CuspLattice& lat);

// Length-product bound l(s1) l(s2) >= sqrt(3) L^2 delta(s1, s2) for an
// admissible lattice. With claimed_maximal also evaluates the L = 1 form.
struct LengthProductReport {
    double l1 = 0.0;
    double l2 = 0.0;
    long long delta = 0;
    double product = 0.0;
    double bound = 0.0;
    bool holds = false;
    bool maximal_form_checked = false;
    double maximal_bound = 0.0;
    bool maximal_form_holds = false;
};
LengthProductReport verify_length_product(const CuspLattice& lat, Slope s1, Slope s2, double L);

} // namespace cuspgauge
