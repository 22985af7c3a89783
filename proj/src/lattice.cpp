#include "cuspgauge/lattice.hpp"

#include "cuspgauge/errors.hpp"
#include "cuspgauge/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace cuspgauge {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;

Vec2 translation(const CuspLattice& lat, Slope s) {
    return {static_cast<double>(s.p) * lat.v1.x + static_cast<double>(s.q) * lat.v2.x,
            static_cast<double>(s.p) * lat.v1.y + static_cast<double>(s.q) * lat.v2.y};
}

// |p v1 + q v2| >= |p| |det| / |v2| (component orthogonal to v2), and
// symmetrically in q, so lengths <= L live in the rectangle below.
void search_bounds(const CuspLattice& lat, double L, long long& bp, long long& bq) {
    const double d = lattice_area(lat);
    bp = static_cast<long long>(std::ceil(L * norm(lat.v2) / d)) + 1;
    bq = static_cast<long long>(std::ceil(L * norm(lat.v1) / d)) + 1;
}

} // namespace

double norm(Vec2 v) { return std::hypot(v.x, v.y); }

double det(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

void validate_lattice(const CuspLattice& lat) {
    const double n1 = norm(lat.v1);
    const double n2 = norm(lat.v2);
    if (!(n1 > 0.0) || !(n2 > 0.0) || !std::isfinite(n1) || !std::isfinite(n2)) {
        throw InvalidInputError("lattice basis vectors must be finite and nonzero");
    }
    if (std::abs(det(lat.v1, lat.v2)) <= geom_tol() * n1 * n2) {
        throw InvalidInputError("degenerate lattice basis: v1 and v2 are parallel");
    }
}

Slope normalize_slope(long long p, long long q) {
    if (p == 0 && q == 0) throw InvalidInputError("slope (0, 0) is invalid");
    const long long g = std::gcd(std::llabs(p), std::llabs(q));
    p /= g;
    q /= g;
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
    return {p, q};
}

SlopeMeasurement slope_length(const CuspLattice& lat, Slope s) {
    validate_lattice(lat);
    const Slope c = normalize_slope(s.p, s.q);
    return {c, norm(translation(lat, c))};
}

long long intersection_number(Slope a, Slope b) {
    const Slope ca = normalize_slope(a.p, a.q);
    const Slope cb = normalize_slope(b.p, b.q);
    return std::llabs(ca.p * cb.q - cb.p * ca.q);
}

double lattice_area(const CuspLattice& lat) {
    validate_lattice(lat);
    return std::abs(det(lat.v1, lat.v2));
}

ParallelogramReport parallelogram_identity_check(const CuspLattice& lat, Slope s1, Slope s2) {
    validate_lattice(lat);
    const Slope c1 = normalize_slope(s1.p, s1.q);
    const Slope c2 = normalize_slope(s2.p, s2.q);
    if (c1 == c2) throw PreconditionError("degenerate pair: the two slopes coincide");
    ParallelogramReport rep;
    rep.delta = intersection_number(c1, c2);
    rep.spanned_area = std::abs(det(translation(lat, c1), translation(lat, c2)));
    rep.fundamental_area = lattice_area(lat);
    rep.consistent = approx_eq(rep.spanned_area,
                               static_cast<double>(rep.delta) * rep.fundamental_area, geom_tol());
    return rep;
}

AdmissibilityReport check_admissibility(const CuspLattice& lat, double L) {
    if (!(L > 0.0)) throw InvalidInputError("admissibility bound L must be positive");
    AdmissibilityReport rep;
    rep.bound = L;
    rep.shortest = minimal_slope(lat).length;
    rep.area = lattice_area(lat);
    rep.shortest_ok = geq_tol(rep.shortest, L, geom_tol());
    rep.area_ok = geq_tol(rep.area, kSqrt3 * L * L, geom_tol());
    rep.admissible = rep.shortest_ok && rep.area_ok;
    return rep;
}

std::vector<SlopeMeasurement> enumerate_slopes(const CuspLattice& lat, double max_length) {
    validate_lattice(lat);
    if (!(max_length > 0.0) || !std::isfinite(max_length)) {
        throw InvalidInputError("max_length must be positive and finite");
    }
    long long bp = 0, bq = 0;
    search_bounds(lat, max_length, bp, bq);
    std::vector<SlopeMeasurement> out;
    for (long long q = 0; q <= bq; ++q) {
        for (long long p = -bp; p <= bp; ++p) {
            if (q == 0 && p != 1) continue;  // canonical q = 0 representative
            if (p == 0 && q != 1) continue;
            if (std::gcd(std::llabs(p), q) != 1) continue;
            const double len = norm(translation(lat, {p, q}));
            if (len <= max_length + geom_tol() * std::max(1.0, max_length)) {
                out.push_back({{p, q}, len});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const SlopeMeasurement& a, const SlopeMeasurement& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.slope < b.slope;
    });
    return out;
}

SlopeMeasurement minimal_slope(const CuspLattice& lat) {
    validate_lattice(lat);
    const double cap = std::min(norm(lat.v1), norm(lat.v2));
    const auto candidates = enumerate_slopes(lat, cap);
    double best = candidates.front().length;
    for (const auto& m : candidates) best = std::min(best, m.length);
    // Within-tolerance length ties resolve to the lexicographically least
    // canonical (p, q).
    const SlopeMeasurement* pick = nullptr;
    for (const auto& m : candidates) {
        if (m.length > best + geom_tol() * std::max(1.0, best)) continue;
        if (!pick || m.slope < pick->slope) pick = &m;
    }
    return *pick;
}

LengthProductReport verify_length_product(const CuspLattice& lat, Slope s1, Slope s2, double L) {
    const auto adm = check_admissibility(lat, L);
    if (!adm.shortest_ok) {
        std::ostringstream msg;
        msg << "admissibility violated: shortest slope " << adm.shortest
            << " is below the bound L = " << L;
        throw PreconditionError(msg.str());
    }
    if (!adm.area_ok) {
        std::ostringstream msg;
        msg << "admissibility violated: area " << adm.area << " is below sqrt(3) L^2 = "
            << kSqrt3 * L * L;
        throw PreconditionError(msg.str());
    }
    LengthProductReport rep;
    rep.l1 = slope_length(lat, s1).length;
    rep.l2 = slope_length(lat, s2).length;
    rep.delta = intersection_number(s1, s2);
    rep.product = rep.l1 * rep.l2;
    rep.bound = kSqrt3 * L * L * static_cast<double>(rep.delta);
    rep.holds = geq_tol(rep.product, rep.bound, geom_tol());
    if (lat.claimed_maximal) {
        rep.maximal_form_checked = true;
        rep.maximal_bound = kSqrt3 * static_cast<double>(rep.delta);
        rep.maximal_form_holds = geq_tol(rep.product, rep.maximal_bound, geom_tol());
    }
    return rep;
}

} // namespace cuspgauge
