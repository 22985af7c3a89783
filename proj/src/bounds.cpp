#include "cuspgauge/bounds.hpp"

#include "cuspgauge/errors.hpp"
#include "cuspgauge/filling.hpp"
#include "cuspgauge/tolerances.hpp"
#include "cuspgauge/torus_metric.hpp"

#include <cmath>
#include <sstream>

namespace cuspgauge {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lower bounds are published rounded down so the certified direction never
// overstates.
double round_down(double x) { return x - std::abs(x) * 1e-12; }

} // namespace

double lobachevsky(double theta) {
    // sum sin(2 n theta) / (2 n^2), Kahan-compensated. The 1e-14 envelope
    // cutoff leaves an O(1/N^2) tail at angles where sin(2 n theta) cancels
    // over periods (all angles this artifact evaluates).
    double sum = 0.0;
    double carry = 0.0;
    const double two_theta = 2.0 * theta;
    for (long long n = 1;; ++n) {
        const double envelope = 1.0 / (2.0 * static_cast<double>(n) * static_cast<double>(n));
        if (envelope < 1e-14) break;
        const double term = std::sin(two_theta * static_cast<double>(n)) * envelope;
        const double y = term - carry;
        const double s = sum + y;
        carry = (s - sum) - y;
        sum = s;
    }
    return sum;
}

double ideal_simplex_volume() {
    static const double v3 = 3.0 * lobachevsky(kPi / 3.0);
    return v3;
}

double beta_from_alpha(double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0 + geom_tol()) {
        throw InvalidInputError("alpha must lie in (0, 1]");
    }
    return std::pow(alpha, -2.5) * kPi / (2.0 * ideal_simplex_volume());
}

double cusp_volume(const CuspLattice& lat) { return lattice_area(lat) / 2.0; }

void validate_hyperbolic_datum(const HyperbolicDatum& datum) {
    if (!(datum.volume > 0.0) || !std::isfinite(datum.volume)) {
        throw InvalidInputError("hyperbolic volume must be positive and finite");
    }
    if (datum.gromov_norm) {
        if (!(*datum.gromov_norm >= 0.0)) throw InvalidInputError("gromov_norm must be >= 0");
        const double expected = ideal_simplex_volume() * *datum.gromov_norm;
        if (!approx_eq(datum.volume, expected, 1e-6)) {
            std::ostringstream msg;
            msg << "hyperbolic datum inconsistent: volume " << datum.volume
                << " != v3 * norm = " << expected;
            throw InvalidInputError(msg.str());
        }
    }
}

namespace {

// alpha for the bound reports: the caller's value, or the certified pinch
// estimate for the boundary meridian length l.
std::pair<double, std::string> resolve_alpha(double l, std::optional<double> alpha) {
    if (alpha) {
        if (!(*alpha > 0.0) || *alpha >= 1.0) {
            throw InvalidInputError("supplied alpha must lie in (0, 1)");
        }
        return {*alpha, "supplied"};
    }
    const auto est = alpha_estimate(l);
    return {est.a, "estimated"};
}

} // namespace

BoundReport propagate_filling_bounds(double vol_X, double l, std::optional<double> alpha) {
    if (!(vol_X > 0.0) || !std::isfinite(vol_X)) {
        throw InvalidInputError("volume must be positive and finite");
    }
    if (!alpha && !(l > kTwoPi)) {
        throw InvalidInputError("meridian length must exceed 2*pi to estimate alpha");
    }
    BoundReport rep;
    const auto [a, source] = resolve_alpha(l, alpha);
    rep.alpha = a;
    rep.alpha_source = source;
    rep.volume_lower_bound = round_down(a * vol_X);
    // Certified curvature window implied by the pinch value a.
    rep.kappa_lo = -1.0 / a;
    rep.kappa_hi = -a;
    return rep;
}

GromovInterval gromov_interval(double norm_filled, double l, std::optional<double> alpha) {
    if (!(norm_filled >= 0.0) || !std::isfinite(norm_filled)) {
        throw InvalidInputError("filled norm must be finite and >= 0");
    }
    if (!alpha && !(l > kTwoPi)) {
        throw InvalidInputError("meridian length must exceed 2*pi to estimate alpha");
    }
    GromovInterval interval;
    const auto [a, source] = resolve_alpha(l, alpha);
    (void)source;
    interval.alpha = a;
    interval.beta = beta_from_alpha(a);
    interval.lo = norm_filled;
    interval.hi = norm_filled * interval.beta;  // half-open upper end
    interval.degenerate = norm_filled == 0.0;
    return interval;
}

double norm_volume_lower_bound(double vol, double kappa_sup) {
    if (!(vol > 0.0)) throw InvalidInputError("volume must be positive");
    if (!(kappa_sup < 0.0)) {
        throw InvalidInputError("kappa_sup must be negative for the norm-volume bound");
    }
    return 2.0 * std::pow(-kappa_sup, 1.5) * vol / kPi;
}

double hyperbolic_norm(double vol) {
    if (!(vol >= 0.0) || !std::isfinite(vol)) {
        throw InvalidInputError("volume must be finite and >= 0");
    }
    return vol / ideal_simplex_volume();
}

double curvature_scaling(double kappa_sup, double lambda) {
    if (!(lambda > 0.0)) throw InvalidInputError("scale factor must be positive");
    return kappa_sup / (lambda * lambda);
}

} // namespace cuspgauge
