#pragma once

#include "cuspgauge/lattice.hpp"

#include <optional>
#include <string>

namespace cuspgauge {

// Lobachevsky function via the series sum_{n>=1} sin(2 n theta) / (2 n^2),
// Kahan-summed, truncated when the term envelope drops below 1e-14.
double lobachevsky(double theta);

// Volume of the regular ideal 3-simplex, 3 * lobachevsky(pi/3). Computed
// once and cached before any concurrent use.
double ideal_simplex_volume();

// beta(alpha) = alpha^(-5/2) * pi / (2 v3), for alpha in (0, 1].
double beta_from_alpha(double alpha);

// Cusp cross-section volume contribution: lattice area / 2.
double cusp_volume(const CuspLattice& lat);

// Hyperbolic-norm glue: volume = v3 * norm for hyperbolic data; validated
// within 1e-6 relative when both fields are present.
struct HyperbolicDatum {
    double volume = 0.0;
    std::optional<double> gromov_norm;
};
void validate_hyperbolic_datum(const HyperbolicDatum& datum);

// Filled-manifold bounds from a pinch value alpha (supplied, or estimated
// from the boundary meridian length l): volume lower bound alpha * vol_X
// (rounded down at 1e-12), curvature range [-1 - pinch, -1 + pinch] from
// the same estimate when available.
struct BoundReport {
    double alpha = 0.0;
    std::string alpha_source;  // "supplied" or "estimated"
    double volume_lower_bound = 0.0;
    double kappa_lo = 0.0;
    double kappa_hi = 0.0;
};
BoundReport propagate_filling_bounds(double vol_X, double l, std::optional<double> alpha);

// Norm interval for the filled manifold: [norm, norm * beta(alpha)),
// half-open. norm == 0 degenerates to [0, 0) with a warning flag.
struct GromovInterval {
    double lo = 0.0;
    double hi = 0.0;
    double beta = 0.0;
    double alpha = 0.0;
    bool degenerate = false;
};
GromovInterval gromov_interval(double norm_filled, double l, std::optional<double> alpha);

// 2 (-kappa_sup)^{3/2} vol / pi; requires kappa_sup < 0.
double norm_volume_lower_bound(double vol, double kappa_sup);

// vol / v3.
double hyperbolic_norm(double vol);

// Sectional curvature bound under metric scaling g -> lambda^2 g.
double curvature_scaling(double kappa_sup, double lambda);

} // namespace cuspgauge
