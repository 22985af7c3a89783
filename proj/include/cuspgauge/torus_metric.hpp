#pragma once

#include <memory>
#include <vector>

namespace cuspgauge {

struct ProfileRecipe;

struct BuildOptions {
    int samples = 10001;  // uniform grid nodes over [r0, 0]
};

// Sampled warped-product solid-torus metric dr^2 + f^2 dmu^2 + g^2 dlambda^2
// on [r0, 0] (plus optional attached collar (0, c]). Grids are strictly
// increasing; f, g and their stored derivatives are sampled per node.
// cone_core profiles satisfy f(r0) = 0 and f'(r0) = 2*pi (cone tolerance);
// synthetic collar-only profiles set cone_core = false.
struct MetricProfile {
    std::vector<double> r, f, g, fp, gp, fpp, gpp;
    double l1 = 0.0;   // boundary meridian length f(r_end)
    double l2 = 0.0;   // boundary longitude length g(r_end)
    double t = 0.0;    // curvature-driver half-width target
    double r0 = 0.0;
    bool cone_core = true;
    std::shared_ptr<const ProfileRecipe> recipe;  // set by build_profile
};

// Constructs the profile for target pinching t in [1e-6, 1-1e-6]:
// f'' = q_f f and g'' = q_g g with curvature drivers q in [1-t, 1+t],
// closed forms (2pi/sqrt(1+t)) sinh(sqrt(1+t) w) and g0 cosh(sqrt(1+t) w)
// near the core, a transition taking q_f down to 1-t until f'/f reaches 1
// and keeping q_g until g'/g reaches 1, then exactly hyperbolic growth
// (q = 1) out to r = 0. r0 is solved so that f(0) = l1 within 1e-8
// relative; g is scaled so g(0) = l2. Throws InfeasibleError when l1 is
// below this t's reachable minimum.
MetricProfile build_profile(double l1, double l2, double t, BuildOptions opts = {});

// Reachable minimum boundary meridian length for this t (no sampling).
double minimum_l1_for_t(double t);

// Sectional curvatures k12 = -f''/f, k13 = -g''/g, k23 = -f' g'/(f g) at
// each reported sample, from the stored derivatives. Every stored derivative
// is cross-checked against 4th-order finite differences of the sampled f and
// g; each must agree within 1e-5 of the local warp scale max(1, f, f', f'')
// or NumericalError is thrown. On cone-core profiles the 2 samples nearest
// r0 are excluded (coordinate singularity) and counted.
struct CurvatureReport {
    std::vector<double> r;
    std::vector<double> k12, k13, k23;
    double k_inf = 0.0;
    double k_sup = 0.0;
    int excluded_core_samples = 0;
    double max_fd_mismatch = 0.0;
};
CurvatureReport curvature_report(const MetricProfile& prof);

// 2 * integral of f g dr over the grid / (f_out * g_out), composite Simpson.
double volume_ratio(const MetricProfile& prof);

// Total volume integral of f g dr (unit-period coordinates).
double profile_volume(const MetricProfile& prof);

// Extends a profile that ends hyperbolically (f'/f = g'/g = 1 within the
// ODE tolerance) by an exact collar f = f_end e^r, g = g_end e^r of length
// c > 0. Boundary lengths scale by e^c.
MetricProfile attach_collar(const MetricProfile& prof, double c);

// Pinching certificate a = min(-k_sup, -1/k_inf, volume ratio): valid iff
// a in (0, 1). measured_pinching is the half-width max(-1-k_inf, 1+k_sup).
// Nonnegative curvature sample -> no certificate (InfeasibleError).
struct PinchCertificate {
    double a = 0.0;
    double k_inf = 0.0;
    double k_sup = 0.0;
    double ratio = 0.0;
    double measured_pinching = 0.0;
    bool valid = false;
};
PinchCertificate pinch_certificate(const MetricProfile& prof);

struct AlphaOptions {
    BuildOptions build{};
    double t_max = 0.99;
    int feasibility_iters = 60;  // bisection steps locating t_min
    int search_iters = 80;       // golden-section steps maximizing a
};

// Best certified pinch value over feasible t: t_min by bisection on build
// feasibility, then golden-section maximization of the certificate a on
// (t_min, t_max). Deterministic (fixed iteration counts). Throws
// InfeasibleError when no t <= t_max is feasible (l1 near 2*pi).
struct AlphaEstimate {
    double l1 = 0.0;
    double t_min = 0.0;
    double t_star = 0.0;
    double a = 0.0;
    double k_inf = 0.0;
    double k_sup = 0.0;
    double ratio = 0.0;
    bool feasible = false;
};
AlphaEstimate alpha_estimate(double l1, AlphaOptions opts = {});

// alpha_estimate per grid point; infeasible points come back as marked rows
// (feasible = false) instead of throwing.
std::vector<AlphaEstimate> alpha_curve(const std::vector<double>& l1_grid, AlphaOptions opts = {});

} // namespace cuspgauge
