#include "cuspgauge/torus_metric.hpp"

#include "cuspgauge/errors.hpp"
#include "cuspgauge/tolerances.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <limits>
#include <sstream>
#include <vector>

namespace cuspgauge {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kTLow = 1e-6;
constexpr double kTHigh = 1.0 - 1e-6;
constexpr double kLandMin = 0.04;   // landing band width floor
constexpr double kLandMax = 0.35;
constexpr int kBandSteps = 1024;    // RK4 substeps per landing band
constexpr int kMaxSamples = 2000001;
constexpr double kFdTol = 1e-5;     // stored-vs-FD curvature agreement
constexpr double kLenMax = 1e9;

std::string num(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

// C^3 ramp 35x^4 - 84x^5 + 70x^6 - 20x^7: value 0->1, three vanishing
// derivatives at both ends, so the driver q stays C^2 across band joints
// and the profile is C^4 (keeps finite-difference checks clean).
double ramp(double x) {
    x = std::clamp(x, 0.0, 1.0);
    const double x2 = x * x;
    return x2 * x2 * (35.0 + x * (-84.0 + x * (70.0 - 20.0 * x)));
}

double hermite(double y0, double m0, double y1, double m1, double dx, double u) {
    const double u2 = u * u, u3 = u2 * u;
    return y0 * (1.0 - 3.0 * u2 + 2.0 * u3) + y1 * (3.0 * u2 - 2.0 * u3) +
           dx * (m0 * (u - 2.0 * u2 + u3) + m1 * (u3 - u2));
}

} // namespace

// Everything needed to re-evaluate f, g and their derivatives at any w >= 0
// (w = r - r0). Both warp factors run: closed-form core, then a landing band
// where the driver q ramps to 1 (dense Riccati table in h = f'/f and log f),
// then exact hyperbolic growth. gamma_* are the band-entry offsets of h from
// 1, solved so h lands at exactly 1.
struct ProfileRecipe {
    double t = 0.0, s = 0.0, a = 0.0;  // s = sqrt(1+t), a = sqrt(1-t)
    double d = 0.0;                    // landing band width
    double gamma_f = 0.0, gamma_g = 0.0;
    double wf_trig = 0.0, wf_land = 0.0, lnf_trig = 0.0, lnf_land = 0.0;
    double wg_trig = 0.0, wg_land = 0.0, lng_trig = 0.0, lng_land = 0.0;
    std::vector<double> fh, fln;       // f band: h and integral of h from entry
    std::vector<double> gh, gln;
    double min_l1 = 0.0;
    double W = 0.0, g_scale = 1.0, l1 = 0.0, l2 = 0.0;
};

namespace {

double q_f(const ProfileRecipe& rc, double x) {
    return (1.0 - rc.t) + rc.t * ramp(x / rc.d);
}

double q_g(const ProfileRecipe& rc, double x) {
    return (1.0 + rc.t) - rc.t * ramp(x / rc.d);
}

// RK4 on h' = q(x) - h^2, L' = h over [0, d]. Returns exit h; fills tables
// when asked.
template <typename Q>
double run_band(double d, Q q, double h0, std::vector<double>* hs, std::vector<double>* ls) {
    const double dx = d / kBandSteps;
    double h = h0, L = 0.0;
    if (hs) {
        hs->assign(kBandSteps + 1, 0.0);
        ls->assign(kBandSteps + 1, 0.0);
        (*hs)[0] = h;
    }
    for (int k = 0; k < kBandSteps; ++k) {
        const double x = k * dx;
        const double k1h = q(x) - h * h, k1l = h;
        double hm = h + 0.5 * dx * k1h;
        const double k2h = q(x + 0.5 * dx) - hm * hm, k2l = hm;
        hm = h + 0.5 * dx * k2h;
        const double k3h = q(x + 0.5 * dx) - hm * hm, k3l = hm;
        hm = h + dx * k3h;
        const double k4h = q(x + dx) - hm * hm, k4l = hm;
        h += dx / 6.0 * (k1h + 2.0 * (k2h + k3h) + k4h);
        L += dx / 6.0 * (k1l + 2.0 * (k2l + k3l) + k4l);
        if (hs) {
            (*hs)[k + 1] = h;
            (*ls)[k + 1] = L;
        }
    }
    return h;
}

// Plans the t-dependent part of the construction for a given band width.
// Independent of l1, l2: those only pick the total width W and the g scale.
ProfileRecipe plan_core(double t, double d) {
    ProfileRecipe rc;
    rc.t = t;
    rc.s = std::sqrt(1.0 + t);
    rc.a = std::sqrt(1.0 - t);
    rc.d = d;

    // f band entry offset: h = 1 + gamma with q ramping (1-t) -> 1 must exit
    // at exactly 1. Exit height grows with gamma, so bisect.
    {
        auto qf = [&rc](double x) { return q_f(rc, x); };
        double lo = 0.0, hi = t;
        if (run_band(d, qf, 1.0 + hi, nullptr, nullptr) < 1.0)
            throw NumericalError("landing band cannot reach hyperbolic slope for t = " + num(t));
        for (int i = 0; i < 64; ++i) {
            const double mid = 0.5 * (lo + hi);
            (run_band(d, qf, 1.0 + mid, nullptr, nullptr) < 1.0 ? lo : hi) = mid;
        }
        rc.gamma_f = 0.5 * (lo + hi);
        const double exit = run_band(d, qf, 1.0 + rc.gamma_f, &rc.fh, &rc.fln);
        if (std::abs(exit - 1.0) > 1e-9)
            throw NumericalError("f landing failed to converge (exit slope " + num(exit) + ")");
        rc.fh.back() = 1.0;
    }
    // g band entry offset: h = 1 - gamma with q ramping (1+t) -> 1, exit at
    // exactly 1. Exit height falls with gamma.
    {
        auto qg = [&rc](double x) { return q_g(rc, x); };
        double lo = 0.0, hi = t;
        if (run_band(d, qg, 1.0 - hi, nullptr, nullptr) > 1.0)
            throw NumericalError("landing band cannot settle to hyperbolic slope for t = " + num(t));
        for (int i = 0; i < 64; ++i) {
            const double mid = 0.5 * (lo + hi);
            (run_band(d, qg, 1.0 - mid, nullptr, nullptr) > 1.0 ? lo : hi) = mid;
        }
        rc.gamma_g = 0.5 * (lo + hi);
        const double exit = run_band(d, qg, 1.0 - rc.gamma_g, &rc.gh, &rc.gln);
        if (std::abs(exit - 1.0) > 1e-9)
            throw NumericalError("g landing failed to converge (exit slope " + num(exit) + ")");
        rc.gh.back() = 1.0;
    }

    // Core stages: f = (2pi/a) sinh(a w) descends to slope 1 + gamma_f,
    // g = cosh(s w) climbs to slope 1 - gamma_g.
    rc.wf_trig = std::atanh(rc.a / (1.0 + rc.gamma_f)) / rc.a;
    rc.lnf_trig = std::log((kTwoPi / rc.a) * std::sinh(rc.a * rc.wf_trig));
    rc.wf_land = rc.wf_trig + d;
    rc.lnf_land = rc.lnf_trig + rc.fln.back();

    rc.wg_trig = std::atanh((1.0 - rc.gamma_g) / rc.s) / rc.s;
    rc.lng_trig = std::log(std::cosh(rc.s * rc.wg_trig));
    rc.wg_land = rc.wg_trig + d;
    rc.lng_land = rc.lng_trig + rc.gln.back();

    rc.min_l1 = std::exp(rc.lnf_land + std::max(0.0, rc.wg_land - rc.wf_land));
    return rc;
}

void finalize_plan(ProfileRecipe& rc, double l1, double l2) {
    rc.l1 = l1;
    rc.l2 = l2;
    const double W = rc.wf_land + (std::log(l1) - rc.lnf_land);
    rc.W = std::max({W, rc.wf_land, rc.wg_land});
    rc.g_scale = l2 * std::exp(-(rc.lng_land + (rc.W - rc.wg_land)));
}

ProfileRecipe plan_profile(double l1, double l2, double t, int samples) {
    ProfileRecipe rc = plan_core(t, kLandMin);
    if (l1 < rc.min_l1 * (1.0 - 1e-12))
        throw InfeasibleError("meridian length " + num(l1) + " is below the reachable minimum " +
                              num(rc.min_l1) + " for t = " + num(t));
    const double W0 = rc.wf_land + (std::log(l1) - rc.lnf_land);
    // Wider domains get a wider landing band so its curvature features stay
    // resolved by the sampling grid (finite-difference cross-check).
    const double d = std::clamp(124.0 * W0 / (samples - 1), kLandMin, kLandMax);
    if (d > kLandMin * (1.0 + 1e-9)) {
        ProfileRecipe wide = plan_core(t, d);
        const double W1 = wide.wf_land + (std::log(l1) - wide.lnf_land);
        if (l1 >= wide.min_l1 * (1.0 - 1e-12) && W1 >= wide.wg_land - 1e-9)
            rc = std::move(wide);
    }
    finalize_plan(rc, l1, l2);
    return rc;
}

struct Sample3 {
    double v, vp, vpp;
};

Sample3 band_eval(const std::vector<double>& hs, const std::vector<double>& ls,
                  const ProfileRecipe& rc, double ln0, double x, bool gf) {
    const double dx = rc.d / kBandSteps;
    int k = std::min(static_cast<int>(x / dx), kBandSteps - 1);
    if (k < 0) k = 0;
    const double x0 = k * dx, x1 = (k + 1) * dx;
    const double h0 = hs[k], h1 = hs[k + 1];
    const double q0 = gf ? q_f(rc, x0) : q_g(rc, x0);
    const double q1 = gf ? q_f(rc, x1) : q_g(rc, x1);
    const double u = (x - x0) / dx;
    const double h = hermite(h0, q0 - h0 * h0, h1, q1 - h1 * h1, dx, u);
    const double ln = hermite(ls[k], h0, ls[k + 1], h1, dx, u);
    const double q = gf ? q_f(rc, x) : q_g(rc, x);
    const double v = std::exp(ln0 + ln);
    return {v, h * v, q * v};
}

Sample3 eval_f(const ProfileRecipe& rc, double w) {
    if (w < rc.wf_trig) {
        const double v = (kTwoPi / rc.a) * std::sinh(rc.a * w);
        return {v, kTwoPi * std::cosh(rc.a * w), (1.0 - rc.t) * v};
    }
    if (w < rc.wf_land)
        return band_eval(rc.fh, rc.fln, rc, rc.lnf_trig, w - rc.wf_trig, true);
    const double v = std::exp(rc.lnf_land + (w - rc.wf_land));
    return {v, v, v};
}

Sample3 eval_g(const ProfileRecipe& rc, double w) {
    if (w < rc.wg_trig) {
        const double v = std::cosh(rc.s * w);
        return {rc.g_scale * v, rc.g_scale * rc.s * std::sinh(rc.s * w),
                rc.g_scale * (1.0 + rc.t) * v};
    }
    if (w < rc.wg_land) {
        Sample3 b = band_eval(rc.gh, rc.gln, rc, rc.lng_trig, w - rc.wg_trig, false);
        return {rc.g_scale * b.v, rc.g_scale * b.vp, rc.g_scale * b.vpp};
    }
    const double v = rc.g_scale * std::exp(rc.lng_land + (w - rc.wg_land));
    return {v, v, v};
}

MetricProfile sample_profile(std::shared_ptr<const ProfileRecipe> rc, int samples) {
    MetricProfile prof;
    prof.l1 = rc->l1;
    prof.l2 = rc->l2;
    prof.t = rc->t;
    prof.r0 = -rc->W;
    prof.cone_core = true;
    const int n = samples;
    prof.r.resize(n);
    prof.f.resize(n);
    prof.g.resize(n);
    prof.fp.resize(n);
    prof.gp.resize(n);
    prof.fpp.resize(n);
    prof.gpp.resize(n);
    for (int i = 0; i < n; ++i) {
        const double w = rc->W * i / (n - 1);
        prof.r[i] = w - rc->W;
        const Sample3 sf = eval_f(*rc, w);
        const Sample3 sg = eval_g(*rc, w);
        prof.f[i] = sf.v;
        prof.fp[i] = sf.vp;
        prof.fpp[i] = sf.vpp;
        prof.g[i] = sg.v;
        prof.gp[i] = sg.vp;
        prof.gpp[i] = sg.vpp;
    }
    prof.r[n - 1] = 0.0;
    if (std::abs(prof.f.back() - rc->l1) > 1e-8 * rc->l1)
        throw NumericalError("constructed meridian length " + num(prof.f.back()) +
                             " misses target " + num(rc->l1));
    if (std::abs(prof.g.back() - rc->l2) > 1e-8 * rc->l2)
        throw NumericalError("constructed longitude length misses target");
    prof.recipe = std::move(rc);
    return prof;
}

void check_arrays(const MetricProfile& prof, std::size_t min_n) {
    const std::size_t n = prof.r.size();
    if (n < min_n)
        throw InvalidInputError("profile needs at least " + std::to_string(min_n) + " samples");
    if (prof.f.size() != n || prof.g.size() != n || prof.fp.size() != n ||
        prof.gp.size() != n || prof.fpp.size() != n || prof.gpp.size() != n)
        throw InvalidInputError("profile arrays have mismatched lengths");
    for (std::size_t i = 1; i < n; ++i)
        if (!(prof.r[i] > prof.r[i - 1]))
            throw InvalidInputError("profile grid must be strictly increasing");
}

// Finite-difference weights on 5 arbitrary nodes about x0, derivative orders
// 0..2 (Fornberg's recurrence). Exact for quartics, handles nonuniform grids.
void fd_weights5(const std::array<double, 5>& x, double x0,
                 std::array<std::array<double, 3>, 5>& c) {
    for (auto& row : c) row = {0.0, 0.0, 0.0};
    c[0][0] = 1.0;
    double c1 = 1.0;
    double c4 = x[0] - x0;
    for (int i = 1; i < 5; ++i) {
        const int mn = std::min(i, 2);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
}

// Derivative agreement is measured against the local warp scale: curvature
// ratios like f''/f would divide flat eps-level FD noise by f -> 0 at the
// cone and report spurious disagreement.
double rel_gap(double got, double want, double scale) {
    return std::abs(got - want) / scale;
}

// Composite Simpson on consecutive node triples, exact for quadratics on
// nonuniform spacing; lone trailing interval falls back to the trapezoid.
double integrate(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double total = 0.0;
    std::size_t i = 0;
    while (i + 2 < n) {
        const double h0 = x[i + 1] - x[i], h1 = x[i + 2] - x[i + 1];
        const double hs = h0 + h1;
        total += hs / 6.0 *
                 ((2.0 - h1 / h0) * y[i] + hs * hs / (h0 * h1) * y[i + 1] +
                  (2.0 - h0 / h1) * y[i + 2]);
        i += 2;
    }
    if (i + 1 < n) total += 0.5 * (x[i + 1] - x[i]) * (y[i] + y[i + 1]);
    return total;
}

void validate_t(double t) {
    if (!std::isfinite(t) || t < kTLow || t > kTHigh)
        throw InvalidInputError("curvature driver t must lie in [1e-06, 1 - 1e-06], got " + num(t));
}

} // namespace

MetricProfile build_profile(double l1, double l2, double t, BuildOptions opts) {
    if (!std::isfinite(l1) || l1 <= kTwoPi)
        throw InvalidInputError("meridian length l1 must exceed 2*pi, got " + num(l1));
    if (l1 > kLenMax) throw InvalidInputError("meridian length l1 exceeds supported magnitude");
    if (!std::isfinite(l2) || l2 <= 0.0 || l2 > kLenMax)
        throw InvalidInputError("longitude length l2 must lie in (0, 1e9], got " + num(l2));
    validate_t(t);
    if (opts.samples < 5 || opts.samples > kMaxSamples)
        throw InvalidInputError("samples must lie in [5, " + std::to_string(kMaxSamples) + "]");
    auto rc = std::make_shared<ProfileRecipe>(plan_profile(l1, l2, t, opts.samples));
    return sample_profile(std::move(rc), opts.samples);
}

double minimum_l1_for_t(double t) {
    validate_t(t);
    return plan_core(t, kLandMin).min_l1;
}

CurvatureReport curvature_report(const MetricProfile& prof) {
    check_arrays(prof, 5);
    const int n = static_cast<int>(prof.r.size());
    CurvatureReport rep;
    const int start = prof.cone_core ? 2 : 0;
    rep.excluded_core_samples = start;
    rep.k_inf = std::numeric_limits<double>::infinity();
    rep.k_sup = -std::numeric_limits<double>::infinity();
    double worst = 0.0, worst_r = prof.r[start];
    for (int i = start; i < n; ++i) {
        const double f = prof.f[i], g = prof.g[i];
        if (!(f > 0.0) || !(g > 0.0))
            throw InvalidInputError("warp factors must be positive at reported samples (r = " +
                                    num(prof.r[i]) + ")");
        const double k12 = -prof.fpp[i] / f;
        const double k13 = -prof.gpp[i] / g;
        const double k23 = -(prof.fp[i] * prof.gp[i]) / (f * g);
        const int j0 = std::clamp(i - 2, 0, n - 5);
        std::array<double, 5> xs;
        for (int k = 0; k < 5; ++k) xs[k] = prof.r[j0 + k] - prof.r[i];
        std::array<std::array<double, 3>, 5> wt;
        fd_weights5(xs, 0.0, wt);
        double fd_fp = 0.0, fd_fpp = 0.0, fd_gp = 0.0, fd_gpp = 0.0;
        for (int k = 0; k < 5; ++k) {
            fd_fp += wt[k][1] * prof.f[j0 + k];
            fd_fpp += wt[k][2] * prof.f[j0 + k];
            fd_gp += wt[k][1] * prof.g[j0 + k];
            fd_gpp += wt[k][2] * prof.g[j0 + k];
        }
        const double sf = std::max({1.0, f, std::abs(prof.fp[i]), std::abs(prof.fpp[i])});
        const double sg = std::max({1.0, g, std::abs(prof.gp[i]), std::abs(prof.gpp[i])});
        const double gap = std::max({rel_gap(fd_fp, prof.fp[i], sf), rel_gap(fd_fpp, prof.fpp[i], sf),
                                     rel_gap(fd_gp, prof.gp[i], sg), rel_gap(fd_gpp, prof.gpp[i], sg)});
        if (gap > worst) {
            worst = gap;
            worst_r = prof.r[i];
        }
        rep.r.push_back(prof.r[i]);
        rep.k12.push_back(k12);
        rep.k13.push_back(k13);
        rep.k23.push_back(k23);
        rep.k_inf = std::min({rep.k_inf, k12, k13, k23});
        rep.k_sup = std::max({rep.k_sup, k12, k13, k23});
    }
    rep.max_fd_mismatch = worst;
    if (worst > kFdTol)
        throw NumericalError("stored derivatives disagree with finite differences by " + num(worst) +
                             " near r = " + num(worst_r) +
                             " (grid too coarse or too fine for reliable finite differences)");
    return rep;
}

double profile_volume(const MetricProfile& prof) {
    check_arrays(prof, 2);
    std::vector<double> y(prof.r.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = prof.f[i] * prof.g[i];
    return integrate(prof.r, y);
}

double volume_ratio(const MetricProfile& prof) {
    check_arrays(prof, 2);
    const double fb = prof.f.back(), gb = prof.g.back();
    if (!(fb > 0.0) || !(gb > 0.0))
        throw InvalidInputError("boundary warp factors must be positive");
    return 2.0 * profile_volume(prof) / (fb * gb);
}

MetricProfile attach_collar(const MetricProfile& prof, double c) {
    if (!std::isfinite(c) || c <= 0.0) throw InvalidInputError("collar length must be positive");
    if (c > 300.0) throw InvalidInputError("collar length too large, got " + num(c));
    check_arrays(prof, 2);
    const double hf = prof.fp.back() / prof.f.back();
    const double hg = prof.gp.back() / prof.g.back();
    const double tol = ode_tol();
    if (std::abs(hf - 1.0) > tol)
        throw PreconditionError("profile does not end hyperbolically: f'/f = " + num(hf));
    if (std::abs(hg - 1.0) > tol)
        throw PreconditionError("profile does not end hyperbolically: g'/g = " + num(hg));

    const std::size_t n = prof.r.size();
    const double dx_old = (prof.r.back() - prof.r.front()) / static_cast<double>(n - 1);
    MetricProfile out;
    out.t = prof.t;
    out.r0 = prof.r0;
    out.cone_core = prof.cone_core;
    if (prof.recipe) {
        // Rebuild on a fresh uniform grid spanning the widened domain; the
        // recipe's exponential stage covers w beyond the original width.
        const auto& rc = *prof.recipe;
        const double span = (prof.r.back() + rc.W) + c;
        int m = static_cast<int>(std::llround(span / dx_old)) + 1;
        m = std::clamp(m, 5, kMaxSamples);
        out.recipe = prof.recipe;
        out.r.resize(m);
        out.f.resize(m);
        out.g.resize(m);
        out.fp.resize(m);
        out.gp.resize(m);
        out.fpp.resize(m);
        out.gpp.resize(m);
        for (int i = 0; i < m; ++i) {
            const double w = span * i / (m - 1);
            out.r[i] = w - rc.W;
            const Sample3 sf = eval_f(rc, w);
            const Sample3 sg = eval_g(rc, w);
            out.f[i] = sf.v;
            out.fp[i] = sf.vp;
            out.fpp[i] = sf.vpp;
            out.g[i] = sg.v;
            out.gp[i] = sg.vp;
            out.gpp[i] = sg.vpp;
        }
    } else {
        out = prof;
        const int m = std::max(1, static_cast<int>(std::ceil(c / dx_old - 1e-9)));
        const double r_end = prof.r.back();
        const double f0 = prof.f.back(), g0 = prof.g.back();
        for (int k = 1; k <= m; ++k) {
            const double dr = c * k / m;
            const double e = std::exp(dr);
            out.r.push_back(r_end + dr);
            out.f.push_back(f0 * e);
            out.fp.push_back(f0 * e);
            out.fpp.push_back(f0 * e);
            out.g.push_back(g0 * e);
            out.gp.push_back(g0 * e);
            out.gpp.push_back(g0 * e);
        }
    }
    out.l1 = out.f.back();
    out.l2 = out.g.back();
    return out;
}

PinchCertificate pinch_certificate(const MetricProfile& prof) {
    const CurvatureReport rep = curvature_report(prof);
    PinchCertificate cert;
    cert.k_inf = rep.k_inf;
    cert.k_sup = rep.k_sup;
    if (!(rep.k_sup < 0.0))
        throw InfeasibleError("no pinch certificate: sectional curvature reaches " +
                              num(rep.k_sup) + " >= 0");
    cert.ratio = volume_ratio(prof);
    cert.a = std::min({-rep.k_sup, -1.0 / rep.k_inf, cert.ratio});
    cert.measured_pinching = std::max({-1.0 - rep.k_inf, 1.0 + rep.k_sup, 0.0});
    cert.valid = cert.a > 0.0 && cert.a < 1.0;
    return cert;
}

AlphaEstimate alpha_estimate(double l1, AlphaOptions opts) {
    if (!std::isfinite(l1) || l1 <= kTwoPi)
        throw InvalidInputError("meridian length l1 must exceed 2*pi, got " + num(l1));
    if (l1 > kLenMax) throw InvalidInputError("meridian length l1 exceeds supported magnitude");
    if (!std::isfinite(opts.t_max)) throw InvalidInputError("t_max must be finite");
    if (opts.feasibility_iters < 1 || opts.feasibility_iters > 200 ||
        opts.search_iters < 1 || opts.search_iters > 500)
        throw InvalidInputError("iteration counts out of range");
    const double t_hi = std::clamp(opts.t_max, kTLow, kTHigh);
    if (minimum_l1_for_t(t_hi) > l1)
        throw InfeasibleError("meridian length " + num(l1) +
                              " is unreachable for every t <= " + num(t_hi) +
                              " (needs at least " + num(minimum_l1_for_t(t_hi)) + ")");
    // min_l1 falls as t grows, so feasibility is an upward-closed interval.
    double t_min = kTLow;
    if (minimum_l1_for_t(kTLow) > l1) {
        double lo = kTLow, hi = t_hi;
        for (int i = 0; i < opts.feasibility_iters; ++i) {
            const double mid = 0.5 * (lo + hi);
            (minimum_l1_for_t(mid) > l1 ? lo : hi) = mid;
        }
        t_min = hi;
    }

    AlphaEstimate best;
    best.l1 = l1;
    best.t_min = t_min;
    best.a = -1.0;
    auto value = [&](double t) {
        try {
            const MetricProfile prof = build_profile(l1, 1.0, t, opts.build);
            const PinchCertificate cert = pinch_certificate(prof);
            if (cert.valid && cert.a > best.a) {
                best.t_star = t;
                best.a = cert.a;
                best.k_inf = cert.k_inf;
                best.k_sup = cert.k_sup;
                best.ratio = cert.ratio;
                best.feasible = true;
            }
            return cert.valid ? cert.a : -1.0;
        } catch (const InfeasibleError&) {
            return -1.0;
        }
    };
    double lo = t_min, hi = t_hi;
    value(lo);
    value(hi);
    const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = value(x1);
    double f2 = value(x2);
    for (int i = 0; i < opts.search_iters; ++i) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = value(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = value(x2);
        }
    }
    if (!best.feasible)
        throw InfeasibleError("no valid pinch certificate found for meridian length " + num(l1));
    return best;
}

std::vector<AlphaEstimate> alpha_curve(const std::vector<double>& l1_grid, AlphaOptions opts) {
    std::vector<AlphaEstimate> rows;
    rows.reserve(l1_grid.size());
    for (double l1 : l1_grid) {
        if (!std::isfinite(l1)) throw InvalidInputError("meridian grid contains a non-finite value");
        AlphaEstimate row;
        row.l1 = l1;
        row.feasible = false;
        if (l1 > kTwoPi && l1 <= kLenMax) {
            try {
                row = alpha_estimate(l1, opts);
            } catch (const InfeasibleError&) {
                row = AlphaEstimate{};
                row.l1 = l1;
                row.feasible = false;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace cuspgauge
