#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cuspgauge/errors.hpp"
#include "cuspgauge/tolerances.hpp"
#include "cuspgauge/torus_metric.hpp"

#include <cmath>
#include <vector>

using namespace cuspgauge;

namespace {

const double kTwoPi = 6.283185307179586476925286766559;

// Exact hyperbolic annulus f = l1 e^r, g = l2 e^r on [-depth, 0]: every
// sectional curvature is -1. Used as a closed-form oracle for the
// curvature, volume, and collar machinery.
MetricProfile exact_hyperbolic(double l1, double l2, double depth, int n) {
    MetricProfile prof;
    prof.l1 = l1;
    prof.l2 = l2;
    prof.t = 0.0;
    prof.r0 = -depth;
    prof.cone_core = false;
    for (int i = 0; i < n; ++i) {
        const double r = -depth + depth * i / double(n - 1);
        const double e = std::exp(r);
        prof.r.push_back(r);
        prof.f.push_back(l1 * e);
        prof.g.push_back(l2 * e);
        prof.fp.push_back(l1 * e);
        prof.gp.push_back(l2 * e);
        prof.fpp.push_back(l1 * e);
        prof.gpp.push_back(l2 * e);
    }
    return prof;
}

} // namespace

TEST_CASE("input domain errors") {
    // At or below 2*pi no metric of this kind exists for any pinching.
    CHECK_THROWS_AS(build_profile(6.0, 1.0, 0.5, {}), InvalidInputError);
    CHECK_THROWS_AS(build_profile(kTwoPi, 1.0, 0.5, {}), InvalidInputError);
    CHECK_THROWS_AS(build_profile(-1.0, 1.0, 0.5, {}), InvalidInputError);
    CHECK_THROWS_AS(build_profile(15.0, 0.0, 0.5, {}), InvalidInputError);
    CHECK_THROWS_AS(build_profile(15.0, -2.0, 0.5, {}), InvalidInputError);
    CHECK_THROWS_AS(build_profile(15.0, 1.0, 0.0, {}), InvalidInputError);
    CHECK_THROWS_AS(build_profile(15.0, 1.0, 1.0, {}), InvalidInputError);
    CHECK_THROWS_AS(build_profile(15.0, 1.0, -0.5, {}), InvalidInputError);
    BuildOptions few;
    few.samples = 4;
    CHECK_THROWS_AS(build_profile(15.0, 1.0, 0.5, few), InvalidInputError);

    // Above 2*pi but below the reachable minimum for this pinching target.
    CHECK_THROWS_AS(build_profile(7.0, 1.0, 0.2, {}), InfeasibleError);
    CHECK_THROWS_AS(build_profile(6.3, 1.0, 0.99, {}), InfeasibleError);
}

TEST_CASE("reachable minimum meridian length") {
    // Frozen regression values; the floor is 2*pi/sqrt(t) and the
    // construction overhead is about 2 percent.
    CHECK(minimum_l1_for_t(0.25) == doctest::Approx(12.8197292439).epsilon(1e-9));
    CHECK(minimum_l1_for_t(0.1) == doctest::Approx(20.2697044613).epsilon(1e-9));
    CHECK(minimum_l1_for_t(0.99) == doctest::Approx(6.4422617577).epsilon(1e-9));
    for (double t : {0.05, 0.3, 0.7, 0.95}) {
        const double floor = kTwoPi / std::sqrt(t);
        const double m = minimum_l1_for_t(t);
        CHECK(m > floor);
        CHECK(m < floor * 1.021);
    }
    CHECK_THROWS_AS(minimum_l1_for_t(0.0), InvalidInputError);
    CHECK_THROWS_AS(minimum_l1_for_t(1.0), InvalidInputError);
}

TEST_CASE("profile boundary and cone conditions") {
    const MetricProfile prof = build_profile(15.0, 1.0, 0.25, {});
    REQUIRE(prof.r.size() == 10001);
    CHECK(prof.r.back() == 0.0);
    CHECK(prof.r.front() == prof.r0);
    CHECK(prof.f.back() == doctest::Approx(15.0).epsilon(1e-8));
    CHECK(prof.g.back() == doctest::Approx(1.0).epsilon(1e-8));
    // Cone condition: f vanishes at r0 with opening rate exactly 2*pi.
    CHECK(prof.f.front() == 0.0);
    CHECK(prof.fp.front() == doctest::Approx(kTwoPi).epsilon(1e-12));
    CHECK(prof.g.front() > 0.0);
    CHECK(prof.cone_core);
    // f' / f reaches the hyperbolic rate 1 at the boundary exactly.
    CHECK(prof.fp.back() / prof.f.back() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(prof.gp.back() / prof.g.back() == doctest::Approx(1.0).epsilon(1e-9));
    // Strictly increasing radius, monotone f.
    for (std::size_t i = 1; i < prof.r.size(); ++i) {
        CHECK(prof.r[i] > prof.r[i - 1]);
        CHECK(prof.f[i] > prof.f[i - 1]);
    }
}

TEST_CASE("curvature report matches the pinching target") {
    for (auto [l1, t] : std::vector<std::pair<double, double>>{
             {15.0, 0.25}, {15.0, 0.5}, {8.0, 0.9}, {50.0, 0.1}}) {
        const MetricProfile prof = build_profile(l1, 1.0, t, {});
        const CurvatureReport rep = curvature_report(prof);
        CHECK(rep.excluded_core_samples == 2);
        CHECK(rep.r.size() == prof.r.size() - 2);
        CHECK(rep.max_fd_mismatch < 1e-5);
        CHECK(rep.max_fd_mismatch < 1e-6);  // margin, not just the gate
        CHECK(rep.k_inf == doctest::Approx(-1.0 - t).epsilon(1e-9));
        CHECK(rep.k_sup == doctest::Approx(-1.0 + t).epsilon(1e-9));
        for (std::size_t i = 0; i < rep.r.size(); ++i) {
            CHECK(rep.k12[i] < 0.0);
            CHECK(rep.k13[i] < 0.0);
            CHECK(rep.k23[i] < 0.0);
        }
        // Near the cone the meridian curvature is the slow-core value -(1-t).
        CHECK(rep.k12.front() == doctest::Approx(-(1.0 - t)).epsilon(1e-6));
    }
}

TEST_CASE("exact hyperbolic annulus oracle") {
    const MetricProfile prof = exact_hyperbolic(15.0, 2.0, 1.5, 4001);
    const CurvatureReport rep = curvature_report(prof);
    CHECK(rep.excluded_core_samples == 0);
    CHECK(rep.r.size() == prof.r.size());
    for (std::size_t i = 0; i < rep.r.size(); ++i) {
        CHECK(rep.k12[i] == doctest::Approx(-1.0).epsilon(1e-8));
        CHECK(rep.k13[i] == doctest::Approx(-1.0).epsilon(1e-8));
        CHECK(rep.k23[i] == doctest::Approx(-1.0).epsilon(1e-8));
    }
    // Volume of f g dr: l1 l2 (1 - e^(-2 depth)) / 2 in closed form.
    const double want = 15.0 * 2.0 * (1.0 - std::exp(-3.0)) / 2.0;
    CHECK(profile_volume(prof) == doctest::Approx(want).epsilon(1e-9));
    CHECK(volume_ratio(prof) == doctest::Approx(1.0 - std::exp(-3.0)).epsilon(1e-9));
}

TEST_CASE("longitude scale invariance") {
    const MetricProfile base = build_profile(15.0, 1.0, 0.25, {});
    const CurvatureReport base_rep = curvature_report(base);
    const double base_ratio = volume_ratio(base);
    for (double l2 : {0.5, 5.0}) {
        const MetricProfile prof = build_profile(15.0, l2, 0.25, {});
        const CurvatureReport rep = curvature_report(prof);
        REQUIRE(rep.r.size() == base_rep.r.size());
        double worst = 0.0;
        for (std::size_t i = 0; i < rep.r.size(); ++i) {
            worst = std::max(worst, std::abs(rep.k12[i] - base_rep.k12[i]));
            worst = std::max(worst, std::abs(rep.k13[i] - base_rep.k13[i]));
            worst = std::max(worst, std::abs(rep.k23[i] - base_rep.k23[i]));
        }
        CHECK(worst < 1e-9);
        CHECK(volume_ratio(prof) == doctest::Approx(base_ratio).epsilon(1e-9));
        CHECK(prof.g.back() == doctest::Approx(l2).epsilon(1e-8));
    }
}

TEST_CASE("volume and pinch certificate") {
    const MetricProfile prof = build_profile(15.0, 1.0, 0.25, {});
    CHECK(profile_volume(prof) == doctest::Approx(6.945447940458).epsilon(1e-9));
    const PinchCertificate cert = pinch_certificate(prof);
    CHECK(cert.a == doctest::Approx(0.75).epsilon(1e-9));
    CHECK(cert.k_inf == doctest::Approx(-1.25).epsilon(1e-9));
    CHECK(cert.k_sup == doctest::Approx(-0.75).epsilon(1e-9));
    CHECK(cert.ratio == doctest::Approx(0.926059725394).epsilon(1e-9));
    CHECK(cert.measured_pinching == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(cert.valid);
    CHECK(volume_ratio(prof) == doctest::Approx(cert.ratio).epsilon(1e-12));

    // The certificate value is 1 - t whenever the volume ratio allows it.
    const MetricProfile prof2 = build_profile(15.0, 1.0, 0.5, {});
    const PinchCertificate cert2 = pinch_certificate(prof2);
    CHECK(cert2.a == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(cert2.ratio == doctest::Approx(0.939641157104).epsilon(1e-9));
}

TEST_CASE("collar attachment") {
    const MetricProfile prof = build_profile(15.0, 1.0, 0.25, {});
    const double v0 = profile_volume(prof);
    const MetricProfile wide = attach_collar(prof, 0.7);
    // Boundary lengths grow by e^c; volume grows by the closed-form slab.
    CHECK(wide.l1 == doctest::Approx(15.0 * std::exp(0.7)).epsilon(1e-9));
    CHECK(wide.l2 == doctest::Approx(std::exp(0.7)).epsilon(1e-9));
    const double want = v0 + 15.0 * 1.0 * (std::exp(2.0 * 0.7) - 1.0) / 2.0;
    CHECK(profile_volume(wide) == doctest::Approx(want).epsilon(1e-10));
    // Curvature verification still passes across the splice.
    const CurvatureReport rep = curvature_report(wide);
    CHECK(rep.max_fd_mismatch < 1e-5);
    CHECK(rep.k_inf == doctest::Approx(-1.25).epsilon(1e-9));
    // The collar itself sits at curvature -1, inside the pinch window.
    CHECK(rep.k_sup == doctest::Approx(-0.75).epsilon(1e-9));
    // Certificate value does not decrease.
    CHECK(pinch_certificate(wide).a >= pinch_certificate(prof).a - 1e-12);

    // Append path: without the construction recipe the collar is grafted
    // onto the stored grid.
    MetricProfile stripped = build_profile(15.0, 1.0, 0.25, {});
    stripped.recipe.reset();
    const MetricProfile grafted = attach_collar(stripped, 0.7);
    CHECK(profile_volume(grafted) == doctest::Approx(want).epsilon(1e-8));
    CHECK(curvature_report(grafted).max_fd_mismatch < 1e-5);

    // Collar depth domain.
    CHECK_THROWS_AS(attach_collar(prof, 0.0), InvalidInputError);
    CHECK_THROWS_AS(attach_collar(prof, -1.0), InvalidInputError);
    CHECK_THROWS_AS(attach_collar(prof, 301.0), InvalidInputError);

    // Precondition: the profile must already end at the hyperbolic rate.
    MetricProfile bad = exact_hyperbolic(15.0, 1.0, 1.0, 101);
    for (auto& v : bad.fp) v *= 1.1;
    CHECK_THROWS_AS(attach_collar(bad, 0.5), PreconditionError);

    // Collar on the exact annulus: trivially consistent.
    const MetricProfile ann = exact_hyperbolic(15.0, 1.0, 1.0, 2001);
    const MetricProfile ann_wide = attach_collar(ann, 0.5);
    const double ann_want =
        profile_volume(ann) + 15.0 * (std::exp(1.0) - 1.0) / 2.0;
    CHECK(profile_volume(ann_wide) == doctest::Approx(ann_want).epsilon(1e-8));
}

TEST_CASE("grid verification failure paths") {
    BuildOptions coarse;
    coarse.samples = 5;
    const MetricProfile prof = build_profile(15.0, 1.0, 0.25, coarse);
    CHECK_THROWS_AS(curvature_report(prof), NumericalError);
}

TEST_CASE("alpha estimate") {
    const AlphaEstimate e7 = alpha_estimate(7.0, {});
    CHECK(e7.feasible);
    CHECK(e7.a == doctest::Approx(0.161480940412).epsilon(1e-9));
    CHECK(e7.t_star == doctest::Approx(e7.t_min).epsilon(1e-6));
    CHECK(e7.k_inf == doctest::Approx(-1.0 - e7.t_star).epsilon(1e-9));
    CHECK(e7.k_sup == doctest::Approx(-1.0 + e7.t_star).epsilon(1e-9));

    const AlphaEstimate e15 = alpha_estimate(15.0, {});
    CHECK(e15.a == doctest::Approx(0.817394479983).epsilon(1e-9));
    CHECK(e15.a > e7.a);

    CHECK_THROWS_AS(alpha_estimate(6.29, {}), InfeasibleError);
    CHECK_THROWS_AS(alpha_estimate(6.0, {}), InvalidInputError);
}

TEST_CASE("alpha curve") {
    const std::vector<double> grid = {6.0, 8.0};
    const std::vector<AlphaEstimate> rows = alpha_curve(grid, {});
    REQUIRE(rows.size() == 2);
    CHECK_FALSE(rows[0].feasible);  // 6.0 < 2*pi: no profile for any t
    CHECK(rows[1].feasible);
    CHECK(rows[1].a == doctest::Approx(0.358014425288).epsilon(1e-9));
    CHECK(rows[1].l1 == 8.0);

    CHECK_THROWS_AS(alpha_curve({8.0, std::nan("")}, {}), InvalidInputError);
    CHECK(alpha_curve({}, {}).empty());
}

TEST_CASE("deterministic rebuilds") {
    const MetricProfile a = build_profile(10.0, 1.0, 0.6, {});
    const MetricProfile b = build_profile(10.0, 1.0, 0.6, {});
    REQUIRE(a.r.size() == b.r.size());
    for (std::size_t i = 0; i < a.r.size(); ++i) {
        CHECK(a.r[i] == b.r[i]);
        CHECK(a.f[i] == b.f[i]);
        CHECK(a.g[i] == b.g[i]);
        CHECK(a.fpp[i] == b.fpp[i]);
    }
}
