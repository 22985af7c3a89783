#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cuspgauge/bounds.hpp"
#include "cuspgauge/catalog.hpp"
#include "cuspgauge/errors.hpp"
#include "cuspgauge/filling.hpp"
#include "cuspgauge/lattice.hpp"
#include "cuspgauge/report.hpp"
#include "cuspgauge/surface.hpp"
#include "cuspgauge/torus_metric.hpp"

#include <utility>

namespace py = pybind11;
using namespace cuspgauge;

namespace {

using Pair = std::pair<double, double>;

Vec2 to_vec(Pair p) { return {p.first, p.second}; }
Pair from_vec(Vec2 v) { return {v.x, v.y}; }

CuspLattice make_lattice(Pair v1, Pair v2, bool claimed_maximal) {
    CuspLattice lat{to_vec(v1), to_vec(v2), claimed_maximal};
    validate_lattice(lat);
    return lat;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cusp lattice certification, negatively curved fillings, and "
              "warped torus metrics";
    m.attr("__version__") = kToolVersion;

    // Exception translators run newest-first, so register bases before
    // derived classes.
    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    auto invalid = py::register_exception<InvalidInputError>(m, "InvalidInputError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", invalid.ptr());
    py::register_exception<InfeasibleError>(m, "InfeasibleError", base.ptr());
    py::register_exception<NumericalError>(m, "NumericalError", base.ptr());

    py::class_<Slope>(m, "Slope")
        .def(py::init([](long long p, long long q) { return normalize_slope(p, q); }),
             py::arg("p"), py::arg("q"))
        .def_readonly("p", &Slope::p)
        .def_readonly("q", &Slope::q)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__hash__", [](Slope s) { return py::hash(py::make_tuple(s.p, s.q)); })
        .def("__repr__", [](Slope s) {
            return "Slope(" + std::to_string(s.p) + ", " + std::to_string(s.q) + ")";
        });

    py::class_<CuspLattice>(m, "CuspLattice")
        .def(py::init(&make_lattice), py::arg("v1"), py::arg("v2"),
             py::arg("claimed_maximal") = false)
        .def_property_readonly("v1", [](const CuspLattice& lat) { return from_vec(lat.v1); })
        .def_property_readonly("v2", [](const CuspLattice& lat) { return from_vec(lat.v2); })
        .def_readwrite("claimed_maximal", &CuspLattice::claimed_maximal);

    py::class_<SlopeMeasurement>(m, "SlopeMeasurement")
        .def_readonly("slope", &SlopeMeasurement::slope)
        .def_readonly("length", &SlopeMeasurement::length)
        .def("__repr__", [](const SlopeMeasurement& sm) {
            return "SlopeMeasurement(Slope(" + std::to_string(sm.slope.p) + ", " +
                   std::to_string(sm.slope.q) + "), " + format_double(sm.length) + ")";
        });

    m.def("normalize_slope", &normalize_slope, py::arg("p"), py::arg("q"));
    m.def("slope_length", &slope_length, py::arg("lattice"), py::arg("slope"));
    m.def("intersection_number", &intersection_number, py::arg("a"), py::arg("b"));
    m.def("lattice_area", &lattice_area, py::arg("lattice"));

    py::class_<AdmissibilityReport>(m, "AdmissibilityReport")
        .def_readonly("shortest", &AdmissibilityReport::shortest)
        .def_readonly("area", &AdmissibilityReport::area)
        .def_readonly("bound", &AdmissibilityReport::bound)
        .def_readonly("shortest_ok", &AdmissibilityReport::shortest_ok)
        .def_readonly("area_ok", &AdmissibilityReport::area_ok)
        .def_readonly("admissible", &AdmissibilityReport::admissible);
    m.def("check_admissibility", &check_admissibility, py::arg("lattice"), py::arg("bound"));

    m.def("enumerate_slopes", &enumerate_slopes, py::arg("lattice"), py::arg("max_length"));
    m.def("minimal_slope", &minimal_slope, py::arg("lattice"));

    py::class_<ParallelogramReport>(m, "ParallelogramReport")
        .def_readonly("delta", &ParallelogramReport::delta)
        .def_readonly("spanned_area", &ParallelogramReport::spanned_area)
        .def_readonly("fundamental_area", &ParallelogramReport::fundamental_area)
        .def_readonly("consistent", &ParallelogramReport::consistent);
    m.def("parallelogram_identity_check", &parallelogram_identity_check, py::arg("lattice"),
          py::arg("s1"), py::arg("s2"));

    py::class_<LengthProductReport>(m, "LengthProductReport")
        .def_readonly("l1", &LengthProductReport::l1)
        .def_readonly("l2", &LengthProductReport::l2)
        .def_readonly("delta", &LengthProductReport::delta)
        .def_readonly("product", &LengthProductReport::product)
        .def_readonly("bound", &LengthProductReport::bound)
        .def_readonly("holds", &LengthProductReport::holds)
        .def_readonly("maximal_form_checked", &LengthProductReport::maximal_form_checked)
        .def_readonly("maximal_bound", &LengthProductReport::maximal_bound)
        .def_readonly("maximal_form_holds", &LengthProductReport::maximal_form_holds);
    m.def("verify_length_product", &verify_length_product, py::arg("lattice"), py::arg("s1"),
          py::arg("s2"), py::arg("bound"));

    py::class_<SlopeClass>(m, "SlopeClass")
        .def_readonly("measured", &SlopeClass::measured)
        .def_readonly("minimal_length", &SlopeClass::minimal_length)
        .def_readonly("is_short", &SlopeClass::is_short)
        .def_readonly("is_minimal", &SlopeClass::is_minimal);
    m.def("classify_slope", &classify_slope, py::arg("lattice"), py::arg("slope"));

    py::class_<Certificate::Entry>(m, "CertificateEntry")
        .def_readonly("cusp_id", &Certificate::Entry::cusp_id)
        .def_readonly("measured", &Certificate::Entry::measured)
        .def_readonly("passes", &Certificate::Entry::passes);
    py::class_<Certificate>(m, "Certificate")
        .def_readonly("entries", &Certificate::entries)
        .def_readonly("threshold", &Certificate::threshold)
        .def_readonly("min_length", &Certificate::min_length)
        .def_readonly("certified", &Certificate::certified);
    m.def(
        "certify_two_pi",
        [](const std::vector<std::tuple<std::string, CuspLattice, Slope>>& cusps,
           double epsilon) {
            FillingSpec spec;
            spec.epsilon = epsilon;
            for (const auto& [id, lat, s] : cusps) spec.cusps.push_back({id, lat, s});
            return certify_two_pi(spec);
        },
        py::arg("cusps"), py::arg("epsilon") = 0.0,
        "cusps: list of (cusp_id, lattice, slope) triples");

    py::class_<CensusResult>(m, "CensusResult")
        .def_readonly("slopes", &CensusResult::slopes)
        .def_readonly("within_excluded_bound", &CensusResult::within_excluded_bound);
    m.def("short_slope_census", &short_slope_census, py::arg("lattice"));

    py::enum_<ReferenceKind>(m, "ReferenceKind")
        .value("SHORT", ReferenceKind::Short)
        .value("MINIMAL", ReferenceKind::Minimal);
    m.def("lower_bound_from_reference", &lower_bound_from_reference, py::arg("delta"),
          py::arg("kind"));

    py::class_<DistanceAudit>(m, "DistanceAudit")
        .def_readonly("reference", &DistanceAudit::reference)
        .def_readonly("filled", &DistanceAudit::filled)
        .def_readonly("delta", &DistanceAudit::delta)
        .def_readonly("short_criterion", &DistanceAudit::short_criterion)
        .def_readonly("minimal_criterion", &DistanceAudit::minimal_criterion)
        .def_readonly("criterion_holds", &DistanceAudit::criterion_holds)
        .def_readonly("implied_bound", &DistanceAudit::implied_bound)
        .def_readonly("bound_consistent", &DistanceAudit::bound_consistent);
    m.def("distance_criterion_audit", &distance_criterion_audit, py::arg("lattice"),
          py::arg("slope"), py::arg("reference"));

    py::class_<FractionCheck>(m, "FractionCheck")
        .def_readonly("slope", &FractionCheck::slope)
        .def_readonly("delta_meridian", &FractionCheck::delta_meridian)
        .def_readonly("satisfied", &FractionCheck::satisfied)
        .def_readonly("implied_length_bound", &FractionCheck::implied_length_bound);
    m.def("surgery_fraction_check", &surgery_fraction_check, py::arg("p"), py::arg("q"));

    py::class_<CoverCertificate>(m, "CoverCertificate")
        .def_readonly("lifted_lengths", &CoverCertificate::lifted_lengths)
        .def_readonly("min_lifted_length", &CoverCertificate::min_lifted_length)
        .def_readonly("certified", &CoverCertificate::certified)
        .def_readonly("cover_volume", &CoverCertificate::cover_volume)
        .def_readonly("base_volume_ok", &CoverCertificate::base_volume_ok);
    m.def(
        "certify_branched_cover",
        [](long long degree, const std::vector<std::pair<long long, double>>& lifts,
           std::optional<double> base_volume) {
            BranchedCoverSpec spec;
            spec.degree = degree;
            for (const auto& [index, length] : lifts) spec.lifts.push_back({index, length});
            spec.base_volume = base_volume;
            return certify_branched_cover(spec);
        },
        py::arg("degree"), py::arg("lifts"), py::arg("base_volume") = py::none(),
        "lifts: list of (branching_index, base_meridian_length) pairs");

    py::class_<MetricProfile>(m, "MetricProfile")
        .def_readonly("r", &MetricProfile::r)
        .def_readonly("f", &MetricProfile::f)
        .def_readonly("g", &MetricProfile::g)
        .def_readonly("fp", &MetricProfile::fp)
        .def_readonly("gp", &MetricProfile::gp)
        .def_readonly("fpp", &MetricProfile::fpp)
        .def_readonly("gpp", &MetricProfile::gpp)
        .def_readonly("l1", &MetricProfile::l1)
        .def_readonly("l2", &MetricProfile::l2)
        .def_readonly("t", &MetricProfile::t)
        .def_readonly("r0", &MetricProfile::r0)
        .def_readonly("cone_core", &MetricProfile::cone_core);
    m.def(
        "build_profile",
        [](double l1, double l2, double t, int samples) {
            return build_profile(l1, l2, t, BuildOptions{samples});
        },
        py::arg("l1"), py::arg("l2"), py::arg("t"), py::arg("samples") = 10001);
    m.def("minimum_l1_for_t", &minimum_l1_for_t, py::arg("t"));

    py::class_<CurvatureReport>(m, "CurvatureReport")
        .def_readonly("r", &CurvatureReport::r)
        .def_readonly("k12", &CurvatureReport::k12)
        .def_readonly("k13", &CurvatureReport::k13)
        .def_readonly("k23", &CurvatureReport::k23)
        .def_readonly("k_inf", &CurvatureReport::k_inf)
        .def_readonly("k_sup", &CurvatureReport::k_sup)
        .def_readonly("excluded_core_samples", &CurvatureReport::excluded_core_samples)
        .def_readonly("max_fd_mismatch", &CurvatureReport::max_fd_mismatch);
    m.def("curvature_report", &curvature_report, py::arg("profile"));

    m.def("volume_ratio", &volume_ratio, py::arg("profile"));
    m.def("profile_volume", &profile_volume, py::arg("profile"));
    m.def("attach_collar", &attach_collar, py::arg("profile"), py::arg("depth"));

    py::class_<PinchCertificate>(m, "PinchCertificate")
        .def_readonly("a", &PinchCertificate::a)
        .def_readonly("k_inf", &PinchCertificate::k_inf)
        .def_readonly("k_sup", &PinchCertificate::k_sup)
        .def_readonly("ratio", &PinchCertificate::ratio)
        .def_readonly("measured_pinching", &PinchCertificate::measured_pinching)
        .def_readonly("valid", &PinchCertificate::valid);
    m.def("pinch_certificate", &pinch_certificate, py::arg("profile"));

    py::class_<AlphaEstimate>(m, "AlphaEstimate")
        .def_readonly("l1", &AlphaEstimate::l1)
        .def_readonly("t_min", &AlphaEstimate::t_min)
        .def_readonly("t_star", &AlphaEstimate::t_star)
        .def_readonly("a", &AlphaEstimate::a)
        .def_readonly("k_inf", &AlphaEstimate::k_inf)
        .def_readonly("k_sup", &AlphaEstimate::k_sup)
        .def_readonly("ratio", &AlphaEstimate::ratio)
        .def_readonly("feasible", &AlphaEstimate::feasible);
    m.def(
        "alpha_estimate",
        [](double l1, double t_max, int samples) {
            AlphaOptions opts;
            opts.t_max = t_max;
            opts.build.samples = samples;
            return alpha_estimate(l1, opts);
        },
        py::arg("l1"), py::arg("t_max") = 0.99, py::arg("samples") = 10001);
    m.def(
        "alpha_curve",
        [](const std::vector<double>& l1_grid, double t_max, int samples) {
            AlphaOptions opts;
            opts.t_max = t_max;
            opts.build.samples = samples;
            return alpha_curve(l1_grid, opts);
        },
        py::arg("l1_grid"), py::arg("t_max") = 0.99, py::arg("samples") = 10001);

    m.def("lobachevsky", &lobachevsky, py::arg("theta"));
    m.def("ideal_simplex_volume", &ideal_simplex_volume);
    m.def("beta_from_alpha", &beta_from_alpha, py::arg("alpha"));
    m.def("cusp_volume", &cusp_volume, py::arg("lattice"));
    m.def("hyperbolic_norm", &hyperbolic_norm, py::arg("volume"));
    m.def("norm_volume_lower_bound", &norm_volume_lower_bound, py::arg("volume"),
          py::arg("kappa_sup"));
    m.def("curvature_scaling", &curvature_scaling, py::arg("kappa_sup"), py::arg("scale"));
    m.def(
        "validate_hyperbolic_datum",
        [](double volume, std::optional<double> gromov_norm) {
            validate_hyperbolic_datum({volume, gromov_norm});
        },
        py::arg("volume"), py::arg("gromov_norm") = py::none());

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("alpha", &BoundReport::alpha)
        .def_readonly("alpha_source", &BoundReport::alpha_source)
        .def_readonly("volume_lower_bound", &BoundReport::volume_lower_bound)
        .def_readonly("kappa_lo", &BoundReport::kappa_lo)
        .def_readonly("kappa_hi", &BoundReport::kappa_hi);
    m.def("propagate_filling_bounds", &propagate_filling_bounds, py::arg("volume"),
          py::arg("meridian_length") = 0.0, py::arg("alpha") = py::none());

    py::class_<GromovInterval>(m, "GromovInterval")
        .def_readonly("lo", &GromovInterval::lo)
        .def_readonly("hi", &GromovInterval::hi)
        .def_readonly("beta", &GromovInterval::beta)
        .def_readonly("alpha", &GromovInterval::alpha)
        .def_readonly("degenerate", &GromovInterval::degenerate);
    m.def("gromov_interval", &gromov_interval, py::arg("norm"),
          py::arg("meridian_length") = 0.0, py::arg("alpha") = py::none());

    py::class_<SurfaceData>(m, "SurfaceData")
        .def(py::init([](int genus, int boundary_count, bool orientable) {
                 return SurfaceData{genus, boundary_count, orientable};
             }),
             py::arg("genus"), py::arg("boundary_count"), py::arg("orientable") = true)
        .def_readwrite("genus", &SurfaceData::genus)
        .def_readwrite("boundary_count", &SurfaceData::boundary_count)
        .def_readwrite("orientable", &SurfaceData::orientable);
    m.def("euler_characteristic", &euler_characteristic, py::arg("surface"));
    m.def("gauss_bonnet_area", &gauss_bonnet_area, py::arg("euler"));

    py::class_<SurfaceAudit>(m, "SurfaceAudit")
        .def_readonly("euler", &SurfaceAudit::euler)
        .def_readonly("area", &SurfaceAudit::area)
        .def_readonly("lhs", &SurfaceAudit::lhs)
        .def_readonly("consistent", &SurfaceAudit::consistent)
        .def_readonly("max_admissible_length", &SurfaceAudit::max_admissible_length);
    m.def("surface_length_audit", &surface_length_audit, py::arg("slope_length"),
          py::arg("intersection_curves"), py::arg("surface"));

    py::class_<GenusSlopeBound>(m, "GenusSlopeBound")
        .def_readonly("genus", &GenusSlopeBound::genus)
        .def_readonly("max_q", &GenusSlopeBound::max_q)
        .def_readonly("length_bound", &GenusSlopeBound::length_bound)
        .def_readonly("q", &GenusSlopeBound::q)
        .def_readonly("min_genus", &GenusSlopeBound::min_genus);
    m.def("max_q_for_genus", &max_q_for_genus, py::arg("genus"));
    m.def("min_genus_for_q", &min_genus_for_q, py::arg("q"));

    py::class_<CatalogRecord>(m, "CatalogRecord")
        .def_readonly("name", &CatalogRecord::name)
        .def_readonly("cusps", &CatalogRecord::cusps)
        .def_readonly("volume", &CatalogRecord::volume)
        .def_readonly("gromov_norm", &CatalogRecord::gromov_norm);
    py::class_<CatalogLoadResult>(m, "CatalogLoadResult")
        .def_readonly("records", &CatalogLoadResult::records)
        .def_readonly("diagnostics", &CatalogLoadResult::diagnostics);
    m.def("load_catalog", &load_catalog, py::arg("path"), py::arg("strict") = false);
    m.def("parse_catalog", &parse_catalog, py::arg("json_text"), py::arg("strict") = false);
    m.def(
        "find_record",
        [](const CatalogLoadResult& loaded, const std::string& name) {
            return find_record(loaded, name);
        },
        py::arg("catalog"), py::arg("name"));
}
