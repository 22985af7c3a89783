#include "CLI11.hpp"

#include "cuspgauge/bounds.hpp"
#include "cuspgauge/catalog.hpp"
#include "cuspgauge/errors.hpp"
#include "cuspgauge/filling.hpp"
#include "cuspgauge/lattice.hpp"
#include "cuspgauge/report.hpp"
#include "cuspgauge/surface.hpp"
#include "cuspgauge/tolerances.hpp"
#include "cuspgauge/torus_metric.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace cuspgauge;

Vec2 parse_vec2(const std::string& text) {
    std::size_t pos = 0;
    Vec2 v;
    try {
        v.x = std::stod(text, &pos);
        if (pos >= text.size() || text[pos] != ',') throw std::invalid_argument("comma");
        v.y = std::stod(text.substr(pos + 1));
    } catch (const std::exception&) {
        throw InvalidInputError("vector must be 'x,y' with real x, y (got '" + text + "')");
    }
    return v;
}

Slope parse_slope(const std::string& text) {
    try {
        std::size_t pos = 0;
        const long long p = std::stoll(text, &pos);
        long long q = 1;
        if (pos < text.size()) {
            if (text[pos] != '/') throw std::invalid_argument("slash");
            std::size_t qpos = 0;
            const std::string rest = text.substr(pos + 1);
            q = std::stoll(rest, &qpos);
            if (qpos != rest.size()) throw std::invalid_argument("trailing");
        }
        return normalize_slope(p, q);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw InvalidInputError("slope must be 'P/Q' or 'P' with integer P, Q (got '" + text + "')");
    }
}

struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    int n = 0;
};

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    try {
        std::size_t a = 0, b = 0;
        g.lo = std::stod(text, &a);
        if (a >= text.size() || text[a] != ':') throw std::invalid_argument("colon");
        const std::string rest = text.substr(a + 1);
        g.hi = std::stod(rest, &b);
        if (b >= rest.size() || rest[b] != ':') throw std::invalid_argument("colon");
        g.n = std::stoi(rest.substr(b + 1));
    } catch (const std::exception&) {
        throw InvalidInputError("grid must be 'lo:hi:n' (got '" + text + "')");
    }
    if (g.n < 1) throw InvalidInputError("grid must contain at least one point");
    if (g.n > 100000) throw InvalidInputError("grid is limited to 100000 points");
    return g;
}

BranchedCoverSpec::Lift parse_lift(const std::string& text) {
    BranchedCoverSpec::Lift lift;
    try {
        std::size_t pos = 0;
        lift.branching_index = std::stoll(text, &pos);
        if (pos >= text.size() || text[pos] != ':') throw std::invalid_argument("colon");
        lift.base_meridian_length = std::stod(text.substr(pos + 1));
    } catch (const std::exception&) {
        throw InvalidInputError("lift must be 'INDEX:MERIDIAN' (got '" + text + "')");
    }
    return lift;
}

JsonValue vec_json(Vec2 v) { return JsonValue::Array{v.x, v.y}; }

JsonValue slope_json(const SlopeMeasurement& m) {
    JsonValue::Object o;
    o["p"] = m.slope.p;
    o["q"] = m.slope.q;
    o["length"] = m.length;
    return o;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInputError("cannot write file '" + path + "'");
    out << text;
    if (!out.flush()) throw InvalidInputError("cannot write file '" + path + "'");
}

// Inline basis or catalog record; every lattice-consuming subcommand takes
// the same flags.
struct LatticeSource {
    std::string v1_text, v2_text;
    bool maximal = false;
    std::string catalog, record;
    int cusp_index = 0;
    bool strict = false;
};

void add_lattice_flags(CLI::App* cmd, LatticeSource& src) {
    auto* v1 = cmd->add_option("--v1", src.v1_text, "first basis vector 'x,y'");
    auto* v2 = cmd->add_option("--v2", src.v2_text, "second basis vector 'x,y'");
    v1->needs(v2);
    v2->needs(v1);
    cmd->add_flag("--maximal", src.maximal, "basis comes from a maximal cusp cross-section");
    auto* cat = cmd->add_option("--catalog", src.catalog, "catalog JSON file");
    auto* rec = cmd->add_option("--record", src.record, "record name inside the catalog");
    cat->needs(rec);
    rec->needs(cat);
    cmd->add_option("--cusp-index", src.cusp_index, "cusp index within the record (default 0)");
    cmd->add_flag("--strict", src.strict, "reject the whole catalog on any invalid record");
    v1->excludes(cat);
}

CatalogRecord resolve_record(const LatticeSource& src, JsonValue::Object& inputs) {
    const CatalogLoadResult loaded = load_catalog(src.catalog, src.strict);
    const CatalogRecord& rec = find_record(loaded, src.record);
    inputs["catalog"] = src.catalog;
    inputs["record"] = src.record;
    if (!loaded.diagnostics.empty()) {
        JsonValue::Array diags;
        for (const auto& d : loaded.diagnostics) diags.push_back(d);
        inputs["catalog_diagnostics"] = diags;
    }
    return rec;
}

CuspLattice resolve_lattice(const LatticeSource& src, JsonValue::Object& inputs) {
    CuspLattice lat;
    if (!src.catalog.empty()) {
        const CatalogRecord rec = resolve_record(src, inputs);
        if (src.cusp_index < 0 || static_cast<std::size_t>(src.cusp_index) >= rec.cusps.size())
            throw InvalidInputError("record '" + rec.name + "' has " +
                                    std::to_string(rec.cusps.size()) + " cusp(s); index " +
                                    std::to_string(src.cusp_index) + " is out of range");
        inputs["cusp_index"] = src.cusp_index;
        lat = rec.cusps[src.cusp_index];
    } else if (!src.v1_text.empty()) {
        lat.v1 = parse_vec2(src.v1_text);
        lat.v2 = parse_vec2(src.v2_text);
        lat.claimed_maximal = src.maximal;
    } else {
        throw InvalidInputError("a lattice is required: --v1/--v2 or --catalog/--record");
    }
    validate_lattice(lat);
    inputs["v1"] = vec_json(lat.v1);
    inputs["v2"] = vec_json(lat.v2);
    inputs["claimed_maximal"] = lat.claimed_maximal;
    return lat;
}

int emit(const ReportEnvelope& env) {
    std::cout << serialize_report(env, active_tolerances());
    return verdict_exit_code(env.verdict);
}

// Shared exception-to-verdict mapping. Numerical failures produce no report:
// the run has no trustworthy results, so the diagnostic goes to stderr.
int run_guarded(const std::string& command, const std::function<void(ReportEnvelope&)>& fill) {
    ReportEnvelope env;
    env.command = command;
    try {
        fill(env);
    } catch (const InfeasibleError& e) {
        env.results.clear();
        env.results["error"] = std::string(e.what());
        env.verdict = Verdict::Infeasible;
    } catch (const InvalidInputError& e) {
        env.results.clear();
        env.results["error"] = std::string(e.what());
        env.verdict = Verdict::InvalidInput;
    } catch (const NumericalError& e) {
        std::cerr << "numerical-error: " << e.what() << "\n";
        return 3;
    }
    return emit(env);
}

JsonValue slope_list_json(const std::vector<SlopeMeasurement>& slopes) {
    JsonValue::Array rows;
    for (const auto& m : slopes) rows.push_back(slope_json(m));
    return rows;
}

std::string slope_csv(const std::vector<SlopeMeasurement>& slopes) {
    std::string text = csv_row({"p", "q", "length"});
    for (const auto& m : slopes)
        text += csv_row({std::to_string(m.slope.p), std::to_string(m.slope.q),
                         format_double(m.length)});
    return text;
}

} // namespace

int main(int argc, char** argv) {
    using namespace cuspgauge;

    try {
        active_tolerances() = Tolerances::from_env();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"cusp cross-section geometry: slope lengths, filling certificates, "
                 "pinched metric profiles, and volume/norm bounds"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    int rc = 0;

    // cusp: lattice geometry.
    auto* cusp = app.add_subcommand("cusp", "cusp cross-section lattice geometry");
    cusp->require_subcommand(1);

    {
        auto* cmd = cusp->add_subcommand("analyze", "lengths, area, minimal slope, admissibility");
        auto src = std::make_shared<LatticeSource>();
        auto bound = std::make_shared<double>(1.0);
        add_lattice_flags(cmd, *src);
        cmd->add_option("--min-length", *bound,
                        "admissibility bound L: shortest >= L, area >= sqrt(3) L^2 (default 1)");
        cmd->callback([&rc, src, bound] {
            rc = run_guarded("cusp analyze", [&](ReportEnvelope& env) {
                const CuspLattice lat = resolve_lattice(*src, env.inputs);
                env.inputs["min_length"] = *bound;
                const AdmissibilityReport adm = check_admissibility(lat, *bound);
                const SlopeMeasurement min = minimal_slope(lat);
                env.results["basis_lengths"] = JsonValue::Array{norm(lat.v1), norm(lat.v2)};
                env.results["area"] = adm.area;
                env.results["shortest"] = adm.shortest;
                env.results["minimal_slope"] = slope_json(min);
                JsonValue::Object a;
                a["bound"] = adm.bound;
                a["shortest_ok"] = adm.shortest_ok;
                a["area_ok"] = adm.area_ok;
                a["admissible"] = adm.admissible;
                env.results["admissibility"] = a;
                env.verdict = adm.admissible ? Verdict::Certified : Verdict::NotCertified;
            });
        });
    }

    {
        auto* cmd = cusp->add_subcommand("slopes", "enumerate slopes up to a length bound");
        auto src = std::make_shared<LatticeSource>();
        auto max_len = std::make_shared<double>(0.0);
        auto csv = std::make_shared<std::string>();
        add_lattice_flags(cmd, *src);
        cmd->add_option("--max-length", *max_len, "largest slope length to keep")->required();
        cmd->add_option("--csv", *csv, "write the slope table to this CSV file");
        cmd->callback([&rc, src, max_len, csv] {
            rc = run_guarded("cusp slopes", [&](ReportEnvelope& env) {
                const CuspLattice lat = resolve_lattice(*src, env.inputs);
                env.inputs["max_length"] = *max_len;
                const auto slopes = enumerate_slopes(lat, *max_len);
                if (!csv->empty()) {
                    env.inputs["csv"] = *csv;
                    write_text_file(*csv, slope_csv(slopes));
                }
                env.results["count"] = static_cast<long long>(slopes.size());
                env.results["slopes"] = slope_list_json(slopes);
                env.verdict = Verdict::Certified;
            });
        });
    }

    {
        auto* cmd = cusp->add_subcommand("short-census",
                                         "slopes of length <= 2*pi on a maximal cusp section");
        auto src = std::make_shared<LatticeSource>();
        auto csv = std::make_shared<std::string>();
        add_lattice_flags(cmd, *src);
        cmd->add_option("--csv", *csv, "write the census table to this CSV file");
        cmd->callback([&rc, src, csv] {
            rc = run_guarded("cusp short-census", [&](ReportEnvelope& env) {
                const CuspLattice lat = resolve_lattice(*src, env.inputs);
                const CensusResult census = short_slope_census(lat);
                if (!csv->empty()) {
                    env.inputs["csv"] = *csv;
                    write_text_file(*csv, slope_csv(census.slopes));
                }
                env.results["count"] = static_cast<long long>(census.slopes.size());
                env.results["threshold"] = kTwoPi;
                env.results["excluded_bound"] = 48;
                env.results["within_excluded_bound"] = census.within_excluded_bound;
                env.results["slopes"] = slope_list_json(census.slopes);
                env.verdict =
                    census.within_excluded_bound ? Verdict::Certified : Verdict::NotCertified;
            });
        });
    }

    // fill: negative-curvature filling certificates.
    auto* fill = app.add_subcommand("fill", "Dehn filling certificates");
    fill->require_subcommand(1);

    {
        auto* cmd = fill->add_subcommand("certify",
                                         "certify filling slopes: every length > 2*pi + epsilon");
        auto src = std::make_shared<LatticeSource>();
        auto slopes = std::make_shared<std::vector<std::string>>();
        auto epsilon = std::make_shared<double>(0.0);
        add_lattice_flags(cmd, *src);
        cmd->add_option("--slope", *slopes, "filling slope 'P/Q', one per cusp")->required();
        cmd->add_option("--epsilon", *epsilon, "extra slack demanded above 2*pi (default 0)");
        cmd->callback([&rc, src, slopes, epsilon] {
            rc = run_guarded("fill certify", [&](ReportEnvelope& env) {
                FillingSpec spec;
                spec.epsilon = *epsilon;
                env.inputs["epsilon"] = *epsilon;
                std::vector<CuspLattice> lattices;
                if (!src->catalog.empty()) {
                    const CatalogRecord rec = resolve_record(*src, env.inputs);
                    lattices = rec.cusps;
                } else {
                    lattices.push_back(resolve_lattice(*src, env.inputs));
                }
                if (slopes->size() != lattices.size())
                    throw InvalidInputError("need exactly one --slope per cusp (" +
                                            std::to_string(lattices.size()) + " cusp(s), " +
                                            std::to_string(slopes->size()) + " slope(s))");
                JsonValue::Array slope_echo;
                for (std::size_t i = 0; i < lattices.size(); ++i) {
                    FillingCusp cusp_spec;
                    cusp_spec.cusp_id = "cusp" + std::to_string(i);
                    cusp_spec.lattice = lattices[i];
                    cusp_spec.slope = parse_slope((*slopes)[i]);
                    slope_echo.push_back((*slopes)[i]);
                    spec.cusps.push_back(cusp_spec);
                }
                env.inputs["slopes"] = slope_echo;
                const Certificate cert = certify_two_pi(spec);
                JsonValue::Array entries;
                for (const auto& e : cert.entries) {
                    JsonValue::Object row;
                    row["cusp_id"] = e.cusp_id;
                    row["p"] = e.measured.slope.p;
                    row["q"] = e.measured.slope.q;
                    row["length"] = e.measured.length;
                    row["passes"] = e.passes;
                    entries.push_back(row);
                }
                env.results["entries"] = entries;
                env.results["threshold"] = cert.threshold;
                env.results["min_length"] = cert.min_length;
                env.results["certified"] = cert.certified;
                env.verdict = cert.certified ? Verdict::Certified : Verdict::NotCertified;
            });
        });
    }

    {
        auto* cmd = fill->add_subcommand(
            "audit-distance", "intersection-distance criterion against a reference slope");
        auto src = std::make_shared<LatticeSource>();
        auto slope_text = std::make_shared<std::string>();
        auto ref_text = std::make_shared<std::string>();
        add_lattice_flags(cmd, *src);
        cmd->add_option("--slope", *slope_text, "filling slope 'P/Q'")->required();
        cmd->add_option("--reference", *ref_text, "reference slope 'P/Q'")->required();
        cmd->callback([&rc, src, slope_text, ref_text] {
            rc = run_guarded("fill audit-distance", [&](ReportEnvelope& env) {
                const CuspLattice lat = resolve_lattice(*src, env.inputs);
                env.inputs["slope"] = *slope_text;
                env.inputs["reference"] = *ref_text;
                const DistanceAudit audit =
                    distance_criterion_audit(lat, parse_slope(*slope_text), parse_slope(*ref_text));
                JsonValue::Object ref;
                ref["p"] = audit.reference.measured.slope.p;
                ref["q"] = audit.reference.measured.slope.q;
                ref["length"] = audit.reference.measured.length;
                ref["minimal_length"] = audit.reference.minimal_length;
                ref["is_short"] = audit.reference.is_short;
                ref["is_minimal"] = audit.reference.is_minimal;
                env.results["reference"] = ref;
                env.results["filled"] = slope_json(audit.filled);
                env.results["delta"] = audit.delta;
                env.results["short_criterion"] = audit.short_criterion;
                env.results["minimal_criterion"] = audit.minimal_criterion;
                env.results["criterion_holds"] = audit.criterion_holds;
                env.results["implied_bound"] = audit.implied_bound;
                env.results["bound_consistent"] = audit.bound_consistent;
                env.verdict = audit.criterion_holds && audit.bound_consistent
                                  ? Verdict::Certified
                                  : Verdict::NotCertified;
            });
        });
    }

    {
        auto* cmd = fill->add_subcommand("fraction",
                                         "p/q surgery check: |q| >= 23 certifies the filling");
        auto frac_pos = std::make_shared<std::string>();
        auto frac_opt = std::make_shared<std::string>();
        cmd->add_option("fraction", *frac_pos, "surgery fraction 'P/Q'");
        cmd->add_option("--slope", *frac_opt, "surgery fraction 'P/Q' (alternative to positional)");
        cmd->callback([&rc, frac_pos, frac_opt] {
            rc = run_guarded("fill fraction", [&](ReportEnvelope& env) {
                std::string text = *frac_pos;
                if (text.empty()) text = *frac_opt;
                if (text.empty()) throw InvalidInputError("a surgery fraction 'P/Q' is required");
                env.inputs["fraction"] = text;
                const Slope s = parse_slope(text);
                const FractionCheck check = surgery_fraction_check(s.p, s.q);
                env.results["p"] = check.slope.p;
                env.results["q"] = check.slope.q;
                env.results["delta_meridian"] = check.delta_meridian;
                env.results["implied_length_bound"] = check.implied_length_bound;
                env.results["satisfied"] = check.satisfied;
                env.verdict = check.satisfied ? Verdict::Certified : Verdict::NotCertified;
            });
        });
    }

    // cover: cyclic branched covers.
    auto* cover = app.add_subcommand("cover", "branched cover certificates");
    cover->require_subcommand(1);

    {
        auto* cmd = cover->add_subcommand("certify",
                                          "certify a branched cover: every lifted length >= 7");
        auto degree = std::make_shared<long long>(1);
        auto lifts = std::make_shared<std::vector<std::string>>();
        auto base_volume = std::make_shared<double>(0.0);
        auto* bv =
            cmd->add_option("--base-volume", *base_volume, "hyperbolic volume of the base manifold");
        cmd->add_option("--degree", *degree, "covering degree")->required();
        cmd->add_option("--lift", *lifts, "lift 'INDEX:MERIDIAN' (branching index, base meridian length)")
            ->required();
        cmd->callback([&rc, degree, lifts, base_volume, bv] {
            rc = run_guarded("cover certify", [&](ReportEnvelope& env) {
                BranchedCoverSpec spec;
                spec.degree = *degree;
                env.inputs["degree"] = *degree;
                JsonValue::Array lift_echo;
                for (const auto& text : *lifts) {
                    spec.lifts.push_back(parse_lift(text));
                    lift_echo.push_back(text);
                }
                env.inputs["lifts"] = lift_echo;
                if (bv->count() > 0) {
                    spec.base_volume = *base_volume;
                    env.inputs["base_volume"] = *base_volume;
                }
                const CoverCertificate cert = certify_branched_cover(spec);
                JsonValue::Array rows;
                for (std::size_t i = 0; i < spec.lifts.size(); ++i) {
                    JsonValue::Object row;
                    row["branching_index"] = spec.lifts[i].branching_index;
                    row["base_meridian_length"] = spec.lifts[i].base_meridian_length;
                    row["lifted_length"] = cert.lifted_lengths[i];
                    rows.push_back(row);
                }
                env.results["lifts"] = rows;
                env.results["min_lifted_length"] = cert.min_lifted_length;
                env.results["threshold"] = kCoverLengthThreshold;
                env.results["certified"] = cert.certified;
                env.results["cover_volume"] =
                    cert.cover_volume ? JsonValue(*cert.cover_volume) : JsonValue(nullptr);
                env.results["base_volume_ok"] =
                    cert.base_volume_ok ? JsonValue(*cert.base_volume_ok) : JsonValue(nullptr);
                env.verdict = cert.certified ? Verdict::Certified : Verdict::NotCertified;
            });
        });
    }

    // metric: negatively curved solid-torus profiles.
    auto* metric = app.add_subcommand("metric", "pinched negatively curved filling metrics");
    metric->require_subcommand(1);

    {
        auto* cmd = metric->add_subcommand("build",
                                           "build and verify a solid-torus metric profile");
        auto l1 = std::make_shared<double>(0.0);
        auto l2 = std::make_shared<double>(1.0);
        auto t = std::make_shared<double>(0.0);
        auto samples = std::make_shared<int>(BuildOptions{}.samples);
        auto collar = std::make_shared<double>(0.0);
        auto csv = std::make_shared<std::string>();
        cmd->add_option("--l1", *l1, "meridian boundary length, must exceed 2*pi")->required();
        cmd->add_option("--l2", *l2, "longitude boundary length (default 1)");
        auto* topt = cmd->add_option("--t", *t, "target pinching in (0, 1): curvatures in [-1-t, -1+t]");
        topt->required();
        cmd->add_option("--samples", *samples, "grid sample count (default 10001)");
        auto* copt = cmd->add_option("--collar", *collar, "attach a hyperbolic collar of this depth");
        cmd->add_option("--csv", *csv, "write the profile table to this CSV file");
        cmd->callback([&rc, l1, l2, t, samples, collar, csv, copt] {
            rc = run_guarded("metric build", [&](ReportEnvelope& env) {
                env.inputs["l1"] = *l1;
                env.inputs["l2"] = *l2;
                env.inputs["t"] = *t;
                env.inputs["samples"] = *samples;
                BuildOptions opts;
                opts.samples = *samples;
                MetricProfile prof = build_profile(*l1, *l2, *t, opts);
                if (copt->count() > 0) {
                    env.inputs["collar"] = *collar;
                    prof = attach_collar(prof, *collar);
                }
                const CurvatureReport curv = curvature_report(prof);
                const PinchCertificate pinch = pinch_certificate(prof);
                if (!csv->empty()) {
                    env.inputs["csv"] = *csv;
                    std::string text = csv_row(
                        {"r", "f", "g", "f_prime", "g_prime", "f_second", "g_second"});
                    for (std::size_t i = 0; i < prof.r.size(); ++i)
                        text += csv_double_row({prof.r[i], prof.f[i], prof.g[i], prof.fp[i],
                                                prof.gp[i], prof.fpp[i], prof.gpp[i]});
                    write_text_file(*csv, text);
                }
                env.results["r0"] = prof.r0;
                env.results["grid_points"] = static_cast<long long>(prof.r.size());
                env.results["boundary_l1"] = prof.f.back();
                env.results["boundary_l2"] = prof.g.back();
                env.results["cone_rate"] = prof.fp.front();
                JsonValue::Object ck;
                ck["kappa_inf"] = curv.k_inf;
                ck["kappa_sup"] = curv.k_sup;
                ck["max_fd_mismatch"] = curv.max_fd_mismatch;
                ck["excluded_core_samples"] = curv.excluded_core_samples;
                env.results["curvature"] = ck;
                env.results["volume"] = profile_volume(prof);
                env.results["volume_ratio"] = pinch.ratio;
                JsonValue::Object pc;
                pc["a"] = pinch.a;
                pc["measured_pinching"] = pinch.measured_pinching;
                pc["valid"] = pinch.valid;
                env.results["pinch"] = pc;
                env.verdict = pinch.valid ? Verdict::Certified : Verdict::NotCertified;
            });
        });
    }

    {
        auto* cmd = metric->add_subcommand(
            "alpha-curve", "best pinch certificate value over a grid of meridian lengths");
        auto grid_text = std::make_shared<std::string>();
        auto t_max = std::make_shared<double>(AlphaOptions{}.t_max);
        auto samples = std::make_shared<int>(BuildOptions{}.samples);
        auto csv = std::make_shared<std::string>();
        cmd->add_option("--grid", *grid_text, "meridian length grid 'lo:hi:n'")->required();
        cmd->add_option("--t-max", *t_max, "largest pinching target to search (default 0.99)");
        cmd->add_option("--samples", *samples, "grid sample count per build (default 10001)");
        cmd->add_option("--csv", *csv, "write the curve table to this CSV file");
        cmd->callback([&rc, grid_text, t_max, samples, csv] {
            rc = run_guarded("metric alpha-curve", [&](ReportEnvelope& env) {
                env.inputs["grid"] = *grid_text;
                env.inputs["t_max"] = *t_max;
                env.inputs["samples"] = *samples;
                const GridSpec grid = parse_grid(*grid_text);
                std::vector<double> l1s(grid.n);
                for (int i = 0; i < grid.n; ++i)
                    l1s[i] = grid.n == 1
                                 ? grid.lo
                                 : grid.lo + (grid.hi - grid.lo) * i / double(grid.n - 1);
                AlphaOptions opts;
                opts.t_max = *t_max;
                opts.build.samples = *samples;
                const std::vector<AlphaEstimate> rows = alpha_curve(l1s, opts);
                long long feasible = 0;
                JsonValue::Array out;
                std::string csv_text = csv_row({"l1", "t_star", "a", "kappa_inf", "kappa_sup",
                                                "volume_ratio", "feasible"});
                for (const auto& row : rows) {
                    JsonValue::Object o;
                    o["l1"] = row.l1;
                    o["feasible"] = row.feasible;
                    if (row.feasible) {
                        ++feasible;
                        o["t_star"] = row.t_star;
                        o["a"] = row.a;
                        o["kappa_inf"] = row.k_inf;
                        o["kappa_sup"] = row.k_sup;
                        o["volume_ratio"] = row.ratio;
                        csv_text += csv_row({format_double(row.l1), format_double(row.t_star),
                                             format_double(row.a), format_double(row.k_inf),
                                             format_double(row.k_sup), format_double(row.ratio),
                                             "1"});
                    } else {
                        o["t_star"] = nullptr;
                        o["a"] = nullptr;
                        o["kappa_inf"] = nullptr;
                        o["kappa_sup"] = nullptr;
                        o["volume_ratio"] = nullptr;
                        csv_text += csv_row({format_double(row.l1), "", "", "", "", "", "0"});
                    }
                    out.push_back(o);
                }
                if (!csv->empty()) {
                    env.inputs["csv"] = *csv;
                    write_text_file(*csv, csv_text);
                }
                env.results["rows"] = out;
                env.results["feasible_count"] = feasible;
                env.verdict = feasible > 0 ? Verdict::Certified : Verdict::Infeasible;
            });
        });
    }

    // bounds: volume and Gromov norm propagation.
    auto* bounds = app.add_subcommand("bounds", "volume and Gromov norm bounds");
    bounds->require_subcommand(1);

    {
        auto* cmd = bounds->add_subcommand(
            "propagate", "volume lower bound and curvature window for a filled manifold");
        auto src = std::make_shared<LatticeSource>();
        auto volume = std::make_shared<double>(0.0);
        auto length = std::make_shared<double>(0.0);
        auto alpha = std::make_shared<double>(0.0);
        auto* vopt = cmd->add_option("--volume", *volume, "volume of the unfilled manifold");
        cmd->add_option("--length", *length, "filling slope length on the maximal cusp section");
        auto* aopt = cmd->add_option("--alpha", *alpha, "pinch value in (0, 1); estimated from --length when absent");
        auto* cat = cmd->add_option("--catalog", src->catalog, "catalog JSON file (volume source)");
        auto* rec = cmd->add_option("--record", src->record, "record name inside the catalog");
        cat->needs(rec);
        rec->needs(cat);
        cmd->add_flag("--strict", src->strict, "reject the whole catalog on any invalid record");
        cmd->callback([&rc, src, volume, length, alpha, vopt, aopt] {
            rc = run_guarded("bounds propagate", [&](ReportEnvelope& env) {
                double vol = *volume;
                if (vopt->count() == 0) {
                    if (src->catalog.empty())
                        throw InvalidInputError("a volume is required: --volume or --catalog/--record");
                    const CatalogRecord recdata = resolve_record(*src, env.inputs);
                    if (!recdata.volume)
                        throw InvalidInputError("record '" + recdata.name + "' carries no volume");
                    vol = *recdata.volume;
                }
                env.inputs["volume"] = vol;
                env.inputs["length"] = *length;
                std::optional<double> a;
                if (aopt->count() > 0) {
                    a = *alpha;
                    env.inputs["alpha"] = *alpha;
                }
                const BoundReport rep = propagate_filling_bounds(vol, *length, a);
                env.results["alpha"] = rep.alpha;
                env.results["alpha_source"] = rep.alpha_source;
                env.results["volume_lower_bound"] = rep.volume_lower_bound;
                env.results["kappa_lo"] = rep.kappa_lo;
                env.results["kappa_hi"] = rep.kappa_hi;
                env.verdict = Verdict::Certified;
            });
        });
    }

    {
        auto* cmd = bounds->add_subcommand(
            "gromov", "Gromov norm interval for a filled manifold, plus the v3 constants");
        auto src = std::make_shared<LatticeSource>();
        auto norm_filled = std::make_shared<double>(0.0);
        auto length = std::make_shared<double>(0.0);
        auto alpha = std::make_shared<double>(0.0);
        auto* nopt = cmd->add_option("--norm", *norm_filled, "Gromov norm of the unfilled manifold");
        cmd->add_option("--length", *length, "filling slope length on the maximal cusp section");
        auto* aopt = cmd->add_option("--alpha", *alpha, "pinch value in (0, 1); estimated from --length when absent");
        auto* cat = cmd->add_option("--catalog", src->catalog, "catalog JSON file (norm source)");
        auto* rec = cmd->add_option("--record", src->record, "record name inside the catalog");
        cat->needs(rec);
        rec->needs(cat);
        cmd->add_flag("--strict", src->strict, "reject the whole catalog on any invalid record");
        cmd->callback([&rc, src, norm_filled, length, alpha, nopt, aopt] {
            rc = run_guarded("bounds gromov", [&](ReportEnvelope& env) {
                double nf = *norm_filled;
                if (nopt->count() == 0) {
                    if (src->catalog.empty())
                        throw InvalidInputError("a norm is required: --norm or --catalog/--record");
                    const CatalogRecord recdata = resolve_record(*src, env.inputs);
                    if (recdata.gromov_norm)
                        nf = *recdata.gromov_norm;
                    else if (recdata.volume)
                        nf = hyperbolic_norm(*recdata.volume);
                    else
                        throw InvalidInputError("record '" + recdata.name +
                                                "' carries neither a norm nor a volume");
                }
                env.inputs["norm"] = nf;
                env.inputs["length"] = *length;
                std::optional<double> a;
                if (aopt->count() > 0) {
                    a = *alpha;
                    env.inputs["alpha"] = *alpha;
                }
                const GromovInterval iv = gromov_interval(nf, *length, a);
                env.results["lo"] = iv.lo;
                env.results["hi"] = iv.hi;
                env.results["beta"] = iv.beta;
                env.results["alpha"] = iv.alpha;
                env.results["degenerate"] = iv.degenerate;
                env.results["v3"] = ideal_simplex_volume();
                env.verdict = Verdict::Certified;
            });
        });
    }

    // surface: essential surface audits.
    auto* surface = app.add_subcommand("surface", "essential surface constraints");
    surface->require_subcommand(1);

    {
        auto* cmd = surface->add_subcommand(
            "audit", "persistence audit: slope length * curves < area(surface)");
        auto length = std::make_shared<double>(0.0);
        auto curves = std::make_shared<long long>(1);
        auto genus = std::make_shared<int>(0);
        auto boundaries = std::make_shared<int>(1);
        auto nonorientable = std::make_shared<bool>(false);
        cmd->add_option("--length", *length, "filling slope length")->required();
        cmd->add_option("--curves", *curves, "number of boundary intersection curves")->required();
        cmd->add_option("--genus", *genus, "surface genus (crosscaps when non-orientable)")
            ->required();
        cmd->add_option("--boundaries", *boundaries, "number of boundary components (default 1)");
        cmd->add_flag("--nonorientable", *nonorientable, "surface is non-orientable");
        cmd->callback([&rc, length, curves, genus, boundaries, nonorientable] {
            rc = run_guarded("surface audit", [&](ReportEnvelope& env) {
                env.inputs["length"] = *length;
                env.inputs["curves"] = *curves;
                env.inputs["genus"] = *genus;
                env.inputs["boundaries"] = *boundaries;
                env.inputs["nonorientable"] = *nonorientable;
                SurfaceData surf;
                surf.genus = *genus;
                surf.boundary_count = *boundaries;
                surf.orientable = !*nonorientable;
                const SurfaceAudit audit = surface_length_audit(*length, *curves, surf);
                env.results["euler"] = audit.euler;
                env.results["area"] = audit.area;
                env.results["lhs"] = audit.lhs;
                env.results["max_admissible_length"] = audit.max_admissible_length;
                env.results["consistent"] = audit.consistent;
                env.verdict = audit.consistent ? Verdict::Certified : Verdict::NotCertified;
            });
        });
    }

    {
        auto* cmd = surface->add_subcommand(
            "tradeoff", "genus versus surgery denominator trade-off bounds");
        auto genus = std::make_shared<int>(0);
        auto qval = std::make_shared<long long>(0);
        auto csv = std::make_shared<std::string>();
        auto* gopt = cmd->add_option("--genus", *genus, "genus: report the largest compatible |q|");
        auto* qopt = cmd->add_option("--q", *qval, "|q|: report the smallest compatible genus");
        cmd->add_option("--csv", *csv, "write the trade-off row to this CSV file");
        gopt->excludes(qopt);
        qopt->excludes(gopt);
        cmd->callback([&rc, genus, qval, csv, gopt, qopt] {
            rc = run_guarded("surface tradeoff", [&](ReportEnvelope& env) {
                GenusSlopeBound bound;
                std::string csv_text;
                if (gopt->count() > 0) {
                    env.inputs["genus"] = *genus;
                    bound = max_q_for_genus(*genus);
                    env.results["genus"] = bound.genus;
                    env.results["max_q"] = bound.max_q;
                    env.results["length_bound"] = bound.length_bound;
                    csv_text = csv_row({"genus", "max_q", "length_bound"}) +
                               csv_row({std::to_string(bound.genus), std::to_string(bound.max_q),
                                        format_double(bound.length_bound)});
                } else if (qopt->count() > 0) {
                    env.inputs["q"] = *qval;
                    bound = min_genus_for_q(*qval);
                    env.results["q"] = bound.q;
                    env.results["min_genus"] = bound.min_genus;
                    env.results["length_bound"] = bound.length_bound;
                    csv_text = csv_row({"q", "min_genus", "length_bound"}) +
                               csv_row({std::to_string(bound.q), std::to_string(bound.min_genus),
                                        format_double(bound.length_bound)});
                } else {
                    throw InvalidInputError("one of --genus or --q is required");
                }
                if (!csv->empty()) {
                    env.inputs["csv"] = *csv;
                    write_text_file(*csv, csv_text);
                }
                env.verdict = Verdict::Certified;
            });
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
        std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        // Domain errors thrown outside run_guarded (none expected, but the
        // exit contract must hold regardless).
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
