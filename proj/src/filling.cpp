#include "cuspgauge/filling.hpp"

#include "cuspgauge/errors.hpp"
#include "cuspgauge/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace cuspgauge {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;
constexpr int kMaxExcludedSlopes = 48;

void require_verified_maximal(const CuspLattice& lat) {
    if (!lat.claimed_maximal) {
        throw PreconditionError("lattice is not claimed maximal; census and maximal-form "
                                "operations need a maximal cusp cross-section");
    }
    const auto adm = check_admissibility(lat, 1.0);
    if (!adm.shortest_ok) {
        std::ostringstream msg;
        msg << "claimed-maximal check failed: shortest slope " << adm.shortest << " < 1";
        throw PreconditionError(msg.str());
    }
    if (!adm.area_ok) {
        std::ostringstream msg;
        msg << "claimed-maximal check failed: area " << adm.area << " < sqrt(3)";
        throw PreconditionError(msg.str());
    }
}

} // namespace

SlopeClass classify_slope(const CuspLattice& lat, Slope s) {
    SlopeClass cls;
    cls.measured = slope_length(lat, s);
    cls.minimal_length = minimal_slope(lat).length;
    // Boundary lengths resolve as short.
    cls.is_short = cls.measured.length <= kTwoPi + geom_tol() * kTwoPi;
    cls.is_minimal = approx_eq(cls.measured.length, cls.minimal_length, geom_tol());
    return cls;
}

void validate_filling_spec(const FillingSpec& spec) {
    if (spec.cusps.empty()) throw InvalidInputError("filling spec has no cusps");
    if (!(spec.epsilon >= 0.0) || !std::isfinite(spec.epsilon)) {
        throw InvalidInputError("epsilon must be finite and >= 0");
    }
    std::set<std::string> ids;
    for (const auto& cusp : spec.cusps) {
        if (cusp.cusp_id.empty()) throw InvalidInputError("cusp_id must be nonempty");
        if (!ids.insert(cusp.cusp_id).second) {
            throw InvalidInputError("duplicate cusp_id: " + cusp.cusp_id);
        }
        validate_lattice(cusp.lattice);
        normalize_slope(cusp.slope.p, cusp.slope.q);
    }
}

Certificate certify_two_pi(const FillingSpec& spec) {
    validate_filling_spec(spec);
    Certificate cert;
    cert.threshold = kTwoPi + spec.epsilon;
    cert.certified = true;
    bool first = true;
    for (const auto& cusp : spec.cusps) {
        Certificate::Entry entry;
        entry.cusp_id = cusp.cusp_id;
        entry.measured = slope_length(cusp.lattice, cusp.slope);
        // Strictly above the threshold; doubtful cases are not certified.
        entry.passes = strictly_above(entry.measured.length, cert.threshold, geom_tol());
        cert.certified = cert.certified && entry.passes;
        if (first || entry.measured.length < cert.min_length) {
            cert.min_length = entry.measured.length;
            first = false;
        }
        cert.entries.push_back(std::move(entry));
    }
    return cert;
}

CensusResult short_slope_census(const CuspLattice& lat) {
    require_verified_maximal(lat);
    CensusResult res;
    res.slopes = enumerate_slopes(lat, kTwoPi);
    res.within_excluded_bound = res.slopes.size() <= kMaxExcludedSlopes;
    return res;
}

double lower_bound_from_reference(long long delta, ReferenceKind kind) {
    if (delta < 1) throw InvalidInputError("intersection number must be >= 1");
    const double d = static_cast<double>(delta);
    return kind == ReferenceKind::Short ? kSqrt3 * d / kTwoPi : kSqrt3 * d;
}

DistanceAudit distance_criterion_audit(const CuspLattice& lat, Slope s, Slope e) {
    const Slope cs = normalize_slope(s.p, s.q);
    const Slope ce = normalize_slope(e.p, e.q);
    if (cs == ce) throw PreconditionError("filling slope equals the reference slope");
    DistanceAudit audit;
    audit.reference = classify_slope(lat, ce);
    audit.filled = slope_length(lat, cs);
    audit.delta = intersection_number(cs, ce);
    audit.short_criterion = audit.reference.is_short && audit.delta > kShortRefDeltaThreshold;
    audit.minimal_criterion =
        audit.reference.is_minimal && audit.delta > kMinimalRefDeltaThreshold;
    audit.criterion_holds = audit.short_criterion || audit.minimal_criterion;
    audit.implied_bound = 0.0;
    if (audit.delta >= 1) {
        if (audit.reference.is_short) {
            audit.implied_bound = std::max(audit.implied_bound,
                                           lower_bound_from_reference(audit.delta, ReferenceKind::Short));
        }
        if (audit.reference.is_minimal) {
            audit.implied_bound = std::max(audit.implied_bound,
                                           lower_bound_from_reference(audit.delta, ReferenceKind::Minimal));
        }
    }
    audit.bound_consistent = audit.filled.length >= audit.implied_bound - geom_tol() *
                                 std::max(1.0, audit.implied_bound);
    return audit;
}

FractionCheck surgery_fraction_check(long long p, long long q) {
    if (p == 0 && q == 0) throw InvalidInputError("slope (0, 0) is invalid");
    const long long g = std::gcd(std::llabs(p), std::llabs(q));
    if (g != 1) {
        std::ostringstream msg;
        msg << "p/q must be in lowest terms: gcd(" << p << ", " << q << ") = " << g;
        throw InvalidInputError(msg.str());
    }
    FractionCheck check;
    check.slope = normalize_slope(p, q);
    check.delta_meridian = std::llabs(q);  // delta((1,0), (p,q)) = |q|
    check.satisfied = check.delta_meridian > kShortRefDeltaThreshold;
    check.implied_length_bound =
        check.delta_meridian >= 1
            ? lower_bound_from_reference(check.delta_meridian, ReferenceKind::Short)
            : 0.0;
    return check;
}

void validate_cover_spec(const BranchedCoverSpec& spec) {
    if (spec.degree < 1) throw InvalidInputError("cover degree must be >= 1");
    if (spec.lifts.empty()) throw InvalidInputError("cover spec has no meridian lifts");
    for (const auto& lift : spec.lifts) {
        if (lift.branching_index < 1) {
            throw InvalidInputError("branching index must be >= 1");
        }
        if (!(lift.base_meridian_length >= 1.0) || !std::isfinite(lift.base_meridian_length)) {
            throw InvalidInputError("base meridian length must be >= 1 (maximal cusp bound)");
        }
    }
    if (spec.base_volume && !(*spec.base_volume > 0.0)) {
        throw InvalidInputError("base volume must be positive");
    }
}

CoverCertificate certify_branched_cover(const BranchedCoverSpec& spec) {
    validate_cover_spec(spec);
    CoverCertificate cert;
    cert.certified = true;
    for (const auto& lift : spec.lifts) {
        const double lifted = static_cast<double>(lift.branching_index) * lift.base_meridian_length;
        cert.lifted_lengths.push_back(lifted);
        // Inclusive threshold: exactly 7 certifies.
        cert.certified = cert.certified && at_least(lifted, kCoverLengthThreshold, geom_tol());
    }
    cert.min_lifted_length = *std::min_element(cert.lifted_lengths.begin(), cert.lifted_lengths.end());
    if (spec.base_volume) {
        cert.cover_volume = static_cast<double>(spec.degree) * *spec.base_volume;
        cert.base_volume_ok = geq_tol(*spec.base_volume, kSqrt3 / 2.0, geom_tol());
    }
    return cert;
}

} // namespace cuspgauge
