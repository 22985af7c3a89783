#pragma once

#include "cuspgauge/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cuspgauge {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
// Intersection thresholds forcing slope length past 2*pi, by reference kind.
inline constexpr long long kShortRefDeltaThreshold = 22;   // delta > 22
inline constexpr long long kMinimalRefDeltaThreshold = 3;  // delta > 3
// Lifted meridian length that certifies a branched cover (inclusive).
inline constexpr double kCoverLengthThreshold = 7.0;

// Short: length <= 2*pi (boundary resolves as short).
// Minimal: length equals the lattice minimum at the geometry tolerance.
struct SlopeClass {
    SlopeMeasurement measured;
    double minimal_length = 0.0;
    bool is_short = false;
    bool is_minimal = false;
};
SlopeClass classify_slope(const CuspLattice& lat, Slope s);

struct FillingCusp {
    std::string cusp_id;
    CuspLattice lattice;
    Slope slope;
};

struct FillingSpec {
    std::vector<FillingCusp> cusps;
    double epsilon = 0.0;  // slack above 2*pi demanded of every slope
};

void validate_filling_spec(const FillingSpec& spec);

// Negative-curvature filling certificate: every filled slope must be
// strictly longer than 2*pi + epsilon (doubtful cases are not certified).
struct Certificate {
    struct Entry {
        std::string cusp_id;
        SlopeMeasurement measured;
        bool passes = false;
    };
    std::vector<Entry> entries;
    double threshold = kTwoPi;
    double min_length = 0.0;
    bool certified = false;
};
Certificate certify_two_pi(const FillingSpec& spec);

// All slopes of length <= 2*pi on a verified maximal cusp section, plus the
// empirical excluded-count bound (at most 48).
struct CensusResult {
    std::vector<SlopeMeasurement> slopes;
    bool within_excluded_bound = false;
};
CensusResult short_slope_census(const CuspLattice& lat);

enum class ReferenceKind { Short, Minimal };

// Lower bound on l(s) given delta(s, reference): sqrt(3) delta / (2 pi) for
// a short reference, sqrt(3) delta for a minimal one. Requires delta >= 1.
double lower_bound_from_reference(long long delta, ReferenceKind kind);

// Audits the distance criterion for filling slope s against reference e:
// classification of e, delta(s, e), whether the criterion (short ref with
// delta > 22, or minimal ref with delta > 3) holds, the implied length
// bound, and its cross-check against the measured length.
struct DistanceAudit {
    SlopeClass reference;
    SlopeMeasurement filled;
    long long delta = 0;
    bool short_criterion = false;
    bool minimal_criterion = false;
    bool criterion_holds = false;
    double implied_bound = 0.0;
    bool bound_consistent = true;
};
DistanceAudit distance_criterion_audit(const CuspLattice& lat, Slope s, Slope e);

// p/q surgery on a one-cusped manifold with meridian slope (1, 0):
// delta(meridian, p/q) = |q|, and |q| > 22 certifies the filling.
struct FractionCheck {
    Slope slope;
    long long delta_meridian = 0;
    bool satisfied = false;
    double implied_length_bound = 0.0;
};
FractionCheck surgery_fraction_check(long long p, long long q);

// Cyclic branched cover data: each lift of the base meridian has lifted
// length = branching index * base meridian length.
struct BranchedCoverSpec {
    struct Lift {
        long long branching_index = 1;
        double base_meridian_length = 1.0;
    };
    long long degree = 1;
    std::vector<Lift> lifts;
    std::optional<double> base_volume;
};

void validate_cover_spec(const BranchedCoverSpec& spec);

// Certified iff every lifted length is at least 7 (inclusive). Volume is
// multiplicative: cover volume = degree * base volume; base volume is also
// checked against sqrt(3)/2 (maximal horoball volume halved by the cusp
// volume identity) and reported as a flag.
struct CoverCertificate {
    std::vector<double> lifted_lengths;
    double min_lifted_length = 0.0;
    bool certified = false;
    std::optional<double> cover_volume;
    std::optional<bool> base_volume_ok;
};
CoverCertificate certify_branched_cover(const BranchedCoverSpec& spec);

} // namespace cuspgauge
