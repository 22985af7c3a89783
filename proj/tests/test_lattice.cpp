#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cuspgauge/errors.hpp"
#include "cuspgauge/lattice.hpp"
#include "cuspgauge/tolerances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <utility>

using namespace cuspgauge;

namespace {

const double kSqrt3 = std::sqrt(3.0);

CuspLattice square(double s) { return {{s, 0.0}, {0.0, s}, false}; }

// Unit hexagonal lattice: shortest 1, area sqrt(3)/2.
CuspLattice hexagonal() { return {{1.0, 0.0}, {0.5, kSqrt3 / 2.0}, false}; }

// Seeded admissible lattices (shortest >= 1, area >= sqrt(3)) in reduced
// position: v1 = (s, 0) shortest, v2 in the upper half plane with |x| <= s/2.
CuspLattice random_admissible(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (;;) {
        CuspLattice lat;
        const double s = 1.0 + 1.5 * u(rng);
        lat.v1 = {s, 0.0};
        const double x = (u(rng) - 0.5) * s;
        const double y = std::max(kSqrt3 / s, std::sqrt(std::max(0.0, s * s - x * x))) *
                         (1.0 + 2.0 * u(rng));
        lat.v2 = {x, y};
        if (check_admissibility(lat, 1.0).admissible && minimal_slope(lat).length >= 1.0)
            return lat;
    }
}

// Independent enumeration: scan a generous coefficient box and keep one
// canonical representative per +-(p, q) pair.
std::set<std::pair<long long, long long>> brute_slopes(const CuspLattice& lat, double max_len) {
    std::set<std::pair<long long, long long>> out;
    const int B = 80;
    for (long long p = -B; p <= B; ++p) {
        for (long long q = -B; q <= B; ++q) {
            if (p == 0 && q == 0) continue;
            if (std::llabs(std::gcd(p, q)) != 1) continue;
            const Vec2 w = static_cast<double>(p) * lat.v1 + static_cast<double>(q) * lat.v2;
            if (norm(w) <= max_len + 1e-12 * std::max(1.0, max_len)) {
                const Slope c = normalize_slope(p, q);
                out.insert({c.p, c.q});
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("slope normalization") {
    CHECK(normalize_slope(2, 4) == Slope{1, 2});
    CHECK(normalize_slope(-2, -4) == Slope{1, 2});
    CHECK(normalize_slope(1, -2) == Slope{-1, 2});
    CHECK(normalize_slope(-1, 2) == Slope{-1, 2});
    CHECK(normalize_slope(-3, 0) == Slope{1, 0});
    CHECK(normalize_slope(0, -5) == Slope{0, 1});
    CHECK(normalize_slope(7, 1) == Slope{7, 1});
    CHECK_THROWS_AS(normalize_slope(0, 0), InvalidInputError);
}

TEST_CASE("lattice validation rejects degenerate bases") {
    CHECK_THROWS_AS(validate_lattice({{1.0, 0.0}, {2.0, 0.0}, false}), InvalidInputError);
    CHECK_THROWS_AS(validate_lattice({{0.0, 0.0}, {0.0, 1.0}, false}), InvalidInputError);
    CHECK_NOTHROW(validate_lattice(hexagonal()));
}

TEST_CASE("slope lengths on hand-checked lattices") {
    const CuspLattice hex = hexagonal();
    CHECK(slope_length(hex, {1, 0}).length == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(slope_length(hex, {0, 1}).length == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(slope_length(hex, {-1, 1}).length == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(slope_length(hex, {1, 1}).length == doctest::Approx(kSqrt3).epsilon(1e-12));

    const CuspLattice sq = square(2.0);
    CHECK(slope_length(sq, {1, 0}).length == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(slope_length(sq, {1, 1}).length == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    // Non-canonical input measures its canonical representative.
    CHECK(slope_length(sq, {2, 4}).slope == Slope{1, 2});
}

TEST_CASE("intersection numbers") {
    CHECK(intersection_number({1, 0}, {0, 1}) == 1);
    CHECK(intersection_number({1, 0}, {5, 7}) == 7);
    CHECK(intersection_number({2, 3}, {3, 4}) == 1);
    CHECK(intersection_number({1, 2}, {1, 2}) == 0);
    CHECK(intersection_number({1, 2}, {-1, -2}) == 0);  // same class
    CHECK(intersection_number({1, 23}, {1, 0}) == 23);
}

TEST_CASE("area and the parallelogram identity") {
    CHECK(lattice_area(hexagonal()) == doctest::Approx(kSqrt3 / 2.0).epsilon(1e-12));
    CHECK(lattice_area(square(2.0)) == doctest::Approx(4.0).epsilon(1e-12));

    std::mt19937 rng(2026);
    for (int i = 0; i < 25; ++i) {
        const CuspLattice lat = random_admissible(rng);
        const ParallelogramReport rep = parallelogram_identity_check(lat, {1, 2}, {3, 1});
        CHECK(rep.delta == 5);
        CHECK(rep.consistent);
        CHECK(rep.spanned_area ==
              doctest::Approx(5.0 * rep.fundamental_area).epsilon(1e-9));
    }
    CHECK_THROWS_AS(parallelogram_identity_check(hexagonal(), {1, 2}, {-1, -2}), Error);
}

TEST_CASE("admissibility verdicts") {
    // Unit hexagonal: shortest passes, area sqrt(3)/2 < sqrt(3) fails.
    const AdmissibilityReport hex = check_admissibility(hexagonal(), 1.0);
    CHECK(hex.shortest == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(hex.shortest_ok);
    CHECK_FALSE(hex.area_ok);
    CHECK_FALSE(hex.admissible);

    const AdmissibilityReport sq = check_admissibility(square(2.0), 1.0);
    CHECK(sq.shortest == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(sq.area == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(sq.admissible);

    // Scaled hexagonal with area exactly sqrt(3): both clear at the bound.
    const double s = std::sqrt(2.0 / kSqrt3) * kSqrt3 / std::sqrt(kSqrt3);
    const CuspLattice hex2 = {{s, 0.0}, {0.5 * s, kSqrt3 / 2.0 * s}, false};
    const AdmissibilityReport rep = check_admissibility(hex2, 1.0);
    CHECK(rep.area == doctest::Approx(kSqrt3).epsilon(1e-9));
    CHECK(rep.admissible);
}

TEST_CASE("minimal slope and deterministic tie-break") {
    // Square lattice: (0, 1) and (1, 0) tie; lexicographic order wins.
    const SlopeMeasurement min = minimal_slope(square(2.0));
    CHECK(min.slope == Slope{0, 1});
    CHECK(min.length == doctest::Approx(2.0).epsilon(1e-12));

    const SlopeMeasurement hexmin = minimal_slope(hexagonal());
    CHECK(hexmin.length == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(hexmin.slope == Slope{-1, 1});  // (-1,1), (0,1), (1,0) tie at length 1
}

TEST_CASE("slope enumeration matches a brute-force oracle") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const CuspLattice lat = random_admissible(rng);
        const double max_len = 10.0;
        const auto got = enumerate_slopes(lat, max_len);
        const auto want = brute_slopes(lat, max_len);
        REQUIRE(got.size() == want.size());
        std::set<std::pair<long long, long long>> got_set;
        for (const auto& m : got) {
            got_set.insert({m.slope.p, m.slope.q});
            CHECK(m.length <= max_len + 1e-9);
            CHECK(m.length ==
                  doctest::Approx(norm(static_cast<double>(m.slope.p) * lat.v1 +
                                       static_cast<double>(m.slope.q) * lat.v2))
                      .epsilon(1e-12));
        }
        CHECK(got_set == want);
        // Sorted by (length, p, q).
        for (std::size_t i = 1; i < got.size(); ++i) {
            const bool len_sorted = got[i - 1].length <= got[i].length + 1e-15;
            CHECK(len_sorted);
        }
    }
}

TEST_CASE("enumeration on the 2x2 square lattice up to 2*pi") {
    const auto slopes = enumerate_slopes(square(2.0), 2.0 * 3.14159265358979323846);
    CHECK(slopes.size() == 8);
    const std::set<std::pair<long long, long long>> want = {
        {0, 1}, {1, 0}, {1, 1}, {-1, 1}, {1, 2}, {-1, 2}, {2, 1}, {-2, 1}};
    std::set<std::pair<long long, long long>> got;
    for (const auto& m : slopes) got.insert({m.slope.p, m.slope.q});
    CHECK(got == want);
}

TEST_CASE("length product inequality") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        CuspLattice lat = random_admissible(rng);
        lat.claimed_maximal = true;
        const LengthProductReport rep = verify_length_product(lat, {1, 0}, {4, 7}, 1.0);
        CHECK(rep.delta == 7);
        CHECK(rep.product == doctest::Approx(rep.l1 * rep.l2).epsilon(1e-12));
        CHECK(rep.bound == doctest::Approx(kSqrt3 * 7.0).epsilon(1e-12));
        CHECK(rep.holds);
        CHECK(rep.maximal_form_checked);
        CHECK(rep.maximal_form_holds);
    }
    // Inadmissible request: bound L larger than the shortest vector.
    CHECK_THROWS_AS(verify_length_product(square(2.0), {1, 0}, {0, 1}, 3.0), PreconditionError);
}
