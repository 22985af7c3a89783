#include "cuspgauge/surface.hpp"

#include "cuspgauge/errors.hpp"
#include "cuspgauge/filling.hpp"
#include "cuspgauge/tolerances.hpp"

#include <cmath>
#include <sstream>

namespace cuspgauge {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;
constexpr double kPi = 3.14159265358979323846;
// Genus coefficient in the |q| trade-off.
constexpr double kQCoefficient = 4.0 * kPi * kPi / kSqrt3;
// Exactness guard for integer boundary extraction under a strict inequality.
constexpr double kIntegerGuard = 1e-9;

void validate_surface(const SurfaceData& surf) {
    if (surf.genus < 0 || surf.boundary_count < 0) {
        throw InvalidInputError("genus and boundary count must be >= 0");
    }
    if (!surf.orientable && surf.genus == 0) {
        throw InvalidInputError("non-orientable surfaces need at least one crosscap");
    }
}

// Largest integer strictly below x; values within the guard of an integer
// count as attaining it.
long long strict_floor(double x) {
    const double nearest = std::round(x);
    if (std::abs(x - nearest) <= kIntegerGuard) return static_cast<long long>(nearest) - 1;
    return static_cast<long long>(std::floor(x));
}

} // namespace

int euler_characteristic(const SurfaceData& surf) {
    validate_surface(surf);
    return surf.orientable ? 2 - 2 * surf.genus - surf.boundary_count
                           : 2 - surf.genus - surf.boundary_count;
}

double gauss_bonnet_area(int euler) {
    if (euler >= 0) {
        std::ostringstream msg;
        msg << "not a hyperbolic surface: euler characteristic " << euler << " >= 0";
        throw PreconditionError(msg.str());
    }
    return -kTwoPi * static_cast<double>(euler);
}

SurfaceAudit surface_length_audit(double slope_length, long long intersection_curves,
                                  const SurfaceData& surf) {
    if (!(slope_length > 0.0) || !std::isfinite(slope_length)) {
        throw InvalidInputError("slope length must be positive and finite");
    }
    if (intersection_curves < 1) {
        throw InvalidInputError("intersection curve count must be >= 1");
    }
    SurfaceAudit audit;
    audit.euler = euler_characteristic(surf);
    audit.area = gauss_bonnet_area(audit.euler);
    audit.lhs = slope_length * static_cast<double>(intersection_curves);
    // Strict: equality (and doubt at the tolerance) is inconsistent.
    audit.consistent = strictly_above(audit.area, audit.lhs, geom_tol());
    audit.max_admissible_length = audit.area / static_cast<double>(intersection_curves);
    return audit;
}

GenusSlopeBound max_q_for_genus(int genus) {
    if (genus < 1) {
        throw InvalidInputError("genus must be >= 1: a genus-0 spanning surface is impossible "
                                "for these fillings");
    }
    GenusSlopeBound bound;
    bound.genus = genus;
    bound.max_q = strict_floor(kQCoefficient * static_cast<double>(genus));
    bound.length_bound = kTwoPi * static_cast<double>(genus);
    bound.q = bound.max_q;
    bound.min_genus = genus;
    return bound;
}

GenusSlopeBound min_genus_for_q(long long q) {
    q = std::llabs(q);
    if (q < 1) throw InvalidInputError("|q| must be >= 1");
    GenusSlopeBound bound;
    bound.q = q;
    // Smallest genus with |q| strictly below the coefficient times genus.
    const double ratio = static_cast<double>(q) / kQCoefficient;
    long long g = strict_floor(ratio) + 1;
    while (!(kQCoefficient * static_cast<double>(g) > static_cast<double>(q) + kIntegerGuard)) ++g;
    bound.min_genus = static_cast<int>(g);
    bound.genus = bound.min_genus;
    bound.max_q = strict_floor(kQCoefficient * static_cast<double>(g));
    bound.length_bound = kTwoPi * static_cast<double>(g);
    return bound;
}

} // namespace cuspgauge
