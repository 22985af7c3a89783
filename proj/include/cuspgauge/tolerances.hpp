#pragma once

#include <cmath>
#include <algorithm>

namespace cuspgauge {

// Global comparison tolerances. geometry covers lattice arithmetic and
// threshold comparisons (relative, 1e-9 default); ode covers cone-angle and
// profile-consistency checks (1e-6 default). CUSPGAUGE_TOL="GEOM[,ODE]"
// overrides both at CLI startup.
struct Tolerances {
    double geometry = 1e-9;
    double ode = 1e-6;

    static Tolerances from_env();
};

Tolerances& active_tolerances();

inline double geom_tol() { return active_tolerances().geometry; }
inline double ode_tol() { return active_tolerances().ode; }

// |a - b| within tol relative to max(1, |a|, |b|).
inline bool approx_eq(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// a >= b up to relative slack.
inline bool geq_tol(double a, double b, double tol) {
    return a >= b - tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Strict threshold in the conservative direction: value must clear the
// threshold by the tolerance margin, so doubtful cases fail.
inline bool strictly_above(double value, double threshold, double tol) {
    return value > threshold + tol * std::max({1.0, std::abs(value), std::abs(threshold)});
}

// Inclusive threshold: the boundary itself passes, values below it by more
// than the tolerance do not.
inline bool at_least(double value, double threshold, double tol) {
    return value >= threshold - tol * std::max({1.0, std::abs(value), std::abs(threshold)});
}

} // namespace cuspgauge
