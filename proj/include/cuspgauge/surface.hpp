#pragma once

#include <cstdint>

namespace cuspgauge {

// genus counts handles when orientable, crosscaps otherwise.
struct SurfaceData {
    int genus = 0;
    int boundary_count = 0;
    bool orientable = true;
};

// 2 - 2g - b (orientable) or 2 - g - b (non-orientable).
int euler_characteristic(const SurfaceData& surf);

// Hyperbolic area -2 pi chi; requires chi < 0.
double gauss_bonnet_area(int euler);

// Essential-surface persistence audit: the data is consistent with the
// surface remaining essential iff l(s) * |intersection curves| < -2 pi chi
// strictly (boundary cases fail).
struct SurfaceAudit {
    int euler = 0;
    double area = 0.0;
    double lhs = 0.0;
    bool consistent = false;
    double max_admissible_length = 0.0;  // area / curves
};
SurfaceAudit surface_length_audit(double slope_length, long long intersection_curves,
                                  const SurfaceData& surf);

// Genus/slope trade-off for punctured surfaces in a one-cusped manifold:
// |q| < 4 pi^2 genus / sqrt(3) strictly, plus the intermediate bound
// l(p/q) < 2 pi genus. Integer boundaries extracted with a 1e-9 exactness
// guard.
struct GenusSlopeBound {
    int genus = 0;
    long long max_q = 0;          // largest |q| compatible with this genus
    double length_bound = 0.0;    // 2 pi genus
    long long q = 0;
    int min_genus = 0;            // smallest genus compatible with this |q|
};
GenusSlopeBound max_q_for_genus(int genus);
GenusSlopeBound min_genus_for_q(long long q);

} // namespace cuspgauge
