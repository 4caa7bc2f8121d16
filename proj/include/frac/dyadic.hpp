#ifndef FRAC_DYADIC_HPP
#define FRAC_DYADIC_HPP

#include "frac/field.hpp"

#include <string>

namespace frac {

enum class RampKind { poly5, exp_flat };

/**
 * Radial band family. phi0 is 1 on rho <= 1, 0 on rho >= 7/6, monotone on the
 * ramp; phi(rho) = phi0(rho) - phi0(2 rho) is supported in [1/2, 7/6] and the
 * dilates phi(2^{-j} rho) telescope to 1 for rho > 0.
 *
 * poly5: quintic ramp, C^2 at the seams. exp_flat: exp(-1/t) glue, flat seams.
 */
struct LPFamily {
    RampKind kind = RampKind::poly5;
    int fat_lo = 2; // extra bands below in the fattened projection
    int fat_hi = 2; // extra bands above
    std::string id = "poly5:2:2";

    double phi0(double rho) const;
    double phi(double rho) const;
    // sum_j phi(2^{-j} rho)^2, the square-function weight; fixed per family
    double sq_sum(double rho) const;
};

LPFamily make_family(RampKind kind, int fat_lo = 2, int fat_hi = 2);

struct BandRange {
    int jmin; // lowest band with a nonzero multiplier on the grid
    int jmax; // highest band fully under the Nyquist frequency
};

BandRange band_range(const Grid& g);

// True when band j's multiplier vanishes at every resolved frequency.
bool band_provably_zero(const Grid& g, int j);

Field project(const LPFamily& fam, const Field& f, int j);     // P_j
Field project_le(const LPFamily& fam, const Field& f, int j);  // phi0(2^{-j}|xi|), keeps the zero mode
Field project_gt(const LPFamily& fam, const Field& f, int j);  // Id - P_{<=j}
// sum of P_{j+l} for l in [-fat_lo, fat_hi]; bands that are provably zero drop out
Field fatten(const LPFamily& fam, const Field& f, int j);

struct BonyPieces {
    Field diagonal; // sum_i f_i * (g_{i-1}+g_i+g_{i+1})
    Field lowhigh;  // sum_i P_{<=i-2} f * g_i
    Field highlow;  // sum_i P_{<=i-2} g * f_i
};

// Paraproduct split of f*g over the active bands. The zero mode rides with the
// lowest band so the three pieces sum to the dealiased product exactly; all
// internal products are dealiased.
BonyPieces bony_split(const LPFamily& fam, const Field& f, const Field& g);

} // namespace frac

#endif
