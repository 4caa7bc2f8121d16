#ifndef FRAC_NORMS_HPP
#define FRAC_NORMS_HPP

#include "frac/dyadic.hpp"

namespace frac {

// (h^dim sum |f|^p)^{1/p}; p = infinity (use lp_inf) takes the max
inline constexpr double lp_inf = std::numeric_limits<double>::infinity();
double lp_norm(const Field& f, double p);

// sup over dyadic cubes (side 2^t h up to the full box, aligned and
// half-shifted tilings, periodic wrap) of the mean absolute deviation
double bmo_norm(const Field& f);

/** Band-built norm value; combining values from different families is an error. */
struct BandNormValue {
    double value = 0.0;
    std::string family_id;
};

double band_ratio(const BandNormValue& num, const BandNormValue& den);

// sup_j ||P_j f||_inf over the active bands
BandNormValue besov0_norm(const LPFamily& fam, const Field& f);
// sup_j 2^{js} ||P_j f||_p over the active bands
BandNormValue besov_norm(const LPFamily& fam, const Field& f, double s, double p);
// || sqrt(sum_j |P_j f|^2) ||_p over the active bands
BandNormValue hardy_sq_norm(const LPFamily& fam, const Field& f, double p);

// pointwise sup over dyadic radii r in {h, 2h, ..., L/2} of window averages
// of |f| (axis-aligned square windows; the window/disk ratio folds into the
// empirical constants reported by callers)
Field maximal(const Field& f);

} // namespace frac

#endif
