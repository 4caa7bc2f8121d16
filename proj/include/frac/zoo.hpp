#ifndef FRAC_ZOO_HPP
#define FRAC_ZOO_HPP

#include "frac/field.hpp"

namespace frac {

/**
 * C^2 annular spectral profile: a quintic plateau bump in |xi| supported on
 * (lo, hi), optionally tilted by 1 + angular * sin(2 theta) in dim 2. The
 * tilt is even under xi -> -xi so fields built from it stay real; it buys a
 * nonzero xi1*xi2 moment while leaving the plain mass unchanged.
 */
struct AnnularProfile {
    double lo = 0.55;
    double hi = 0.95;
    double angular = 0.0;

    double radial(double rho) const;
    double eval(const std::array<double, 2>& xi, int dim) const;
};

AnnularProfile default_annular();    // dim-1 families
AnnularProfile default_annular_2d(); // tilted so the xi1*xi2 moment is comparable to the mass

// Inverse transform of the profile sampled at 2^{-scale} xi: the base block
// every dyadic family below dilates. Throws when no lattice frequency lands
// inside the annulus.
Field annular_bump(const Grid& g, const AnnularProfile& prof, int scale = 0);

// f(2^j x) by exact mode relocation: coeff(2^j k) = coeff_f(k), j >= 0.
// Throws instead of clipping when a carried mode would pass the lattice edge.
Field dyadic_dilate(const Field& f, int j);

// sum_{j=1}^{N} (1/j) base(2^j x); the value at the origin is H_N * base(0)
// exactly, H_N the harmonic number
Field log_stack(const Field& base, int N);

// sum_{j=1}^{N} (1/j) 2^{-j} (inverse-Laplacian d_1 base)(2^j x); in dim 1
// d_1 of it at the origin is H_N * base(0) exactly
Field grad_log_stack(const Field& base, int N);

// k^{-s} * bump(x) * cos(xi_k x_1) for the lattice frequency of mode k
Field modulated_bump(const Field& bump, long long k_mode, double s);

// sum_{j=1}^{N} j^{-1/2} e^{i 4^j x}; every 4^j must be a lattice frequency
Field lacunary(const Grid& g, int N);

// sum_{j=2}^{J} j^{-(1/2+delta)} lambda_j^{1/2} env(lambda_j x) e^{i 2^j x_1},
// lambda_j = j^eps, env a smooth lowpass envelope; needs 1/10 > eps >= 4 delta > 0.
// real_variant keeps the real part (cosine carriers). The low terms anchor
// the L2 mass, so truncation level sweeps move the square function without
// moving ||f||_2 much.
Field chirp_stack(const Grid& g, double delta, double eps, int J, bool real_variant);

/** Largest ball around the maximum of |f| on which |f| stays above frac*max. */
struct PlateauWindow {
    std::array<double, 2> center{0.0, 0.0};
    double radius = 0.0;
    double level = 0.0;
};
PlateauWindow plateau_of(const Field& f, double frac = 0.5);

/**
 * Divergence-free pair: base flow u = (-d_2 phi, d_1 phi) from the stacked
 * stream function phi = sum_{l=1}^{m} (1/l) 4^{-(l-1)} base(2^{l-1} x), base
 * the dim-2 annular block at scale 3, plus a perturbed flow whose extra
 * stream is k^{-(1+s)} sin(xi_k x_1) b(x) with b a bump centered on the
 * plateau of |d_1 d_2 phi| and scaled to ||b||_p = bscale * ||J^s u_base||_p.
 */
struct DivfreePair {
    std::array<Field, 2> u_base;
    std::array<Field, 2> u_pert; // u_base plus the modulated correction
    Field stream;
    Field d12_stream;
    double d12_at0 = 0.0; // equals H_m * (d_1 d_2 base)(0) exactly
    double base0 = 0.0;   // base block value at the origin
    std::array<double, 2> center{0.0, 0.0};
    double radius = 0.0;
    double b_norm = 0.0;
};

DivfreePair divfree_pair(const Grid& g, const AnnularProfile& prof, int m, long long k_mode,
                         double s, double p, double bscale = 0.01);

} // namespace frac

#endif
