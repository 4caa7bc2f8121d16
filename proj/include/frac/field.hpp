#ifndef FRAC_FIELD_HPP
#define FRAC_FIELD_HPP

#include "frac/common.hpp"

#include <array>

namespace frac {

/**
 * Uniform periodic grid on [0, boxlen)^dim, dim in {1,2}, n a power of two
 * per axis. Mode k per axis lives in [-n/2, n/2) and carries the physical
 * frequency 2*pi*k/boxlen.
 */
struct Grid {
    int dim = 1;
    int n = 0;
    double boxlen = 0.0;

    double spacing() const { return boxlen / n; }
    double freq_step() const { return 2.0 * pi / boxlen; }
    double nyquist() const { return pi * static_cast<double>(n) / boxlen; }
    std::size_t size() const {
        return dim == 1 ? static_cast<std::size_t>(n)
                        : static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    }
    long long k_of_index(int i) const { return i < n / 2 ? i : i - n; }
    int index_of_k(long long k) const { return static_cast<int>(k >= 0 ? k : k + n); }
    double freq_of(long long k) const { return freq_step() * static_cast<double>(k); }

    bool same_as(const Grid& o) const {
        return dim == o.dim && n == o.n && boxlen == o.boxlen;
    }
};

Grid make_grid(int dim, int n, double boxlen);

/** Point values on the grid, row-major (axis 0 outer) for dim 2. */
struct Field {
    Grid grid;
    std::vector<cd> v;
    bool is_real = false;

    cd& at(std::size_t i) { return v[i]; }
    const cd& at(std::size_t i) const { return v[i]; }
};

/** Coefficients in DFT bucket order; coeff k approximates the integral transform. */
struct Spectrum {
    Grid grid;
    std::vector<cd> c;
};

Field make_field(const Grid& g);

// h^dim * DFT: bucket k holds \int f e^{-i x.xi_k} dx up to periodization.
Spectrum forward(const Field& f);
// boxlen^{-dim} * sum of coefficients times e^{+i x.xi_k}. Inverse of forward.
Field inverse(const Spectrum& s);

// Position of flat site index i.
std::array<double, 2> site_of(const Grid& g, std::size_t i);
// Signed mode pair of flat bucket index i (second entry 0 when dim == 1).
std::array<long long, 2> modes_of(const Grid& g, std::size_t i);
std::array<double, 2> freqs_of(const Grid& g, std::size_t i);
std::size_t bucket_of(const Grid& g, long long k0, long long k1);

Field add(const Field& a, const Field& b);
Field sub(const Field& a, const Field& b);
Field mul(const Field& a, const Field& b);
Field scale(const Field& a, cd c);
Field conj_of(const Field& a);
Field real_part(const Field& a);

// Product on a 2x zero-padded grid, truncated back: the exact mode-space
// convolution of the two inputs restricted to the original lattice.
Field mul_dealiased(const Field& a, const Field& b);

double dc_coeff_abs(const Field& f);
double l2(const Field& f); // (h^dim sum |f|^2)^{1/2}, duplicated in norms for layering
double linf(const Field& f);
Field remove_dc(const Field& f);

using Generator = std::function<cd(const std::array<double, 2>&)>;

Field sample(const Grid& g, const Generator& gen);

// exp(-|x-center|^2 / (2 width^2)) with nearest-image distance
Generator gaussian(const Grid& g, std::array<double, 2> center, double width);
// compactly supported: exp(1 - 1/(1-r^2)) inside |x-center| < radius, 0 outside
Generator smooth_bump(const Grid& g, std::array<double, 2> center, double radius);
// e^{i xi_k . x} for integer modes k
Generator plane_wave(const Grid& g, std::array<long long, 2> k);

// Sum of 8 Gaussians with seeded random centers, widths, amplitudes and
// low-mode cosine phases; zero mode removed. Deterministic in (grid, seed).
Field random_smooth(const Grid& g, std::uint64_t seed);

// Spectrum-side construction: bucket k gets rule(k, xi_k). hermitian marks the
// result real-valued.
Field field_from_modes(const Grid& g,
                       const std::function<cd(const std::array<long long, 2>&,
                                              const std::array<double, 2>&)>& rule,
                       bool hermitian);

// Multiply every coefficient by rule(k, xi_k) and transform back.
// hermitian_rule: rule(-k) == conj(rule(k)), so realness survives.
Field map_spectrum(const Field& f,
                   const std::function<cd(const std::array<long long, 2>&,
                                          const std::array<double, 2>&)>& rule,
                   bool hermitian_rule);

} // namespace frac

#endif
