#include "frac/field.hpp"

#include "require.hpp"

#include <complex>

using namespace frac;

static void grid_mode_maps() {
    Grid g = make_grid(1, 16, 8.0);
    for (int i = 0; i < g.n; ++i)
        REQUIRE(g.index_of_k(g.k_of_index(i)) == i, "mode map must roundtrip");
    REQUIRE(g.k_of_index(8) == -8, "upper half wraps negative");
    REQUIRE_NEAR(g.freq_of(3), 3.0 * 2.0 * pi / 8.0, 1e-15, "frequency step");
    REQUIRE_NEAR(g.nyquist(), pi * 16.0 / 8.0, 1e-15, "nyquist");
    Grid g2 = make_grid(2, 8, 4.0);
    for (std::size_t b = 0; b < g2.size(); ++b) {
        auto k = modes_of(g2, b);
        REQUIRE(bucket_of(g2, k[0], k[1]) == b, "bucket map must roundtrip");
    }
    pass("grid_mode_maps");
}

static void bad_grids_rejected() {
    REQUIRE_THROWS_AS(make_grid(3, 16, 1.0), grid_error, "dim 3");
    REQUIRE_THROWS_AS(make_grid(1, 48, 1.0), grid_error, "non power of two");
    REQUIRE_THROWS_AS(make_grid(1, 4, 1.0), grid_error, "too small");
    REQUIRE_THROWS_AS(make_grid(1, 64, 0.0), grid_error, "empty box");
    Grid a = make_grid(1, 16, 1.0);
    Grid b = make_grid(1, 32, 1.0);
    REQUIRE_THROWS_AS(add(random_smooth(a, 1), random_smooth(b, 1)), grid_error,
                      "mismatched grids");
    pass("bad_grids_rejected");
}

static void roundtrip_and_parseval() {
    for (int dim : {1, 2}) {
        Grid g = make_grid(dim, dim == 1 ? 128 : 16, 7.0);
        Field f = random_smooth(g, 42 + dim);
        Field back = inverse(forward(f));
        double rel = l2(sub(f, back)) / l2(f);
        REQUIRE(rel <= 1e-13, "transform roundtrip dim " + std::to_string(dim));
        Spectrum sp = forward(f);
        double coeff_mass = 0.0;
        for (const auto& c : sp.c) coeff_mass += std::norm(c);
        double spectral = std::sqrt(coeff_mass * std::pow(g.boxlen, -g.dim));
        REQUIRE_NEAR(spectral, l2(f), 1e-12 * l2(f),
                     "coefficient mass vs grid mass, dim " + std::to_string(dim));
    }
    pass("roundtrip_and_parseval");
}

static void plane_wave_coefficients() {
    Grid g = make_grid(1, 32, 4.0);
    Spectrum sp = forward(sample(g, plane_wave(g, {5, 0})));
    for (std::size_t b = 0; b < g.size(); ++b) {
        cd want = modes_of(g, b)[0] == 5 ? cd(g.boxlen, 0.0) : cd(0.0, 0.0);
        REQUIRE(std::abs(sp.c[b] - want) <= 1e-12 * g.boxlen,
                "coefficient placement at bucket " + std::to_string(b));
    }
    pass("plane_wave_coefficients");
}

static void real_fields_have_hermitian_spectra() {
    Grid g = make_grid(2, 16, 5.0);
    Field f = random_smooth(g, 4);
    REQUIRE(f.is_real, "random_smooth must mark real");
    Spectrum sp = forward(f);
    double scale_ref = 0.0;
    for (const auto& c : sp.c) scale_ref = std::max(scale_ref, std::abs(c));
    for (std::size_t b = 0; b < g.size(); ++b) {
        auto k = modes_of(g, b);
        if (k[0] == -g.n / 2 || k[1] == -g.n / 2) continue; // unpaired edge bins
        cd mirror = sp.c[bucket_of(g, -k[0], -k[1])];
        REQUIRE(std::abs(sp.c[b] - std::conj(mirror)) <= 1e-12 * scale_ref,
                "spectrum must be conjugate-symmetric");
    }
    pass("real_fields_have_hermitian_spectra");
}

static void dealiased_product_is_mode_convolution() {
    Grid g = make_grid(1, 32, 4.0);
    Field f = sample(g, plane_wave(g, {3, 0}));
    Field h = sample(g, plane_wave(g, {5, 0}));
    Spectrum sp = forward(mul_dealiased(f, h));
    for (std::size_t b = 0; b < g.size(); ++b) {
        cd want = modes_of(g, b)[0] == 8 ? cd(g.boxlen, 0.0) : cd(0.0, 0.0);
        REQUIRE(std::abs(sp.c[b] - want) <= 1e-11 * g.boxlen, "product mode placement");
    }
    // 13 + 13 = 26 has no bucket on n = 32; the plain grid product wraps it
    Field w = sample(g, plane_wave(g, {13, 0}));
    REQUIRE(l2(mul_dealiased(w, w)) <= 1e-12, "unrepresentable product must vanish");
    REQUIRE(l2(mul(w, w)) > 0.5, "plain product aliases instead");
    pass("dealiased_product_is_mode_convolution");
}

static void seeded_fields_deterministic() {
    Grid g = make_grid(1, 64, 9.0);
    Field a = random_smooth(g, 7);
    Field b = random_smooth(g, 7);
    for (std::size_t i = 0; i < a.v.size(); ++i)
        REQUIRE(a.v[i] == b.v[i], "same seed must reproduce bitwise");
    REQUIRE(l2(sub(a, random_smooth(g, 8))) > 1e-3, "different seeds must differ");
    REQUIRE(dc_coeff_abs(a) <= 1e-12 * l2(a), "random_smooth keeps zero mean");
    Field shifted = add(a, sample(g, [](const std::array<double, 2>&) {
                            return cd(2.5, 0.0);
                        }));
    REQUIRE(dc_coeff_abs(shifted) > 1.0, "constant shows in the zero mode");
    REQUIRE(dc_coeff_abs(remove_dc(shifted)) <= 1e-12, "remove_dc clears it");
    pass("seeded_fields_deterministic");
}

static void spectrum_side_builders() {
    Grid g = make_grid(1, 64, 2.0 * pi);
    Field f = field_from_modes(
        g,
        [](const std::array<long long, 2>& k, const std::array<double, 2>&) {
            return std::abs(k[0]) == 2 ? cd(pi, 0.0) : cd(0.0, 0.0);
        },
        true);
    REQUIRE(f.is_real, "hermitian rule marks real");
    // both +-2 carry pi, so f = cos(2x) on the 2 pi box
    for (std::size_t i = 0; i < f.v.size(); i += 5) {
        double x = site_of(g, i)[0];
        REQUIRE_NEAR(f.v[i].real(), std::cos(2.0 * x), 1e-12, "field_from_modes values");
    }
    Field doubled = map_spectrum(
        f, [](const std::array<long long, 2>&, const std::array<double, 2>&) {
            return cd(2.0, 0.0);
        },
        true);
    REQUIRE(l2(sub(doubled, scale(f, cd(2.0, 0.0)))) <= 1e-13, "map_spectrum scaling");
    pass("spectrum_side_builders");
}

int main() {
    grid_mode_maps();
    bad_grids_rejected();
    roundtrip_and_parseval();
    plane_wave_coefficients();
    real_fields_have_hermitian_spectra();
    dealiased_product_is_mode_convolution();
    seeded_fields_deterministic();
    spectrum_side_builders();
    return 0;
}
