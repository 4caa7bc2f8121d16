#include "frac/norms.hpp"

#include "require.hpp"

#include <cmath>

using namespace frac;

static void lp_basics() {
    Grid g = make_grid(1, 128, 4.0);
    Field f = random_smooth(g, 31);
    Field h = random_smooth(g, 32);
    double direct = 0.0;
    for (const cd& z : f.v) direct += std::pow(std::abs(z), 4.0);
    direct = std::pow(g.spacing() * direct, 0.25);
    REQUIRE_NEAR(lp_norm(f, 4.0), direct, 1e-12 * direct, "p=4 against the raw sum");
    REQUIRE_NEAR(lp_norm(f, lp_inf), linf(f), 0.0, "p=inf is the sup");
    REQUIRE_NEAR(lp_norm(scale(f, 3.0), 2.5), 3.0 * lp_norm(f, 2.5),
                 1e-12 * lp_norm(f, 2.5), "homogeneity");
    REQUIRE(lp_norm(add(f, h), 3.0) <= lp_norm(f, 3.0) + lp_norm(h, 3.0) + 1e-12,
            "triangle inequality");
    REQUIRE_THROWS_AS(lp_norm(f, 0.0), grid_error, "nonpositive exponent");
    REQUIRE_THROWS_AS(lp_norm(f, -2.0), grid_error, "negative exponent");
    pass("lp_basics");
}

static void oscillation_norm() {
    Grid g = make_grid(1, 256, 8.0);
    Field one = sample(g, [](const std::array<double, 2>&) { return cd(3.0, 0.0); });
    REQUIRE(bmo_norm(one) <= 1e-14, "constants have no oscillation");
    Field f = random_smooth(g, 77);
    double b = bmo_norm(f);
    REQUIRE(b > 0.0, "oscillating field has positive oscillation");
    REQUIRE(b <= 2.0 * linf(f) * (1.0 + 1e-12), "mean deviation is capped by the sup");
    double shifted = bmo_norm(add(f, one));
    REQUIRE(std::abs(shifted - b) <= 1e-12 * (1.0 + b), "shift invariance");
    Grid g2 = make_grid(2, 32, 8.0);
    Field f2 = random_smooth(g2, 78);
    REQUIRE(bmo_norm(f2) <= 2.0 * linf(f2) * (1.0 + 1e-12), "dim 2 cap");
    pass("oscillation_norm");
}

static void single_mode_band_norms() {
    // freq_step 1: mode 4 sits exactly at the dyadic point 2^2, so band 2 is
    // the only band that sees it and its multiplier there is exactly 1
    Grid g = make_grid(1, 256, 2.0 * pi);
    Field f = sample(g, [](const std::array<double, 2>& x) {
        return cd(std::cos(4.0 * x[0]), 0.0);
    });
    LPFamily fam = make_family(RampKind::poly5);
    double l2f = std::sqrt(pi);
    REQUIRE_NEAR(lp_norm(f, 2.0), l2f, 1e-12, "grid quadrature of cos^2 is exact");
    REQUIRE_NEAR(besov0_norm(fam, f).value, 1.0, 1e-11, "sup band norm of one mode");
    double s = 0.8;
    REQUIRE_NEAR(besov_norm(fam, f, s, 2.0).value, std::pow(2.0, 2.0 * s) * l2f,
                 1e-11, "weighted band norm of one mode");
    REQUIRE_NEAR(hardy_sq_norm(fam, f, 2.0).value, l2f, 1e-11,
                 "square function of one mode");
    pass("single_mode_band_norms");
}

static void square_function_identity() {
    Grid g = make_grid(1, 256, 16.0);
    LPFamily fam = make_family(RampKind::poly5);
    Field f = random_smooth(g, 99);
    double sq = hardy_sq_norm(fam, f, 2.0).value;
    BandRange br = band_range(g);
    double direct = 0.0;
    for (int j = br.jmin; j <= br.jmax; ++j) {
        double nj = l2(project(fam, f, j));
        direct += nj * nj;
    }
    REQUIRE_NEAR(sq * sq, direct, 1e-12 * direct,
                 "p=2 square function collapses to the band energy sum");
    pass("square_function_identity");
}

static void family_tagging() {
    Grid g = make_grid(1, 128, 8.0);
    Field f = random_smooth(g, 5);
    LPFamily a = make_family(RampKind::poly5);
    LPFamily b = make_family(RampKind::exp_flat);
    BandNormValue num = besov0_norm(a, f);
    BandNormValue den = besov0_norm(a, scale(f, 2.0));
    REQUIRE_NEAR(band_ratio(num, den), 0.5, 1e-12, "same family divides fine");
    BandNormValue other = besov0_norm(b, f);
    REQUIRE_THROWS_AS(band_ratio(num, other), grid_error,
                      "values from different families never combine");
    pass("family_tagging");
}

static void maximal_window_bounds() {
    Grid g = make_grid(1, 256, 8.0);
    Field f = random_smooth(g, 55);
    Field m = maximal(f);
    double sup = linf(f);
    for (std::size_t i = 0; i < g.size(); ++i) {
        // the radius-1 window alone gives a third of the center value
        REQUIRE(m.v[i].real() >= std::abs(f.v[i]) / 3.0 - 1e-13,
                "maximal dominates a third of the field");
        REQUIRE(m.v[i].real() <= sup * (1.0 + 1e-12), "window averages stay under the sup");
    }
    Field one = sample(g, [](const std::array<double, 2>&) { return cd(2.0, 0.0); });
    Field mo = maximal(one);
    for (std::size_t i = 0; i < g.size(); ++i)
        REQUIRE_NEAR(mo.v[i].real(), 2.0, 1e-13, "constants are fixed points");
    Field ms = maximal(scale(f, 4.0));
    for (std::size_t i = 0; i < g.size(); ++i)
        REQUIRE_NEAR(ms.v[i].real(), 4.0 * m.v[i].real(), 1e-12 * sup,
                     "positive homogeneity");
    pass("maximal_window_bounds");
}

int main() {
    lp_basics();
    oscillation_norm();
    single_mode_band_norms();
    square_function_identity();
    family_tagging();
    maximal_window_bounds();
    return 0;
}
