#include "frac/symbols.hpp"

#include "require.hpp"

#include <cmath>
#include <complex>

using namespace frac;

namespace {

double rel_err(const Field& got, const Field& want) {
    double den = l2(want);
    return den > 0.0 ? l2(sub(got, want)) / den : l2(got);
}

double max_imag(const Field& f) {
    double m = 0.0;
    for (const cd& z : f.v) m = std::max(m, std::abs(z.imag()));
    return m;
}

} // namespace

static void multi_index_lattice() {
    auto idx = multi_indices_upto(2, 2);
    REQUIRE(idx.size() == 6, "dim 2 order <= 2 has six indices");
    for (const auto& a : idx) REQUIRE(a.order() <= 2, "order bound respected");
    MultiIndex lo{2, {1, 0}};
    MultiIndex hi{2, {2, 1}};
    REQUIRE(lo.leq(hi), "componentwise order");
    REQUIRE(!hi.leq(lo), "componentwise order is strict here");
    MultiIndex fct{2, {2, 1}};
    REQUIRE_NEAR(fct.factorial(), 2.0, 1e-15, "alpha! = 2!*1!");
    REQUIRE(multi_indices_upto(1, 3).size() == 4, "dim 1 order <= 3 has four indices");
    pass("multi_index_lattice");
}

static void multipliers_on_plane_waves() {
    Grid g = make_grid(1, 64, 2.0 * pi); // freq_step 1, so mode k sits at xi = k
    Field w = sample(g, plane_wave(g, {3, 0}));
    double s = 0.7;
    REQUIRE(rel_err(apply(js(1, s), w), scale(w, std::pow(10.0, s / 2.0))) <= 1e-12,
            "bracket weight on a single mode");
    REQUIRE(rel_err(apply(ds(1, 1.2), w), scale(w, std::pow(3.0, 1.2))) <= 1e-12,
            "homogeneous weight on a single mode");
    REQUIRE(rel_err(apply(partial(1, 0), w), scale(w, cd(0.0, 3.0))) <= 1e-12,
            "first derivative on a single mode");
    REQUIRE(rel_err(apply(js_partial(1, 0.8, 0), w),
                    scale(w, cd(0.0, 3.0) * std::pow(10.0, 0.4))) <= 1e-12,
            "weighted derivative on a single mode");
    Grid g2 = make_grid(2, 16, 2.0 * pi);
    Field w2 = sample(g2, plane_wave(g2, {2, 5}));
    REQUIRE(rel_err(apply(partial(2, 1), w2), scale(w2, cd(0.0, 5.0))) <= 1e-12,
            "axis-1 derivative in dim 2");
    pass("multipliers_on_plane_waves");
}

static void zero_mode_policy() {
    Grid g = make_grid(1, 64, 4.0);
    Field one = sample(g, [](const std::array<double, 2>&) { return cd(1.0, 0.0); });
    REQUIRE(l2(apply(js_tilde(1, 1.4), one)) <= 1e-13, "<xi>^s - 1 kills constants");
    Field f = random_smooth(g, 7); // zero mode removed by construction
    Field lap = apply(partial(1, 0), apply(partial(1, 0), f));
    REQUIRE(rel_err(apply(inv_laplacian(1), lap), f) <= 1e-12,
            "inverse laplacian inverts the laplacian off the zero mode");
    Field shifted = add(f, one);
    REQUIRE_THROWS_AS(apply(inv_laplacian(1), shifted), dc_error,
                      "negative degree refuses a live zero mode");
    // degree-zero symbols silently drop the zero mode instead
    Field r = apply(ds(1, 0.0), shifted);
    REQUIRE(dc_coeff_abs(r) <= 1e-12 * l2(r), "degree zero drops the zero mode");
    pass("zero_mode_policy");
}

static void hilbert_and_riesz() {
    Grid g = make_grid(1, 128, 2.0 * pi);
    double k = 5.0;
    Field s5 = sample(g, [k](const std::array<double, 2>& x) {
        return cd(std::sin(k * x[0]), 0.0);
    });
    Field c5 = sample(g, [k](const std::array<double, 2>& x) {
        return cd(std::cos(k * x[0]), 0.0);
    });
    REQUIRE(rel_err(apply(hilbert(), s5), scale(c5, -1.0)) <= 1e-12,
            "hilbert maps sin to -cos");
    REQUIRE(rel_err(apply(hilbert(), c5), s5) <= 1e-12, "hilbert maps cos to sin");
    Grid g2 = make_grid(2, 32, 5.0);
    Field f = random_smooth(g2, 19);
    Field tr = add(apply(riesz(0, 0), f), apply(riesz(1, 1), f));
    REQUIRE(rel_err(tr, scale(f, -1.0)) <= 1e-12,
            "riesz diagonal sums to minus the identity off the zero mode");
    REQUIRE_THROWS_AS(apply(hilbert(), f), grid_error, "hilbert is one dimensional");
    pass("hilbert_and_riesz");
}

static void term_symbol_calculus() {
    TermSymbol base = term_symbol(TermSymbol::Radial::bracket, 2,
                                  {{cd(1.0, 0.0), {1, 0}, 1.5}});
    TermSymbol der = base.d(1);
    double h = 1e-6;
    std::array<double, 2> xi{0.8, -1.3};
    std::array<double, 2> up{xi[0], xi[1] + h};
    std::array<double, 2> dn{xi[0], xi[1] - h};
    cd fd = (base.eval(up) - base.eval(dn)) / (2.0 * h);
    REQUIRE(std::abs(der.eval(xi) - fd) <= 1e-6 * (1.0 + std::abs(fd)),
            "symbol derivative matches finite differences");
    REQUIRE(!base.hermitian(), "real coefficient on an odd monomial flips sign at -xi");
    TermSymbol grad_like = term_symbol(TermSymbol::Radial::bracket, 2,
                                       {{cd(0.0, 1.0), {1, 0}, 0.0}});
    REQUIRE(grad_like.hermitian(), "i xi_0 is hermitian");
    REQUIRE_NEAR(base.min_degree(), 2.5, 1e-15, "degree bookkeeping");
    // i^{-1} d/dxi |xi|^s in dim 1, evaluated off the origin
    double s = 1.5;
    FrequencySymbol da = dsalpha(1, s, MultiIndex{1, {1, 0}});
    cd got = da.eval_at({2, 0}, {2.0, 0.0});
    cd want = cd(0.0, -1.0) * s * std::pow(2.0, s - 1.0);
    REQUIRE(std::abs(got - want) <= 1e-12, "first derivative weight closed form");
    pass("term_symbol_calculus");
}

static void bessel_weight_closed_form() {
    double s = 1.7;
    for (int l = 0; l < 2; ++l)
        for (int m = 0; m < 2; ++m) {
            FrequencySymbol b = bessel_deriv(2, s, l, m);
            std::array<double, 2> xi{1.2, -0.7};
            double br = 1.0 + xi[0] * xi[0] + xi[1] * xi[1];
            double want = s * std::pow(br, 0.5 * s - 1.0) * xi[l] * xi[m] +
                          (l == m ? std::pow(br, 0.5 * s) - 1.0 : 0.0);
            cd got = b.eval_at({0, 0}, xi);
            REQUIRE(std::abs(got - cd(want, 0.0)) <= 1e-12,
                    "gradient weight closed form");
        }
    pass("bessel_weight_closed_form");
}

static void realness_and_tables() {
    Grid g = make_grid(1, 128, 6.0);
    Field f = random_smooth(g, 23);
    REQUIRE(max_imag(apply(js(1, 1.3), f)) <= 1e-12 * l2(f),
            "hermitian multiplier keeps the field real");
    REQUIRE(max_imag(apply(hilbert(), f)) <= 1e-12 * l2(f),
            "hilbert keeps the field real");
    std::vector<cd> vals(g.size(), cd(2.0, 0.0));
    FrequencySymbol tab = tabulated(g, vals, "double");
    REQUIRE(rel_err(apply(tab, f), scale(f, 2.0)) <= 1e-13, "tabulated application");
    Grid other = make_grid(1, 64, 6.0);
    REQUIRE_THROWS_AS(apply(tab, random_smooth(other, 23)), grid_error,
                      "tables are bound to one grid");
    REQUIRE_THROWS_AS(tabulated(g, std::vector<cd>(3), "short"), grid_error,
                      "table length must match the grid");
    pass("realness_and_tables");
}

static void band_kernels() {
    Grid g = make_grid(1, 512, 32.0);
    LPFamily fam = make_family(RampKind::poly5);
    Field ker = kernel_of(js(1, 1.5), fam, g, 2);
    REQUIRE(dc_coeff_abs(ker) <= 1e-12 * l2(ker), "band kernels have no mean");
    REQUIRE(max_imag(ker) <= 1e-12 * linf(ker), "band kernels are real");
    REQUIRE(linf(ker) > 0.0, "active band kernel is nontrivial");
    pass("band_kernels");
}

int main() {
    multi_index_lattice();
    multipliers_on_plane_waves();
    zero_mode_policy();
    hilbert_and_riesz();
    term_symbol_calculus();
    bessel_weight_closed_form();
    realness_and_tables();
    band_kernels();
    return 0;
}
