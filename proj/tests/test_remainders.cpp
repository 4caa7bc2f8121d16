#include "frac/remainders.hpp"

#include "require.hpp"

#include <cmath>

using namespace frac;

namespace {

double rel_err(const Field& got, const Field& want) {
    double den = std::max(l2(want), 1e-300);
    return l2(sub(got, want)) / den;
}

Field constant_field(const Grid& g, double c) {
    return sample(g, [c](const std::array<double, 2>&) { return cd(c, 0.0); });
}

} // namespace

static void constants_annihilate() {
    Grid g = make_grid(1, 128, 8.0);
    Field one = constant_field(g, 2.5);
    Field f = random_smooth(g, 41);
    double ref = l2(f);
    REQUIRE(l2(kp_commutator(one, f, 1.3)) <= 1e-11 * ref,
            "commuting with a constant leaves nothing");
    REQUIRE(l2(hilbert_commutator(one, f, 1, 1)) <= 1e-11 * ref,
            "singular-integral commutator dies on constants");
    REQUIRE(l2(dmp_remainder(one, f, 0.3, 0.4)) <= 1e-11 * ref,
            "exponent-splitting defect dies on constants");
    Grid g2 = make_grid(2, 32, 8.0);
    Field one2 = constant_field(g2, -1.0);
    Field f2 = random_smooth(g2, 42);
    REQUIRE(l2(riesz_commutator(one2, f2, 0, 1)) <= 1e-11 * l2(f2),
            "riesz commutator dies on constants");
    pass("constants_annihilate");
}

static void vanishing_orders() {
    Grid g = make_grid(1, 128, 8.0);
    Field f = random_smooth(g, 43);
    Field h = random_smooth(g, 44);
    // at s = 2 the once-corrected defect closes exactly
    double scale = l2(apply(ds(1, 2.0), mul_dealiased(f, h)));
    REQUIRE(l2(refined_ds_remainder(f, h, 2.0)) <= 1e-11 * scale,
            "s=2 corrected defect is identically zero");
    REQUIRE(l2(refined_ds_remainder(f, h, 1.4)) > 1e-6 * scale,
            "fractional order leaves a genuine remainder");
    pass("vanishing_orders");
}

static void bilinearity() {
    Grid g = make_grid(1, 128, 8.0);
    Field f = random_smooth(g, 45);
    Field f2 = random_smooth(g, 46);
    Field h = random_smooth(g, 47);
    double s = 1.6;
    Field lhs = kp_commutator(add(f, scale(f2, 3.0)), h, s);
    Field rhs = add(kp_commutator(f, h, s), scale(kp_commutator(f2, h, s), 3.0));
    REQUIRE(rel_err(lhs, rhs) <= 1e-12, "linearity in the first slot");
    Field lhs2 = kp_commutator(f, scale(h, -2.0), s);
    Field rhs2 = scale(kp_commutator(f, h, s), -2.0);
    REQUIRE(rel_err(lhs2, rhs2) <= 1e-12, "linearity in the second slot");
    pass("bilinearity");
}

static void direct_route_agrees() {
    Grid g = make_grid(1, 64, 8.0);
    Field f = random_smooth(g, 48);
    Field h = random_smooth(g, 49);
    // sigma == 1 is the anchor: the quadratic route must equal dealiasing
    BilinearSymbol unit{"unit",
                        [](const Grid&, const std::array<long long, 2>&,
                           const std::array<long long, 2>&) { return cd(1.0, 0.0); },
                        -1.0, false};
    REQUIRE(rel_err(bilinear_apply(unit, f, h), mul_dealiased(f, h)) <= 1e-12,
            "unit symbol reproduces the dealiased product");
    double s = 1.5;
    REQUIRE(rel_err(bilinear_apply(kp_sigma(1, s), f, h), kp_commutator(f, h, s)) <= 1e-10,
            "composed commutator matches its bilinear symbol");
    REQUIRE(rel_err(bilinear_apply(refined_js_sigma(1, 1.4), f, h),
                    refined_js_remainder(f, h, 1.4)) <= 1e-10,
            "corrected bracket defect matches its bilinear symbol");
    pass("direct_route_agrees");
}

static void euler_routes() {
    Grid g = make_grid(2, 64, 5.0);
    // divergence-free velocity out of a stream function
    Field psi = random_smooth(g, 50);
    std::array<Field, 2> u{apply(partial(2, 1), psi), scale(apply(partial(2, 0), psi), -1.0)};
    double s = 1.8;
    auto composed = euler_commutator(u, s);
    auto assembled = euler_commutator_assembled(u, s);
    double ref = std::max(l2(composed[0]), l2(composed[1]));
    REQUIRE(l2(sub(composed[0], assembled[0])) <= 1e-11 * ref,
            "component 0 agrees for solenoidal input");
    REQUIRE(l2(sub(composed[1], assembled[1])) <= 1e-11 * ref,
            "component 1 agrees for solenoidal input");
    // a generic velocity field breaks the rearrangement
    std::array<Field, 2> w{random_smooth(g, 51), random_smooth(g, 52)};
    auto cw = euler_commutator(w, s);
    auto aw = euler_commutator_assembled(w, s);
    double gap = std::max(l2(sub(cw[0], aw[0])), l2(sub(cw[1], aw[1])));
    REQUIRE(gap > 1e-3 * std::max(l2(cw[0]), l2(cw[1])),
            "divergence shows up in the assembled route");
    REQUIRE(euler_sigma(s, 0).vanishes_at_eta0, "advection symbol kills constant g");
    pass("euler_routes");
}

static void guard_rails() {
    Grid big = make_grid(1, 8192, 8.0);
    Field fb = random_smooth(big, 53);
    REQUIRE_THROWS_AS(bilinear_apply(kp_sigma(1, 1.0), fb, fb), resolution_error,
                      "quadratic route is capped in dim 1");
    Grid big2 = make_grid(2, 128, 8.0);
    Field fb2 = random_smooth(big2, 54);
    REQUIRE_THROWS_AS(bilinear_apply(kp_sigma(2, 1.0), fb2, fb2), resolution_error,
                      "quadratic route is capped in dim 2");
    Grid g = make_grid(1, 64, 8.0);
    Field f = random_smooth(g, 55);
    Field h = random_smooth(g, 56);
    LeibnizSpec bad;
    bad.s = 2.0;
    bad.s1 = 0.5;
    bad.s2 = 1.0;
    REQUIRE_THROWS_AS(leibniz_remainder(bad, f, h), config_error,
                      "split exponents must sum to the order");
    REQUIRE_THROWS_AS(dmp_remainder(f, h, -0.1, 0.4), config_error, "alpha below range");
    REQUIRE_THROWS_AS(dmp_remainder(f, h, 0.3, 0.8), config_error,
                      "beta must stay within 1 - alpha");
    LPFamily fam = make_family(RampKind::poly5);
    PairFactor low{true, 0.0};
    PairFactor band{false, 0.0};
    REQUIRE_THROWS_AS(paraproduct_pair(fam, f, h, band, low), config_error,
                      "second factor must vanish at frequency zero");
    Grid g2 = make_grid(2, 32, 8.0);
    REQUIRE_THROWS_AS(hilbert_commutator(random_smooth(g2, 57), random_smooth(g2, 58), 0, 0),
                      grid_error, "hilbert commutator is one dimensional");
    REQUIRE_THROWS_AS(hilbert_commutator(f, h, -1, 0), config_error,
                      "derivative counts are nonnegative");
    pass("guard_rails");
}

static void leibniz_split_consistency() {
    Grid g = make_grid(1, 128, 8.0);
    Field f = random_smooth(g, 59);
    Field h = random_smooth(g, 60);
    // |xi|^2 is a polynomial, so the full one-sided Taylor sum closes the
    // product rule exactly there
    LeibnizSpec spec;
    spec.s = 2.0;
    spec.s1 = 2.0;
    spec.s2 = 0.0;
    spec.alpha_inclusive = true;
    spec.beta_inclusive = false;
    Field r = leibniz_remainder(spec, f, h);
    double ref = l2(apply(ds(1, 2.0), mul_dealiased(f, h)));
    REQUIRE(l2(r) <= 1e-10 * ref, "integer-order one-sided remainder closes");
    // the strict flag drops the top Taylor shell, which reopens the defect
    spec.alpha_inclusive = false;
    REQUIRE(l2(leibniz_remainder(spec, f, h)) > 1e-8 * ref,
            "strict flag changes the operator");
    spec.alpha_inclusive = true;
    spec.s = 2.6;
    spec.s1 = 1.3;
    spec.s2 = 1.3;
    REQUIRE(l2(leibniz_remainder(spec, f, h)) > 1e-6 * ref,
            "fractional order leaves a remainder");
    pass("leibniz_split_consistency");
}

static void op_inventory() {
    const auto& names = remainder_op_names();
    REQUIRE(names.size() >= 9, "all composed evaluators are listed");
    for (const auto& n : names)
        for (const auto& m : names)
            REQUIRE(&n == &m || n != m, "names are unique");
    pass("op_inventory");
}

int main() {
    constants_annihilate();
    vanishing_orders();
    bilinearity();
    direct_route_agrees();
    euler_routes();
    guard_rails();
    leibniz_split_consistency();
    op_inventory();
    return 0;
}
