#include "frac/dyadic.hpp"

#include "require.hpp"

#include <cmath>

using namespace frac;

static void ramp_shapes() {
    for (RampKind kind : {RampKind::poly5, RampKind::exp_flat}) {
        LPFamily fam = make_family(kind);
        REQUIRE_NEAR(fam.phi0(0.0), 1.0, 1e-15, "low pass keeps the origin");
        REQUIRE_NEAR(fam.phi0(0.8), 1.0, 1e-15, "flat inside 5/6");
        REQUIRE_NEAR(fam.phi0(1.2), 0.0, 1e-15, "zero outside 7/6");
        REQUIRE_NEAR(fam.phi(1.0), 1.0, 1e-15, "band plateau at 1");
        REQUIRE_NEAR(fam.phi(0.4), 0.0, 1e-15, "band vanishes below 1/2");
        REQUIRE_NEAR(fam.phi(1.3), 0.0, 1e-15, "band vanishes above 7/6");
        // the square-function weight is the literal band sum
        for (double rho : {0.7, 1.3, 2.9, 17.0}) {
            double direct = 0.0;
            for (int j = -40; j <= 40; ++j) direct += fam.phi(std::ldexp(rho, -j)) *
                                                      fam.phi(std::ldexp(rho, -j));
            REQUIRE_NEAR(fam.sq_sum(rho), direct, 1e-12, "sq_sum consistency");
        }
    }
    REQUIRE(make_family(RampKind::poly5).id != make_family(RampKind::exp_flat).id,
            "families must be distinguishable");
    REQUIRE_THROWS_AS(make_family(RampKind::poly5, -1, 2), grid_error, "negative fattening");
    pass("ramp_shapes");
}

static void telescoping_is_exact() {
    LPFamily fam = make_family(RampKind::poly5);
    Grid g = make_grid(1, 256, 16.0);
    BandRange br = band_range(g);
    REQUIRE(br.jmin < br.jmax, "active range must be nontrivial");
    Field f = random_smooth(g, 11);
    Field acc = project_le(fam, f, br.jmin);
    for (int j = br.jmin + 1; j <= br.jmax; ++j) acc = add(acc, project(fam, f, j));
    double rel = l2(sub(acc, project_le(fam, f, br.jmax))) / l2(f);
    REQUIRE(rel <= 1e-13, "band telescoping");
    Field gt = project_gt(fam, f, br.jmin + 2);
    Field le = project_le(fam, f, br.jmin + 2);
    REQUIRE(l2(sub(add(gt, le), f)) / l2(f) <= 1e-13, "le/gt split partitions the field");
    pass("telescoping_is_exact");
}

static void band_bookkeeping() {
    Grid g = make_grid(1, 256, 16.0);
    BandRange br = band_range(g);
    REQUIRE(std::ldexp(7.0 / 6.0, br.jmax) <= g.nyquist() * (1.0 + 1e-12),
            "top band must fit under the lattice edge");
    REQUIRE(!band_provably_zero(g, br.jmax), "top band is active");
    REQUIRE(band_provably_zero(g, br.jmax + 3), "far bands are provably empty");
    LPFamily fam = make_family(RampKind::poly5);
    Field f = random_smooth(g, 3);
    REQUIRE(l2(project(fam, f, br.jmax + 3)) == 0.0, "provably empty band projects to zero");
    REQUIRE_THROWS_AS(project(fam, f, br.jmax + 1), band_range_error,
                      "unresolvable band must refuse");
    Field fat = fatten(fam, f, br.jmin + 3);
    Field direct = make_field(g);
    for (int l = -fam.fat_lo; l <= fam.fat_hi; ++l)
        direct = add(direct, project(fam, f, br.jmin + 3 + l));
    REQUIRE(l2(sub(fat, direct)) <= 1e-13 * l2(f), "fatten equals the band sum");
    pass("band_bookkeeping");
}

static void bony_pieces_reconstruct() {
    LPFamily fam = make_family(RampKind::poly5);
    // box large against the bump widths, so wrap-around tails stay at roundoff
    Grid g = make_grid(1, 512, 64.0);
    for (std::uint64_t seed : {21, 22, 23}) {
        Field f = random_smooth(g, seed);
        Field h = random_smooth(g, seed + 100);
        BonyPieces bp = bony_split(fam, f, h);
        Field whole = mul_dealiased(f, h);
        double rel = l2(sub(add(add(bp.diagonal, bp.lowhigh), bp.highlow), whole)) / l2(whole);
        REQUIRE(rel <= 1e-11, "three pieces must reassemble the product");
    }
    pass("bony_pieces_reconstruct");
}

int main() {
    ramp_shapes();
    telescoping_is_exact();
    band_bookkeeping();
    bony_pieces_reconstruct();
    return 0;
}
