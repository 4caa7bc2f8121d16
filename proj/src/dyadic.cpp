#include "frac/dyadic.hpp"

#include <cmath>

namespace frac {

namespace {

double quintic(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return ((6.0 * u - 15.0) * u + 10.0) * u * u * u;
}

double exp_glue(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    double a = std::exp(-1.0 / u);
    double b = std::exp(-1.0 / (1.0 - u));
    return a / (a + b);
}

} // namespace

double LPFamily::phi0(double rho) const {
    if (rho <= 1.0) return 1.0;
    if (rho >= 7.0 / 6.0) return 0.0;
    double u = 6.0 * (rho - 1.0);
    return kind == RampKind::poly5 ? 1.0 - quintic(u) : 1.0 - exp_glue(u);
}

double LPFamily::phi(double rho) const { return phi0(rho) - phi0(2.0 * rho); }

double LPFamily::sq_sum(double rho) const {
    if (!(rho > 0.0)) return 0.0;
    // at most two dilates are nonzero at any rho
    int lo = static_cast<int>(std::floor(std::log2(rho * 6.0 / 7.0)));
    double s = 0.0;
    for (int j = lo; j <= lo + 3; ++j) {
        double p = phi(std::ldexp(rho, -j));
        s += p * p;
    }
    return s;
}

LPFamily make_family(RampKind kind, int fat_lo, int fat_hi) {
    if (fat_lo < 0 || fat_hi < 0) throw grid_error("make_family: fattening widths must be >= 0");
    LPFamily f;
    f.kind = kind;
    f.fat_lo = fat_lo;
    f.fat_hi = fat_hi;
    f.id = std::string(kind == RampKind::poly5 ? "poly5" : "exp_flat") + ":" +
           std::to_string(fat_lo) + ":" + std::to_string(fat_hi);
    return f;
}

BandRange band_range(const Grid& g) {
    const double edge = 7.0 / 6.0;
    double lo = g.freq_step();
    double ny = g.nyquist();
    // smallest j with 2^j * 7/6 > lowest resolved frequency
    int jmin = static_cast<int>(std::floor(std::log2(lo / edge))) + 1;
    while (std::ldexp(edge, jmin) <= lo) ++jmin;
    while (std::ldexp(edge, jmin - 1) > lo) --jmin;
    // largest j with 2^j * 7/6 <= Nyquist
    int jmax = static_cast<int>(std::floor(std::log2(ny / edge)));
    while (std::ldexp(edge, jmax + 1) <= ny) ++jmax;
    while (std::ldexp(edge, jmax) > ny) --jmax;
    return BandRange{jmin, jmax};
}

bool band_provably_zero(const Grid& g, int j) {
    const double edge = 7.0 / 6.0;
    if (std::ldexp(edge, j) <= g.freq_step()) return true;
    // largest lattice magnitude is the corner of the mode box
    double top = g.nyquist() * std::sqrt(static_cast<double>(g.dim));
    if (std::ldexp(1.0, j - 1) >= top) return true;
    return false;
}

namespace {

void check_band(const Grid& g, int j, const char* who) {
    BandRange r = band_range(g);
    if (j >= r.jmin && j <= r.jmax) return;
    if (band_provably_zero(g, j)) return;
    throw band_range_error(std::string(who) + ": band " + std::to_string(j) +
                           " outside active range [" + std::to_string(r.jmin) + ", " +
                           std::to_string(r.jmax) + "] on n=" + std::to_string(g.n) +
                           " L=" + std::to_string(g.boxlen) +
                           "; shrink the requested scale instead of clipping");
}

double rho_of(const std::array<double, 2>& xi) {
    return std::sqrt(xi[0] * xi[0] + xi[1] * xi[1]);
}

} // namespace

Field project(const LPFamily& fam, const Field& f, int j) {
    check_band(f.grid, j, "project");
    if (band_provably_zero(f.grid, j)) {
        Field z = make_field(f.grid);
        z.is_real = f.is_real;
        return z;
    }
    return map_spectrum(
        f,
        [&fam, j](const std::array<long long, 2>&, const std::array<double, 2>& xi) {
            return cd(fam.phi(std::ldexp(rho_of(xi), -j)), 0.0);
        },
        true);
}

Field project_le(const LPFamily& fam, const Field& f, int j) {
    return map_spectrum(
        f,
        [&fam, j](const std::array<long long, 2>&, const std::array<double, 2>& xi) {
            return cd(fam.phi0(std::ldexp(rho_of(xi), -j)), 0.0);
        },
        true);
}

Field project_gt(const LPFamily& fam, const Field& f, int j) {
    return sub(f, project_le(fam, f, j));
}

Field fatten(const LPFamily& fam, const Field& f, int j) {
    for (int l = -fam.fat_lo; l <= fam.fat_hi; ++l) check_band(f.grid, j + l, "fatten");
    int lo = j - fam.fat_lo, hi = j + fam.fat_hi;
    return map_spectrum(
        f,
        [&fam, lo, hi](const std::array<long long, 2>&, const std::array<double, 2>& xi) {
            double rho = rho_of(xi);
            double s = 0.0;
            for (int jj = lo; jj <= hi; ++jj) s += fam.phi(std::ldexp(rho, -jj));
            return cd(s, 0.0);
        },
        true);
}

BonyPieces bony_split(const LPFamily& fam, const Field& f, const Field& g) {
    if (!f.grid.same_as(g.grid)) throw grid_error("bony_split: grids differ");
    const Grid& gr = f.grid;
    BandRange r = band_range(gr);
    int nb = r.jmax - r.jmin + 1;

    auto bands_of = [&](const Field& h) {
        std::vector<Field> b;
        b.reserve(nb);
        for (int j = r.jmin; j <= r.jmax; ++j) b.push_back(project(fam, h, j));
        // zero mode rides with the lowest band: partial sums then match
        // project_le exactly on every resolved frequency
        cd mean(0.0, 0.0);
        for (const auto& z : h.v) mean += z;
        mean /= static_cast<double>(h.v.size());
        for (auto& z : b.front().v) z += mean;
        return b;
    };

    std::vector<Field> bf = bands_of(f);
    std::vector<Field> bg = bands_of(g);

    auto partials = [&](const std::vector<Field>& b) {
        // S[i] = sum of bands up to index i
        std::vector<Field> s(b.size(), make_field(gr));
        Field run = make_field(gr);
        run.is_real = b.front().is_real;
        for (std::size_t i = 0; i < b.size(); ++i) {
            run = add(run, b[i]);
            s[i] = run;
        }
        return s;
    };

    std::vector<Field> sf = partials(bf);
    std::vector<Field> sg = partials(bg);

    Field diag = make_field(gr);
    Field lowhigh = make_field(gr);
    Field highlow = make_field(gr);
    diag.is_real = lowhigh.is_real = highlow.is_real = f.is_real && g.is_real;

    for (int i = 0; i < nb; ++i) {
        Field near = bg[i];
        if (i > 0) near = add(near, bg[i - 1]);
        if (i + 1 < nb) near = add(near, bg[i + 1]);
        diag = add(diag, mul_dealiased(bf[i], near));
        if (i >= 2) {
            lowhigh = add(lowhigh, mul_dealiased(sf[i - 2], bg[i]));
            highlow = add(highlow, mul_dealiased(sg[i - 2], bf[i]));
        }
    }
    return BonyPieces{diag, lowhigh, highlow};
}

} // namespace frac
