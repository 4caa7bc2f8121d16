#include "frac/norms.hpp"

#include <cmath>

namespace frac {

double lp_norm(const Field& f, double p) {
    if (!(p > 0.0)) throw grid_error("lp_norm: p must be positive");
    if (std::isinf(p)) return linf(f);
    double sum = 0.0;
    if (p == 2.0) {
        for (const auto& z : f.v) sum += std::norm(z);
    } else {
        for (const auto& z : f.v) sum += std::pow(std::abs(z), p);
    }
    return std::pow(sum * std::pow(f.grid.spacing(), f.grid.dim), 1.0 / p);
}

namespace {

double cube_osc_1d(const std::vector<cd>& v, int n, int start, int w) {
    cd mean(0.0, 0.0);
    for (int i = 0; i < w; ++i) mean += v[(start + i) & (n - 1)];
    mean /= static_cast<double>(w);
    double dev = 0.0;
    for (int i = 0; i < w; ++i) dev += std::abs(v[(start + i) & (n - 1)] - mean);
    return dev / static_cast<double>(w);
}

double cube_osc_2d(const std::vector<cd>& v, int n, int s0, int s1, int w) {
    cd mean(0.0, 0.0);
    for (int i = 0; i < w; ++i) {
        std::size_t row = static_cast<std::size_t>((s0 + i) & (n - 1)) * n;
        for (int j = 0; j < w; ++j) mean += v[row + ((s1 + j) & (n - 1))];
    }
    mean /= static_cast<double>(w) * w;
    double dev = 0.0;
    for (int i = 0; i < w; ++i) {
        std::size_t row = static_cast<std::size_t>((s0 + i) & (n - 1)) * n;
        for (int j = 0; j < w; ++j) dev += std::abs(v[row + ((s1 + j) & (n - 1))] - mean);
    }
    return dev / (static_cast<double>(w) * w);
}

} // namespace

double bmo_norm(const Field& f) {
    int n = f.grid.n;
    double best = 0.0;
    for (int w = 1; w <= n; w *= 2) {
        int half = w / 2;
        if (f.grid.dim == 1) {
            for (int shift : {0, half}) {
                if (shift == 0 || w > 1) {
                    if (w == n && shift != 0) continue; // full box: one tiling
                    for (int start = shift; start < n + shift; start += w)
                        best = std::max(best, cube_osc_1d(f.v, n, start, w));
                }
            }
        } else {
            for (int sh0 : {0, half}) {
                for (int sh1 : {0, half}) {
                    if ((sh0 != 0 || sh1 != 0) && w == 1) continue;
                    if (w == n && (sh0 != 0 || sh1 != 0)) continue;
                    for (int s0 = sh0; s0 < n + sh0; s0 += w)
                        for (int s1 = sh1; s1 < n + sh1; s1 += w)
                            best = std::max(best, cube_osc_2d(f.v, n, s0, s1, w));
                }
            }
        }
    }
    return best;
}

double band_ratio(const BandNormValue& num, const BandNormValue& den) {
    if (num.family_id != den.family_id)
        throw grid_error("band_ratio: band norms built from different families (" +
                         num.family_id + " vs " + den.family_id + ")");
    return num.value / den.value;
}

BandNormValue besov0_norm(const LPFamily& fam, const Field& f) {
    BandRange r = band_range(f.grid);
    double best = 0.0;
    for (int j = r.jmin; j <= r.jmax; ++j) best = std::max(best, linf(project(fam, f, j)));
    return {best, fam.id};
}

BandNormValue besov_norm(const LPFamily& fam, const Field& f, double s, double p) {
    BandRange r = band_range(f.grid);
    double best = 0.0;
    for (int j = r.jmin; j <= r.jmax; ++j)
        best = std::max(best, std::pow(2.0, j * s) * lp_norm(project(fam, f, j), p));
    return {best, fam.id};
}

BandNormValue hardy_sq_norm(const LPFamily& fam, const Field& f, double p) {
    BandRange r = band_range(f.grid);
    std::vector<double> acc(f.v.size(), 0.0);
    for (int j = r.jmin; j <= r.jmax; ++j) {
        Field pj = project(fam, f, j);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += std::norm(pj.v[i]);
    }
    Field s = make_field(f.grid);
    s.is_real = true;
    for (std::size_t i = 0; i < acc.size(); ++i) s.v[i] = cd(std::sqrt(acc[i]), 0.0);
    return {lp_norm(s, p), fam.id};
}

Field maximal(const Field& f) {
    int n = f.grid.n;
    Field out = make_field(f.grid);
    out.is_real = true;
    if (f.grid.dim == 1) {
        // prefix over three periods: centered windows shifted by +n stay inside
        std::vector<double> pre(3 * n + 1, 0.0);
        for (int i = 0; i < 3 * n; ++i) pre[i + 1] = pre[i] + std::abs(f.v[i % n]);
        for (int i = 0; i < n; ++i) {
            double best = 0.0;
            for (int rad = 1; rad <= n / 2; rad *= 2) {
                int lo = i - rad + n; // shifted into the tiled range
                int len = 2 * rad + 1;
                if (len > n) len = n;
                double avg = (pre[lo + len] - pre[lo]) / len;
                best = std::max(best, avg);
            }
            out.v[i] = cd(best, 0.0);
        }
    } else {
        std::size_t m = static_cast<std::size_t>(3 * n);
        std::vector<double> pre((m + 1) * (m + 1), 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t row = static_cast<std::size_t>(i & (n - 1)) * n;
            for (std::size_t j = 0; j < m; ++j) {
                double a = std::abs(f.v[row + (j & (n - 1))]);
                pre[(i + 1) * (m + 1) + (j + 1)] = a + pre[i * (m + 1) + (j + 1)] +
                                                   pre[(i + 1) * (m + 1) + j] -
                                                   pre[i * (m + 1) + j];
            }
        }
        auto rect = [&](int r0, int c0, int len) {
            return pre[(r0 + len) * static_cast<std::size_t>(m + 1) + (c0 + len)] -
                   pre[r0 * static_cast<std::size_t>(m + 1) + (c0 + len)] -
                   pre[(r0 + len) * static_cast<std::size_t>(m + 1) + c0] +
                   pre[r0 * static_cast<std::size_t>(m + 1) + c0];
        };
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                double best = 0.0;
                for (int rad = 1; rad <= n / 2; rad *= 2) {
                    int len = 2 * rad + 1;
                    if (len > n) len = n;
                    double avg = rect(i - rad + n, j - rad + n, len) /
                                 (static_cast<double>(len) * len);
                    best = std::max(best, avg);
                }
                out.v[static_cast<std::size_t>(i) * n + j] = cd(best, 0.0);
            }
        }
    }
    return out;
}

} // namespace frac
