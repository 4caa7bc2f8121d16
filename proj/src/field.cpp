#include "frac/field.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <random>

namespace frac {

namespace {

std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// sign = FFTW_FORWARD or FFTW_BACKWARD, unnormalized
void run_dft(const Grid& g, const cd* in, cd* out, int sign) {
    fftw_complex* fin = reinterpret_cast<fftw_complex*>(const_cast<cd*>(in));
    fftw_complex* fout = reinterpret_cast<fftw_complex*>(out);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        // FFTW_ESTIMATE keeps planning deterministic and leaves the input intact.
        if (g.dim == 1)
            plan = fftw_plan_dft_1d(g.n, fin, fout, sign, FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
        else
            plan = fftw_plan_dft_2d(g.n, g.n, fin, fout, sign, FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fftw_destroy_plan(plan);
    }
}

} // namespace

Grid make_grid(int dim, int n, double boxlen) {
    if (dim != 1 && dim != 2) throw grid_error("make_grid: dim must be 1 or 2");
    if (!power_of_two(n) || n < 8) throw grid_error("make_grid: n must be a power of two, n >= 8");
    if (!(boxlen > 0.0)) throw grid_error("make_grid: boxlen must be positive");
    return Grid{dim, n, boxlen};
}

Field make_field(const Grid& g) {
    Field f;
    f.grid = g;
    f.v.assign(g.size(), cd(0.0, 0.0));
    return f;
}

Spectrum forward(const Field& f) {
    Spectrum s;
    s.grid = f.grid;
    s.c.resize(f.grid.size());
    run_dft(f.grid, f.v.data(), s.c.data(), FFTW_FORWARD);
    double hfac = std::pow(f.grid.spacing(), f.grid.dim);
    for (auto& z : s.c) z *= hfac;
    return s;
}

Field inverse(const Spectrum& s) {
    Field f;
    f.grid = s.grid;
    f.v.resize(s.grid.size());
    run_dft(s.grid, s.c.data(), f.v.data(), FFTW_BACKWARD);
    double lfac = std::pow(s.grid.boxlen, -s.grid.dim);
    for (auto& z : f.v) z *= lfac;
    return f;
}

std::array<double, 2> site_of(const Grid& g, std::size_t i) {
    double h = g.spacing();
    if (g.dim == 1) return {h * static_cast<double>(i), 0.0};
    std::size_t n = static_cast<std::size_t>(g.n);
    return {h * static_cast<double>(i / n), h * static_cast<double>(i % n)};
}

std::array<long long, 2> modes_of(const Grid& g, std::size_t i) {
    if (g.dim == 1) return {g.k_of_index(static_cast<int>(i)), 0};
    std::size_t n = static_cast<std::size_t>(g.n);
    return {g.k_of_index(static_cast<int>(i / n)), g.k_of_index(static_cast<int>(i % n))};
}

std::array<double, 2> freqs_of(const Grid& g, std::size_t i) {
    auto k = modes_of(g, i);
    return {g.freq_of(k[0]), g.dim == 2 ? g.freq_of(k[1]) : 0.0};
}

std::size_t bucket_of(const Grid& g, long long k0, long long k1) {
    if (g.dim == 1) return static_cast<std::size_t>(g.index_of_k(k0));
    return static_cast<std::size_t>(g.index_of_k(k0)) * static_cast<std::size_t>(g.n) +
           static_cast<std::size_t>(g.index_of_k(k1));
}

namespace {

void check_same(const Field& a, const Field& b, const char* what) {
    if (!a.grid.same_as(b.grid)) throw grid_error(std::string(what) + ": grids differ");
}

} // namespace

Field add(const Field& a, const Field& b) {
    check_same(a, b, "add");
    Field out = a;
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += b.v[i];
    out.is_real = a.is_real && b.is_real;
    return out;
}

Field sub(const Field& a, const Field& b) {
    check_same(a, b, "sub");
    Field out = a;
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] -= b.v[i];
    out.is_real = a.is_real && b.is_real;
    return out;
}

Field mul(const Field& a, const Field& b) {
    check_same(a, b, "mul");
    Field out = a;
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] *= b.v[i];
    out.is_real = a.is_real && b.is_real;
    return out;
}

Field scale(const Field& a, cd c) {
    Field out = a;
    for (auto& z : out.v) z *= c;
    out.is_real = a.is_real && c.imag() == 0.0;
    return out;
}

Field conj_of(const Field& a) {
    Field out = a;
    for (auto& z : out.v) z = std::conj(z);
    return out;
}

Field real_part(const Field& a) {
    Field out = a;
    for (auto& z : out.v) z = cd(z.real(), 0.0);
    out.is_real = true;
    return out;
}

Field mul_dealiased(const Field& a, const Field& b) {
    check_same(a, b, "mul_dealiased");
    const Grid& g = a.grid;
    Grid big = g;
    big.n = 2 * g.n;

    auto pad = [&](const Field& f) {
        Spectrum s = forward(f);
        Spectrum ps;
        ps.grid = big;
        ps.c.assign(big.size(), cd(0.0, 0.0));
        for (std::size_t i = 0; i < s.c.size(); ++i) {
            auto k = modes_of(g, i);
            ps.c[bucket_of(big, k[0], k[1])] = s.c[i];
        }
        return inverse(ps);
    };

    Field fa = pad(a);
    Field fb = pad(b);
    for (std::size_t i = 0; i < fa.v.size(); ++i) fa.v[i] *= fb.v[i];
    Spectrum prod = forward(fa);

    Spectrum outs;
    outs.grid = g;
    outs.c.resize(g.size());
    for (std::size_t i = 0; i < outs.c.size(); ++i) {
        auto k = modes_of(g, i);
        outs.c[i] = prod.c[bucket_of(big, k[0], k[1])];
    }
    Field out = inverse(outs);
    out.is_real = a.is_real && b.is_real;
    return out;
}

double dc_coeff_abs(const Field& f) {
    cd sum(0.0, 0.0);
    for (const auto& z : f.v) sum += z;
    return std::abs(sum) * std::pow(f.grid.spacing(), f.grid.dim);
}

double l2(const Field& f) {
    double sum = 0.0;
    for (const auto& z : f.v) sum += std::norm(z);
    return std::sqrt(sum * std::pow(f.grid.spacing(), f.grid.dim));
}

double linf(const Field& f) {
    double m = 0.0;
    for (const auto& z : f.v) m = std::max(m, std::abs(z));
    return m;
}

Field remove_dc(const Field& f) {
    cd sum(0.0, 0.0);
    for (const auto& z : f.v) sum += z;
    cd mean = sum / static_cast<double>(f.v.size());
    Field out = f;
    for (auto& z : out.v) z -= mean;
    return out;
}

Field sample(const Grid& g, const Generator& gen) {
    Field f = make_field(g);
    double mx = 0.0, mi = 0.0;
    for (std::size_t i = 0; i < f.v.size(); ++i) {
        f.v[i] = gen(site_of(g, i));
        mx = std::max(mx, std::abs(f.v[i]));
        mi = std::max(mi, std::abs(f.v[i].imag()));
    }
    f.is_real = (mi <= 1e-14 * mx);
    return f;
}

namespace {

// displacement to nearest periodic image, per axis
double wrap(double d, double L) {
    d = std::fmod(d, L);
    if (d < -L / 2) d += L;
    if (d >= L / 2) d -= L;
    return d;
}

} // namespace

Generator gaussian(const Grid& g, std::array<double, 2> center, double width) {
    double L = g.boxlen;
    int dim = g.dim;
    return [center, width, L, dim](const std::array<double, 2>& x) {
        double d0 = wrap(x[0] - center[0], L);
        double d1 = dim == 2 ? wrap(x[1] - center[1], L) : 0.0;
        return cd(std::exp(-(d0 * d0 + d1 * d1) / (2.0 * width * width)), 0.0);
    };
}

Generator smooth_bump(const Grid& g, std::array<double, 2> center, double radius) {
    double L = g.boxlen;
    int dim = g.dim;
    return [center, radius, L, dim](const std::array<double, 2>& x) {
        double d0 = wrap(x[0] - center[0], L);
        double d1 = dim == 2 ? wrap(x[1] - center[1], L) : 0.0;
        double r2 = (d0 * d0 + d1 * d1) / (radius * radius);
        if (r2 >= 1.0) return cd(0.0, 0.0);
        return cd(std::exp(1.0 - 1.0 / (1.0 - r2)), 0.0);
    };
}

Generator plane_wave(const Grid& g, std::array<long long, 2> k) {
    double xi0 = g.freq_of(k[0]);
    double xi1 = g.dim == 2 ? g.freq_of(k[1]) : 0.0;
    return [xi0, xi1](const std::array<double, 2>& x) {
        double phase = xi0 * x[0] + xi1 * x[1];
        return cd(std::cos(phase), std::sin(phase));
    };
}

Field random_smooth(const Grid& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double L = g.boxlen;
    Field f = make_field(g);
    f.is_real = true;
    struct Blob {
        double a, w, c0, c1, m0, m1, th;
    };
    std::vector<Blob> blobs(8);
    for (auto& b : blobs) {
        b.a = 2.0 * unit(rng) - 1.0;
        b.w = L * (1.0 + 1.5 * unit(rng)) / 64.0;
        b.c0 = L * unit(rng);
        b.c1 = L * unit(rng);
        b.m0 = std::floor(5.0 * unit(rng));
        b.m1 = g.dim == 2 ? std::floor(5.0 * unit(rng)) : 0.0;
        b.th = 2.0 * pi * unit(rng);
    }
    for (std::size_t i = 0; i < f.v.size(); ++i) {
        auto x = site_of(g, i);
        double val = 0.0;
        for (const auto& b : blobs) {
            double d0 = wrap(x[0] - b.c0, L);
            double d1 = g.dim == 2 ? wrap(x[1] - b.c1, L) : 0.0;
            double r2 = d0 * d0 + d1 * d1;
            double phase = 2.0 * pi * (b.m0 * x[0] + b.m1 * x[1]) / L + b.th;
            val += b.a * std::exp(-r2 / (2.0 * b.w * b.w)) * std::cos(phase);
        }
        f.v[i] = cd(val, 0.0);
    }
    return remove_dc(f);
}

Field field_from_modes(const Grid& g,
                       const std::function<cd(const std::array<long long, 2>&,
                                              const std::array<double, 2>&)>& rule,
                       bool hermitian) {
    Spectrum s;
    s.grid = g;
    s.c.resize(g.size());
    for (std::size_t i = 0; i < s.c.size(); ++i) {
        s.c[i] = rule(modes_of(g, i), freqs_of(g, i));
    }
    Field f = inverse(s);
    f.is_real = hermitian;
    return f;
}

Field map_spectrum(const Field& f,
                   const std::function<cd(const std::array<long long, 2>&,
                                          const std::array<double, 2>&)>& rule,
                   bool hermitian_rule) {
    Spectrum s = forward(f);
    for (std::size_t i = 0; i < s.c.size(); ++i) {
        s.c[i] *= rule(modes_of(f.grid, i), freqs_of(f.grid, i));
    }
    Field out = inverse(s);
    out.is_real = f.is_real && hermitian_rule;
    return out;
}

} // namespace frac
