#include "frac/zoo.hpp"

#include "frac/norms.hpp"
#include "frac/symbols.hpp"

#include <cmath>

namespace frac {

namespace {

double quintic_step(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return ((6.0 * u - 15.0) * u + 10.0) * u * u * u;
}

// significant spectrum entries; transform roundoff stays behind
std::vector<std::pair<std::array<long long, 2>, cd>> significant_modes(const Field& f) {
    Spectrum s = forward(f);
    double top = 0.0;
    for (const auto& c : s.c) top = std::max(top, std::abs(c));
    std::vector<std::pair<std::array<long long, 2>, cd>> out;
    for (std::size_t b = 0; b < s.c.size(); ++b)
        if (std::abs(s.c[b]) > 1e-12 * top) out.push_back({modes_of(f.grid, b), s.c[b]});
    return out;
}

Field accumulate_dilates(const Field& base, int jmax,
                         const std::function<double(int)>& weight, const char* who) {
    const Grid& g = base.grid;
    const long long half = g.n / 2;
    Spectrum out;
    out.grid = g;
    out.c.assign(g.size(), cd(0.0, 0.0));
    auto modes = significant_modes(base);
    for (int j = 1; j <= jmax; ++j) {
        double w = weight(j);
        for (const auto& [k, c] : modes) {
            std::array<long long, 2> kk{k[0] << j, g.dim == 2 ? k[1] << j : 0};
            if (kk[0] < -half || kk[0] >= half || kk[1] < -half || kk[1] >= half)
                throw resolution_error(std::string(who) + ": dilate 2^" + std::to_string(j) +
                                       " pushes a mode past the lattice edge; raise n or lower "
                                       "the stack height");
            out.c[bucket_of(g, kk[0], kk[1])] += w * c;
        }
    }
    Field r = inverse(out);
    r.is_real = base.is_real;
    return r;
}

double dist_periodic(const Grid& g, const std::array<double, 2>& a,
                     const std::array<double, 2>& b) {
    double acc = 0.0;
    for (int ax = 0; ax < g.dim; ++ax) {
        double d = std::abs(a[ax] - b[ax]);
        d = std::min(d, g.boxlen - d);
        acc += d * d;
    }
    return std::sqrt(acc);
}

} // namespace

double AnnularProfile::radial(double rho) const {
    double t = (rho - lo) / (hi - lo);
    if (t <= 0.0 || t >= 1.0) return 0.0;
    return quintic_step(4.0 * t) * quintic_step(4.0 * (1.0 - t));
}

double AnnularProfile::eval(const std::array<double, 2>& xi, int dim) const {
    double rho = dim == 2 ? std::hypot(xi[0], xi[1]) : std::abs(xi[0]);
    double w = radial(rho);
    if (dim == 2 && angular != 0.0 && w != 0.0)
        w *= 1.0 + angular * (2.0 * xi[0] * xi[1]) / (rho * rho);
    return w;
}

AnnularProfile default_annular() { return AnnularProfile{0.55, 0.95, 0.0}; }

AnnularProfile default_annular_2d() { return AnnularProfile{0.55, 0.95, 0.15}; }

Field annular_bump(const Grid& g, const AnnularProfile& prof, int scale) {
    Spectrum s;
    s.grid = g;
    s.c.assign(g.size(), cd(0.0, 0.0));
    std::size_t hits = 0;
    for (std::size_t b = 0; b < g.size(); ++b) {
        auto xi = freqs_of(g, b);
        std::array<double, 2> arg{std::ldexp(xi[0], -scale), std::ldexp(xi[1], -scale)};
        double v = prof.eval(arg, g.dim);
        if (v != 0.0) {
            s.c[b] = cd(v, 0.0);
            ++hits;
        }
    }
    if (hits == 0)
        throw resolution_error("annular_bump: no lattice frequency inside the annulus " +
                               std::to_string(prof.lo) + ".." + std::to_string(prof.hi) +
                               " at scale " + std::to_string(scale) +
                               "; enlarge boxlen or raise the scale");
    Field out = inverse(s);
    out.is_real = true;
    return out;
}

Field dyadic_dilate(const Field& f, int j) {
    if (j < 0) throw config_error("dyadic_dilate: negative dilation");
    if (j == 0) return f;
    const Grid& g = f.grid;
    const long long half = g.n / 2;
    Spectrum out;
    out.grid = g;
    out.c.assign(g.size(), cd(0.0, 0.0));
    for (const auto& [k, c] : significant_modes(f)) {
        std::array<long long, 2> kk{k[0] << j, g.dim == 2 ? k[1] << j : 0};
        if (kk[0] < -half || kk[0] >= half || kk[1] < -half || kk[1] >= half)
            throw resolution_error("dyadic_dilate: mode leaves the lattice at 2^" +
                                   std::to_string(j) + "; raise n");
        out.c[bucket_of(g, kk[0], kk[1])] += c;
    }
    Field r = inverse(out);
    r.is_real = f.is_real;
    return r;
}

Field log_stack(const Field& base, int N) {
    if (N < 1) throw config_error("log_stack: stack height must be >= 1");
    return accumulate_dilates(base, N, [](int j) { return 1.0 / j; }, "log_stack");
}

Field grad_log_stack(const Field& base, int N) {
    if (N < 1) throw config_error("grad_log_stack: stack height must be >= 1");
    const int dim = base.grid.dim;
    Field block = apply(inv_laplacian(dim), apply(partial(dim, 0), base));
    return accumulate_dilates(block, N,
                              [](int j) { return std::ldexp(1.0 / j, -j); }, "grad_log_stack");
}

Field modulated_bump(const Field& bump, long long k_mode, double s) {
    const Grid& g = bump.grid;
    if (k_mode < 1 || k_mode >= g.n / 2)
        throw resolution_error("modulated_bump: carrier mode " + std::to_string(k_mode) +
                               " not on the open mode lattice");
    double k = g.freq_of(k_mode);
    double amp = std::pow(k, -s);
    Field out = bump;
    for (std::size_t i = 0; i < out.v.size(); ++i)
        out.v[i] *= amp * std::cos(k * site_of(g, i)[0]);
    return out;
}

Field lacunary(const Grid& g, int N) {
    if (g.dim != 1) throw grid_error("lacunary: dim-1 construction");
    if (N < 1) throw config_error("lacunary: N must be >= 1");
    Spectrum s;
    s.grid = g;
    s.c.assign(g.size(), cd(0.0, 0.0));
    double per = g.boxlen / (2.0 * pi);
    for (int j = 1; j <= N; ++j) {
        double kd = std::pow(4.0, j) * per;
        long long k = static_cast<long long>(std::llround(kd));
        if (std::abs(kd - static_cast<double>(k)) > 1e-9 * std::max(1.0, kd))
            throw config_error("lacunary: 4^" + std::to_string(j) +
                               " is not a lattice frequency; use a boxlen multiple of 2 pi");
        if (k * 7 > 6 * (g.n / 2))
            throw resolution_error("lacunary: top frequency 4^" + std::to_string(j) +
                                   " too close to the lattice edge; raise n");
        // coefficient boxlen puts unit amplitude on the carrier
        s.c[bucket_of(g, k, 0)] += cd(g.boxlen * std::pow(j, -0.5), 0.0);
    }
    return inverse(s);
}

Field chirp_stack(const Grid& g, double delta, double eps, int J, bool real_variant) {
    if (!(delta > 0.0 && eps >= 4.0 * delta && eps < 0.1))
        throw config_error("chirp_stack: need 1/10 > eps >= 4*delta > 0");
    if (J < 3) throw config_error("chirp_stack: top index must be >= 3");
    double per = g.boxlen / (2.0 * pi);
    // envelope spectrum: 1 inside |t| <= 1/10, quintic ramp to 0 at |t| = 1/5
    auto env = [](double t) {
        t = std::abs(t);
        if (t <= 0.1) return 1.0;
        if (t >= 0.2) return 0.0;
        return 1.0 - quintic_step((t - 0.1) / 0.1);
    };
    Spectrum s;
    s.grid = g;
    s.c.assign(g.size(), cd(0.0, 0.0));
    for (int j = 2; j <= J; ++j) {
        double carrier = std::ldexp(1.0, j);
        double kd = carrier * per;
        if (std::abs(kd - std::llround(kd)) > 1e-9 * kd)
            throw config_error("chirp_stack: carrier 2^" + std::to_string(j) +
                               " is not a lattice frequency; use a boxlen multiple of 2 pi");
        double lam = std::pow(static_cast<double>(j), eps);
        double top = (carrier + 0.2 * lam) * 7.0 / 6.0;
        if (top > g.nyquist())
            throw resolution_error("chirp_stack: term 2^" + std::to_string(j) +
                                   " too close to the lattice edge; raise n or lower J");
        double amp = std::pow(static_cast<double>(j), -(0.5 + delta)) *
                     std::pow(lam, 0.5 - g.dim);
        std::size_t hits = 0;
        for (std::size_t b = 0; b < g.size(); ++b) {
            auto xi = freqs_of(g, b);
            std::array<double, 2> off{xi[0] - carrier, g.dim == 2 ? xi[1] : 0.0};
            double rho = g.dim == 2 ? std::hypot(off[0], off[1]) : std::abs(off[0]);
            double e = env(rho / lam);
            if (e != 0.0) {
                s.c[b] += cd(amp * e, 0.0);
                ++hits;
            }
        }
        if (hits == 0)
            throw resolution_error("chirp_stack: envelope at 2^" + std::to_string(j) +
                                   " missed every lattice frequency");
    }
    Field out = inverse(s);
    return real_variant ? real_part(out) : out;
}

PlateauWindow plateau_of(const Field& f, double frac) {
    const Grid& g = f.grid;
    std::size_t best = 0;
    double top = -1.0;
    for (std::size_t i = 0; i < f.v.size(); ++i) {
        double a = std::abs(f.v[i]);
        if (a > top) {
            top = a;
            best = i;
        }
    }
    PlateauWindow w;
    w.center = site_of(g, best);
    w.level = frac * top;
    double radius = 0.5 * g.boxlen;
    for (std::size_t i = 0; i < f.v.size(); ++i) {
        if (std::abs(f.v[i]) >= w.level) continue;
        radius = std::min(radius, dist_periodic(g, w.center, site_of(g, i)));
    }
    w.radius = radius;
    return w;
}

DivfreePair divfree_pair(const Grid& g, const AnnularProfile& prof, int m, long long k_mode,
                         double s, double p, double bscale) {
    if (g.dim != 2) throw grid_error("divfree_pair: needs a dim-2 grid");
    if (m < 1) throw config_error("divfree_pair: stack height must be >= 1");
    if (!(bscale > 0.0)) throw config_error("divfree_pair: bump scale must be positive");
    if (k_mode < 1 || k_mode >= g.n / 2)
        throw resolution_error("divfree_pair: carrier mode off the lattice");
    double k = g.freq_of(k_mode);
    if (k > 0.25 * g.nyquist() * (1.0 + 1e-9))
        throw resolution_error("divfree_pair: carrier above a quarter of the lattice edge; "
                               "the bump sidebands need the headroom");

    DivfreePair out;
    Field block = annular_bump(g, prof, 3);
    out.base0 = block.v[0].real();

    Field stream = scale(block, cd(1.0, 0.0));
    for (int l = 2; l <= m; ++l) {
        Field piece = dyadic_dilate(block, l - 1);
        stream = add(stream, scale(piece, cd(std::ldexp(1.0 / l, -2 * (l - 1)), 0.0)));
    }
    out.stream = stream;
    FrequencySymbol d12 = asalpha(
        term_symbol(TermSymbol::Radial::homogeneous, 2, {{cd(-1.0, 0.0), {1, 1}, 0.0}}),
        MultiIndex{2, {0, 0}});
    out.d12_stream = apply(d12, stream);
    out.d12_at0 = out.d12_stream.v[0].real();

    out.u_base = {scale(apply(partial(2, 1), stream), cd(-1.0, 0.0)),
                  apply(partial(2, 0), stream)};

    PlateauWindow w = plateau_of(out.d12_stream, 0.5);
    out.center = w.center;
    out.radius = std::max(0.5 * w.radius, 3.0 * g.spacing());

    Field jsmag = make_field(g);
    {
        Field a = apply(js(2, s), out.u_base[0]);
        Field b = apply(js(2, s), out.u_base[1]);
        for (std::size_t i = 0; i < jsmag.v.size(); ++i)
            jsmag.v[i] = cd(std::hypot(std::abs(a.v[i]), std::abs(b.v[i])), 0.0);
        jsmag.is_real = true;
    }
    out.b_norm = bscale * lp_norm(jsmag, p);

    Field b = sample(g, smooth_bump(g, out.center, out.radius));
    double bnorm = lp_norm(b, p);
    if (bnorm == 0.0) throw resolution_error("divfree_pair: bump collapsed below the grid step");
    b = scale(b, cd(out.b_norm / bnorm, 0.0));

    Field pstream = b;
    double amp = std::pow(k, -(1.0 + s));
    for (std::size_t i = 0; i < pstream.v.size(); ++i)
        pstream.v[i] *= amp * std::sin(k * site_of(g, i)[0]);
    out.u_pert = {add(out.u_base[0], scale(apply(partial(2, 1), pstream), cd(-1.0, 0.0))),
                  add(out.u_base[1], apply(partial(2, 0), pstream))};
    return out;
}

} // namespace frac
