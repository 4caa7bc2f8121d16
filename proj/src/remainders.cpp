#include "frac/remainders.hpp"

#include <cmath>

namespace frac {

namespace {

std::array<double, 2> freq_pair(const Grid& g, const std::array<long long, 2>& k) {
    return {g.freq_of(k[0]), g.dim == 2 ? g.freq_of(k[1]) : 0.0};
}

cd ev(const FrequencySymbol& sym, const Grid& g, const std::array<long long, 2>& k) {
    return sym.eval_at(k, freq_pair(g, k));
}

std::array<long long, 2> kadd(const std::array<long long, 2>& a,
                              const std::array<long long, 2>& b) {
    return {a[0] + b[0], a[1] + b[1]};
}

// (i xi)^alpha evaluated directly; 1 for alpha = 0 even at xi = 0
cd monomial(const std::array<double, 2>& xi, const MultiIndex& a) {
    static const cd cycle[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    cd m = cycle[a.order() % 4];
    for (int i = 0; i < a.a[0]; ++i) m *= xi[0];
    for (int i = 0; i < a.a[1]; ++i) m *= xi[1];
    return m;
}

// (i xi)^alpha as a one-pass multiplier; caller skips alpha = 0
FrequencySymbol partial_mono(int dim, const MultiIndex& a) {
    static const cd cycle[4] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
    return asalpha(term_symbol(TermSymbol::Radial::homogeneous, dim,
                               {{cycle[a.order() % 4], a.a, 0.0}}),
                   MultiIndex{dim, {0, 0}});
}

Field apply_alpha_derivative(int dim, const MultiIndex& a, const Field& f) {
    return a.order() == 0 ? f : apply(partial_mono(dim, a), f);
}

std::vector<MultiIndex> taylor_indices(int dim, double bound, bool inclusive) {
    std::vector<MultiIndex> out;
    int cap = std::max(0, static_cast<int>(std::floor(bound + 1e-12)));
    for (const auto& a : multi_indices_upto(dim, cap)) {
        double o = a.order();
        if (inclusive ? o <= bound + 1e-12 : o < bound - 1e-12) out.push_back(a);
    }
    return out;
}

void check_pair(const Field& f, const Field& g, const char* who) {
    if (!f.grid.same_as(g.grid)) throw grid_error(std::string(who) + ": grids differ");
}

} // namespace

Field bilinear_apply(const BilinearSymbol& sigma, const Field& f, const Field& g) {
    check_pair(f, g, "bilinear_apply");
    const Grid& gr = f.grid;
    if (gr.dim == 1 && gr.n > 4096)
        throw resolution_error("bilinear_apply: quadratic cost, dim 1 capped at n = 4096");
    if (gr.dim == 2 && gr.n > 64)
        throw resolution_error("bilinear_apply: quadratic cost, dim 2 capped at n = 64");

    Spectrum fs = forward(f);
    Spectrum gs = forward(g);
    Spectrum out;
    out.grid = gr;
    out.c.assign(gr.size(), cd(0.0, 0.0));
    const double inv_box = std::pow(gr.boxlen, -gr.dim);
    const long long half = gr.n / 2;

    parallel_for(gr.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t b = lo; b < hi; ++b) {
            auto kk = modes_of(gr, b);
            cd acc(0.0, 0.0);
            for (std::size_t bf = 0; bf < gr.size(); ++bf) {
                cd fc = fs.c[bf];
                if (fc == cd(0.0, 0.0)) continue;
                auto kf = modes_of(gr, bf);
                std::array<long long, 2> ke{kk[0] - kf[0], 0};
                if (ke[0] < -half || ke[0] >= half) continue;
                if (gr.dim == 2) {
                    ke[1] = kk[1] - kf[1];
                    if (ke[1] < -half || ke[1] >= half) continue;
                }
                cd gc = gs.c[bucket_of(gr, ke[0], ke[1])];
                if (gc == cd(0.0, 0.0)) continue;
                acc += sigma.rule(gr, kf, ke) * fc * gc;
            }
            out.c[b] = acc * inv_box;
        }
    });
    return inverse(out);
}

Field kp_commutator(const Field& f, const Field& g, double s) {
    check_pair(f, g, "kp_commutator");
    const int dim = f.grid.dim;
    FrequencySymbol J = js(dim, s);
    return sub(apply(J, mul_dealiased(f, g)), mul_dealiased(f, apply(J, g)));
}

BilinearSymbol kp_sigma(int dim, double s) {
    FrequencySymbol J = js(dim, s);
    BilinearSymbol b;
    b.name = "kp_sigma(s=" + std::to_string(s) + ")";
    b.rule = [J](const Grid& g, const std::array<long long, 2>& kx,
                 const std::array<long long, 2>& ke) {
        return ev(J, g, kadd(kx, ke)) - ev(J, g, ke);
    };
    return b;
}

Field leibniz_remainder(const LeibnizSpec& spec, const Field& f, const Field& g) {
    check_pair(f, g, "leibniz_remainder");
    if (spec.s1 < 0.0 || spec.s2 < 0.0 || std::abs(spec.s1 + spec.s2 - spec.s) > 1e-12)
        throw config_error("leibniz_remainder: need s1, s2 >= 0 with s1 + s2 = s");
    const int dim = f.grid.dim;
    auto weight = [&](const MultiIndex& a) {
        return spec.base ? asalpha(*spec.base, a) : dsalpha(dim, spec.s, a);
    };
    Field out = apply(weight(MultiIndex{dim, {0, 0}}), mul_dealiased(f, g));
    for (const auto& a : taylor_indices(dim, spec.s1, spec.alpha_inclusive)) {
        Field piece = mul_dealiased(apply_alpha_derivative(dim, a, f), apply(weight(a), g));
        out = sub(out, scale(piece, cd(1.0 / a.factorial(), 0.0)));
    }
    for (const auto& b : taylor_indices(dim, spec.s2, spec.beta_inclusive)) {
        Field piece = mul_dealiased(apply_alpha_derivative(dim, b, g), apply(weight(b), f));
        out = sub(out, scale(piece, cd(1.0 / b.factorial(), 0.0)));
    }
    return out;
}

BilinearSymbol leibniz_sigma(int dim, const LeibnizSpec& spec) {
    if (spec.s1 < 0.0 || spec.s2 < 0.0 || std::abs(spec.s1 + spec.s2 - spec.s) > 1e-12)
        throw config_error("leibniz_sigma: need s1, s2 >= 0 with s1 + s2 = s");
    auto weight = [&](const MultiIndex& a) {
        return spec.base ? asalpha(*spec.base, a) : dsalpha(dim, spec.s, a);
    };
    struct TaylorTerm {
        MultiIndex idx;
        FrequencySymbol w;
        double invfact;
    };
    std::vector<TaylorTerm> alphas, betas;
    for (const auto& a : taylor_indices(dim, spec.s1, spec.alpha_inclusive))
        alphas.push_back({a, weight(a), 1.0 / a.factorial()});
    for (const auto& b : taylor_indices(dim, spec.s2, spec.beta_inclusive))
        betas.push_back({b, weight(b), 1.0 / b.factorial()});
    FrequencySymbol main = weight(MultiIndex{dim, {0, 0}});
    bool hom = !spec.base || spec.base->radial == TermSymbol::Radial::homogeneous;

    BilinearSymbol b;
    b.name = "leibniz_sigma(s=" + std::to_string(spec.s) + ",s1=" + std::to_string(spec.s1) + ")";
    b.vanishes_at_eta0 = hom;
    b.rule = [main, alphas, betas](const Grid& g, const std::array<long long, 2>& kx,
                                   const std::array<long long, 2>& ke) {
        cd v = ev(main, g, kadd(kx, ke));
        auto xi = freq_pair(g, kx);
        auto eta = freq_pair(g, ke);
        for (const auto& t : alphas) v -= t.invfact * monomial(xi, t.idx) * ev(t.w, g, ke);
        for (const auto& t : betas) v -= t.invfact * monomial(eta, t.idx) * ev(t.w, g, kx);
        return v;
    };
    return b;
}

Field refined_ds_remainder(const Field& f, const Field& g, double s) {
    check_pair(f, g, "refined_ds_remainder");
    if (!(s > 0.0)) throw config_error("refined_ds_remainder: s must be positive");
    const int dim = f.grid.dim;
    FrequencySymbol D = ds(dim, s);
    Field out = apply(D, mul_dealiased(f, g));
    out = sub(out, mul_dealiased(f, apply(D, g)));
    out = sub(out, mul_dealiased(g, apply(D, f)));
    if (s >= 1.0) {
        FrequencySymbol Dc = ds(dim, s - 2.0);
        for (int m = 0; m < dim; ++m) {
            Field w = apply(Dc, apply(partial(dim, m), g));
            out = add(out, scale(mul_dealiased(apply(partial(dim, m), f), w), cd(s, 0.0)));
        }
    }
    return out;
}

BilinearSymbol refined_ds_sigma(int dim, double s) {
    if (!(s > 0.0)) throw config_error("refined_ds_sigma: s must be positive");
    FrequencySymbol D = ds(dim, s);
    FrequencySymbol Dc = ds(dim, s - 2.0);
    std::array<FrequencySymbol, 2> P{partial(dim, 0), partial(dim, dim == 2 ? 1 : 0)};
    BilinearSymbol b;
    b.name = "refined_ds_sigma(s=" + std::to_string(s) + ")";
    b.vanishes_at_eta0 = true;
    b.rule = [D, Dc, P, dim, s](const Grid& g, const std::array<long long, 2>& kx,
                                const std::array<long long, 2>& ke) {
        cd v = ev(D, g, kadd(kx, ke)) - ev(D, g, ke) - ev(D, g, kx);
        if (s >= 1.0) {
            cd dce = ev(Dc, g, ke);
            for (int m = 0; m < dim; ++m) v += s * ev(P[m], g, kx) * ev(P[m], g, ke) * dce;
        }
        return v;
    };
    return b;
}

Field refined_js_remainder(const Field& f, const Field& g, double s) {
    check_pair(f, g, "refined_js_remainder");
    if (!(s > 0.0)) throw config_error("refined_js_remainder: s must be positive");
    const int dim = f.grid.dim;
    FrequencySymbol J = js(dim, s);
    Field out = apply(J, mul_dealiased(f, g));
    out = sub(out, mul_dealiased(f, apply(J, g)));
    out = sub(out, mul_dealiased(g, apply(js_tilde(dim, s), f)));
    if (s > 1.0) {
        for (int m = 0; m < dim; ++m) {
            Field w = apply(js_partial(dim, s - 2.0, m), g);
            out = add(out, scale(mul_dealiased(apply(partial(dim, m), f), w), cd(s, 0.0)));
        }
    }
    return out;
}

BilinearSymbol refined_js_sigma(int dim, double s) {
    if (!(s > 0.0)) throw config_error("refined_js_sigma: s must be positive");
    FrequencySymbol J = js(dim, s);
    FrequencySymbol Jt = js_tilde(dim, s);
    std::array<FrequencySymbol, 2> P{partial(dim, 0), partial(dim, dim == 2 ? 1 : 0)};
    std::array<FrequencySymbol, 2> W{js_partial(dim, s - 2.0, 0),
                                     js_partial(dim, s - 2.0, dim == 2 ? 1 : 0)};
    BilinearSymbol b;
    b.name = "refined_js_sigma(s=" + std::to_string(s) + ")";
    b.vanishes_at_eta0 = true;
    b.rule = [J, Jt, P, W, dim, s](const Grid& g, const std::array<long long, 2>& kx,
                                   const std::array<long long, 2>& ke) {
        cd v = ev(J, g, kadd(kx, ke)) - ev(J, g, ke) - ev(Jt, g, kx);
        if (s > 1.0)
            for (int m = 0; m < dim; ++m) v += s * ev(P[m], g, kx) * ev(W[m], g, ke);
        return v;
    };
    return b;
}

Field thm9_remainder(const Field& f, const Field& g, double s, int l) {
    check_pair(f, g, "thm9_remainder");
    const int dim = f.grid.dim;
    if (l < 0 || l >= dim) throw config_error("thm9_remainder: axis out of range");
    FrequencySymbol JP = js_partial(dim, s, l);
    Field out = apply(JP, mul_dealiased(f, g));
    out = sub(out, mul_dealiased(f, apply(JP, g)));
    out = sub(out, mul_dealiased(g, apply(JP, f)));
    for (int m = 0; m < dim; ++m) {
        FrequencySymbol W = bessel_deriv(dim, s, l, m);
        out = sub(out, mul_dealiased(apply(partial(dim, m), f), apply(W, g)));
        out = sub(out, mul_dealiased(apply(partial(dim, m), g), apply(W, f)));
    }
    return out;
}

BilinearSymbol thm9_sigma(int dim, double s, int l) {
    if (l < 0 || l >= dim) throw config_error("thm9_sigma: axis out of range");
    FrequencySymbol JP = js_partial(dim, s, l);
    std::array<FrequencySymbol, 2> P{partial(dim, 0), partial(dim, dim == 2 ? 1 : 0)};
    std::array<FrequencySymbol, 2> W{bessel_deriv(dim, s, l, 0),
                                     bessel_deriv(dim, s, l, dim == 2 ? 1 : 0)};
    BilinearSymbol b;
    b.name = "thm9_sigma(s=" + std::to_string(s) + ",l=" + std::to_string(l) + ")";
    b.vanishes_at_eta0 = true;
    b.rule = [JP, P, W, dim](const Grid& g, const std::array<long long, 2>& kx,
                             const std::array<long long, 2>& ke) {
        cd v = ev(JP, g, kadd(kx, ke)) - ev(JP, g, ke) - ev(JP, g, kx);
        for (int m = 0; m < dim; ++m) {
            v -= ev(P[m], g, kx) * ev(W[m], g, ke);
            v -= ev(P[m], g, ke) * ev(W[m], g, kx);
        }
        return v;
    };
    return b;
}

std::array<Field, 2> euler_commutator(const std::array<Field, 2>& u, double s) {
    check_pair(u[0], u[1], "euler_commutator");
    const Grid& gr = u[0].grid;
    if (gr.dim != 2) throw grid_error("euler_commutator: needs a dim-2 grid");
    FrequencySymbol J = js(2, s);
    std::array<Field, 2> out{make_field(gr), make_field(gr)};
    for (int i = 0; i < 2; ++i) {
        Field adv = make_field(gr);
        Field advs = make_field(gr);
        for (int l = 0; l < 2; ++l) {
            adv = add(adv, mul_dealiased(u[l], apply(partial(2, l), u[i])));
            advs = add(advs, mul_dealiased(u[l], apply(js_partial(2, s, l), u[i])));
        }
        out[i] = sub(apply(J, adv), advs);
    }
    return out;
}

std::array<Field, 2> euler_commutator_assembled(const std::array<Field, 2>& u, double s) {
    check_pair(u[0], u[1], "euler_commutator_assembled");
    const Grid& gr = u[0].grid;
    if (gr.dim != 2) throw grid_error("euler_commutator_assembled: needs a dim-2 grid");
    std::array<Field, 2> out{make_field(gr), make_field(gr)};
    for (int i = 0; i < 2; ++i) {
        Field c = make_field(gr);
        for (int l = 0; l < 2; ++l) {
            c = add(c, thm9_remainder(u[l], u[i], s, l));
            c = add(c, mul_dealiased(u[i], apply(js_partial(2, s, l), u[l])));
            for (int m = 0; m < 2; ++m) {
                FrequencySymbol W = bessel_deriv(2, s, l, m);
                c = add(c, mul_dealiased(apply(partial(2, m), u[l]), apply(W, u[i])));
                c = add(c, mul_dealiased(apply(partial(2, m), u[i]), apply(W, u[l])));
            }
        }
        out[i] = c;
    }
    return out;
}

BilinearSymbol euler_sigma(double s, int l) {
    if (l < 0 || l >= 2) throw config_error("euler_sigma: axis out of range");
    FrequencySymbol J = js(2, s);
    FrequencySymbol P = partial(2, l);
    BilinearSymbol b;
    b.name = "euler_sigma(s=" + std::to_string(s) + ",l=" + std::to_string(l) + ")";
    b.vanishes_at_eta0 = true;
    b.rule = [J, P](const Grid& g, const std::array<long long, 2>& kx,
                    const std::array<long long, 2>& ke) {
        return (ev(J, g, kadd(kx, ke)) - ev(J, g, ke)) * ev(P, g, ke);
    };
    return b;
}

Field riesz_commutator(const Field& a, const Field& f, int i, int j) {
    check_pair(a, f, "riesz_commutator");
    if (a.grid.dim != 2) throw grid_error("riesz_commutator: needs a dim-2 grid");
    FrequencySymbol R = riesz(i, j);
    return sub(apply(R, mul_dealiased(a, f)), mul_dealiased(a, apply(R, f)));
}

BilinearSymbol riesz_sigma(int i, int j) {
    FrequencySymbol R = riesz(i, j);
    BilinearSymbol b;
    b.name = "riesz_sigma(" + std::to_string(i) + "," + std::to_string(j) + ")";
    b.rule = [R](const Grid& g, const std::array<long long, 2>& kx,
                 const std::array<long long, 2>& ke) {
        return ev(R, g, kadd(kx, ke)) - ev(R, g, ke);
    };
    return b;
}

Field hilbert_commutator(const Field& a, const Field& f, int l, int m) {
    check_pair(a, f, "hilbert_commutator");
    if (a.grid.dim != 1) throw grid_error("hilbert_commutator: needs a dim-1 grid");
    if (l < 0 || m < 0) throw config_error("hilbert_commutator: orders must be >= 0");
    FrequencySymbol H = hilbert();
    Field fm = apply_alpha_derivative(1, MultiIndex{1, {m, 0}}, f);
    Field comm = sub(apply(H, mul_dealiased(a, fm)), mul_dealiased(a, apply(H, fm)));
    return l == 0 ? comm : apply(partial_mono(1, MultiIndex{1, {l, 0}}), comm);
}

BilinearSymbol hilbert_sigma(int l, int m) {
    if (l < 0 || m < 0) throw config_error("hilbert_sigma: orders must be >= 0");
    FrequencySymbol H = hilbert();
    MultiIndex al{1, {l, 0}}, am{1, {m, 0}};
    BilinearSymbol b;
    b.name = "hilbert_sigma(l=" + std::to_string(l) + ",m=" + std::to_string(m) + ")";
    b.rule = [H, al, am](const Grid& g, const std::array<long long, 2>& kx,
                         const std::array<long long, 2>& ke) {
        auto ks = kadd(kx, ke);
        cd h = ev(H, g, ks) - ev(H, g, ke);
        return monomial(freq_pair(g, ks), al) * h * monomial(freq_pair(g, ke), am);
    };
    return b;
}

Field dmp_remainder(const Field& a, const Field& f, double alpha, double beta) {
    check_pair(a, f, "dmp_remainder");
    if (!(alpha >= 0.0 && alpha < 1.0 && beta > 0.0 && beta <= 1.0 - alpha))
        throw config_error("dmp_remainder: need 0 <= alpha < 1 and 0 < beta <= 1 - alpha");
    const int dim = a.grid.dim;
    auto ds_or_id = [dim](double e, const Field& h) {
        return e == 0.0 ? h : apply(ds(dim, e), h);
    };
    Field t1 = ds_or_id(alpha + beta, mul_dealiased(a, ds_or_id(1.0 - alpha - beta, f)));
    Field t2 = ds_or_id(alpha, mul_dealiased(a, ds_or_id(1.0 - alpha, f)));
    Field out = sub(t1, t2);
    FrequencySymbol Dinv = ds(dim, -1.0);
    for (int mm = 0; mm < dim; ++mm) {
        Field w = apply(Dinv, apply(partial(dim, mm), f));
        out = add(out, scale(mul_dealiased(apply(partial(dim, mm), a), w), cd(beta, 0.0)));
    }
    return out;
}

BilinearSymbol dmp_sigma(int dim, double alpha, double beta) {
    if (!(alpha >= 0.0 && alpha < 1.0 && beta > 0.0 && beta <= 1.0 - alpha))
        throw config_error("dmp_sigma: need 0 <= alpha < 1 and 0 < beta <= 1 - alpha");
    // exponent-0 factors are the identity, kept as constant 1
    auto pow_sym = [dim](double e) {
        FrequencySymbol D = ds(dim, e);
        return [D, e](const Grid& g, const std::array<long long, 2>& k) {
            return e == 0.0 ? cd(1.0, 0.0) : ev(D, g, k);
        };
    };
    auto outer1 = pow_sym(alpha + beta), inner1 = pow_sym(1.0 - alpha - beta);
    auto outer2 = pow_sym(alpha), inner2 = pow_sym(1.0 - alpha);
    FrequencySymbol Dinv = ds(dim, -1.0);
    std::array<FrequencySymbol, 2> P{partial(dim, 0), partial(dim, dim == 2 ? 1 : 0)};
    BilinearSymbol b;
    b.name = "dmp_sigma(a=" + std::to_string(alpha) + ",b=" + std::to_string(beta) + ")";
    b.rule = [=](const Grid& g, const std::array<long long, 2>& kx,
                 const std::array<long long, 2>& ke) {
        auto ks = kadd(kx, ke);
        cd v = outer1(g, ks) * inner1(g, ke) - outer2(g, ks) * inner2(g, ke);
        cd dinv = ev(Dinv, g, ke);
        for (int m = 0; m < dim; ++m) v += beta * ev(P[m], g, kx) * ev(P[m], g, ke) * dinv;
        return v;
    };
    return b;
}

Field paraproduct_pair(const LPFamily& fam, const Field& f, const Field& g,
                       const PairFactor& factor_f, const PairFactor& factor_g) {
    check_pair(f, g, "paraproduct_pair");
    if (factor_g.lowpass)
        throw config_error("paraproduct_pair: the second factor keeps the zero mode; "
                           "use a band profile so it vanishes at frequency zero");
    const int dim = f.grid.dim;
    BandRange r = band_range(f.grid);
    Field out = make_field(f.grid);
    for (int j = r.jmin; j <= r.jmax; ++j) {
        Field pf = factor_f.lowpass ? project_le(fam, f, j) : project(fam, f, j);
        if (factor_f.weight != 0.0) pf = apply(ds(dim, factor_f.weight), pf);
        Field pg = project(fam, g, j);
        if (factor_g.weight != 0.0) pg = apply(ds(dim, factor_g.weight), pg);
        out = add(out, mul_dealiased(pf, pg));
    }
    return out;
}

BilinearSymbol paraproduct_sigma(const LPFamily& fam, const Grid& gr,
                                 const PairFactor& factor_f, const PairFactor& factor_g) {
    if (factor_g.lowpass)
        throw config_error("paraproduct_sigma: the second factor keeps the zero mode; "
                           "use a band profile so it vanishes at frequency zero");
    BandRange r = band_range(gr);
    // |xi|^w with the unary zero-mode policy: 1 for w = 0, 0 at xi = 0 otherwise
    auto wpow = [](const std::array<double, 2>& xi, double w) {
        if (w == 0.0) return 1.0;
        double b = xi[0] * xi[0] + xi[1] * xi[1];
        return b == 0.0 ? 0.0 : std::pow(b, 0.5 * w);
    };
    BilinearSymbol b;
    b.name = "paraproduct_sigma(" + fam.id + ")";
    b.vanishes_at_eta0 = true;
    b.rule = [fam, r, factor_f, factor_g, wpow](const Grid& g,
                                                const std::array<long long, 2>& kx,
                                                const std::array<long long, 2>& ke) {
        auto xi = freq_pair(g, kx);
        auto eta = freq_pair(g, ke);
        double rx = std::sqrt(xi[0] * xi[0] + xi[1] * xi[1]);
        double re = std::sqrt(eta[0] * eta[0] + eta[1] * eta[1]);
        double s = 0.0;
        for (int j = r.jmin; j <= r.jmax; ++j) {
            double a = factor_f.lowpass ? fam.phi0(std::ldexp(rx, -j))
                                        : fam.phi(std::ldexp(rx, -j));
            if (a == 0.0) continue;
            s += a * fam.phi(std::ldexp(re, -j));
        }
        return cd(s * wpow(xi, factor_f.weight) * wpow(eta, factor_g.weight), 0.0);
    };
    return b;
}

Field divfree_form(const std::array<Field, 2>& f, const std::array<Field, 2>& g, double s) {
    check_pair(f[0], g[1], "divfree_form");
    const Grid& gr = f[0].grid;
    if (gr.dim != 2) throw grid_error("divfree_form: needs a dim-2 grid");
    Field out = make_field(gr);
    for (int l = 0; l < 2; ++l) {
        Field dlg2 = apply(partial(2, l), g[1]);
        for (int m = 0; m < 2; ++m) {
            Field w = apply(js_partial(2, s - 2.0, m), dlg2);
            out = add(out, scale(mul_dealiased(apply(partial(2, m), f[l]), w), cd(s, 0.0)));
        }
        out = sub(out, mul_dealiased(apply(partial(2, l), f[1]), apply(js_tilde(2, s), g[l])));
    }
    return out;
}

const std::vector<std::string>& remainder_op_names() {
    static const std::vector<std::string> names{
        "kp_commutator",     "leibniz_remainder", "refined_ds_remainder",
        "refined_js_remainder", "thm9_remainder", "euler_commutator",
        "riesz_commutator",  "hilbert_commutator", "dmp_remainder",
        "paraproduct_pair",  "divfree_form"};
    return names;
}

} // namespace frac
