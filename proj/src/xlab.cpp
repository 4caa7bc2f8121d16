#include "frac/xlab.hpp"

#include "frac/dyadic.hpp"
#include "frac/remainders.hpp"
#include "frac/symbols.hpp"
#include "frac/zoo.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#ifndef FRAC_SOURCE_DIR
#define FRAC_SOURCE_DIR "."
#endif

namespace frac {

namespace {

using nlohmann::ordered_json;

double now_ms() {
    auto t = std::chrono::steady_clock::now().time_since_epoch();
    return std::chrono::duration<double, std::milli>(t).count();
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t k) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (k + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double inv_exp(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double pget(const ProbeConfig& cfg, const std::string& key, double dflt) {
    auto it = cfg.params.find(key);
    return it == cfg.params.end() ? dflt : it->second;
}

// || J^s grad f ||_p, euclidean magnitude across the components
double grad_norm(const Field& f, double s, double p) {
    const int d = f.grid.dim;
    Field c0 = apply(js_partial(d, s, 0), f);
    if (d == 1) return lp_norm(c0, p);
    Field c1 = apply(js_partial(d, s, 1), f);
    Field mag = make_field(f.grid);
    for (std::size_t i = 0; i < mag.v.size(); ++i)
        mag.v[i] = cd(std::hypot(std::abs(c0.v[i]), std::abs(c1.v[i])), 0.0);
    mag.is_real = true;
    return lp_norm(mag, p);
}

double vec_js_norm(const std::array<Field, 2>& u, double s, double p) {
    Field a = apply(js(u[0].grid.dim, s), u[0]);
    Field b = apply(js(u[1].grid.dim, s), u[1]);
    Field mag = make_field(u[0].grid);
    for (std::size_t i = 0; i < mag.v.size(); ++i)
        mag.v[i] = cd(std::hypot(std::abs(a.v[i]), std::abs(b.v[i])), 0.0);
    mag.is_real = true;
    return lp_norm(mag, p);
}

double rel_l2(const Field& a, const Field& b) {
    double den = std::max({l2(a), l2(b), 1e-300});
    return l2(sub(a, b)) / den;
}

Grid grid_of(const GridConfig& gc) { return make_grid(gc.dim, gc.n, gc.boxlen); }

std::string point_tag(const ProbeConfig& cfg, double pt) {
    return cfg.probe + " at " + cfg.sweep_key + "=" + fmt_short(pt) + ": ";
}

// runs fn, splicing the sweep point into family-construction errors
template <class Fn>
auto at_point(const ProbeConfig& cfg, double pt, Fn&& fn) {
    try {
        return fn();
    } catch (const resolution_error& e) {
        throw resolution_error(point_tag(cfg, pt) + e.what());
    } catch (const band_range_error& e) {
        throw band_range_error(point_tag(cfg, pt) + e.what());
    } catch (const dc_error& e) {
        throw dc_error(point_tag(cfg, pt) + e.what());
    }
}

ProbeRecord finish_record(const ProbeConfig& cfg, double param, double lhs, double rhs,
                          double t0) {
    if (!std::isfinite(lhs) || !std::isfinite(rhs) || lhs < 0.0 || rhs < 0.0)
        throw std::runtime_error(point_tag(cfg, param) +
                                 "probe produced a non-finite or negative value (lhs=" +
                                 fmt_short(lhs) + ", rhs=" + fmt_short(rhs) + ")");
    ProbeRecord r;
    r.probe = cfg.probe;
    r.param = param;
    r.lhs = lhs;
    r.rhs = rhs;
    r.ratio = rhs > 0.0 ? lhs / rhs : 0.0;
    if (!std::isfinite(r.ratio))
        throw std::runtime_error(point_tag(cfg, param) + "ratio overflowed");
    r.grid_n = cfg.grid.n;
    r.grid_L = cfg.grid.boxlen;
    r.seed = cfg.seed;
    r.wall_ms = now_ms() - t0;
    return r;
}

// ---------------------------------------------------------------------------
// probe runners

using PairBody = std::function<std::pair<double, double>(
    const ProbeConfig&, const Grid&, const Field&, const Field&)>;

std::vector<ProbeRecord> run_pair_probe(const ProbeConfig& cfg, const PairBody& body) {
    Grid gr = grid_of(cfg.grid);
    std::vector<ProbeRecord> out;
    out.reserve(cfg.sweep.size());
    for (std::size_t i = 0; i < cfg.sweep.size(); ++i) {
        double t0 = now_ms();
        double pt = cfg.sweep[i];
        auto lr = at_point(cfg, pt, [&] {
            Field f = random_smooth(gr, mix_seed(cfg.seed, 2 * i));
            Field g = random_smooth(gr, mix_seed(cfg.seed, 2 * i + 1));
            return body(cfg, gr, f, g);
        });
        out.push_back(finish_record(cfg, pt, lr.first, lr.second, t0));
    }
    return out;
}

std::vector<ProbeRecord> probe_thm1_1(const ProbeConfig& cfg) {
    double s = pget(cfg, "s", 1.5);
    return run_pair_probe(cfg, [s](const ProbeConfig& c, const Grid& gr, const Field& f,
                                   const Field& g) {
        double lhs = lp_norm(kp_commutator(f, g, s), c.norms.p);
        double rhs = grad_norm(f, s - 1.0, c.norms.p1) * lp_norm(g, c.norms.p2);
        if (s > 1.0)
            rhs += grad_norm(f, 0.0, c.norms.p3) *
                   lp_norm(apply(js(gr.dim, s - 1.0), g), c.norms.p4);
        return std::make_pair(lhs, rhs);
    });
}

std::vector<ProbeRecord> probe_thm1_2(const ProbeConfig& cfg) {
    double s = pget(cfg, "s", 2.0);
    double s1 = pget(cfg, "s1", 1.0);
    double s2 = pget(cfg, "s2", 1.0);
    int flavor = static_cast<int>(pget(cfg, "flavor", 0.0));
    if (std::abs(s1 + s2 - s) > 1e-12)
        throw config_error(cfg.source + ": thm1_2 needs s1 + s2 == s");
    if (flavor < 0 || flavor > 2)
        throw config_error(cfg.source + ": thm1_2 flavor must be 0, 1 or 2");
    if (flavor == 1 && !std::isinf(cfg.norms.p2))
        throw config_error(cfg.source + ": thm1_2 flavor 1 carries BMO in the p2 slot; set p2 to inf");
    if (flavor == 2 && !std::isinf(cfg.norms.p1))
        throw config_error(cfg.source + ": thm1_2 flavor 2 carries BMO in the p1 slot; set p1 to inf");
    return run_pair_probe(cfg, [=](const ProbeConfig& c, const Grid& gr, const Field& f,
                                   const Field& g) {
        LeibnizSpec spec;
        spec.s = s;
        spec.s1 = s1;
        spec.s2 = s2;
        spec.alpha_inclusive = flavor != 1;
        spec.beta_inclusive = flavor != 2;
        double lhs = lp_norm(leibniz_remainder(spec, f, g), c.norms.p);
        Field df = apply(ds(gr.dim, s1), f);
        Field dg = apply(ds(gr.dim, s2), g);
        double rf = flavor == 2 ? bmo_norm(df) : lp_norm(df, c.norms.p1);
        double rg = flavor == 1 ? bmo_norm(dg) : lp_norm(dg, c.norms.p2);
        return std::make_pair(lhs, rf * rg);
    });
}

std::vector<ProbeRecord> probe_thm1_5(const ProbeConfig& cfg) {
    double s = pget(cfg, "s", 1.7);
    return run_pair_probe(cfg, [s](const ProbeConfig& c, const Grid& gr, const Field& f,
                                   const Field& g) {
        double lhs = lp_norm(kp_commutator(f, g, s), c.norms.p);
        double rhs = grad_norm(f, s - 1.0, c.norms.p1) * lp_norm(g, c.norms.p2);
        if (s > 1.0)
            rhs += grad_norm(f, 0.0, c.norms.p3) * grad_norm(g, s - 2.0, c.norms.p4);
        (void)gr;
        return std::make_pair(lhs, rhs);
    });
}

std::vector<ProbeRecord> probe_thm5_1(const ProbeConfig& cfg) {
    double s = pget(cfg, "s", 1.6);
    return run_pair_probe(cfg, [s](const ProbeConfig& c, const Grid& gr, const Field& f,
                                   const Field& g) {
        double lhs = lp_norm(refined_ds_remainder(f, g, s), c.norms.p);
        double rf = lp_norm(apply(ds(gr.dim, s), f), c.norms.p1);
        double rg = std::isinf(c.norms.p2) ? bmo_norm(g) : lp_norm(g, c.norms.p2);
        return std::make_pair(lhs, rf * rg);
    });
}

std::vector<ProbeRecord> probe_thm6_2(const ProbeConfig& cfg) {
    double s = pget(cfg, "s", 1.4);
    return run_pair_probe(cfg, [s](const ProbeConfig& c, const Grid& gr, const Field& f,
                                   const Field& g) {
        double lhs = lp_norm(refined_js_remainder(f, g, s), c.norms.p);
        double rhs;
        if (s <= 1.0) {
            rhs = grad_norm(f, s - 1.0, c.norms.p1) * bmo_norm(g);
        } else {
            LPFamily fam = make_family(RampKind::poly5);
            Field df = apply(partial(gr.dim, 0), f);
            if (gr.dim == 2) df = add(df, apply(partial(gr.dim, 1), f));
            rhs = grad_norm(f, s - 1.0, c.norms.p1) * besov0_norm(fam, g).value +
                  besov0_norm(fam, df).value * grad_norm(g, s - 2.0, c.norms.p4);
        }
        return std::make_pair(lhs, rhs);
    });
}

std::vector<ProbeRecord> probe_prop3_7a(const ProbeConfig& cfg) {
    int l = static_cast<int>(pget(cfg, "l", 1.0));
    int m = static_cast<int>(pget(cfg, "m", 1.0));
    if (l < 0 || m < 0 || l + m > 3)
        throw config_error(cfg.source + ": prop3_7a needs 0 <= l, m with l + m <= 3");
    return run_pair_probe(cfg, [l, m](const ProbeConfig& c, const Grid& gr, const Field& a,
                                      const Field& f) {
        double lhs = lp_norm(hilbert_commutator(a, f, l, m), c.norms.p);
        Field da = a;
        for (int i = 0; i < l + m; ++i) da = apply(partial(gr.dim, 0), da);
        return std::make_pair(lhs, bmo_norm(da) * lp_norm(f, c.norms.p));
    });
}

std::vector<ProbeRecord> probe_prop3_7b(const ProbeConfig& cfg) {
    double alpha = pget(cfg, "alpha", 0.3);
    double beta = pget(cfg, "beta", 0.4);
    return run_pair_probe(cfg, [alpha, beta](const ProbeConfig& c, const Grid& gr,
                                             const Field& a, const Field& f) {
        double lhs = lp_norm(dmp_remainder(a, f, alpha, beta), c.norms.p);
        double rhs = bmo_norm(apply(ds(gr.dim, 1.0), a)) * lp_norm(f, c.norms.p);
        return std::make_pair(lhs, rhs);
    });
}

std::vector<ProbeRecord> probe_lem7_1(const ProbeConfig& cfg) {
    double s = pget(cfg, "s", 1.5);
    Grid gr = grid_of(cfg.grid);
    std::array<double, 2> ctr{gr.boxlen / 2.0, gr.dim == 2 ? gr.boxlen / 2.0 : 0.0};
    Field bump = sample(gr, smooth_bump(gr, ctr, gr.boxlen / 8.0));
    double nb = l2(bump);
    std::vector<ProbeRecord> out;
    for (double pt : cfg.sweep) {
        double t0 = now_ms();
        long long k = static_cast<long long>(std::llround(pt));
        auto lr = at_point(cfg, pt, [&] {
            if (k <= 0 || k >= gr.n / 2)
                throw resolution_error("carrier mode " + std::to_string(k) +
                                       " outside the open mode range");
            Field wave = sample(gr, plane_wave(gr, {k, 0}));
            Field fe = mul(bump, wave);
            double freq = gr.freq_of(k);
            double jk = std::pow(1.0 + freq * freq, 0.5 * s);
            Field lhs_f = sub(apply(js(gr.dim, s), fe), scale(fe, cd(jk, 0.0)));
            return std::make_pair(l2(lhs_f), nb);
        });
        ProbeRecord r = finish_record(cfg, gr.freq_of(k), lr.first, lr.second, t0);
        out.push_back(r);
    }
    return out;
}

std::vector<ProbeRecord> probe_lem6_1(const ProbeConfig& cfg) {
    double s = pget(cfg, "s", 1.5);
    Grid gr = grid_of(cfg.grid);
    LPFamily fam = make_family(RampKind::poly5);
    std::vector<ProbeRecord> out;
    for (double pt : cfg.sweep) {
        double t0 = now_ms();
        int j = static_cast<int>(std::llround(pt));
        auto lr = at_point(cfg, pt, [&] {
            Field kj = kernel_of(js_tilde(gr.dim, s), fam, gr, j);
            return std::make_pair(linf(kj), 1.0);
        });
        out.push_back(finish_record(cfg, std::ldexp(1.0, j), lr.first, lr.second, t0));
    }
    return out;
}

std::vector<ProbeRecord> probe_prop7_4(const ProbeConfig& cfg) {
    double s = pget(cfg, "s", 0.5);
    double ck = pget(cfg, "c_k", 8.0);
    Grid gr = grid_of(cfg.grid);
    std::vector<ProbeRecord> out;
    for (double pt : cfg.sweep) {
        double t0 = now_ms();
        int n_stack = static_cast<int>(std::llround(pt));
        GrowthPoint gp = at_point(cfg, pt, [&] {
            return log_stack_growth_point(gr, s, ck, n_stack);
        });
        out.push_back(finish_record(cfg, pt, gp.num, gp.den, t0));
    }
    return out;
}

std::vector<ProbeRecord> probe_remark3_2(const ProbeConfig& cfg) {
    double delta = pget(cfg, "delta", 0.02);
    double eps = pget(cfg, "eps", 0.08);
    Grid gr = grid_of(cfg.grid);
    LPFamily fam = make_family(RampKind::poly5);
    std::vector<int> order(cfg.sweep.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return cfg.sweep[a] < cfg.sweep[b];
    });
    int top = static_cast<int>(std::llround(cfg.sweep[order.back()]));
    Field f_top = at_point(cfg, top, [&] {
        return chirp_stack(gr, delta, eps, top, true);
    });
    // every term occupies exactly one band, so partial square sums accumulate
    std::vector<ProbeRecord> out(cfg.sweep.size());
    Field acc = make_field(gr);
    int next_band = 2;
    for (int oi : order) {
        double pt = cfg.sweep[oi];
        double t0 = now_ms();
        int J = static_cast<int>(std::llround(pt));
        auto lr = at_point(cfg, pt, [&] {
            if (J < 3) throw resolution_error("truncation level must be >= 3");
            for (; next_band <= J; ++next_band) {
                Field pj = project(fam, f_top, next_band);
                acc = add(acc, mul_dealiased(pj, pj));
            }
            Field fj = chirp_stack(gr, delta, eps, J, true);
            double rhs = l2(fj) * besov0_norm(fam, fj).value;
            return std::make_pair(l2(acc), rhs);
        });
        out[oi] = finish_record(cfg, pt, lr.first, lr.second, t0);
    }
    return out;
}

std::vector<ProbeRecord> probe_prop9_3(const ProbeConfig& cfg) {
    double s = pget(cfg, "s", 2.5);
    long long k_mode = static_cast<long long>(std::llround(pget(cfg, "k_mode", 127.0)));
    double bscale = pget(cfg, "bscale", 0.01);
    Grid gr = grid_of(cfg.grid);
    std::vector<ProbeRecord> out;
    for (double pt : cfg.sweep) {
        double t0 = now_ms();
        int m = static_cast<int>(std::llround(pt));
        auto lr = at_point(cfg, pt, [&] {
            DivfreePair pair =
                divfree_pair(gr, default_annular_2d(), m, k_mode, s, cfg.norms.p, bscale);
            double best_num = 0.0, best_den = 1.0;
            for (const auto* u : {&pair.u_base, &pair.u_pert}) {
                double num = lp_norm(divfree_form(*u, *u, s), cfg.norms.p);
                double den = std::max(1.0, vec_js_norm(*u, s, cfg.norms.p));
                if (num / den > best_num / best_den) {
                    best_num = num;
                    best_den = den;
                }
            }
            return std::make_pair(best_num, best_den);
        });
        out.push_back(finish_record(cfg, pt, lr.first, lr.second, t0));
    }
    return out;
}

struct ProbeDef {
    std::vector<ProbeRecord> (*run)(const ProbeConfig&);
};

const std::map<std::string, ProbeDef>& registry() {
    static const std::map<std::string, ProbeDef> reg = {
        {"thm1_1", {probe_thm1_1}},     {"thm1_2", {probe_thm1_2}},
        {"thm1_5", {probe_thm1_5}},     {"thm5_1", {probe_thm5_1}},
        {"thm6_2", {probe_thm6_2}},     {"prop3_7a", {probe_prop3_7a}},
        {"prop3_7b", {probe_prop3_7b}}, {"lem6_1", {probe_lem6_1}},
        {"lem7_1", {probe_lem7_1}},     {"prop7_4", {probe_prop7_4}},
        {"remark3_2", {probe_remark3_2}}, {"prop9_3", {probe_prop9_3}},
    };
    return reg;
}

// ---------------------------------------------------------------------------
// config io

double parse_exponent(const nlohmann::json& v, const std::string& where) {
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s == "inf" || s == "Inf" || s == "infinity") return lp_inf;
        throw config_error(where + ": exponent strings must be \"inf\"");
    }
    if (!v.is_number()) throw config_error(where + ": exponent must be a number or \"inf\"");
    return v.get<double>();
}

void validate_config(const ProbeConfig& cfg) {
    const std::string& src = cfg.source;
    if (registry().find(cfg.probe) == registry().end()) {
        std::string known;
        for (const auto& kv : registry()) known += (known.empty() ? "" : ", ") + kv.first;
        throw config_error(src + ": unknown probe '" + cfg.probe + "' (known: " + known + ")");
    }
    if (cfg.grid.dim != 1 && cfg.grid.dim != 2)
        throw config_error(src + ": grid.dim must be 1 or 2");
    if (cfg.grid.n < 8 || (cfg.grid.n & (cfg.grid.n - 1)) != 0)
        throw config_error(src + ": grid.n must be a power of two, n >= 8");
    if (!(cfg.grid.boxlen > 0.0)) throw config_error(src + ": grid.L must be positive");
    const NormConfig& nc = cfg.norms;
    if (!(nc.p > 1.0) || std::isinf(nc.p))
        throw config_error(src + ": p must be finite and > 1");
    for (double q : {nc.p1, nc.p2, nc.p3, nc.p4})
        if (!(q > 1.0)) throw config_error(src + ": exponents must be > 1 (or inf)");
    if (std::abs(inv_exp(nc.p1) + inv_exp(nc.p2) - inv_exp(nc.p)) > 1e-12)
        throw config_error(src + ": exponent pairing violated, 1/p1 + 1/p2 != 1/p");
    if (std::abs(inv_exp(nc.p3) + inv_exp(nc.p4) - inv_exp(nc.p)) > 1e-12)
        throw config_error(src + ": exponent pairing violated, 1/p3 + 1/p4 != 1/p");
    if (cfg.sweep.empty())
        throw config_error(src + ": nothing to sweep; give an array-valued param or a pairs count");
    if (cfg.sweep.size() > 100000) throw config_error(src + ": sweep too long");
    for (double v : cfg.sweep)
        if (!std::isfinite(v)) throw config_error(src + ": sweep values must be finite");
}

} // namespace

ProbeConfig probe_config_from_json_text(const std::string& text, const std::string& source) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw config_error(source + ": " + e.what());
    }
    if (!j.is_object()) throw config_error(source + ": top level must be an object");
    ProbeConfig cfg;
    cfg.source = source;
    for (const auto& kv : j.items()) {
        const std::string& key = kv.key();
        if (key != "probe" && key != "params" && key != "grid" && key != "norms" &&
            key != "seed")
            throw config_error(source + ": unknown key '" + key + "'");
    }
    if (!j.contains("probe") || !j["probe"].is_string())
        throw config_error(source + ": missing string field 'probe'");
    cfg.probe = j["probe"].get<std::string>();
    if (j.contains("params")) {
        if (!j["params"].is_object()) throw config_error(source + ": params must be an object");
        for (const auto& kv : j["params"].items()) {
            if (kv.value().is_array()) {
                if (!cfg.sweep_key.empty())
                    throw config_error(source + ": only one param may be an array (" +
                                       cfg.sweep_key + " and " + kv.key() + " both are)");
                cfg.sweep_key = kv.key();
                for (const auto& e : kv.value()) {
                    if (!e.is_number())
                        throw config_error(source + ": sweep entries must be numbers");
                    cfg.sweep.push_back(e.get<double>());
                }
            } else if (kv.value().is_number()) {
                cfg.params[kv.key()] = kv.value().get<double>();
            } else {
                throw config_error(source + ": param '" + kv.key() +
                                   "' must be a number or an array of numbers");
            }
        }
    }
    if (cfg.sweep_key.empty()) {
        auto it = cfg.params.find("pairs");
        if (it != cfg.params.end()) {
            int pairs = static_cast<int>(std::llround(it->second));
            if (pairs < 1 || pairs > 100000)
                throw config_error(source + ": pairs must be in [1, 100000]");
            cfg.sweep_key = "pair";
            for (int i = 1; i <= pairs; ++i) cfg.sweep.push_back(static_cast<double>(i));
        }
    }
    if (j.contains("grid")) {
        const auto& jg = j["grid"];
        if (!jg.is_object()) throw config_error(source + ": grid must be an object");
        for (const auto& kv : jg.items())
            if (kv.key() != "dim" && kv.key() != "n" && kv.key() != "L")
                throw config_error(source + ": unknown grid key '" + kv.key() + "'");
        if (jg.contains("dim")) cfg.grid.dim = jg["dim"].get<int>();
        if (jg.contains("n")) cfg.grid.n = jg["n"].get<int>();
        if (jg.contains("L")) cfg.grid.boxlen = jg["L"].get<double>();
    }
    if (j.contains("norms")) {
        const auto& jn = j["norms"];
        if (!jn.is_object()) throw config_error(source + ": norms must be an object");
        for (const auto& kv : jn.items())
            if (kv.key() != "p" && kv.key() != "p1" && kv.key() != "p2" && kv.key() != "p3" &&
                kv.key() != "p4")
                throw config_error(source + ": unknown norms key '" + kv.key() + "'");
        if (jn.contains("p")) cfg.norms.p = parse_exponent(jn["p"], source + ": p");
        cfg.norms.p1 = cfg.norms.p;
        cfg.norms.p2 = lp_inf;
        cfg.norms.p3 = lp_inf;
        cfg.norms.p4 = cfg.norms.p;
        if (jn.contains("p1")) {
            cfg.norms.p1 = parse_exponent(jn["p1"], source + ": p1");
            cfg.norms.has_pair12 = true;
        }
        if (jn.contains("p2")) {
            cfg.norms.p2 = parse_exponent(jn["p2"], source + ": p2");
            cfg.norms.has_pair12 = true;
        }
        if (jn.contains("p3")) {
            cfg.norms.p3 = parse_exponent(jn["p3"], source + ": p3");
            cfg.norms.has_pair34 = true;
        }
        if (jn.contains("p4")) {
            cfg.norms.p4 = parse_exponent(jn["p4"], source + ": p4");
            cfg.norms.has_pair34 = true;
        }
    } else {
        cfg.norms.p1 = cfg.norms.p;
        cfg.norms.p4 = cfg.norms.p;
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned())
            throw config_error(source + ": seed must be a nonnegative integer");
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    validate_config(cfg);
    return cfg;
}

ProbeConfig load_probe_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error(path + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    return probe_config_from_json_text(ss.str(), path);
}

std::string probe_config_to_json(const ProbeConfig& cfg) {
    ordered_json j;
    j["probe"] = cfg.probe;
    ordered_json params = ordered_json::object();
    for (const auto& kv : cfg.params) params[kv.first] = kv.second;
    if (!cfg.sweep_key.empty() && cfg.sweep_key != "pair") params[cfg.sweep_key] = cfg.sweep;
    j["params"] = params;
    j["grid"] = {{"dim", cfg.grid.dim}, {"n", cfg.grid.n}, {"L", cfg.grid.boxlen}};
    ordered_json norms = ordered_json::object();
    auto put = [&](const char* k, double v) {
        if (std::isinf(v))
            norms[k] = "inf";
        else
            norms[k] = v;
    };
    put("p", cfg.norms.p);
    if (cfg.norms.has_pair12) {
        put("p1", cfg.norms.p1);
        put("p2", cfg.norms.p2);
    }
    if (cfg.norms.has_pair34) {
        put("p3", cfg.norms.p3);
        put("p4", cfg.norms.p4);
    }
    j["norms"] = norms;
    j["seed"] = cfg.seed;
    return j.dump(2) + "\n";
}

std::vector<std::string> probe_names() {
    std::vector<std::string> out;
    for (const auto& kv : registry()) out.push_back(kv.first);
    return out;
}

namespace {

ProbeConfig base_pairs_config(const std::string& probe, std::uint64_t seed) {
    ProbeConfig cfg;
    cfg.probe = probe;
    cfg.grid = {1, 256, 64.0};
    cfg.params["pairs"] = 50.0;
    cfg.sweep_key = "pair";
    for (int i = 1; i <= 50; ++i) cfg.sweep.push_back(static_cast<double>(i));
    cfg.norms.p = 2.0;
    cfg.norms.p1 = 2.0;
    cfg.norms.p2 = lp_inf;
    cfg.norms.p3 = lp_inf;
    cfg.norms.p4 = 2.0;
    cfg.seed = seed;
    cfg.source = "<default:" + probe + ">";
    return cfg;
}

void set_sweep(ProbeConfig& cfg, const std::string& key, std::vector<double> values) {
    cfg.sweep_key = key;
    cfg.sweep = std::move(values);
    cfg.params.erase("pairs");
}

} // namespace

ProbeConfig default_probe_config(const std::string& probe) {
    if (probe == "thm1_1") {
        ProbeConfig c = base_pairs_config(probe, 101);
        c.params["s"] = 1.5;
        c.norms.has_pair12 = c.norms.has_pair34 = true;
        return c;
    }
    if (probe == "thm1_2") {
        ProbeConfig c = base_pairs_config(probe, 102);
        c.params["s"] = 3.0;
        c.params["s1"] = 2.0;
        c.params["s2"] = 1.0;
        c.params["flavor"] = 0.0;
        c.norms.p1 = 4.0;
        c.norms.p2 = 4.0;
        c.norms.has_pair12 = true;
        return c;
    }
    if (probe == "thm1_5") {
        ProbeConfig c = base_pairs_config(probe, 105);
        c.params["s"] = 1.7;
        c.norms.p1 = 3.0;
        c.norms.p2 = 6.0;
        c.norms.has_pair12 = c.norms.has_pair34 = true;
        return c;
    }
    if (probe == "thm5_1") {
        ProbeConfig c = base_pairs_config(probe, 51);
        c.params["s"] = 1.6;
        c.norms.has_pair12 = true;
        return c;
    }
    if (probe == "thm6_2") {
        ProbeConfig c = base_pairs_config(probe, 62);
        c.params["s"] = 1.4;
        c.norms.has_pair12 = true;
        return c;
    }
    if (probe == "prop3_7a") {
        ProbeConfig c = base_pairs_config(probe, 37);
        c.params["l"] = 1.0;
        c.params["m"] = 1.0;
        return c;
    }
    if (probe == "prop3_7b") {
        ProbeConfig c = base_pairs_config(probe, 38);
        c.params["alpha"] = 0.3;
        c.params["beta"] = 0.4;
        return c;
    }
    if (probe == "lem7_1") {
        ProbeConfig c = base_pairs_config(probe, 71);
        c.grid = {1, 16384, 64.0};
        c.params["s"] = 1.5;
        set_sweep(c, "k_mode", {163, 326, 652, 1304, 2607});
        return c;
    }
    if (probe == "lem6_1") {
        ProbeConfig c = base_pairs_config(probe, 61);
        c.grid = {1, 262144, 256.0};
        c.params["s"] = 1.5;
        set_sweep(c, "j", {1, 2, 3, 4, 5});
        return c;
    }
    if (probe == "prop7_4") {
        ProbeConfig c = base_pairs_config(probe, 74);
        c.grid = {1, 2097152, 8.0};
        c.params["s"] = 0.5;
        c.params["c_k"] = 8.0;
        set_sweep(c, "N", {2, 4, 8, 16});
        return c;
    }
    if (probe == "remark3_2") {
        ProbeConfig c = base_pairs_config(probe, 32);
        c.grid = {1, 1048576, 2.0 * pi};
        c.params["delta"] = 0.02;
        c.params["eps"] = 0.08;
        set_sweep(c, "J", {12, 14, 16, 18});
        return c;
    }
    if (probe == "prop9_3") {
        ProbeConfig c = base_pairs_config(probe, 93);
        c.grid = {2, 1024, 5.0};
        c.params["s"] = 2.5;
        c.params["k_mode"] = 127.0;
        c.params["bscale"] = 20.0;
        set_sweep(c, "m", {1, 2, 3});
        return c;
    }
    throw config_error("default_probe_config: unknown probe '" + probe + "'");
}

std::vector<std::pair<std::string, ProbeConfig>> experiment_set() {
    std::vector<std::pair<std::string, ProbeConfig>> out;
    out.emplace_back("thm1_1", default_probe_config("thm1_1"));
    {
        ProbeConfig a = default_probe_config("thm1_2");
        out.emplace_back("thm1_2a", a);
        ProbeConfig b = a;
        b.params["flavor"] = 1.0;
        b.norms.p1 = 2.0;
        b.norms.p2 = lp_inf;
        b.seed = 112;
        out.emplace_back("thm1_2b", b);
        ProbeConfig c = a;
        c.params["flavor"] = 2.0;
        c.norms.p1 = lp_inf;
        c.norms.p2 = 2.0;
        c.seed = 122;
        out.emplace_back("thm1_2c", c);
    }
    for (const char* name : {"thm1_5", "thm5_1", "thm6_2", "prop3_7a", "prop3_7b", "lem6_1",
                             "lem7_1", "prop7_4", "remark3_2", "prop9_3"})
        out.emplace_back(name, default_probe_config(name));
    return out;
}

std::vector<ProbeRecord> run_probe(const ProbeConfig& cfg) {
    validate_config(cfg);
    return registry().at(cfg.probe).run(cfg);
}

SlopeFit fit_slope(const std::vector<ProbeRecord>& recs, SlopeAxis axis) {
    if (recs.size() < 3)
        throw config_error("slope fit needs at least 3 records, got " +
                           std::to_string(recs.size()));
    std::vector<double> xs, ys;
    for (const auto& r : recs) {
        if (!(r.ratio > 0.0))
            throw config_error("slope fit needs positive ratios (got " + fmt_short(r.ratio) +
                               " at param " + fmt_short(r.param) + ")");
        double x = r.param;
        if (axis == SlopeAxis::log_param) {
            if (!(x > 0.0))
                throw config_error("log axis needs positive params (got " + fmt_short(x) + ")");
            x = std::log(x);
        }
        xs.push_back(x);
        ys.push_back(std::log(r.ratio));
    }
    double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx <= 0.0) throw config_error("slope fit needs at least two distinct params");
    SlopeFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double r2 = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
        r2 += e * e;
    }
    fit.residual = std::sqrt(r2 / n);
    return fit;
}

void emit_csv(const std::vector<ProbeRecord>& recs, std::ostream& out) {
    out << "probe,param,lhs,rhs,ratio,grid_n,grid_L,seed,wall_ms\n";
    char buf[512];
    for (const auto& r : recs) {
        std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%.17g,%.17g,%d,%.17g,%llu,%.3f\n",
                      r.probe.c_str(), r.param, r.lhs, r.rhs, r.ratio, r.grid_n, r.grid_L,
                      static_cast<unsigned long long>(r.seed), r.wall_ms);
        out << buf;
    }
}

void emit_json(const std::vector<ProbeRecord>& recs, std::ostream& out) {
    out << "[";
    char buf[640];
    for (std::size_t i = 0; i < recs.size(); ++i) {
        const auto& r = recs[i];
        std::snprintf(buf, sizeof buf,
                      "%s\n  {\"probe\": \"%s\", \"param\": %.17g, \"lhs\": %.17g, "
                      "\"rhs\": %.17g, \"ratio\": %.17g, \"grid_n\": %d, \"grid_L\": %.17g, "
                      "\"seed\": %llu, \"wall_ms\": %.3f}",
                      i ? "," : "", r.probe.c_str(), r.param, r.lhs, r.rhs, r.ratio, r.grid_n,
                      r.grid_L, static_cast<unsigned long long>(r.seed), r.wall_ms);
        out << buf;
    }
    out << (recs.empty() ? "]\n" : "\n]\n");
}

void emit_svg(const std::vector<ProbeRecord>& recs, std::ostream& out) {
    const double W = 640, H = 480, ml = 70, mr = 20, mt = 20, mb = 50;
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : recs)
        if (r.param > 0.0 && r.ratio > 0.0)
            pts.emplace_back(std::log10(r.param), std::log10(r.ratio));
    std::string label = "slope n/a";
    try {
        SlopeFit fit = fit_slope(recs, SlopeAxis::log_param);
        label = "slope " + fmt_short(fit.slope);
    } catch (const config_error&) {
    }
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    if (!pts.empty()) {
        x0 = x1 = pts[0].first;
        y0 = y1 = pts[0].second;
        for (const auto& p : pts) {
            x0 = std::min(x0, p.first);
            x1 = std::max(x1, p.first);
            y0 = std::min(y0, p.second);
            y1 = std::max(y1, p.second);
        }
    }
    if (x1 - x0 < 1e-12) {
        x0 -= 0.5;
        x1 += 0.5;
    }
    if (y1 - y0 < 1e-12) {
        y0 -= 0.5;
        y1 += 0.5;
    }
    auto px = [&](double x) { return ml + (x - x0) / (x1 - x0) * (W - ml - mr); };
    auto py = [&](double y) { return H - mb - (y - y0) / (y1 - y0) * (H - mt - mb); };
    char buf[256];
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" fill=\"none\" "
                  "stroke=\"#444\"/>\n",
                  ml, mt, W - ml - mr, H - mt - mb);
    out << buf;
    out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%s%.2f,%.2f", i ? " " : "", px(pts[i].first),
                      py(pts[i].second));
        out << buf;
    }
    out << "\"/>\n";
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"%.1f\" font-family=\"monospace\" font-size=\"14\" "
                  "fill=\"#1f77b4\">%s</text>\n",
                  ml + 10.0, mt + 20.0, label.c_str());
    out << buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"%.1f\" font-family=\"monospace\" font-size=\"11\" "
                  "fill=\"#444\">log10 param: [%s, %s]  log10 ratio: [%s, %s]</text>\n",
                  ml, H - mb + 30.0, fmt_short(x0).c_str(), fmt_short(x1).c_str(),
                  fmt_short(y0).c_str(), fmt_short(y1).c_str());
    out << buf;
    out << "</svg>\n";
}

void write_run_outputs(const std::vector<ProbeRecord>& recs, const std::string& dir,
                       const std::string& stem) {
    std::filesystem::create_directories(dir);
    std::string base = stem.empty() ? (recs.empty() ? "run" : recs[0].probe) : stem;
    {
        std::ofstream f(dir + "/" + base + ".csv");
        emit_csv(recs, f);
    }
    {
        std::ofstream f(dir + "/" + base + ".json");
        emit_json(recs, f);
    }
    {
        std::ofstream f(dir + "/" + base + ".svg");
        emit_svg(recs, f);
    }
}

std::string expected_dir() {
    if (const char* env = std::getenv("FRAC_EXPECTED_DIR")) return env;
    return std::string(FRAC_SOURCE_DIR) + "/expected";
}

// ---------------------------------------------------------------------------
// verification suite

namespace {

nlohmann::json read_expected(const std::string& name) {
    std::string path = expected_dir() + "/" + name + ".json";
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("missing frozen table " + path +
                                 "; run freeze_tables from the build tree");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

struct Checker {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            detail = msg;
        }
    }
    void expect_le(double got, double bound, const std::string& what) {
        expect(got <= bound, what + " = " + fmt_short(got) + " exceeds " + fmt_short(bound));
    }
    void expect_close(double got, double want, double tol_rel, const std::string& what) {
        double scale = std::max({std::abs(want), std::abs(got), 1e-300});
        expect(std::abs(got - want) <= tol_rel * scale,
               what + " = " + fmt_short(got) + " drifted from frozen " + fmt_short(want));
    }
};

CheckOutcome make_outcome(const std::string& module, const std::string& name,
                          const std::function<void(Checker&)>& body) {
    CheckOutcome oc;
    oc.module = module;
    oc.name = name;
    double t0 = now_ms();
    Checker ck;
    try {
        body(ck);
        oc.pass = ck.ok;
        oc.detail = ck.detail;
    } catch (const std::exception& e) {
        oc.pass = false;
        oc.detail = e.what();
    }
    oc.wall_ms = now_ms() - t0;
    return oc;
}

// ---- item 1: exact identities --------------------------------------------

void acc_exact_identities(Checker& ck) {
    // partition of unity on the resolved annuli, both ramp families
    for (RampKind kind : {RampKind::poly5, RampKind::exp_flat}) {
        LPFamily fam = make_family(kind);
        Grid g1 = make_grid(1, 512, 64.0);
        BandRange br = band_range(g1);
        double worst = 0.0;
        for (std::size_t b = 0; b < g1.size(); ++b) {
            double rho = std::abs(freqs_of(g1, b)[0]);
            if (rho < std::ldexp(7.0 / 6.0, br.jmin) || rho > std::ldexp(1.0, br.jmax))
                continue;
            double sum = 0.0;
            for (int j = br.jmin; j <= br.jmax; ++j) sum += fam.phi(std::ldexp(rho, -j));
            worst = std::max(worst, std::abs(sum - 1.0));
        }
        ck.expect_le(worst, 1e-12, "band partition defect");
    }
    // Bony reconstruction over 100 random pairs
    {
        LPFamily fam = make_family(RampKind::poly5);
        Grid g1 = make_grid(1, 512, 64.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            Field f = random_smooth(g1, mix_seed(7001, 2 * i));
            Field g = random_smooth(g1, mix_seed(7001, 2 * i + 1));
            BonyPieces bp = bony_split(fam, f, g);
            Field whole = mul_dealiased(f, g);
            Field sum = add(add(bp.diagonal, bp.lowhigh), bp.highlow);
            worst = std::max(worst, l2(sub(sum, whole)) / std::max(l2(whole), 1e-300));
        }
        ck.expect_le(worst, 1e-11, "bony reconstruction rel err");
    }
    // refined D^s remainder collapses at s = 2
    {
        Grid g1 = make_grid(1, 256, 64.0);
        double worst = 0.0;
        for (int i = 0; i < 5; ++i) {
            Field f = random_smooth(g1, mix_seed(7002, 2 * i));
            Field g = random_smooth(g1, mix_seed(7002, 2 * i + 1));
            Field rem = refined_ds_remainder(f, g, 2.0);
            double den = std::max(l2(apply(ds(1, 2.0), mul_dealiased(f, g))), 1e-300);
            worst = std::max(worst, l2(rem) / den);
        }
        ck.expect_le(worst, 1e-11, "s=2 remainder rel size");
    }
    // classical Leibniz rule recovered through the derivative-weight sum
    {
        Grid g1 = make_grid(1, 256, 64.0);
        for (int gamma : {2, 3}) {
            cd c = gamma == 2 ? cd(-1.0, 0.0) : cd(0.0, -1.0);
            TermSymbol base = term_symbol(TermSymbol::Radial::homogeneous, 1,
                                          {{c, {gamma, 0}, 0.0}});
            LeibnizSpec spec;
            spec.s = gamma;
            spec.s1 = gamma;
            spec.s2 = 0.0;
            spec.alpha_inclusive = true;
            spec.beta_inclusive = false;
            spec.base = base;
            double worst = 0.0;
            for (int i = 0; i < 5; ++i) {
                Field f = random_smooth(g1, mix_seed(7003 + gamma, 2 * i));
                Field g = random_smooth(g1, mix_seed(7003 + gamma, 2 * i + 1));
                Field rem = leibniz_remainder(spec, f, g);
                Field ref = apply(asalpha(base, MultiIndex{1, {0, 0}}), mul_dealiased(f, g));
                worst = std::max(worst, l2(rem) / std::max(l2(ref), 1e-300));
            }
            ck.expect_le(worst, 1e-10,
                         "degree " + std::to_string(gamma) + " Leibniz residue");
        }
    }
}

// ---- item 2: composed routes against their bilinear symbols ---------------

struct OracleEntry {
    const char* op;
    double worst = 0.0;
};

double oracle_pass_d1(const std::string& op, double s, std::uint64_t seed) {
    Grid g1 = make_grid(1, 128, 64.0);
    Field f = random_smooth(g1, mix_seed(seed, 1));
    Field g = random_smooth(g1, mix_seed(seed, 2));
    if (op == "kp_commutator")
        return rel_l2(kp_commutator(f, g, s), bilinear_apply(kp_sigma(1, s), f, g));
    if (op == "leibniz_remainder") {
        LeibnizSpec spec;
        spec.s = s;
        spec.s1 = 0.5 * s;
        spec.s2 = 0.5 * s;
        return rel_l2(leibniz_remainder(spec, f, g),
                      bilinear_apply(leibniz_sigma(1, spec), f, g));
    }
    if (op == "refined_ds_remainder")
        return rel_l2(refined_ds_remainder(f, g, s),
                      bilinear_apply(refined_ds_sigma(1, s), f, g));
    if (op == "refined_js_remainder")
        return rel_l2(refined_js_remainder(f, g, s),
                      bilinear_apply(refined_js_sigma(1, s), f, g));
    if (op == "thm9_remainder")
        return rel_l2(thm9_remainder(f, g, s, 0), bilinear_apply(thm9_sigma(1, s, 0), f, g));
    if (op == "hilbert_commutator") {
        static const int lm[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
        int idx = static_cast<int>(s * 2.0) % 4;
        int l = lm[idx][0], m = lm[idx][1];
        return rel_l2(hilbert_commutator(f, g, l, m),
                      bilinear_apply(hilbert_sigma(l, m), f, g));
    }
    if (op == "dmp_remainder") {
        double alpha = s < 1.25 ? 0.0 : (s < 2.0 ? 0.3 : 0.5);
        double beta = s < 0.75 ? 0.5 : (s < 1.25 ? 1.0 : (s < 2.0 ? 0.4 : 0.5));
        return rel_l2(dmp_remainder(f, g, alpha, beta),
                      bilinear_apply(dmp_sigma(1, alpha, beta), f, g));
    }
    if (op == "paraproduct_pair") {
        LPFamily fam = make_family(RampKind::poly5);
        PairFactor ff, fg;
        ff.lowpass = true;
        if (s > 1.25) {
            ff.weight = s;
            fg.weight = -s;
        }
        return rel_l2(paraproduct_pair(fam, f, g, ff, fg),
                      bilinear_apply(paraproduct_sigma(fam, g1, ff, fg), f, g));
    }
    throw std::runtime_error("no dim-1 oracle for " + op);
}

double oracle_pass_d2(const std::string& op, double s, std::uint64_t seed) {
    Grid g2 = make_grid(2, 32, 8.0);
    Field fa = random_smooth(g2, mix_seed(seed, 11));
    Field fb = random_smooth(g2, mix_seed(seed, 12));
    Field ga = random_smooth(g2, mix_seed(seed, 13));
    Field gb = random_smooth(g2, mix_seed(seed, 14));
    if (op == "euler_commutator") {
        std::array<Field, 2> u{fa, fb};
        auto comm = euler_commutator(u, s);
        double worst = 0.0;
        for (int i = 0; i < 2; ++i) {
            Field direct = add(bilinear_apply(euler_sigma(s, 0), u[0], u[i]),
                               bilinear_apply(euler_sigma(s, 1), u[1], u[i]));
            worst = std::max(worst, rel_l2(comm[i], direct));
        }
        return worst;
    }
    if (op == "riesz_commutator")
        return rel_l2(riesz_commutator(fa, fb, 0, 1), bilinear_apply(riesz_sigma(0, 1), fa, fb));
    if (op == "divfree_form") {
        std::array<Field, 2> u{fa, fb}, w{ga, gb};
        Field composed = divfree_form(u, w, s);
        Field direct = make_field(g2);
        for (int l = 0; l < 2; ++l) {
            for (int m = 0; m < 2; ++m) {
                BilinearSymbol sig;
                sig.name = "divfree_t1";
                double ss = s;
                sig.rule = [ss, l, m](const Grid& gr, const std::array<long long, 2>& kf,
                                      const std::array<long long, 2>& kg) {
                    double xim = gr.freq_of(kf[m]);
                    double em = gr.freq_of(kg[m]);
                    double el = gr.freq_of(kg[l]);
                    double rho2 = gr.freq_of(kg[0]) * gr.freq_of(kg[0]) +
                                  gr.freq_of(kg[1]) * gr.freq_of(kg[1]);
                    double br = std::pow(1.0 + rho2, 0.5 * (ss - 2.0));
                    // (i xim)(i em)(i el) <eta>^{s-2} = -i xim em el <eta>^{s-2}
                    return cd(0.0, -ss * xim * em * el * br);
                };
                direct = add(direct, bilinear_apply(sig, u[l], w[1]));
            }
            BilinearSymbol sig2;
            sig2.name = "divfree_t2";
            double ss = s;
            sig2.rule = [ss, l](const Grid& gr, const std::array<long long, 2>& kf,
                                const std::array<long long, 2>& kg) {
                double xil = gr.freq_of(kf[l]);
                double rho2 = gr.freq_of(kg[0]) * gr.freq_of(kg[0]) +
                              gr.freq_of(kg[1]) * gr.freq_of(kg[1]);
                double jt = std::pow(1.0 + rho2, 0.5 * ss) - 1.0;
                return cd(0.0, -xil * jt);
            };
            direct = add(direct, bilinear_apply(sig2, u[1], w[l]));
        }
        return rel_l2(composed, direct);
    }
    throw std::runtime_error("no dim-2 oracle for " + op);
}

const std::vector<std::string>& oracle_table_d1() {
    static const std::vector<std::string> v = {
        "kp_commutator",      "leibniz_remainder", "refined_ds_remainder",
        "refined_js_remainder", "thm9_remainder",  "hilbert_commutator",
        "dmp_remainder",      "paraproduct_pair"};
    return v;
}

const std::vector<std::string>& oracle_table_d2() {
    static const std::vector<std::string> v = {"euler_commutator", "riesz_commutator",
                                               "divfree_form"};
    return v;
}

void acc_oracle_agreement(Checker& ck) {
    const double svals[4] = {0.5, 1.0, 1.5, 2.7};
    double worst = 0.0;
    std::string worst_tag = "none";
    for (const auto& op : oracle_table_d1()) {
        for (double s : svals) {
            double e = oracle_pass_d1(op, s, 9000 + static_cast<std::uint64_t>(10 * s));
            if (e > worst) {
                worst = e;
                worst_tag = op + " s=" + fmt_short(s);
            }
        }
    }
    for (const auto& op : oracle_table_d2()) {
        for (double s : svals) {
            double e = oracle_pass_d2(op, s, 9100 + static_cast<std::uint64_t>(10 * s));
            if (e > worst) {
                worst = e;
                worst_tag = op + " s=" + fmt_short(s);
            }
        }
    }
    ck.expect_le(worst, 1e-9, "oracle disagreement (" + worst_tag + ")");
}

void check_oracle_coverage(Checker& ck) {
    std::vector<std::string> covered = oracle_table_d1();
    for (const auto& op : oracle_table_d2()) covered.push_back(op);
    std::sort(covered.begin(), covered.end());
    for (const auto& op : remainder_op_names()) {
        bool found = std::binary_search(covered.begin(), covered.end(), op);
        ck.expect(found, "remainder op '" + op + "' has no registered oracle check");
    }
}

// ---- item 3: symbol calculus ----------------------------------------------

void acc_derivative_weights(Checker& ck) {
    for (int dim : {1, 2}) {
        Grid gr = make_grid(dim, dim == 1 ? 512 : 64, 32.0);
        Field f = random_smooth(gr, 501 + dim);
        Field g = random_smooth(gr, 502 + dim);
        for (double s : {0.5, 1.3, 2.7}) {
            Field total = make_field(gr);
            double scale_norm = 0.0;
            for (int m = 0; m < dim; ++m) {
                MultiIndex alpha{dim, {m == 0 ? 1 : 0, m == 0 ? 0 : 1}};
                Field dmf = apply(partial(dim, m), f);
                Field t1 = mul_dealiased(dmf, apply(dsalpha(dim, s, alpha), g));
                Field t2 = mul_dealiased(
                    dmf, scale(apply(ds(dim, s - 2.0), apply(partial(dim, m), g)), cd(s, 0.0)));
                total = add(total, add(t1, t2));
                scale_norm = std::max({scale_norm, l2(t1), l2(t2)});
            }
            ck.expect_le(l2(total) / std::max(1.0, scale_norm), 1e-10,
                         "dim " + std::to_string(dim) + " s=" + fmt_short(s) +
                             " weight identity");
        }
    }
    // closed form of the vector correction multiplier
    Grid g2 = make_grid(2, 64, 32.0);
    double worst = 0.0;
    for (double s : {0.5, 1.3, 2.7}) {
        for (int l = 0; l < 2; ++l) {
            for (int m = 0; m < 2; ++m) {
                FrequencySymbol sym = bessel_deriv(2, s, l, m);
                for (std::size_t b = 0; b < g2.size(); b += 97) {
                    auto k = modes_of(g2, b);
                    auto xi = freqs_of(g2, b);
                    double rho2 = xi[0] * xi[0] + xi[1] * xi[1];
                    cd want = cd(s * std::pow(1.0 + rho2, 0.5 * s - 1.0) * xi[l] * xi[m], 0.0);
                    if (l == m) want += cd(std::pow(1.0 + rho2, 0.5 * s) - 1.0, 0.0);
                    cd got = sym.eval_at(k, xi);
                    worst = std::max(worst, std::abs(got - want) /
                                                std::max(1.0, std::abs(want)));
                }
            }
        }
    }
    ck.expect_le(worst, 1e-12, "vector correction closed form");
}

// ---- items 4 and 5: decay slopes ------------------------------------------

void acc_modulated_bump_slope(Checker& ck) {
    for (double s : {0.5, 1.5, 2.5}) {
        ProbeConfig cfg = default_probe_config("lem7_1");
        cfg.params["s"] = s;
        auto recs = run_probe(cfg);
        SlopeFit fit = fit_slope(recs, SlopeAxis::log_param);
        ck.expect(std::abs(fit.slope - (s - 1.0)) <= 0.3,
                  "s=" + fmt_short(s) + " slope " + fmt_short(fit.slope) +
                      " outside (s-1) +- 0.3");
    }
}

void acc_band_kernel_decay(Checker& ck) {
    Grid gr = make_grid(1, 262144, 256.0);
    LPFamily fam = make_family(RampKind::poly5);
    const double s = 1.5;
    double wmin = 0.0, wmax = 0.0;
    for (int j = -3; j <= 0; ++j) {
        Field kj = kernel_of(js_tilde(1, s), fam, gr, j);
        double twoj = std::ldexp(1.0, j);
        double comp = 0.0;
        for (std::size_t i = 0; i < kj.v.size(); ++i) {
            double x = site_of(gr, i)[0];
            double dist = std::min(x, gr.boxlen - x);
            double w = 1.0 + twoj * dist;
            comp = std::max(comp, std::abs(kj.v[i]) * w * w * w);
        }
        comp *= std::pow(twoj, -3.0);
        if (j == -3) {
            wmin = wmax = comp;
        } else {
            wmin = std::min(wmin, comp);
            wmax = std::max(wmax, comp);
        }
    }
    ck.expect_le(wmax / std::max(wmin, 1e-300), 4.0, "compensated low-band sup spread");
    ProbeConfig cfg = default_probe_config("lem6_1");
    auto recs = run_probe(cfg);
    SlopeFit fit = fit_slope(recs, SlopeAxis::log_param);
    double want = s + 1.0;
    ck.expect(std::abs(fit.slope / std::log(2.0) * std::log(2.0) - want) <= 0.3,
              "band kernel sup slope " + fmt_short(fit.slope) + " outside (s+d) +- 0.3");
}

// ---- item 6: log-stack commutator growth -----------------------------------

void acc_log_stack_growth(Checker& ck) {
    ProbeConfig cfg = default_probe_config("prop7_4");
    Grid gr = grid_of(cfg.grid);
    double s = cfg.params.at("s"), c_k = cfg.params.at("c_k");
    std::vector<double> ratio, bmo;
    for (double pt : cfg.sweep) {
        GrowthPoint gp = log_stack_growth_point(gr, s, c_k, static_cast<int>(pt));
        ratio.push_back(gp.ratio);
        bmo.push_back(gp.bmo);
    }
    for (std::size_t i = 1; i < ratio.size(); ++i)
        ck.expect(ratio[i] > ratio[i - 1],
                  "ratio not strictly increasing at N=" + fmt_short(cfg.sweep[i]) + " (" +
                      fmt_short(ratio[i - 1]) + " -> " + fmt_short(ratio[i]) + ")");
    ck.expect(ratio.back() >= 1.5 * ratio.front(),
              "ratio(16)/ratio(2) = " + fmt_short(ratio.back() / ratio.front()) + " below 1.5");
    double bmin = *std::min_element(bmo.begin(), bmo.end());
    double bmax = *std::max_element(bmo.begin(), bmo.end());
    ck.expect_le(bmax / std::max(bmin, 1e-300), 2.0, "bmo spread across N");
    nlohmann::json ex = read_expected("log_stack_growth");
    double tol = ex.at("tol_rel").get<double>();
    for (std::size_t i = 0; i < ratio.size(); ++i) {
        ck.expect_close(ratio[i], ex.at("ratio").at(i).get<double>(), tol,
                        "ratio[N=" + fmt_short(cfg.sweep[i]) + "]");
        ck.expect_close(bmo[i], ex.at("bmo").at(i).get<double>(), tol,
                        "bmo[N=" + fmt_short(cfg.sweep[i]) + "]");
    }
}

// ---- item 7: square-function growth ----------------------------------------

void acc_chirp_square_function(Checker& ck) {
    ProbeConfig cfg = default_probe_config("remark3_2");
    auto recs = run_probe(cfg);
    for (std::size_t i = 1; i < recs.size(); ++i)
        ck.expect(recs[i].lhs > recs[i - 1].lhs,
                  "square sum not strictly increasing at J=" + fmt_short(recs[i].param));
    double rmin = recs[0].rhs, rmax = recs[0].rhs;
    for (const auto& r : recs) {
        rmin = std::min(rmin, r.rhs);
        rmax = std::max(rmax, r.rhs);
    }
    ck.expect_le(rmax / std::max(rmin, 1e-300), 1.3, "budget spread across J");
    nlohmann::json ex = read_expected("chirp_square_function");
    double tol = ex.at("tol_rel").get<double>();
    for (std::size_t i = 0; i < recs.size(); ++i) {
        ck.expect_close(recs[i].lhs, ex.at("lhs").at(i).get<double>(), tol,
                        "square sum[J=" + fmt_short(recs[i].param) + "]");
        ck.expect_close(recs[i].rhs, ex.at("rhs").at(i).get<double>(), tol,
                        "budget[J=" + fmt_short(recs[i].param) + "]");
    }
}

// ---- item 8: divergence-free suite -----------------------------------------

void acc_divfree_suite(Checker& ck) {
    ProbeConfig cfg = default_probe_config("prop9_3");
    Grid gr = grid_of(cfg.grid);
    double s = cfg.params.at("s");
    long long k_mode = static_cast<long long>(cfg.params.at("k_mode"));
    double bscale = cfg.params.at("bscale");
    std::vector<double> d12, form_ratio;
    double base0 = 0.0;
    std::vector<ProbeRecord> recs;
    for (double pt : cfg.sweep) {
        int m = static_cast<int>(pt);
        DivfreePair pair = divfree_pair(gr, default_annular_2d(), m, k_mode, s, cfg.norms.p,
                                        bscale);
        base0 = pair.base0;
        d12.push_back(std::abs(pair.d12_at0));
        for (const auto* u : {&pair.u_base, &pair.u_pert}) {
            Field div = add(apply(partial(2, 0), (*u)[0]), apply(partial(2, 1), (*u)[1]));
            double den = l2(apply(partial(2, 0), (*u)[0])) + l2(apply(partial(2, 1), (*u)[1])) +
                         l2(apply(partial(2, 1), (*u)[0])) + l2(apply(partial(2, 0), (*u)[1]));
            ck.expect_le(l2(div) / std::max(den, 1e-300), 1e-12,
                         "divergence at m=" + std::to_string(m));
        }
        double best = 0.0, best_num = 0.0, best_den = 1.0;
        for (const auto* u : {&pair.u_base, &pair.u_pert}) {
            double num = lp_norm(divfree_form(*u, *u, s), cfg.norms.p);
            double den = std::max(1.0, vec_js_norm(*u, s, cfg.norms.p));
            if (num / den > best) {
                best = num / den;
                best_num = num;
                best_den = den;
            }
        }
        form_ratio.push_back(best);
        ProbeRecord r;
        r.probe = cfg.probe;
        r.param = pt;
        r.lhs = best_num;
        r.rhs = best_den;
        r.ratio = best;
        recs.push_back(r);
        if (m == 2) {
            auto a = euler_commutator(pair.u_pert, s);
            auto b = euler_commutator_assembled(pair.u_pert, s);
            double num = l2(sub(a[0], b[0])) + l2(sub(a[1], b[1]));
            double den = std::max(l2(a[0]) + l2(a[1]), 1e-300);
            ck.expect_le(num / den, 1e-10, "advection assembly cross-check");
        }
    }
    // |d1 d2 stream(0)| grows like the harmonic number; against log m that is
    // a slope comparable to the base block value at the origin
    double mx = 0.0, my = 0.0;
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < cfg.sweep.size(); ++i) {
        xs.push_back(std::log(cfg.sweep[i]));
        ys.push_back(d12[i]);
        mx += xs.back();
        my += ys.back();
    }
    mx /= xs.size();
    my /= ys.size();
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    double slope = sxy / sxx;
    double lo = 0.8 * std::abs(base0), hi = 1.2 * std::abs(base0);
    ck.expect(slope >= lo && slope <= hi,
              "origin growth slope " + fmt_short(slope) + " outside [" + fmt_short(lo) + ", " +
                  fmt_short(hi) + "]");
    for (std::size_t i = 1; i < form_ratio.size(); ++i)
        ck.expect(form_ratio[i] > form_ratio[i - 1],
                  "quadratic form ratio not increasing at m=" + fmt_short(cfg.sweep[i]));
    nlohmann::json ex = read_expected("divfree_suite");
    double tol = ex.at("tol_rel").get<double>();
    ck.expect_close(base0, ex.at("base0").get<double>(), tol, "base block value");
    for (std::size_t i = 0; i < d12.size(); ++i) {
        ck.expect_close(d12[i], ex.at("d12").at(i).get<double>(), tol,
                        "d12[m=" + fmt_short(cfg.sweep[i]) + "]");
        ck.expect_close(form_ratio[i], ex.at("form_ratio").at(i).get<double>(), tol,
                        "form_ratio[m=" + fmt_short(cfg.sweep[i]) + "]");
    }
}

// ---- item 9: random-pair ratio sweeps ---------------------------------------

const std::vector<std::string>& sweep_experiment_names() {
    static const std::vector<std::string> v = {"thm1_1",   "thm1_2a", "thm1_2b",
                                               "thm1_2c",  "thm1_5",  "thm5_1",
                                               "thm6_2",   "prop3_7a", "prop3_7b"};
    return v;
}

void acc_ratio_sweeps(Checker& ck) {
    nlohmann::json ex = read_expected("ratio_sweeps");
    double tol = ex.at("tol_rel").get<double>();
    auto exps = experiment_set();
    for (const std::string& name : sweep_experiment_names()) {
        const ProbeConfig* cfg = nullptr;
        for (const auto& kv : exps)
            if (kv.first == name) cfg = &kv.second;
        if (!cfg) throw std::runtime_error("experiment " + name + " missing");
        auto recs = run_probe(*cfg);
        std::vector<double> ratios;
        for (const auto& r : recs) {
            ck.expect(std::isfinite(r.ratio) && r.ratio >= 0.0,
                      name + ": non-finite ratio at pair " + fmt_short(r.param));
            ratios.push_back(r.ratio);
        }
        std::sort(ratios.begin(), ratios.end());
        double median = 0.5 * (ratios[ratios.size() / 2] + ratios[(ratios.size() - 1) / 2]);
        double mx = ratios.back();
        ck.expect_le(mx / std::max(median, 1e-300), 10.0, name + " max/median");
        const auto& st = ex.at("stats").at(name);
        ck.expect_close(mx, st.at("max").get<double>(), tol, name + " max ratio");
        ck.expect_close(median, st.at("median").get<double>(), tol, name + " median ratio");
    }
}

// ---- quick module identities -----------------------------------------------

void quick_fft_roundtrip(Checker& ck) {
    for (int dim : {1, 2}) {
        Grid gr = make_grid(dim, dim == 1 ? 256 : 32, 16.0);
        Field f = random_smooth(gr, 31 + dim);
        Field back = inverse(forward(f));
        ck.expect_le(rel_l2(f, back), 1e-12, "fft roundtrip dim " + std::to_string(dim));
        // Parseval: h^dim sum |f|^2 == L^-dim sum |coeff|^2
        Spectrum sp = forward(f);
        double a = l2(f);
        double b = 0.0;
        for (const auto& c : sp.c) b += std::norm(c);
        b = std::sqrt(b * std::pow(gr.boxlen, -gr.dim));
        ck.expect_le(std::abs(a - b) / std::max(a, 1e-300), 1e-12,
                     "parseval dim " + std::to_string(dim));
    }
}

void quick_dealias_oracle(Checker& ck) {
    Grid gr = make_grid(1, 32, 8.0);
    Field f = random_smooth(gr, 77);
    Field g = random_smooth(gr, 78);
    BilinearSymbol one;
    one.name = "one";
    one.rule = [](const Grid&, const std::array<long long, 2>&,
                  const std::array<long long, 2>&) { return cd(1.0, 0.0); };
    ck.expect_le(rel_l2(mul_dealiased(f, g), bilinear_apply(one, f, g)), 1e-12,
                 "dealiased product vs direct convolution");
}

void quick_norm_limits(Checker& ck) {
    Grid gr = make_grid(1, 256, 16.0);
    Field f = random_smooth(gr, 91);
    ck.expect_le(std::abs(lp_norm(f, lp_inf) - linf(f)) / std::max(linf(f), 1e-300), 1e-12,
                 "p=inf norm vs sup");
    double a = lp_norm(scale(f, cd(-2.5, 0.0)), 3.0);
    double b = 2.5 * lp_norm(f, 3.0);
    ck.expect_le(std::abs(a - b) / std::max(b, 1e-300), 1e-12, "norm homogeneity");
}

void quick_emit_deterministic(Checker& ck) {
    std::vector<ProbeRecord> recs;
    for (int i = 1; i <= 4; ++i) {
        ProbeRecord r;
        r.probe = "synthetic";
        r.param = i;
        r.lhs = std::pow(i, 1.75) * 3.0;
        r.rhs = 3.0;
        r.ratio = std::pow(i, 1.75);
        r.grid_n = 64;
        r.grid_L = 1.0;
        r.seed = 5;
        r.wall_ms = 0.0;
        recs.push_back(r);
    }
    std::ostringstream a, b;
    emit_csv(recs, a);
    emit_csv(recs, b);
    ck.expect(a.str() == b.str(), "csv emission not reproducible");
    ck.expect(a.str().rfind("probe,param,lhs,rhs,ratio,grid_n,grid_L,seed,wall_ms\n", 0) == 0,
              "csv header mismatch");
    std::ostringstream empty_csv;
    emit_csv({}, empty_csv);
    ck.expect(empty_csv.str() == "probe,param,lhs,rhs,ratio,grid_n,grid_L,seed,wall_ms\n",
              "empty run must emit the bare header");
    SlopeFit fit = fit_slope(recs, SlopeAxis::log_param);
    ck.expect_le(std::abs(fit.slope - 1.75), 1e-12, "synthetic slope recovery");
    bool refused = false;
    try {
        fit_slope({recs[0], recs[1]}, SlopeAxis::param);
    } catch (const config_error&) {
        refused = true;
    }
    ck.expect(refused, "short slope fit must be refused");
    std::ostringstream svg;
    emit_svg(recs, svg);
    ck.expect(svg.str().find("<polyline") != std::string::npos &&
                  svg.str().find("slope") != std::string::npos,
              "svg missing polyline or slope label");
}

void quick_config_validation(Checker& ck) {
    auto rejects = [&](const std::string& text, const std::string& why) {
        try {
            probe_config_from_json_text(text, "<inline>");
            ck.expect(false, "config not rejected: " + why);
        } catch (const config_error&) {
        }
    };
    rejects(R"({"probe":"thm1_1","params":{"pairs":4},"norms":{"p":2,"p1":3,"p2":3}})",
            "exponent pairing");
    rejects(R"({"probe":"nope","params":{"pairs":4}})", "unknown probe");
    rejects(R"({"probe":"thm1_1","params":{"a":[1,2],"b":[3,4]}})", "two sweeps");
    rejects(R"({"probe":"thm1_1"})", "missing sweep");
    rejects(R"({"probe":"thm1_1","params":{"pairs":4},"grid":{"dim":3,"n":64,"L":1}})",
            "bad dim");
    ProbeConfig ok = probe_config_from_json_text(
        R"({"probe":"thm1_1","params":{"pairs":3,"s":1.1},"grid":{"dim":1,"n":64,"L":16},)"
        R"("norms":{"p":2,"p1":2,"p2":"inf"},"seed":9})",
        "<inline>");
    ck.expect(ok.sweep.size() == 3 && std::isinf(ok.norms.p2), "valid config parse");
    ProbeConfig round = probe_config_from_json_text(probe_config_to_json(ok), "<roundtrip>");
    ck.expect(round.probe == ok.probe && round.sweep.size() == ok.sweep.size() &&
                  round.seed == ok.seed,
              "config json roundtrip");
}

} // namespace

GrowthPoint log_stack_growth_point(const Grid& gr, double s, double c_k, int n_stack) {
    AnnularProfile prof = default_annular();
    Field ab = annular_bump(gr, prof, 0);
    Field g = log_stack(ab, n_stack);
    PlateauWindow w = plateau_of(g, 0.5);
    Field bump = sample(gr, smooth_bump(gr, w.center, std::max(w.radius, 3.0 * gr.spacing())));
    long long k_int = static_cast<long long>(std::llround(c_k * std::ldexp(1.0, n_stack)));
    Field f_raw = modulated_bump(bump, k_int, s);
    double nf = l2(apply(js(gr.dim, s), f_raw));
    double bm = bmo_norm(g);
    // scale f so the budget side sits safely above the max(1, .) clamp
    Field f = scale(f_raw, cd(4.0 / std::max(nf * bm, 1e-300), 0.0));
    GrowthPoint gp;
    gp.num = l2(kp_commutator(f, g, s));
    gp.den = std::max(1.0, l2(apply(js(gr.dim, s), f)) * bm);
    gp.bmo = bm;
    gp.ratio = gp.num / gp.den;
    return gp;
}

CheckOutcome run_acceptance(int k) {
    switch (k) {
    case 1: return make_outcome("dyadic", "exact_identities", acc_exact_identities);
    case 2: return make_outcome("remainders", "oracle_agreement", acc_oracle_agreement);
    case 3: return make_outcome("symbols", "derivative_weights", acc_derivative_weights);
    case 4: return make_outcome("symbols", "modulated_bump_slope", acc_modulated_bump_slope);
    case 5: return make_outcome("dyadic", "band_kernel_decay", acc_band_kernel_decay);
    case 6: return make_outcome("zoo", "log_stack_growth", acc_log_stack_growth);
    case 7: return make_outcome("zoo", "chirp_square_function", acc_chirp_square_function);
    case 8: return make_outcome("zoo", "divfree_suite", acc_divfree_suite);
    case 9: return make_outcome("xlab", "ratio_sweeps", acc_ratio_sweeps);
    default: throw config_error("acceptance item must be in [1, 9]");
    }
}

std::vector<CheckOutcome> run_verify(const std::string& module_filter, bool fast) {
    std::vector<CheckOutcome> all;
    all.push_back(make_outcome("field", "fft_roundtrip", quick_fft_roundtrip));
    all.push_back(make_outcome("field", "dealias_oracle", quick_dealias_oracle));
    all.push_back(make_outcome("norms", "exponent_limits", quick_norm_limits));
    all.push_back(make_outcome("xlab", "emit_deterministic", quick_emit_deterministic));
    all.push_back(make_outcome("xlab", "config_validation", quick_config_validation));
    all.push_back(make_outcome("remainders", "oracle_coverage", check_oracle_coverage));
    for (int k = 1; k <= (fast ? 3 : 9); ++k) all.push_back(run_acceptance(k));
    if (module_filter.empty()) return all;
    std::vector<CheckOutcome> kept;
    for (auto& oc : all)
        if (oc.module == module_filter) kept.push_back(std::move(oc));
    return kept;
}

int report_dir(const std::string& dir, std::ostream& out) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw config_error(dir + ": not a directory");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".csv") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::map<std::string, std::vector<ProbeRecord>> by_probe;
    for (const auto& p : files) {
        std::ifstream in(p);
        std::string line;
        bool first = true;
        while (std::getline(in, line)) {
            if (first) {
                first = false;
                continue;
            }
            std::vector<std::string> cols;
            std::stringstream ls(line);
            std::string cell;
            while (std::getline(ls, cell, ',')) cols.push_back(cell);
            if (cols.size() != 9) continue;
            ProbeRecord r;
            r.probe = cols[0];
            r.param = std::strtod(cols[1].c_str(), nullptr);
            r.lhs = std::strtod(cols[2].c_str(), nullptr);
            r.rhs = std::strtod(cols[3].c_str(), nullptr);
            r.ratio = std::strtod(cols[4].c_str(), nullptr);
            r.grid_n = static_cast<int>(std::strtol(cols[5].c_str(), nullptr, 10));
            r.grid_L = std::strtod(cols[6].c_str(), nullptr);
            r.seed = std::strtoull(cols[7].c_str(), nullptr, 10);
            r.wall_ms = std::strtod(cols[8].c_str(), nullptr);
            by_probe[r.probe].push_back(r);
        }
    }
    std::ostringstream table;
    table << "| probe | points | ratio min | ratio max | log-log slope |\n";
    table << "|---|---|---|---|---|\n";
    for (const auto& kv : by_probe) {
        const auto& recs = kv.second;
        double rmin = recs[0].ratio, rmax = recs[0].ratio;
        for (const auto& r : recs) {
            rmin = std::min(rmin, r.ratio);
            rmax = std::max(rmax, r.ratio);
        }
        std::string slope = "n/a";
        try {
            slope = fmt_short(fit_slope(recs, SlopeAxis::log_param).slope);
        } catch (const config_error&) {
        }
        table << "| " << kv.first << " | " << recs.size() << " | " << fmt_short(rmin) << " | "
              << fmt_short(rmax) << " | " << slope << " |\n";
        std::ofstream svg(dir + "/" + kv.first + ".svg");
        emit_svg(recs, svg);
    }
    out << table.str();
    std::ofstream md(dir + "/report.md");
    md << "# sweep report\n\n" << table.str();
    return static_cast<int>(files.size());
}

} // namespace frac
