#include "frac/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace frac {

double MultiIndex::factorial() const {
    double f = 1.0;
    for (int axis = 0; axis < dim; ++axis)
        for (int v = 2; v <= a[axis]; ++v) f *= v;
    return f;
}

std::vector<MultiIndex> multi_indices_upto(int dim, int max_order) {
    std::vector<MultiIndex> out;
    if (dim == 1) {
        for (int a0 = 0; a0 <= max_order; ++a0) out.push_back({1, {a0, 0}});
    } else {
        for (int total = 0; total <= max_order; ++total)
            for (int a0 = 0; a0 <= total; ++a0) out.push_back({2, {a0, total - a0}});
    }
    return out;
}

namespace {

double ipow(double x, int p) {
    double r = 1.0;
    for (int i = 0; i < p; ++i) r *= x;
    return r;
}

} // namespace

cd TermSymbol::eval(const std::array<double, 2>& xi) const {
    double b = xi[0] * xi[0] + xi[1] * xi[1];
    if (radial == Radial::bracket) b += 1.0;
    cd sum(0.0, 0.0);
    for (const auto& t : terms) {
        double mono = ipow(xi[0], t.beta[0]);
        if (dim == 2) mono *= ipow(xi[1], t.beta[1]);
        double rad = t.r == 0.0 ? 1.0 : std::pow(b, 0.5 * t.r);
        sum += t.c * mono * rad;
    }
    return sum;
}

TermSymbol TermSymbol::d(int axis) const {
    TermSymbol out;
    out.radial = radial;
    out.dim = dim;
    // key exact doubles: r values only ever move in steps of 2
    std::map<std::pair<std::array<int, 2>, double>, cd> acc;
    for (const auto& t : terms) {
        if (t.beta[axis] > 0) {
            auto beta = t.beta;
            beta[axis] -= 1;
            acc[{beta, t.r}] += t.c * static_cast<double>(t.beta[axis]);
        }
        if (t.r != 0.0) {
            auto beta = t.beta;
            beta[axis] += 1;
            acc[{beta, t.r - 2.0}] += t.c * t.r;
        }
    }
    for (const auto& [key, c] : acc) {
        if (c == cd(0.0, 0.0)) continue;
        out.terms.push_back({c, key.first, key.second});
    }
    return out;
}

TermSymbol TermSymbol::scaled(cd c) const {
    TermSymbol out = *this;
    for (auto& t : out.terms) t.c *= c;
    return out;
}

TermSymbol TermSymbol::plus(const TermSymbol& o) const {
    if (radial != o.radial || dim != o.dim)
        throw grid_error("TermSymbol::plus: incompatible symbols");
    TermSymbol out = *this;
    for (const auto& t : o.terms) {
        bool merged = false;
        for (auto& mine : out.terms) {
            if (mine.beta == t.beta && mine.r == t.r) {
                mine.c += t.c;
                merged = true;
                break;
            }
        }
        if (!merged) out.terms.push_back(t);
    }
    out.terms.erase(std::remove_if(out.terms.begin(), out.terms.end(),
                                   [](const Term& t) { return t.c == cd(0.0, 0.0); }),
                    out.terms.end());
    return out;
}

double TermSymbol::min_degree() const {
    double m = 1e300;
    for (const auto& t : terms) m = std::min(m, t.beta[0] + t.beta[1] + t.r);
    return terms.empty() ? 0.0 : m;
}

bool TermSymbol::hermitian() const {
    for (const auto& t : terms) {
        double sign = (t.beta[0] + t.beta[1]) % 2 == 0 ? 1.0 : -1.0;
        if (std::abs(t.c * sign - std::conj(t.c)) > 1e-15 * (1.0 + std::abs(t.c))) return false;
    }
    return true;
}

std::string TermSymbol::describe() const {
    std::string s;
    for (const auto& t : terms) {
        s += "(" + std::to_string(t.c.real()) + "+" + std::to_string(t.c.imag()) + "i)";
        s += " xi^(" + std::to_string(t.beta[0]) + "," + std::to_string(t.beta[1]) + ")";
        s += (radial == Radial::bracket ? " <xi>^" : " |xi|^") + std::to_string(t.r) + " + ";
    }
    return s;
}

TermSymbol term_symbol(TermSymbol::Radial radial, int dim,
                       std::initializer_list<TermSymbol::Term> ts) {
    TermSymbol s;
    s.radial = radial;
    s.dim = dim;
    s.terms = ts;
    return s;
}

cd FrequencySymbol::eval_at(const std::array<long long, 2>& k,
                            const std::array<double, 2>& xi) const {
    if (kind == Kind::tabulated) return table[bucket_of(table_grid, k[0], k[1])];
    if (xi[0] == 0.0 && xi[1] == 0.0) {
        if (terms.radial == TermSymbol::Radial::homogeneous) return dc_value;
        // bracket radial part is finite at the origin
        return terms.eval(xi);
    }
    return terms.eval(xi);
}

double FrequencySymbol::min_degree() const {
    return kind == Kind::term ? terms.min_degree() : 0.0;
}

bool FrequencySymbol::hermitian() const {
    if (kind == Kind::tabulated) {
        for (std::size_t i = 0; i < table.size(); ++i) {
            auto k = modes_of(table_grid, i);
            long long m0 = -k[0], m1 = -k[1];
            // the -n/2 bucket has no mirror on the lattice
            if (m0 >= table_grid.n / 2 || m1 >= table_grid.n / 2) continue;
            if (std::abs(table[bucket_of(table_grid, m0, m1)] - std::conj(table[i])) > 1e-12)
                return false;
        }
        return true;
    }
    return terms.hermitian();
}

namespace {

FrequencySymbol wrap_terms(TermSymbol t, const std::string& name) {
    FrequencySymbol s;
    s.kind = FrequencySymbol::Kind::term;
    s.terms = std::move(t);
    s.name = name;
    if (s.terms.radial == TermSymbol::Radial::homogeneous && s.terms.min_degree() <= 0.0)
        s.dc_drops = true;
    return s;
}

} // namespace

FrequencySymbol ds(int dim, double s) {
    return wrap_terms(term_symbol(TermSymbol::Radial::homogeneous, dim, {{cd(1, 0), {0, 0}, s}}),
                      "ds(" + std::to_string(s) + ")");
}

FrequencySymbol js(int dim, double s) {
    return wrap_terms(term_symbol(TermSymbol::Radial::bracket, dim, {{cd(1, 0), {0, 0}, s}}),
                      "js(" + std::to_string(s) + ")");
}

FrequencySymbol js_tilde(int dim, double s) {
    return wrap_terms(term_symbol(TermSymbol::Radial::bracket, dim,
                                  {{cd(1, 0), {0, 0}, s}, {cd(-1, 0), {0, 0}, 0.0}}),
                      "js_tilde(" + std::to_string(s) + ")");
}

FrequencySymbol partial(int dim, int axis) {
    std::array<int, 2> e{0, 0};
    e[axis] = 1;
    return wrap_terms(term_symbol(TermSymbol::Radial::homogeneous, dim, {{cd(0, 1), e, 0.0}}),
                      "partial(" + std::to_string(axis) + ")");
}

FrequencySymbol js_partial(int dim, double s, int axis) {
    std::array<int, 2> e{0, 0};
    e[axis] = 1;
    return wrap_terms(term_symbol(TermSymbol::Radial::bracket, dim, {{cd(0, 1), e, s}}),
                      "js_partial(" + std::to_string(s) + "," + std::to_string(axis) + ")");
}

FrequencySymbol hilbert() {
    return wrap_terms(term_symbol(TermSymbol::Radial::homogeneous, 1, {{cd(0, -1), {1, 0}, -1.0}}),
                      "hilbert");
}

FrequencySymbol riesz(int i, int j) {
    std::array<int, 2> beta{0, 0};
    beta[i] += 1;
    beta[j] += 1;
    return wrap_terms(term_symbol(TermSymbol::Radial::homogeneous, 2, {{cd(-1, 0), beta, -2.0}}),
                      "riesz(" + std::to_string(i) + "," + std::to_string(j) + ")");
}

FrequencySymbol inv_laplacian(int dim) {
    return wrap_terms(term_symbol(TermSymbol::Radial::homogeneous, dim, {{cd(-1, 0), {0, 0}, -2.0}}),
                      "inv_laplacian");
}

namespace {

// i^{-|alpha|} d^alpha applied to a term symbol
FrequencySymbol alpha_weight(TermSymbol base, const MultiIndex& alpha, const std::string& name) {
    TermSymbol cur = std::move(base);
    for (int axis = 0; axis < alpha.dim; ++axis)
        for (int rep = 0; rep < alpha.a[axis]; ++rep) cur = cur.d(axis);
    // i^{-n} cycles 1, -i, -1, i
    static const cd cycle[4] = {cd(1, 0), cd(0, -1), cd(-1, 0), cd(0, 1)};
    cur = cur.scaled(cycle[alpha.order() % 4]);
    return wrap_terms(std::move(cur), name);
}

} // namespace

FrequencySymbol dsalpha(int dim, double s, const MultiIndex& alpha) {
    FrequencySymbol sym =
        alpha_weight(term_symbol(TermSymbol::Radial::homogeneous, dim, {{cd(1, 0), {0, 0}, s}}),
                     alpha,
                     "dsalpha(" + std::to_string(s) + ";" + std::to_string(alpha.a[0]) + "," +
                         std::to_string(alpha.a[1]) + ")");
    if (s <= static_cast<double>(alpha.order()) && alpha.order() > 0)
        log_note(sym.name + ": degree " + std::to_string(s - alpha.order()) +
                 " <= 0, zero mode declared 0");
    return sym;
}

FrequencySymbol asalpha(const TermSymbol& base, const MultiIndex& alpha) {
    return alpha_weight(base, alpha,
                        "asalpha(;" + std::to_string(alpha.a[0]) + "," +
                            std::to_string(alpha.a[1]) + ")");
}

FrequencySymbol bessel_deriv(int dim, double s, int l, int m) {
    std::array<int, 2> e{0, 0};
    e[l] = 1;
    // (<xi>^s - 1) i xi_l, then -i d/dxi_m
    TermSymbol base = term_symbol(TermSymbol::Radial::bracket, dim,
                                  {{cd(0, 1), e, s}, {cd(0, -1), e, 0.0}});
    TermSymbol der = base.d(m).scaled(cd(0, -1));
    return wrap_terms(std::move(der), "bessel_deriv(" + std::to_string(s) + ";" +
                                          std::to_string(l) + "," + std::to_string(m) + ")");
}

FrequencySymbol tabulated(const Grid& g, std::vector<cd> values, const std::string& name) {
    if (values.size() != g.size()) throw grid_error("tabulated: table size mismatch");
    FrequencySymbol s;
    s.kind = FrequencySymbol::Kind::tabulated;
    s.table = std::move(values);
    s.table_grid = g;
    s.name = name;
    return s;
}

Field apply(const FrequencySymbol& sym, const Field& f) {
    if (sym.kind == FrequencySymbol::Kind::tabulated && !sym.table_grid.same_as(f.grid))
        throw grid_error("apply: tabulated symbol bound to a different grid");
    if (sym.kind == FrequencySymbol::Kind::term && sym.terms.dim != f.grid.dim)
        throw grid_error("apply: " + sym.name + " is dim-" + std::to_string(sym.terms.dim) +
                         " but the field is dim-" + std::to_string(f.grid.dim));
    if (sym.kind == FrequencySymbol::Kind::term && sym.min_degree() < 0.0) {
        double dc = dc_coeff_abs(f);
        double norm = l2(f);
        if (dc > 1e-10 * norm)
            throw dc_error("apply: " + sym.name + " has negative degree but the field carries " +
                           "a zero mode of size " + std::to_string(dc) + " (l2 " +
                           std::to_string(norm) + "); remove the mean first");
    }
    static std::set<std::string> warned;
    if (sym.dc_drops && warned.insert(sym.name).second)
        log_note("apply: " + sym.name + " zeroes the zero mode");
    return map_spectrum(
        f,
        [&sym](const std::array<long long, 2>& k, const std::array<double, 2>& xi) {
            return sym.eval_at(k, xi);
        },
        sym.hermitian());
}

std::array<Field, 2> apply_grad(const std::array<FrequencySymbol, 2>& syms, const Field& f) {
    return {apply(syms[0], f), apply(syms[1], f)};
}

Field kernel_of(const FrequencySymbol& sym, const LPFamily& fam, const Grid& g, int j) {
    Field delta = make_field(g);
    delta.v[0] = cd(1.0 / std::pow(g.spacing(), g.dim), 0.0);
    delta.is_real = true;
    return apply(sym, fatten(fam, delta, j));
}

} // namespace frac
