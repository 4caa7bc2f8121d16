#ifndef FRAC_SYMBOLS_HPP
#define FRAC_SYMBOLS_HPP

#include "frac/dyadic.hpp"
#include "frac/field.hpp"

#include <array>
#include <string>

namespace frac {

struct MultiIndex {
    int dim = 1;
    std::array<int, 2> a{0, 0};

    int order() const { return a[0] + a[1]; }
    double factorial() const;
    bool leq(const MultiIndex& o) const { return a[0] <= o.a[0] && a[1] <= o.a[1]; }
};

std::vector<MultiIndex> multi_indices_upto(int dim, int max_order);

/**
 * Finite sum of terms c * xi^beta * B(xi)^{r/2} with B = |xi|^2 (homogeneous)
 * or 1 + |xi|^2 (bracket). Closed under d/d xi_l, which is how every
 * derivative-weight multiplier here is produced: the derivative of a term
 * splits into the monomial part and the radial part, like terms merge.
 */
struct TermSymbol {
    enum class Radial { homogeneous, bracket };

    struct Term {
        cd c;
        std::array<int, 2> beta{0, 0};
        double r = 0.0;
    };

    Radial radial = Radial::homogeneous;
    int dim = 1;
    std::vector<Term> terms;

    cd eval(const std::array<double, 2>& xi) const;
    TermSymbol d(int axis) const;
    TermSymbol scaled(cd c) const;
    TermSymbol plus(const TermSymbol& o) const;
    double min_degree() const; // min over terms of |beta| + r
    bool hermitian() const;    // value at -xi is the conjugate of the value at xi
    std::string describe() const;
};

TermSymbol term_symbol(TermSymbol::Radial radial, int dim,
                       std::initializer_list<TermSymbol::Term> ts);

/**
 * A frequency multiplier ready to apply to fields. Kinds: a term symbol
 * (homogeneous or bracket radial part) or a table of per-bucket values bound
 * to one grid. The declared zero-mode value dc_value is used at xi = 0;
 * homogeneous symbols of non-positive degree drop the zero mode (dc 0) and
 * applying one of negative degree to a field with a significant zero mode is
 * an error.
 */
struct FrequencySymbol {
    enum class Kind { term, tabulated };

    Kind kind = Kind::term;
    TermSymbol terms;
    std::vector<cd> table;
    Grid table_grid;
    std::string name;
    cd dc_value{0.0, 0.0};
    bool dc_drops = false; // true when the zero mode was zeroed by policy

    cd eval_at(const std::array<long long, 2>& k, const std::array<double, 2>& xi) const;
    double min_degree() const;
    bool hermitian() const;
};

// |xi|^s
FrequencySymbol ds(int dim, double s);
// <xi>^s
FrequencySymbol js(int dim, double s);
// <xi>^s - 1
FrequencySymbol js_tilde(int dim, double s);
// i xi_l
FrequencySymbol partial(int dim, int axis);
// <xi>^s * (i xi_l)
FrequencySymbol js_partial(int dim, double s, int axis);
// -i sgn(xi), dim 1 (as xi/|xi|)
FrequencySymbol hilbert();
// -xi_i xi_j / |xi|^2
FrequencySymbol riesz(int i, int j);
// -|xi|^{-2}
FrequencySymbol inv_laplacian(int dim);
// i^{-|alpha|} d^alpha |xi|^s; degree s - |alpha|
FrequencySymbol dsalpha(int dim, double s, const MultiIndex& alpha);
// i^{-|alpha|} d^alpha of an arbitrary homogeneous base symbol
FrequencySymbol asalpha(const TermSymbol& base, const MultiIndex& alpha);
// component m of -i d/dxi ((<xi>^s - 1) i xi_l); the vector weight paired
// with first derivatives in the gradient-corrected expansions
FrequencySymbol bessel_deriv(int dim, double s, int l, int m);
FrequencySymbol tabulated(const Grid& g, std::vector<cd> values, const std::string& name);

Field apply(const FrequencySymbol& sym, const Field& f);
std::array<Field, 2> apply_grad(const std::array<FrequencySymbol, 2>& syms, const Field& f);

// sym * (fattened band j) applied to the unit-mass discrete delta at the origin
Field kernel_of(const FrequencySymbol& sym, const LPFamily& fam, const Grid& g, int j);

} // namespace frac

#endif
