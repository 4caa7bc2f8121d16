#ifndef FRAC_REMAINDERS_HPP
#define FRAC_REMAINDERS_HPP

#include "frac/dyadic.hpp"
#include "frac/field.hpp"
#include "frac/symbols.hpp"

#include <optional>
#include <string>
#include <vector>

namespace frac {

/**
 * Bilinear frequency symbol sigma(xi, eta) sampled on lattice mode pairs.
 * The rule receives the grid and the two signed mode pairs; frequencies are
 * step * mode, so sums of modes stay exact. star_norm is metadata the caller
 * may attach, never computed here. vanishes_at_eta0 records sigma(xi, 0) == 0
 * where it holds by construction. Rules return finite values everywhere:
 * lattice points where a homogeneous factor is singular evaluate to 0, the
 * same zero-mode policy the unary symbols apply.
 */
struct BilinearSymbol {
    std::string name;
    std::function<cd(const Grid&, const std::array<long long, 2>&,
                     const std::array<long long, 2>&)>
        rule;
    double star_norm = -1.0;
    bool vanishes_at_eta0 = false;
};

/**
 * Direct quadratic-cost route: output mode K collects
 *   boxlen^{-dim} * sum over lattice xi of sigma(xi, K - xi) fhat(xi) ghat(K - xi)
 * keeping only eta = K - xi still on the mode lattice, then one inverse
 * transform. With sigma == 1 this equals mul_dealiased exactly, which is what
 * anchors every composed evaluator below. Capped at n = 4096 (dim 1) and
 * n = 64 (dim 2); parallel over output modes.
 */
Field bilinear_apply(const BilinearSymbol& sigma, const Field& f, const Field& g);

// J^s(fg) - f J^s g
Field kp_commutator(const Field& f, const Field& g, double s);
BilinearSymbol kp_sigma(int dim, double s);

/**
 * Two-sided Taylor-corrected Leibniz defect. With base unset the operator is
 * D^s and the derivative weights are dsalpha; a caller base symbol routes
 * through asalpha instead. s1 + s2 == s with s1, s2 >= 0. The inclusion flags
 * pick <= versus strict < on each Taylor sum.
 */
struct LeibnizSpec {
    double s = 1.0;
    double s1 = 0.5;
    double s2 = 0.5;
    bool alpha_inclusive = true;
    bool beta_inclusive = true;
    std::optional<TermSymbol> base;
};
Field leibniz_remainder(const LeibnizSpec& spec, const Field& f, const Field& g);
BilinearSymbol leibniz_sigma(int dim, const LeibnizSpec& spec);

// D^s(fg) - f D^s g - g D^s f, plus s grad f . D^{s-2} grad g once s >= 1
Field refined_ds_remainder(const Field& f, const Field& g, double s);
BilinearSymbol refined_ds_sigma(int dim, double s);

// J^s(fg) - f J^s g - g (J^s - 1) f, plus s grad f . J^{s-2} grad g once s > 1
Field refined_js_remainder(const Field& f, const Field& g, double s);
BilinearSymbol refined_js_sigma(int dim, double s);

// J^s d_l (fg) - f J^s d_l g - g J^s d_l f - grad f . W g - grad g . W f,
// W the vector weight bessel_deriv(s, l, .)
Field thm9_remainder(const Field& f, const Field& g, double s, int l);
BilinearSymbol thm9_sigma(int dim, double s, int l);

// component i: J^s(u . grad u_i) - u . grad J^s u_i, dim 2
std::array<Field, 2> euler_commutator(const std::array<Field, 2>& u, double s);
// the same components rebuilt from thm9_remainder plus its correction terms;
// the two routes agree exactly when div u = 0
std::array<Field, 2> euler_commutator_assembled(const std::array<Field, 2>& u, double s);
// <xi+eta>^s (i eta_l) - (i eta_l) <eta>^s, the advection symbol paired with
// (u_l, u_i); summing bilinear_apply over l reproduces component i
BilinearSymbol euler_sigma(double s, int l);

// [R_ij, a] f, dim 2
Field riesz_commutator(const Field& a, const Field& f, int i, int j);
BilinearSymbol riesz_sigma(int i, int j);

// d^l [H, a] d^m f, dim 1
Field hilbert_commutator(const Field& a, const Field& f, int l, int m);
BilinearSymbol hilbert_sigma(int l, int m);

// D^{alpha+beta}(a D^{1-alpha-beta} f) - D^alpha(a D^{1-alpha} f)
//   + beta grad a . D^{-1} grad f,  0 <= alpha < 1, 0 < beta <= 1 - alpha;
// a zero exponent means the identity, zero mode kept
Field dmp_remainder(const Field& a, const Field& f, double alpha, double beta);
BilinearSymbol dmp_sigma(int dim, double alpha, double beta);

/**
 * One factor of a band pairing: the lowpass profile phi0(2^{-j}|xi|) or the
 * band profile phi(2^{-j}|xi|), times an optional |xi|^weight.
 */
struct PairFactor {
    bool lowpass = false;
    double weight = 0.0;
};
// sum over the active bands j of (factor_f at scale j applied to f) times
// (factor_g at scale j applied to g), products dealiased. The second factor
// must be a band profile so it vanishes at frequency zero.
Field paraproduct_pair(const LPFamily& fam, const Field& f, const Field& g,
                       const PairFactor& factor_f, const PairFactor& factor_g);
BilinearSymbol paraproduct_sigma(const LPFamily& fam, const Grid& g,
                                 const PairFactor& factor_f, const PairFactor& factor_g);

// s sum_l grad f_l . J^{s-2} grad d_l g_2 - sum_l d_l f_2 (J^s - 1) g_l;
// the quadratic form the divergence-free families drive, dim 2
Field divfree_form(const std::array<Field, 2>& f, const std::array<Field, 2>& g, double s);

// every composed evaluator above; the verification layer keys its oracle
// coverage on this list and refuses to pass when an entry has no check
const std::vector<std::string>& remainder_op_names();

} // namespace frac

#endif
