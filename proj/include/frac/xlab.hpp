#ifndef FRAC_XLAB_HPP
#define FRAC_XLAB_HPP

#include "frac/field.hpp"
#include "frac/norms.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace frac {

struct GridConfig {
    int dim = 1;
    int n = 256;
    double boxlen = 64.0;
};

/**
 * Lebesgue exponents attached to a probe. p is the output exponent, the pairs
 * (p1, p2) and (p3, p4) split it. Loading rejects configurations where a
 * present pair violates 1/p1 + 1/p2 == 1/p beyond 1e-12; infinite entries
 * contribute zero. An infinite slot means the probe may substitute the
 * endpoint norm its estimate actually carries there (sup, BMO or besov0).
 */
struct NormConfig {
    double p = 2.0;
    double p1 = 2.0;
    double p2 = lp_inf;
    double p3 = lp_inf;
    double p4 = 2.0;
    bool has_pair12 = false;
    bool has_pair34 = false;
};

/**
 * One ratio experiment: a named probe, scalar knobs, one swept knob, a grid
 * and exponent block, and the base seed. Configs load from JSON files shaped
 *   { "probe": ..., "params": {...}, "grid": {"dim","n","L"}, "norms": {...},
 *     "seed": ... }
 * where exactly one entry of params may be an array (the sweep); probes over
 * random pairs take a scalar "pairs" count instead and sweep the pair index.
 */
struct ProbeConfig {
    std::string probe;
    std::map<std::string, double> params;
    std::string sweep_key;
    std::vector<double> sweep;
    GridConfig grid;
    NormConfig norms;
    std::uint64_t seed = 1;
    std::string source;
};

ProbeConfig probe_config_from_json_text(const std::string& text, const std::string& source);
ProbeConfig load_probe_config(const std::string& path);
std::string probe_config_to_json(const ProbeConfig& cfg);

// Registered probe names; each is the anchor the matching experiments/ file
// is named after.
std::vector<std::string> probe_names();
// The canonical committed configuration for a probe (the experiments/ file
// content). Unknown names throw config_error.
ProbeConfig default_probe_config(const std::string& probe);

// Every committed experiment as (file stem, config). Stems differ from probe
// names where one probe ships several flavors.
std::vector<std::pair<std::string, ProbeConfig>> experiment_set();

struct ProbeRecord {
    std::string probe;
    double param = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    int grid_n = 0;
    double grid_L = 0.0;
    std::uint64_t seed = 0;
    double wall_ms = 0.0;
};

// One record per sweep point, in sweep order, deterministic given the seed
// (wall_ms aside). Family construction failures propagate as the original
// error type with the sweep point spliced into the message.
std::vector<ProbeRecord> run_probe(const ProbeConfig& cfg);

enum class SlopeAxis { param, log_param };

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0; // rms of the log-ratio residuals
};

// Least squares of log(ratio) against param or log(param). Needs >= 3
// records, positive ratios, and positive params on the log axis.
SlopeFit fit_slope(const std::vector<ProbeRecord>& recs, SlopeAxis axis);

// Byte-deterministic apart from the wall_ms column. Empty input emits the
// header alone.
void emit_csv(const std::vector<ProbeRecord>& recs, std::ostream& out);
void emit_json(const std::vector<ProbeRecord>& recs, std::ostream& out);
// Log-log plot: one polyline through the positive points plus one slope
// label. Degenerate inputs keep the frame and label the slope n/a.
void emit_svg(const std::vector<ProbeRecord>& recs, std::ostream& out);
// Writes <dir>/<stem>.csv, .json and .svg for one run; an empty stem falls
// back to the probe name.
void write_run_outputs(const std::vector<ProbeRecord>& recs, const std::string& dir,
                       const std::string& stem = "");

// One point of the stacked-block commutator growth experiment: the test pair
// at level n_stack, carrier c_k * 2^n_stack, with f scaled so the clamped
// budget side is constant.
struct GrowthPoint {
    double ratio = 0.0;
    double bmo = 0.0;
    double num = 0.0;
    double den = 0.0;
};
GrowthPoint log_stack_growth_point(const Grid& gr, double s, double c_k, int n_stack);

struct CheckOutcome {
    std::string module;
    std::string name;
    bool pass = false;
    std::string detail;
    double wall_ms = 0.0;
};

// Acceptance item k in [1, 9]. Items needing frozen reference numbers read
// them from expected_dir().
CheckOutcome run_acceptance(int k);

// The verification suite: quick per-module identity checks, the oracle
// coverage gate over remainder_op_names(), and the acceptance items (1-3 in
// fast mode, all nine otherwise). module_filter empty runs everything.
std::vector<CheckOutcome> run_verify(const std::string& module_filter, bool fast);

// Directory holding the frozen reference tables: FRAC_EXPECTED_DIR when set,
// else the compiled-in source tree default.
std::string expected_dir();

// Aggregates the CSV files under dir into a summary table on out and rewrites
// one SVG per probe. Returns the number of files read.
int report_dir(const std::string& dir, std::ostream& out);

} // namespace frac

#endif
