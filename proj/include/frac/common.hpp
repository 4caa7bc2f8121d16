#ifndef FRAC_COMMON_HPP
#define FRAC_COMMON_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace frac {

using cd = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

/** Grid/shape mismatches, bad constructor arguments. */
struct grid_error : std::runtime_error {
    explicit grid_error(const std::string& m) : std::runtime_error(m) {}
};

/** Band index outside the active dyadic range of a grid. */
struct band_range_error : std::runtime_error {
    explicit band_range_error(const std::string& m) : std::runtime_error(m) {}
};

/** Singular symbol applied to a field with a significant zero mode. */
struct dc_error : std::runtime_error {
    explicit dc_error(const std::string& m) : std::runtime_error(m) {}
};

/** Requested construction does not fit under the grid Nyquist frequency. */
struct resolution_error : std::runtime_error {
    explicit resolution_error(const std::string& m) : std::runtime_error(m) {}
};

/** Malformed probe configuration / incompatible exponents. */
struct config_error : std::runtime_error {
    explicit config_error(const std::string& m) : std::runtime_error(m) {}
};

// Worker cap taken from FRAC_THREADS (>=1); falls back to hardware count.
int thread_budget();

// Chunked parallel loop over [0, count). Deterministic: each index is written
// by exactly one worker and no cross-index reductions happen inside.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body);

// One-shot warning sink (stderr), kept separate so tests can count emissions.
void log_note(const std::string& msg);

} // namespace frac

#endif
