// SPDX-License-Identifier: MIT
/**
 * @file sde.hpp
 * @brief Path generation for dS = S[mu dt + (sigma + c1 S) dB].
 *
 * Three schemes share one Brownian source so paths are pathwise comparable:
 *  - Euler-Maruyama with full truncation at zero (zero is absorbing)
 *  - Milstein, same truncation policy
 *  - the closed-form map S_t = F(t, B_t) published for this SDE
 *
 * Brownian increments of path p under seed s are draws 0..steps-1 of
 * NormalStream(s, p), scaled by sqrt(dt).
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "vve/model.hpp"

namespace vve {

/// Value written into a path after it has been flagged as exploded.
inline constexpr double kExplodedSentinel = std::numeric_limits<double>::infinity();

struct TimeGrid {
    double horizon = 1.0;
    std::size_t steps = 1;

    double dt() const { return horizon / static_cast<double>(steps); }
    double time(std::size_t k) const { return horizon * static_cast<double>(k) / static_cast<double>(steps); }
};

/// Throws InvalidGrid unless horizon > 0 and steps >= 1.
TimeGrid make_grid(double horizon, std::size_t steps);

struct BrownianPath {
    TimeGrid grid;
    std::vector<double> increments;  ///< length steps, each ~ N(0, dt)
    std::vector<double> cumulative;  ///< length steps + 1, cumulative[0] == 0
};

BrownianPath sample_brownian(const TimeGrid& grid, std::uint64_t seed, std::uint64_t path_index);

/// Sums consecutive blocks of `factor` increments. steps must be divisible by factor.
BrownianPath coarsen(const BrownianPath& fine, std::size_t factor);

enum class Scheme { Euler, Milstein, Exact };

std::string_view to_string(Scheme scheme);
/// Accepts "euler", "milstein", "exact"; throws InvalidArgument otherwise.
Scheme parse_scheme(std::string_view name);

struct PathEnsemble {
    TimeGrid grid;
    std::size_t n_paths = 0;
    std::uint64_t seed = 0;
    Scheme scheme = Scheme::Euler;
    std::vector<double> values;           ///< row-major, n_paths x (steps + 1)
    std::vector<std::uint8_t> exploded;   ///< per path flag

    std::size_t columns() const { return grid.steps + 1; }
    double at(std::size_t path, std::size_t k) const { return values[path * columns() + k]; }
    std::span<const double> path(std::size_t p) const {
        return {values.data() + p * columns(), columns()};
    }
    std::size_t exploded_count() const;
    double exploded_fraction() const;
};

/// Single-path schemes. Output has grid.steps + 1 entries, entry 0 == s0.
std::vector<double> euler_path(const ModelParams& params, const BrownianPath& bpath);
std::vector<double> milstein_path(const ModelParams& params, const BrownianPath& bpath);

struct ExactPath {
    std::vector<double> values;
    bool exploded = false;
};

/// Closed-form map evaluated on the cumulative Brownian values.
/// Throws SigmaZeroUnsupported (sigma == 0) or GammaNearZero (|mu - sigma^2/2| < kGammaTol).
ExactPath exact_path(const ModelParams& params, const BrownianPath& bpath);

/// Closed form at one (t, B_t). nullopt when the denominator is below the
/// explosion threshold 1e-10 * (sigma + c1*s0).
std::optional<double> exact_value(const ModelParams& params, double t, double brownian);

/// Explosion threshold used by exact_path and exact_value.
double explosion_tolerance(const ModelParams& params);

/// Pathwise checks shared by all simulators: s0 > 0, sigma >= 0, c1 >= 0, finite mu.
/// sigma == c1 == 0 is allowed here (deterministic growth).
void check_simulation_params(const ModelParams& params);

PathEnsemble simulate(const ModelParams& params, const TimeGrid& grid, std::size_t n_paths,
                      std::uint64_t seed, Scheme scheme);

inline PathEnsemble simulate_euler(const ModelParams& params, const TimeGrid& grid,
                                   std::size_t n_paths, std::uint64_t seed) {
    return simulate(params, grid, n_paths, seed, Scheme::Euler);
}

inline PathEnsemble simulate_milstein(const ModelParams& params, const TimeGrid& grid,
                                      std::size_t n_paths, std::uint64_t seed) {
    return simulate(params, grid, n_paths, seed, Scheme::Milstein);
}

inline PathEnsemble simulate_exact(const ModelParams& params, const TimeGrid& grid,
                                   std::size_t n_paths, std::uint64_t seed) {
    return simulate(params, grid, n_paths, seed, Scheme::Exact);
}

/// Terminal values only, without storing paths. Same values as the last
/// column of simulate(...) for the same arguments.
struct TerminalSample {
    std::vector<double> values;          ///< kExplodedSentinel where exploded
    std::vector<std::uint8_t> exploded;
    std::size_t exploded_count = 0;
};

TerminalSample simulate_terminal(const ModelParams& params, const TimeGrid& grid,
                                 std::size_t n_paths, std::uint64_t seed, Scheme scheme);

struct EnsembleSummary {
    std::vector<double> times;
    std::vector<double> mean;
    std::vector<double> q05;
    std::vector<double> q50;
    std::vector<double> q95;
    double exploded_fraction = 0.0;
    std::size_t live_paths = 0;
};

/// Cross-sectional statistics over the non-exploded paths.
EnsembleSummary summarize(const PathEnsemble& ensemble);

enum class ConvergenceReference {
    ClosedForm,    ///< exact_path on the finest level
    RefinedEuler,  ///< Euler on a grid refine_factor times finer than the finest level
};

std::string_view to_string(ConvergenceReference reference);

struct ConvergenceReport {
    Scheme scheme = Scheme::Euler;
    ConvergenceReference reference = ConvergenceReference::ClosedForm;
    std::vector<double> dt_levels;       ///< strictly decreasing
    std::vector<double> strong_errors;   ///< mean |S_T(scheme) - S_T(reference)|
    double fitted_slope = 0.0;           ///< least-squares slope of log2(error) on log2(dt)
    std::size_t n_paths = 0;
    std::size_t excluded_paths = 0;      ///< exploded under scheme or reference
};

/// Strong terminal error per dt level. All levels share the Brownian path of
/// the finest grid; coarse increments are sums of fine ones.
/// dt_levels must be strictly decreasing with horizon/dt integral and each
/// level's step count dividing the finest one.
ConvergenceReport strong_convergence(const ModelParams& params, double horizon,
                                     std::span<const double> dt_levels, std::size_t n_paths,
                                     std::uint64_t seed, Scheme scheme,
                                     ConvergenceReference reference = ConvergenceReference::ClosedForm,
                                     std::size_t refine_factor = 16);

/// Least-squares slope of y on x.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

}  // namespace vve
