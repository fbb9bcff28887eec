// SPDX-License-Identifier: MIT
#include "vve/sde.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "parallel.hpp"
#include "vve/error.hpp"
#include "vve/rng.hpp"

namespace vve {

namespace {

struct StepState {
    double value;
    bool exploded;
};

// One Euler or Milstein step with full truncation. Zero is absorbing.
inline StepState step_scheme(const ModelParams& p, Scheme scheme, double s, double dt, double db) {
    if (s <= 0.0) return {0.0, false};
    const double diffusion = s * (p.sigma + p.c1 * s);
    double next = s + p.mu * s * dt + diffusion * db;
    if (scheme == Scheme::Milstein) {
        const double slope = p.sigma + 2.0 * p.c1 * s;
        next += 0.5 * diffusion * slope * (db * db - dt);
    }
    if (!std::isfinite(next)) return {kExplodedSentinel, true};
    return {std::max(next, 0.0), false};
}

void check_exact_params(const ModelParams& p) {
    if (p.sigma == 0.0) {
        throw Error(ErrorCode::SigmaZeroUnsupported,
                    "the closed-form path needs sigma > 0; no closed form is available for sigma = 0");
    }
    if (std::abs(p.gamma()) < kGammaTol) {
        throw Error(ErrorCode::GammaNearZero, "closed-form path is singular at mu = sigma^2/2");
    }
}

// Writes the closed-form path into out (size steps+1). Returns exploded flag.
bool fill_exact(const ModelParams& p, const TimeGrid& grid, std::span<const double> cumulative,
                std::span<double> out) {
    out[0] = p.s0;
    bool exploded = false;
    for (std::size_t k = 1; k <= grid.steps; ++k) {
        if (!exploded) {
            const auto value = exact_value(p, grid.time(k), cumulative[k]);
            if (value) {
                out[k] = *value;
                continue;
            }
            exploded = true;
        }
        out[k] = kExplodedSentinel;
    }
    return exploded;
}

bool fill_scheme(const ModelParams& p, Scheme scheme, const TimeGrid& grid,
                 std::span<const double> increments, std::span<double> out) {
    const double dt = grid.dt();
    out[0] = p.s0;
    double s = p.s0;
    bool exploded = false;
    for (std::size_t k = 0; k < grid.steps; ++k) {
        if (!exploded) {
            const StepState next = step_scheme(p, scheme, s, dt, increments[k]);
            s = next.value;
            exploded = next.exploded;
        }
        out[k + 1] = exploded ? kExplodedSentinel : s;
    }
    return exploded;
}

double quantile_sorted(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

TimeGrid make_grid(double horizon, std::size_t steps) {
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw Error(ErrorCode::InvalidGrid, "grid horizon must be > 0");
    }
    if (steps < 1) {
        throw Error(ErrorCode::InvalidGrid, "grid needs at least one step");
    }
    return TimeGrid{horizon, steps};
}

BrownianPath sample_brownian(const TimeGrid& grid, std::uint64_t seed, std::uint64_t path_index) {
    make_grid(grid.horizon, grid.steps);
    BrownianPath path{grid, std::vector<double>(grid.steps), std::vector<double>(grid.steps + 1)};
    NormalStream stream(seed, path_index);
    const double scale = std::sqrt(grid.dt());
    path.cumulative[0] = 0.0;
    for (std::size_t k = 0; k < grid.steps; ++k) {
        path.increments[k] = scale * stream.normal();
        path.cumulative[k + 1] = path.cumulative[k] + path.increments[k];
    }
    return path;
}

BrownianPath coarsen(const BrownianPath& fine, std::size_t factor) {
    if (factor == 0 || fine.grid.steps % factor != 0) {
        throw Error(ErrorCode::InvalidGrid, "coarsening factor must divide the step count");
    }
    const std::size_t steps = fine.grid.steps / factor;
    BrownianPath coarse{TimeGrid{fine.grid.horizon, steps}, std::vector<double>(steps),
                        std::vector<double>(steps + 1)};
    coarse.cumulative[0] = 0.0;
    for (std::size_t k = 0; k < steps; ++k) {
        double sum = 0.0;
        for (std::size_t j = 0; j < factor; ++j) sum += fine.increments[k * factor + j];
        coarse.increments[k] = sum;
        coarse.cumulative[k + 1] = coarse.cumulative[k] + sum;
    }
    return coarse;
}

std::string_view to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::Euler: return "euler";
        case Scheme::Milstein: return "milstein";
        case Scheme::Exact: return "exact";
    }
    return "unknown";
}

Scheme parse_scheme(std::string_view name) {
    if (name == "euler") return Scheme::Euler;
    if (name == "milstein") return Scheme::Milstein;
    if (name == "exact") return Scheme::Exact;
    throw Error(ErrorCode::InvalidArgument, "unknown scheme '" + std::string(name) + "'");
}

std::string_view to_string(ConvergenceReference reference) {
    return reference == ConvergenceReference::ClosedForm ? "closed_form" : "refined_euler";
}

std::size_t PathEnsemble::exploded_count() const {
    return static_cast<std::size_t>(std::count(exploded.begin(), exploded.end(), std::uint8_t{1}));
}

double PathEnsemble::exploded_fraction() const {
    return n_paths == 0 ? 0.0 : static_cast<double>(exploded_count()) / static_cast<double>(n_paths);
}

void check_simulation_params(const ModelParams& p) {
    if (!std::isfinite(p.mu) || !std::isfinite(p.sigma) || !std::isfinite(p.c1)) {
        throw Error(ErrorCode::InvalidArgument, "model parameters must be finite");
    }
    if (!(p.s0 > 0.0) || !std::isfinite(p.s0)) {
        throw Error(ErrorCode::NonPositiveSpot, "s0 must be > 0");
    }
    if (p.sigma < 0.0 || p.c1 < 0.0) {
        throw Error(ErrorCode::NegativeCoefficient, "sigma and c1 must be >= 0");
    }
}

double explosion_tolerance(const ModelParams& p) { return 1e-10 * (p.sigma + p.c1 * p.s0); }

std::optional<double> exact_value(const ModelParams& p, double t, double brownian) {
    const double gamma = p.gamma();
    const double ratio = p.mu / gamma;
    const double growth = std::exp(gamma * t + p.sigma * brownian);
    const double level = std::exp(p.sigma * brownian);
    const double denominator = (ratio - 1.0) * p.c1 * p.s0 * growth - ratio * p.c1 * p.s0 * level +
                               p.sigma + p.c1 * p.s0;
    if (!(denominator > explosion_tolerance(p))) return std::nullopt;
    return p.sigma * p.s0 * growth / denominator;
}

std::vector<double> euler_path(const ModelParams& params, const BrownianPath& bpath) {
    check_simulation_params(params);
    std::vector<double> out(bpath.grid.steps + 1);
    fill_scheme(params, Scheme::Euler, bpath.grid, bpath.increments, out);
    return out;
}

std::vector<double> milstein_path(const ModelParams& params, const BrownianPath& bpath) {
    check_simulation_params(params);
    std::vector<double> out(bpath.grid.steps + 1);
    fill_scheme(params, Scheme::Milstein, bpath.grid, bpath.increments, out);
    return out;
}

ExactPath exact_path(const ModelParams& params, const BrownianPath& bpath) {
    check_simulation_params(params);
    check_exact_params(params);
    ExactPath result{std::vector<double>(bpath.grid.steps + 1), false};
    result.exploded = fill_exact(params, bpath.grid, bpath.cumulative, result.values);
    return result;
}

PathEnsemble simulate(const ModelParams& params, const TimeGrid& grid, std::size_t n_paths,
                      std::uint64_t seed, Scheme scheme) {
    check_simulation_params(params);
    make_grid(grid.horizon, grid.steps);
    if (n_paths < 1) throw Error(ErrorCode::InvalidArgument, "n_paths must be >= 1");
    if (scheme == Scheme::Exact) check_exact_params(params);

    PathEnsemble ensemble{grid, n_paths, seed, scheme,
                          std::vector<double>(n_paths * (grid.steps + 1)),
                          std::vector<std::uint8_t>(n_paths, 0)};
    detail::parallel_for(n_paths, [&](std::size_t p) {
        const BrownianPath bpath = sample_brownian(grid, seed, p);
        std::span<double> row(ensemble.values.data() + p * ensemble.columns(), ensemble.columns());
        const bool exploded = scheme == Scheme::Exact
                                  ? fill_exact(params, grid, bpath.cumulative, row)
                                  : fill_scheme(params, scheme, grid, bpath.increments, row);
        ensemble.exploded[p] = exploded ? 1 : 0;
    });
    return ensemble;
}

TerminalSample simulate_terminal(const ModelParams& params, const TimeGrid& grid,
                                 std::size_t n_paths, std::uint64_t seed, Scheme scheme) {
    check_simulation_params(params);
    make_grid(grid.horizon, grid.steps);
    if (n_paths < 1) throw Error(ErrorCode::InvalidArgument, "n_paths must be >= 1");
    if (scheme == Scheme::Exact) check_exact_params(params);

    TerminalSample sample{std::vector<double>(n_paths), std::vector<std::uint8_t>(n_paths, 0), 0};
    const double dt = grid.dt();
    const double scale = std::sqrt(dt);
    detail::parallel_for(n_paths, [&](std::size_t p) {
        NormalStream stream(seed, p);
        double s = params.s0;
        double brownian = 0.0;
        bool exploded = false;
        for (std::size_t k = 0; k < grid.steps && !exploded; ++k) {
            const double db = scale * stream.normal();
            if (scheme == Scheme::Exact) {
                brownian += db;
                const auto value = exact_value(params, grid.time(k + 1), brownian);
                if (value) {
                    s = *value;
                } else {
                    exploded = true;
                }
            } else {
                const StepState next = step_scheme(params, scheme, s, dt, db);
                s = next.value;
                exploded = next.exploded;
            }
        }
        sample.values[p] = exploded ? kExplodedSentinel : s;
        sample.exploded[p] = exploded ? 1 : 0;
    });
    sample.exploded_count =
        static_cast<std::size_t>(std::count(sample.exploded.begin(), sample.exploded.end(), std::uint8_t{1}));
    return sample;
}

EnsembleSummary summarize(const PathEnsemble& ensemble) {
    EnsembleSummary summary;
    const std::size_t cols = ensemble.columns();
    summary.exploded_fraction = ensemble.exploded_fraction();
    summary.live_paths = ensemble.n_paths - ensemble.exploded_count();
    std::vector<double> column;
    column.reserve(summary.live_paths);
    for (std::size_t k = 0; k < cols; ++k) {
        column.clear();
        for (std::size_t p = 0; p < ensemble.n_paths; ++p) {
            if (!ensemble.exploded[p]) column.push_back(ensemble.at(p, k));
        }
        const double mean = column.empty()
                                ? std::numeric_limits<double>::quiet_NaN()
                                : std::accumulate(column.begin(), column.end(), 0.0) /
                                      static_cast<double>(column.size());
        std::sort(column.begin(), column.end());
        summary.times.push_back(ensemble.grid.time(k));
        summary.mean.push_back(mean);
        summary.q05.push_back(quantile_sorted(column, 0.05));
        summary.q50.push_back(quantile_sorted(column, 0.50));
        summary.q95.push_back(quantile_sorted(column, 0.95));
    }
    return summary;
}

double least_squares_slope(std::span<const double> x, std::span<const double> y) {
    const auto n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

ConvergenceReport strong_convergence(const ModelParams& params, double horizon,
                                     std::span<const double> dt_levels, std::size_t n_paths,
                                     std::uint64_t seed, Scheme scheme,
                                     ConvergenceReference reference, std::size_t refine_factor) {
    check_simulation_params(params);
    if (scheme == Scheme::Exact) {
        throw Error(ErrorCode::InvalidArgument, "strong_convergence measures euler or milstein");
    }
    if (reference == ConvergenceReference::ClosedForm) check_exact_params(params);
    if (dt_levels.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "need at least two dt levels");
    }
    if (n_paths < 1) throw Error(ErrorCode::InvalidArgument, "n_paths must be >= 1");
    if (refine_factor < 1) throw Error(ErrorCode::InvalidArgument, "refine_factor must be >= 1");

    std::vector<std::size_t> level_steps;
    for (std::size_t i = 0; i < dt_levels.size(); ++i) {
        if (!(dt_levels[i] > 0.0)) throw Error(ErrorCode::InvalidGrid, "dt levels must be > 0");
        if (i > 0 && !(dt_levels[i] < dt_levels[i - 1])) {
            throw Error(ErrorCode::InvalidGrid, "dt levels must be strictly decreasing");
        }
        const double ratio = horizon / dt_levels[i];
        const double rounded = std::round(ratio);
        if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * rounded) {
            throw Error(ErrorCode::InvalidGrid, "horizon / dt must be an integer at every level");
        }
        level_steps.push_back(static_cast<std::size_t>(rounded));
    }
    const std::size_t finest = level_steps.back();
    for (std::size_t steps : level_steps) {
        if (finest % steps != 0) {
            throw Error(ErrorCode::InvalidGrid, "dt levels must be refinements of a common grid");
        }
    }
    const std::size_t base_steps =
        reference == ConvergenceReference::RefinedEuler ? finest * refine_factor : finest;
    const TimeGrid base = make_grid(horizon, base_steps);

    const std::size_t n_levels = level_steps.size();
    std::vector<double> abs_errors(n_paths * n_levels, 0.0);
    std::vector<std::uint8_t> excluded(n_paths, 0);

    detail::parallel_for(n_paths, [&](std::size_t p) {
        const BrownianPath fine = sample_brownian(base, seed, p);
        double ref_value = 0.0;
        bool ref_exploded = false;
        if (reference == ConvergenceReference::ClosedForm) {
            const auto value = exact_value(params, horizon, fine.cumulative.back());
            ref_exploded = !value;
            ref_value = value.value_or(kExplodedSentinel);
        } else {
            std::vector<double> out(base_steps + 1);
            ref_exploded = fill_scheme(params, Scheme::Euler, base, fine.increments, out);
            ref_value = out.back();
        }
        bool any_exploded = ref_exploded;
        for (std::size_t i = 0; i < n_levels && !any_exploded; ++i) {
            const BrownianPath coarse = coarsen(fine, base_steps / level_steps[i]);
            std::vector<double> out(level_steps[i] + 1);
            any_exploded = fill_scheme(params, scheme, coarse.grid, coarse.increments, out);
            abs_errors[p * n_levels + i] = std::abs(out.back() - ref_value);
        }
        excluded[p] = any_exploded ? 1 : 0;
    });

    ConvergenceReport report;
    report.scheme = scheme;
    report.reference = reference;
    report.dt_levels.assign(dt_levels.begin(), dt_levels.end());
    report.n_paths = n_paths;
    report.excluded_paths =
        static_cast<std::size_t>(std::count(excluded.begin(), excluded.end(), std::uint8_t{1}));
    const std::size_t used = n_paths - report.excluded_paths;
    if (used == 0) throw Error(ErrorCode::ExplosionRegion, "every path exploded");

    report.strong_errors.assign(n_levels, 0.0);
    for (std::size_t p = 0; p < n_paths; ++p) {
        if (excluded[p]) continue;
        for (std::size_t i = 0; i < n_levels; ++i) report.strong_errors[i] += abs_errors[p * n_levels + i];
    }
    std::vector<double> log_dt, log_err;
    for (std::size_t i = 0; i < n_levels; ++i) {
        report.strong_errors[i] /= static_cast<double>(used);
        log_dt.push_back(std::log2(report.dt_levels[i]));
        log_err.push_back(std::log2(report.strong_errors[i]));
    }
    report.fitted_slope = least_squares_slope(log_dt, log_err);
    return report;
}

}  // namespace vve
