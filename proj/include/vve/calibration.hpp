// SPDX-License-Identifier: MIT
/**
 * @file calibration.hpp
 * @brief Volatility-on-price regression and extraction of (sigma, c1).
 *
 * Pipeline: close-to-close log returns -> rolling annualized historical
 * volatility -> OLS of volatility on the contemporaneous close. Under the
 * VVE volatility law v = sigma + c1 * S the intercept estimates sigma and the
 * slope estimates c1.
 */

#pragma once

#include <span>
#include <string>
#include <vector>

#include "vve/model.hpp"
#include "vve/series.hpp"

namespace vve {

inline constexpr std::size_t kDefaultHvWindow = 30;
inline constexpr double kDefaultTradingDays = 252.0;
inline constexpr double kSigmaFloor = 1e-6;

/// Annualized rolling volatility aligned with the close of the date on which
/// each window of returns ends.
struct VolSeries {
    std::vector<Date> dates;
    std::vector<double> closes;
    std::vector<double> vols;

    std::size_t size() const { return vols.size(); }
};

struct RegressionReport {
    double slope = 0.0;
    double intercept = 0.0;
    double p_slope = 1.0;
    double p_intercept = 1.0;
    double r_squared = 0.0;
    double pearson_corr = 0.0;
    std::size_t n_points = 0;
    // Beyond the seven headline statistics.
    bool exact_fit = false;
    double slope_stderr = 0.0;
    double intercept_stderr = 0.0;
};

struct CalibrationWarning {
    std::string code;
    std::string message;
};

struct CalibrationResult {
    ModelParams params;
    RegressionReport report;
    double raw_intercept = 0.0;
    std::vector<CalibrationWarning> warnings;
};

/// r_k = ln(close_{k+1} / close_k), length n - 1.
std::vector<double> log_returns(const MarketSeries& series);

/// Sample (n-1) standard deviation of the latest `window` returns times
/// sqrt(trading_days_per_year), for each date index k >= window.
/// Output length is series.size() - window.
VolSeries rolling_hv(const MarketSeries& series, std::size_t window = kDefaultHvWindow,
                     double trading_days_per_year = kDefaultTradingDays);

/// Simple OLS y = intercept + slope * x with two-sided t-tests on n - 2 dof.
/// A zero residual variance reports p-values of 0 and sets exact_fit
/// (p_slope is 1 when y is constant, since slope 0 then carries no signal).
RegressionReport ols_fit(std::span<const double> x, std::span<const double> y);

/// Annualized mean log return plus half the annualized sample variance.
double estimate_drift(const MarketSeries& series,
                      double trading_days_per_year = kDefaultTradingDays);

/// Turns a fitted regression into model parameters. Throws NegativeSlope
/// when slope <= 0. A non-positive intercept is clamped to sigma_floor and
/// flagged ModelInconsistency; the raw value is kept in raw_intercept.
CalibrationResult calibration_from_report(const RegressionReport& report, double drift,
                                          double s0, double sigma_floor = kSigmaFloor);

/// rolling_hv + ols_fit + estimate_drift + calibration_from_report, with s0
/// taken as the first close. Needs at least window + 3 closes.
CalibrationResult calibrate_vve(const MarketSeries& series, std::size_t window = kDefaultHvWindow,
                                double trading_days_per_year = kDefaultTradingDays);

}  // namespace vve
