// SPDX-License-Identifier: MIT
#include "vve/calibration.hpp"

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "vve/error.hpp"

namespace vve {

namespace {

double two_sided_p(double t_stat, double dof) {
    if (!std::isfinite(t_stat)) return 0.0;
    const boost::math::students_t dist(dof);
    return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t_stat)));
}

double sample_sd(std::span<const double> values) {
    const auto n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / (n - 1.0));
}

void check_trading_days(double trading_days_per_year) {
    if (!(trading_days_per_year > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "trading days per year must be > 0");
    }
}

}  // namespace

std::vector<double> log_returns(const MarketSeries& series) {
    if (series.size() < 2) throw Error(ErrorCode::SeriesTooShort, "need at least two closes");
    std::vector<double> returns;
    returns.reserve(series.size() - 1);
    for (std::size_t k = 0; k + 1 < series.size(); ++k) {
        const double a = series.closes[k];
        const double b = series.closes[k + 1];
        if (!(a > 0.0) || !(b > 0.0)) {
            throw Error(ErrorCode::NonPositivePrice, "log returns need positive closes");
        }
        returns.push_back(std::log(b / a));
    }
    return returns;
}

VolSeries rolling_hv(const MarketSeries& series, std::size_t window, double trading_days_per_year) {
    if (window < 2) throw Error(ErrorCode::InvalidArgument, "HV window must be >= 2");
    check_trading_days(trading_days_per_year);
    if (series.size() <= window) {
        throw Error(ErrorCode::SeriesTooShort, "series of " + std::to_string(series.size()) +
                                                   " closes is too short for window " +
                                                   std::to_string(window));
    }
    const std::vector<double> returns = log_returns(series);
    const double annualize = std::sqrt(trading_days_per_year);

    VolSeries out;
    const std::size_t n_out = series.size() - window;
    out.dates.reserve(n_out);
    out.closes.reserve(n_out);
    out.vols.reserve(n_out);
    // Return j ends at date j + 1, so date k sees returns [k - window, k).
    for (std::size_t k = window; k < series.size(); ++k) {
        const std::span<const double> recent(returns.data() + (k - window), window);
        out.dates.push_back(series.dates[k]);
        out.closes.push_back(series.closes[k]);
        out.vols.push_back(sample_sd(recent) * annualize);
    }
    return out;
}

RegressionReport ols_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw Error(ErrorCode::InvalidArgument, "x and y differ in length");
    if (x.size() < 3) throw Error(ErrorCode::TooFewPoints, "OLS needs at least three points");
    const std::size_t n = x.size();
    const auto nd = static_cast<double>(n);

    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / nd;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / nd;
    double sxx = 0.0, sxy = 0.0, syy = 0.0, sum_y2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
        sum_y2 += y[i] * y[i];
    }
    if (!(sxx > 0.0)) throw Error(ErrorCode::DegenerateX, "x has zero variance");

    RegressionReport report;
    report.n_points = n;
    report.slope = sxy / sxx;
    report.intercept = my - report.slope * mx;

    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double residual = y[i] - (report.intercept + report.slope * x[i]);
        sse += residual * residual;
    }
    const double dof = nd - 2.0;
    const double resolution = 4.0 * nd * std::numeric_limits<double>::epsilon();
    report.exact_fit = sse <= resolution * resolution * sum_y2;

    if (syy > 0.0) {
        report.pearson_corr = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
        report.r_squared = std::clamp(1.0 - sse / syy, 0.0, 1.0);
    }

    if (report.exact_fit) {
        report.p_intercept = 0.0;
        report.p_slope = syy > 0.0 ? 0.0 : 1.0;
        return report;
    }
    const double residual_var = sse / dof;
    report.slope_stderr = std::sqrt(residual_var / sxx);
    report.intercept_stderr = std::sqrt(residual_var * (1.0 / nd + mx * mx / sxx));
    report.p_slope = two_sided_p(report.slope / report.slope_stderr, dof);
    report.p_intercept = two_sided_p(report.intercept / report.intercept_stderr, dof);
    return report;
}

double estimate_drift(const MarketSeries& series, double trading_days_per_year) {
    check_trading_days(trading_days_per_year);
    if (series.size() < 2) throw Error(ErrorCode::SeriesTooShort, "need at least two closes");
    const std::vector<double> returns = log_returns(series);
    const auto n = static_cast<double>(returns.size());
    const double mean = std::accumulate(returns.begin(), returns.end(), 0.0) / n;
    const double variance = returns.size() > 1 ? std::pow(sample_sd(returns), 2) : 0.0;
    return trading_days_per_year * (mean + 0.5 * variance);
}

CalibrationResult calibration_from_report(const RegressionReport& report, double drift, double s0,
                                          double sigma_floor) {
    if (!(report.slope > 0.0)) {
        throw Error(ErrorCode::NegativeSlope,
                    "fitted slope " + std::to_string(report.slope) +
                        " is not positive; the volatility law needs c1 > 0");
    }
    CalibrationResult result;
    result.report = report;
    result.raw_intercept = report.intercept;
    double sigma = report.intercept;
    if (!(sigma > 0.0)) {
        result.warnings.push_back(
            {"ModelInconsistency", "intercept " + std::to_string(report.intercept) +
                                       " is not positive; sigma clamped to " +
                                       std::to_string(sigma_floor)});
        sigma = sigma_floor;
    }
    if (report.p_slope > 0.01) {
        result.warnings.push_back(
            {"SlopeNotSignificant", "p-value of slope is " + std::to_string(report.p_slope) +
                                        " (> 0.01); c1 is statistically indistinguishable from 0"});
    }
    if (report.exact_fit) {
        result.warnings.push_back({"ExactFit", "zero residual variance; p-values reported as 0"});
    }
    result.params = validate_params(drift, sigma, report.slope, s0);
    return result;
}

CalibrationResult calibrate_vve(const MarketSeries& series, std::size_t window,
                                double trading_days_per_year) {
    if (series.size() < window + 3) {
        throw Error(ErrorCode::SeriesTooShort,
                    "calibration needs at least window + 3 = " + std::to_string(window + 3) +
                        " closes, got " + std::to_string(series.size()));
    }
    const VolSeries hv = rolling_hv(series, window, trading_days_per_year);
    const RegressionReport report = ols_fit(hv.closes, hv.vols);
    const double drift = estimate_drift(series, trading_days_per_year);
    return calibration_from_report(report, drift, series.closes.front());
}

}  // namespace vve
