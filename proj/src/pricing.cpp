// SPDX-License-Identifier: MIT
#include "vve/pricing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "vve/error.hpp"
#include "vve/quadrature.hpp"
#include "vve/sde.hpp"

namespace vve {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Coefficient of e^{sigma w} in the closed-form denominator at time t.
double growth_coefficient(const RiskNeutralParams& rn, double t) {
    const double delta = rn.delta();
    return rn.c1 * rn.s0 * ((delta - 1.0) * std::exp(rn.gamma() * t) - delta);
}

double den_tolerance(const RiskNeutralParams& rn) { return 1e-10 * (rn.sigma + rn.c1 * rn.s0); }

// f_t(w) written as sigma s0 e^{gamma t} / (A + c e^{-sigma w}) so that large
// |w| neither overflows nor cancels. The explosion test is the original
// denominator A e^{sigma w} + c compared against den_tolerance.
std::optional<double> try_forward(const RiskNeutralParams& rn, double t, double w) {
    const double a = growth_coefficient(rn, t);
    const double c = rn.sigma + rn.c1 * rn.s0;
    const double decay = std::exp(-rn.sigma * w);
    const double scaled_den = a + c * decay;
    if (std::isinf(decay)) return 0.0;
    if (!(scaled_den > den_tolerance(rn) * decay)) return std::nullopt;
    return rn.sigma * rn.s0 * std::exp(rn.gamma() * t) / scaled_den;
}

OptionQuote intrinsic_quote(double spot, double strike) {
    OptionQuote quote;
    quote.price = std::max(spot - strike, 0.0);
    quote.method = PricingMethod::Formula;
    quote.error_estimate = 0.0;
    return quote;
}

double checked_inverse(const RiskNeutralParams& rn, double t, double x, const char* what) {
    try {
        return inverse_map(rn, t, x);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::OutOfRange) throw;
        throw Error(ErrorCode::InverseOutOfRange,
                    std::string(what) + " is not reachable by the solution map: " + e.what());
    }
}

}  // namespace

std::string_view to_string(PricingMethod method) {
    switch (method) {
        case PricingMethod::Formula: return "formula";
        case PricingMethod::MonteCarlo: return "monte_carlo";
        case PricingMethod::BlackScholes: return "black_scholes";
    }
    return "unknown";
}

PricingMethod parse_method(std::string_view name) {
    if (name == "formula") return PricingMethod::Formula;
    if (name == "mc" || name == "monte_carlo") return PricingMethod::MonteCarlo;
    if (name == "bs" || name == "black_scholes") return PricingMethod::BlackScholes;
    throw Error(ErrorCode::InvalidArgument, "unknown pricing method '" + std::string(name) + "'");
}

double norm_cdf(double x) { return 0.5 * std::erfc(-x * std::numbers::sqrt2 * 0.5); }

double norm_pdf(double x) {
    return std::exp(-0.5 * x * x) * 0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2;
}

void validate_risk_neutral(const RiskNeutralParams& rn) {
    if (!std::isfinite(rn.sigma) || !std::isfinite(rn.c1) || !std::isfinite(rn.s0) ||
        !std::isfinite(rn.rate)) {
        throw Error(ErrorCode::InvalidArgument, "risk-neutral parameters must be finite");
    }
    if (!(rn.s0 > 0.0)) throw Error(ErrorCode::NonPositiveSpot, "s0 must be > 0");
    if (rn.sigma < 0.0 || rn.c1 < 0.0) {
        throw Error(ErrorCode::NegativeCoefficient, "sigma and c1 must be >= 0");
    }
    if (rn.sigma == 0.0) {
        throw Error(ErrorCode::SigmaZeroUnsupported, "the solution map needs sigma > 0");
    }
    if (std::abs(rn.gamma()) < kGammaTol) {
        throw Error(ErrorCode::SingularDelta, "r = sigma^2/2 makes delta = r/(r - sigma^2/2) singular");
    }
}

void validate_option(const OptionSpec& opt) {
    if (!(opt.strike >= 0.0) || !std::isfinite(opt.strike)) {
        throw Error(ErrorCode::InvalidOption, "strike must be >= 0");
    }
    if (!(opt.valuation_time >= 0.0) || !(opt.valuation_time <= opt.maturity) ||
        !std::isfinite(opt.maturity)) {
        throw Error(ErrorCode::InvalidOption, "need 0 <= valuation time <= maturity");
    }
    if (opt.spot && !(*opt.spot > 0.0)) throw Error(ErrorCode::InvalidOption, "spot must be > 0");
}

double forward_map(const RiskNeutralParams& rn, double t, double w) {
    validate_risk_neutral(rn);
    const auto value = try_forward(rn, t, w);
    if (!value) {
        throw Error(ErrorCode::ExplosionRegion,
                    "w = " + std::to_string(w) + " lies beyond the explosion boundary at t = " +
                        std::to_string(t));
    }
    return *value;
}

double explosion_boundary(const RiskNeutralParams& rn, double t) {
    validate_risk_neutral(rn);
    const double a = growth_coefficient(rn, t);
    if (!(a < 0.0)) return kInf;
    const double c = rn.sigma + rn.c1 * rn.s0;
    return std::log((c - den_tolerance(rn)) / -a) / rn.sigma;
}

double inverse_map(const RiskNeutralParams& rn, double t, double x) {
    validate_risk_neutral(rn);
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw Error(ErrorCode::OutOfRange, "price " + std::to_string(x) + " must be positive and finite");
    }
    // Undefined values sit beyond the explosion boundary, where f is +inf.
    auto f = [&](double w) { return try_forward(rn, t, w).value_or(kInf); };

    double hi = explosion_boundary(rn, t);
    if (std::isinf(hi)) {
        const double a = growth_coefficient(rn, t);
        if (a > 0.0) {
            const double supremum = rn.sigma * rn.s0 * std::exp(rn.gamma() * t) / a;
            if (!(x < supremum)) {
                throw Error(ErrorCode::OutOfRange,
                            "price " + std::to_string(x) + " exceeds the map's supremum " +
                                std::to_string(supremum));
            }
        }
        hi = 1.0;
        int guard = 0;
        while (!(f(hi) > x)) {
            hi *= 2.0;
            if (++guard > 80) throw Error(ErrorCode::OutOfRange, "price not attained by the map");
        }
    }
    double lo = std::min(-1.0, hi - 1.0);
    for (int guard = 0; !(f(lo) < x); ++guard) {
        lo = hi - 2.0 * (hi - lo);
        if (guard > 80) throw Error(ErrorCode::OutOfRange, "price not attained by the map");
    }

    // Bisection to a narrow bracket with finite values at both ends.
    for (int iter = 0; iter < 200; ++iter) {
        const bool narrow = hi - lo <= 1e-6 * std::max(1.0, std::abs(lo));
        if (narrow && std::isfinite(f(hi))) break;
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (f(mid) < x ? lo : hi) = mid;
    }

    // Illinois-modified secant inside the bracket.
    double f_lo = f(lo) - x;
    double f_hi = f(hi) - x;
    double best = std::abs(f_lo) < std::abs(f_hi) ? lo : hi;
    double best_residual = std::min(std::abs(f_lo), std::abs(f_hi));
    int side = 0;
    for (int iter = 0; iter < 100 && best_residual > 1e-15 * x; ++iter) {
        if (!std::isfinite(f_hi)) break;
        double w = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
        if (!(w > lo && w < hi)) w = 0.5 * (lo + hi);
        if (w <= lo || w >= hi) break;
        const double fw = f(w) - x;
        if (std::abs(fw) < best_residual) {
            best = w;
            best_residual = std::abs(fw);
        }
        if (fw == 0.0) break;
        if (fw < 0.0) {
            lo = w;
            f_lo = fw;
            if (side == -1) f_hi *= 0.5;
            side = -1;
        } else {
            hi = w;
            f_hi = fw;
            if (side == 1) f_lo *= 0.5;
            side = 1;
        }
    }
    return best;
}

std::optional<double> printed_inverse_map(const RiskNeutralParams& rn, double t, double x) {
    validate_risk_neutral(rn);
    const double delta = rn.delta();
    const double argument =
        ((delta - 1.0) * std::exp(rn.gamma() * t) - delta) * rn.c1 * x / rn.sigma;
    if (!(argument > 0.0)) return std::nullopt;
    return std::log(argument) / rn.sigma - rn.gamma() * t / rn.sigma;
}

std::vector<InverseComparison> compare_inverse_forms(const RiskNeutralParams& rn, double t,
                                                     const std::vector<double>& prices) {
    std::vector<InverseComparison> rows;
    rows.reserve(prices.size());
    for (double x : prices) {
        InverseComparison row;
        row.x = x;
        row.numeric = inverse_map(rn, t, x);
        row.printed = printed_inverse_map(rn, t, x);
        if (row.printed) row.difference = *row.printed - row.numeric;
        rows.push_back(row);
    }
    return rows;
}

OptionQuote price_formula(const RiskNeutralParams& rn, const OptionSpec& opt, double abs_tol) {
    validate_risk_neutral(rn);
    validate_option(opt);
    const double x = opt.spot_or(rn.s0);
    const double tau = opt.maturity - opt.valuation_time;
    if (tau == 0.0) return intrinsic_quote(x, opt.strike);

    const double discount = std::exp(-rn.rate * tau);
    const double root_tau = std::sqrt(tau);
    const double w_t = checked_inverse(rn, opt.valuation_time, x, "spot");

    OptionQuote quote;
    quote.method = PricingMethod::Formula;
    quote.diagnostics.ft_inv_x = w_t;

    double d = -kInf;
    if (opt.strike > 0.0) {
        const double w_k = checked_inverse(rn, opt.maturity, opt.strike, "strike");
        quote.diagnostics.fT_inv_K = w_k;
        d = (w_k - w_t) / root_tau;
        quote.diagnostics.d = d;
    }

    const double lower = std::max(d, -kFormulaTailWidth);
    double upper = std::max(d, 0.0) + kFormulaTailWidth;
    const double boundary = explosion_boundary(rn, opt.maturity);
    if (std::isfinite(boundary)) {
        const double z_boundary = (boundary - w_t) / root_tau;
        if (z_boundary < upper) {
            upper = std::max(z_boundary, lower);
            quote.diagnostics.truncated_at_explosion = true;
        }
    }
    quote.diagnostics.upper_limit = upper;

    const auto integrand = [&](double z) {
        const auto value = try_forward(rn, opt.maturity, w_t + root_tau * z);
        return value ? discount * *value * norm_pdf(z) : 0.0;
    };
    const QuadratureResult integral = integrate_adaptive(integrand, lower, upper, abs_tol, 20000);

    const double strike_term = opt.strike > 0.0 ? opt.strike * discount * norm_cdf(-d) : 0.0;
    quote.price = std::max(integral.value - strike_term, 0.0);
    quote.error_estimate = integral.converged ? abs_tol : std::max(abs_tol, integral.error_estimate);
    quote.diagnostics.nodes_or_paths = integral.evaluations;
    quote.diagnostics.converged = integral.converged;
    return quote;
}

OptionQuote price_mc(const RiskNeutralParams& rn, const OptionSpec& opt, std::size_t n_paths,
                     std::size_t steps, std::uint64_t seed) {
    validate_option(opt);
    const double x = opt.spot_or(rn.s0);
    const ModelParams dynamics{rn.rate, rn.sigma, rn.c1, x};
    check_simulation_params(dynamics);
    const double tau = opt.maturity - opt.valuation_time;
    if (!(tau > 0.0)) throw Error(ErrorCode::InvalidOption, "Monte Carlo pricing needs T > t");
    if (n_paths < 2) throw Error(ErrorCode::InvalidArgument, "Monte Carlo needs at least two paths");

    const TerminalSample sample =
        simulate_terminal(dynamics, make_grid(tau, steps), n_paths, seed, Scheme::Euler);
    const double discount = std::exp(-rn.rate * tau);

    // Welford over the surviving paths.
    double mean = 0.0, m2 = 0.0;
    std::size_t used = 0;
    for (std::size_t p = 0; p < n_paths; ++p) {
        if (sample.exploded[p]) continue;
        const double payoff = discount * std::max(sample.values[p] - opt.strike, 0.0);
        ++used;
        const double delta = payoff - mean;
        mean += delta / static_cast<double>(used);
        m2 += delta * (payoff - mean);
    }
    if (used < 2) throw Error(ErrorCode::ExplosionRegion, "fewer than two paths survived");

    OptionQuote quote;
    quote.method = PricingMethod::MonteCarlo;
    quote.price = mean;
    quote.error_estimate = std::sqrt(m2 / static_cast<double>(used - 1) / static_cast<double>(used));
    quote.diagnostics.nodes_or_paths = n_paths;
    quote.diagnostics.exploded_fraction =
        static_cast<double>(sample.exploded_count) / static_cast<double>(n_paths);
    return quote;
}

OptionQuote price_bs(double s, double strike, double tau, double rate, double sigma) {
    if (!(s > 0.0) || !(sigma > 0.0) || !(tau > 0.0) || !(strike >= 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "Black-Scholes needs s > 0, sigma > 0, tau > 0, K >= 0");
    }
    OptionQuote quote;
    quote.method = PricingMethod::BlackScholes;
    if (strike == 0.0) {
        quote.price = s;
        return quote;
    }
    const double vol_root = sigma * std::sqrt(tau);
    const double d1 = (std::log(s / strike) + (rate + 0.5 * sigma * sigma) * tau) / vol_root;
    const double d2 = d1 - vol_root;
    quote.price = s * norm_cdf(d1) - strike * std::exp(-rate * tau) * norm_cdf(d2);
    quote.diagnostics.d = d2;
    return quote;
}

double bs_delta(double s, double strike, double tau, double rate, double sigma) {
    if (strike == 0.0) return 1.0;
    const double vol_root = sigma * std::sqrt(tau);
    return norm_cdf((std::log(s / strike) + (rate + 0.5 * sigma * sigma) * tau) / vol_root);
}

Greeks greeks_bump(const Pricer& pricer, const RiskNeutralParams& rn, const OptionSpec& opt,
                   const BumpSizes& bumps) {
    const double x = opt.spot_or(rn.s0);
    const double h = bumps.spot_relative * x;
    const double hs = bumps.sigma_absolute;
    if (!(h > 0.0) || !(hs > 0.0) || !(rn.sigma > hs)) {
        throw Error(ErrorCode::InvalidArgument, "bump sizes must be positive and smaller than sigma");
    }
    auto at_spot = [&](double dx) {
        RiskNeutralParams shifted = rn;
        OptionSpec spec = opt;
        if (opt.valuation_time == 0.0) {
            shifted.s0 = rn.s0 + dx;
            if (opt.spot) spec.spot = *opt.spot + dx;
        } else {
            spec.spot = x + dx;
        }
        return pricer(shifted, spec).price;
    };
    auto at_sigma = [&](double ds) {
        RiskNeutralParams shifted = rn;
        shifted.sigma += ds;
        return pricer(shifted, opt).price;
    };
    const double up = at_spot(h);
    const double mid = at_spot(0.0);
    const double down = at_spot(-h);
    Greeks greeks;
    greeks.delta = (up - down) / (2.0 * h);
    greeks.gamma = (up - 2.0 * mid + down) / (h * h);
    greeks.vega = (at_sigma(hs) - at_sigma(-hs)) / (2.0 * hs);
    greeks.spot_bump = h;
    greeks.sigma_bump = hs;
    return greeks;
}

}  // namespace vve
