// SPDX-License-Identifier: MIT
/**
 * @file pricing.hpp
 * @brief European calls under the risk-neutral VVE dynamics
 *        dS = S[r dt + (sigma + c1 S) dB*].
 *
 * Three pricers:
 *  - price_formula: the explicit representation
 *        C(t, x) = e^{-r tau} E[f_T(w_t + sqrt(tau) Z) 1{Z > d}] - K e^{-r tau} (1 - N(d))
 *    where f_T maps a Brownian value to a price through the closed-form
 *    solution, w_t = f_t^{-1}(x) and d = (f_T^{-1}(K) - w_t) / sqrt(tau).
 *    The first term equals sigma S0 e^{-r tau} E[g(Z) 1{Z > d}] with
 *    g = f_T / (sigma S0); it is integrated by adaptive Gauss-Kronrod.
 *  - price_mc: Euler Monte Carlo from sde.hpp, independent of the closed form.
 *  - price_bs: Black-Scholes, the c1 = 0 reference.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "vve/model.hpp"

namespace vve {

inline constexpr double kFormulaTolerance = 1e-10;
/// Standard deviations of Z integrated beyond max(d, 0).
inline constexpr double kFormulaTailWidth = 12.0;

struct RiskNeutralParams {
    double sigma = 0.0;
    double c1 = 0.0;
    double s0 = 1.0;
    double rate = 0.0;

    double gamma() const { return rate - 0.5 * sigma * sigma; }
    /// delta = r / (r - sigma^2/2)
    double delta() const { return rate / gamma(); }
    ModelParams as_model() const { return ModelParams{rate, sigma, c1, s0}; }
};

struct OptionSpec {
    double strike = 0.0;
    double maturity = 1.0;          ///< T, years from the path origin
    double valuation_time = 0.0;    ///< t, 0 <= t <= T
    std::optional<double> spot;     ///< S_t; defaults to s0

    double spot_or(double s0) const { return spot.value_or(s0); }
};

enum class PricingMethod { Formula, MonteCarlo, BlackScholes };

std::string_view to_string(PricingMethod method);
/// Accepts "formula", "mc" / "monte_carlo", "bs" / "black_scholes".
PricingMethod parse_method(std::string_view name);

struct QuoteDiagnostics {
    std::optional<double> d;
    std::optional<double> ft_inv_x;   ///< w_t
    std::optional<double> fT_inv_K;   ///< f_T^{-1}(K)
    std::optional<double> upper_limit;
    std::size_t nodes_or_paths = 0;
    double exploded_fraction = 0.0;
    bool converged = true;
    bool truncated_at_explosion = false;
};

struct OptionQuote {
    double price = 0.0;
    PricingMethod method = PricingMethod::Formula;
    double error_estimate = 0.0;
    QuoteDiagnostics diagnostics;
};

/// Throws SigmaZeroUnsupported, SingularDelta (|r - sigma^2/2| < kGammaTol),
/// NonPositiveSpot or NegativeCoefficient.
void validate_risk_neutral(const RiskNeutralParams& rn);
/// Throws InvalidOption unless strike >= 0, 0 <= t <= T and spot > 0.
void validate_option(const OptionSpec& opt);

/// f_t(w). Throws ExplosionRegion where the denominator is at or below
/// 1e-10 * (sigma + c1 s0).
double forward_map(const RiskNeutralParams& rn, double t, double w);

/// Largest w for which forward_map(rn, t, w) is defined; +inf when unbounded.
double explosion_boundary(const RiskNeutralParams& rn, double t);

/// Numeric inverse of forward_map: bracketing bisection then secant polish to
/// |f_t(w) - x| / x <= 1e-12. Throws OutOfRange when x is not attained.
double inverse_map(const RiskNeutralParams& rn, double t, double x);

/// Printed closed form
///   (1/sigma) ln[((delta - 1) e^{gamma t} - delta) c1 x / sigma] - gamma t / sigma.
/// nullopt where the logarithm's argument is not positive. Kept for
/// cross-checking only.
std::optional<double> printed_inverse_map(const RiskNeutralParams& rn, double t, double x);

struct InverseComparison {
    double x = 0.0;
    double numeric = 0.0;
    std::optional<double> printed;
    std::optional<double> difference;  ///< printed - numeric
};

std::vector<InverseComparison> compare_inverse_forms(const RiskNeutralParams& rn, double t,
                                                     const std::vector<double>& prices);

/// Explicit formula. T == t returns (x - K)^+; K == 0 integrates the whole line.
OptionQuote price_formula(const RiskNeutralParams& rn, const OptionSpec& opt,
                          double abs_tol = kFormulaTolerance);

/// Euler Monte Carlo of the risk-neutral SDE from (t, x) to T. sigma = c1 = 0
/// is accepted (deterministic growth). Requires T > t.
OptionQuote price_mc(const RiskNeutralParams& rn, const OptionSpec& opt, std::size_t n_paths,
                     std::size_t steps, std::uint64_t seed);

/// Black-Scholes call. K == 0 returns s.
OptionQuote price_bs(double s, double strike, double tau, double rate, double sigma);

/// Analytic Black-Scholes delta N(d1).
double bs_delta(double s, double strike, double tau, double rate, double sigma);

double norm_cdf(double x);
double norm_pdf(double x);

using Pricer = std::function<OptionQuote(const RiskNeutralParams&, const OptionSpec&)>;

struct BumpSizes {
    double spot_relative = 1e-3;  ///< h = spot_relative * spot
    double sigma_absolute = 1e-4;
};

struct Greeks {
    double delta = 0.0;
    double gamma = 0.0;
    double vega = 0.0;
    double spot_bump = 0.0;
    double sigma_bump = 0.0;
};

/// Central differences. At t == 0 the spot bump moves s0 (and spot); at t > 0
/// only the spot. Wrap price_mc with a fixed seed for common random numbers.
Greeks greeks_bump(const Pricer& pricer, const RiskNeutralParams& rn, const OptionSpec& opt,
                   const BumpSizes& bumps = {});

}  // namespace vve
