// SPDX-License-Identifier: MIT
/**
 * @file model.hpp
 * @brief Parameters and pointwise primitives of the variable volatility
 *        elasticity (VVE) price model dS = S[mu dt + (sigma + c1 S) dB].
 *
 * Degenerate corners of the parameterization are admitted:
 *  - c1 == 0            : geometric Brownian motion (zero elasticity)
 *  - sigma == 0, c1 > 0 : constant volatility elasticity, dS = S[mu dt + c1 S dB]
 */

#pragma once

namespace vve {

/// Threshold below which |mu - sigma^2/2| is treated as singular.
inline constexpr double kGammaTol = 1e-8;

struct ModelParams {
    double mu = 0.0;     ///< expected rate of return, per year
    double sigma = 0.0;  ///< base volatility, per sqrt(year)
    double c1 = 0.0;     ///< elasticity coefficient, per price unit per sqrt(year)
    double s0 = 1.0;     ///< initial price

    /// mu - sigma^2/2
    double gamma() const { return mu - 0.5 * sigma * sigma; }
};

struct CevParams {
    double sigma = 0.0;
    double beta = 2.0;  ///< elastic factor, in (0, 2]
};

/// Returns validated parameters or throws vve::Error
/// (NonPositiveSpot, NegativeCoefficient, DegenerateDiffusion).
ModelParams validate_params(double mu, double sigma, double c1, double s0);

CevParams validate_cev_params(double sigma, double beta);

/// Volatility level sigma + c1*s. Throws NegativePrice for s < 0.
double volatility(const ModelParams& params, double s);

/// Derivative of volatility(s) with respect to s (== c1).
inline double volatility_slope(const ModelParams& params) { return params.c1; }

/// Volatility elasticity c1*s / (sigma + c1*s); identically 1 when sigma == 0.
double elasticity(const ModelParams& params, double s);

/// d(elasticity)/ds = c1*sigma / (sigma + c1*s)^2.
double elasticity_slope(const ModelParams& params, double s);

/// CEV comparison volatility sigma * s^(beta/2 - 1). Throws NonPositivePrice for s <= 0.
double cev_volatility(const CevParams& params, double s);

/// Value of the risk-free account b0 * exp(r t). Throws NegativeTime for t < 0.
double riskfree_value(double b0, double r, double t);

}  // namespace vve
