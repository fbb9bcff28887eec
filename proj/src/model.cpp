// SPDX-License-Identifier: MIT
#include "vve/model.hpp"

#include <cmath>
#include <string>

#include "vve/error.hpp"

namespace vve {

namespace {

void require_nonnegative_price(double s) {
    if (!(s >= 0.0)) {
        throw Error(ErrorCode::NegativePrice, "price must be >= 0, got " + std::to_string(s));
    }
}

}  // namespace

ModelParams validate_params(double mu, double sigma, double c1, double s0) {
    if (!std::isfinite(mu) || !std::isfinite(sigma) || !std::isfinite(c1) || !std::isfinite(s0)) {
        throw Error(ErrorCode::InvalidArgument, "model parameters must be finite");
    }
    if (!(s0 > 0.0)) {
        throw Error(ErrorCode::NonPositiveSpot, "s0 must be > 0, got " + std::to_string(s0));
    }
    if (sigma < 0.0 || c1 < 0.0) {
        throw Error(ErrorCode::NegativeCoefficient, "sigma and c1 must be >= 0");
    }
    if (sigma == 0.0 && c1 == 0.0) {
        throw Error(ErrorCode::DegenerateDiffusion,
                    "sigma = c1 = 0 describes a risk-free asset, not a risky one");
    }
    return ModelParams{mu, sigma, c1, s0};
}

CevParams validate_cev_params(double sigma, double beta) {
    if (!(sigma > 0.0)) {
        throw Error(ErrorCode::InvalidCevParams, "CEV sigma must be > 0");
    }
    if (!(beta > 0.0 && beta <= 2.0)) {
        throw Error(ErrorCode::InvalidCevParams, "CEV beta must lie in (0, 2]");
    }
    return CevParams{sigma, beta};
}

double volatility(const ModelParams& params, double s) {
    require_nonnegative_price(s);
    return params.sigma + params.c1 * s;
}

double elasticity(const ModelParams& params, double s) {
    require_nonnegative_price(s);
    if (params.sigma == 0.0) return 1.0;
    const double level = params.sigma + params.c1 * s;
    return params.c1 * s / level;
}

double elasticity_slope(const ModelParams& params, double s) {
    require_nonnegative_price(s);
    if (params.sigma == 0.0) return 0.0;
    const double level = params.sigma + params.c1 * s;
    return params.c1 * params.sigma / (level * level);
}

double cev_volatility(const CevParams& params, double s) {
    if (!(s > 0.0)) {
        throw Error(ErrorCode::NonPositivePrice, "CEV volatility needs s > 0");
    }
    return params.sigma * std::pow(s, 0.5 * params.beta - 1.0);
}

double riskfree_value(double b0, double r, double t) {
    if (t < 0.0) {
        throw Error(ErrorCode::NegativeTime, "t must be >= 0");
    }
    return b0 * std::exp(r * t);
}

}  // namespace vve
