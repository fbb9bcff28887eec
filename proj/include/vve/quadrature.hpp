// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <functional>

namespace vve {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  ///< sum of |K15 - G7| over the final partition
    std::size_t evaluations = 0;
    std::size_t intervals = 0;
    bool converged = false;
};

/// Globally adaptive 7/15-point Gauss-Kronrod on [a, b]. The interval with the
/// largest local error is bisected until the summed error estimate drops below
/// abs_tol or max_intervals is reached.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, std::size_t max_intervals = 2000);

}  // namespace vve
