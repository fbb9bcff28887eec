// SPDX-License-Identifier: MIT
#include "vve/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "vve/error.hpp"

namespace vve {

namespace {

// Kronrod abscissae on [0, 1); odd indices are the Gauss-7 nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = kKronrodWeights[7] * fc;
    double gauss = kGaussWeights[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kNodes[j];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[j] * pair;
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
    }
    return Panel{a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, std::size_t max_intervals) {
    if (!(abs_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "quadrature tolerance must be > 0");
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw Error(ErrorCode::InvalidArgument, "quadrature limits must be finite");
    }
    QuadratureResult result;
    if (a == b) {
        result.converged = true;
        return result;
    }

    std::priority_queue<Panel> panels;
    panels.push(gauss_kronrod(f, a, b));
    result.evaluations = 15;
    double total_error = panels.top().error;

    while (total_error > abs_tol && panels.size() < max_intervals) {
        const Panel worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            panels.push(worst);  // interval no longer splittable in double precision
            break;
        }
        const Panel left = gauss_kronrod(f, worst.a, mid);
        const Panel right = gauss_kronrod(f, mid, worst.b);
        result.evaluations += 30;
        total_error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    // Re-sum from scratch to avoid drift in the running totals.
    result.intervals = panels.size();
    result.value = 0.0;
    result.error_estimate = 0.0;
    std::vector<Panel> final_panels;
    final_panels.reserve(panels.size());
    while (!panels.empty()) {
        final_panels.push_back(panels.top());
        panels.pop();
    }
    // Sum small panels first for a deterministic, well-conditioned total.
    for (auto it = final_panels.rbegin(); it != final_panels.rend(); ++it) {
        result.value += it->value;
        result.error_estimate += it->error;
    }
    result.converged = result.error_estimate <= abs_tol;
    return result;
}

}  // namespace vve
