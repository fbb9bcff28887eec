// SPDX-License-Identifier: MIT
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "test_support.hpp"
#include "vve/sde.hpp"

using namespace vve;
using vve::test::code_of;

namespace {

const ModelParams kVve{0.05, 0.2, 0.0005, 100.0};
const ModelParams kGbm{0.05, 0.2, 0.0, 100.0};

double gbm_value(const ModelParams& p, double t, double b) {
    return p.s0 * std::exp((p.mu - 0.5 * p.sigma * p.sigma) * t + p.sigma * b);
}

}  // namespace

TEST(TimeGridTest, RejectsInvalidGrids) {
    EXPECT_EQ(code_of([] { make_grid(0.0, 10); }), ErrorCode::InvalidGrid);
    EXPECT_EQ(code_of([] { make_grid(-1.0, 10); }), ErrorCode::InvalidGrid);
    EXPECT_EQ(code_of([] { make_grid(1.0, 0); }), ErrorCode::InvalidGrid);
    const TimeGrid g = make_grid(2.0, 8);
    EXPECT_DOUBLE_EQ(g.dt(), 0.25);
    EXPECT_DOUBLE_EQ(g.time(8), 2.0);
}

TEST(SampleBrownianTest, Deterministic) {
    const TimeGrid g = make_grid(1.0, 64);
    const BrownianPath a = sample_brownian(g, 42, 0);
    const BrownianPath b = sample_brownian(g, 42, 0);
    EXPECT_EQ(a.increments, b.increments);
    EXPECT_EQ(a.cumulative, b.cumulative);
    EXPECT_NE(a.increments, sample_brownian(g, 42, 1).increments);
}

TEST(SampleBrownianTest, CumulativeIsExactPartialSum) {
    const BrownianPath b = sample_brownian(make_grid(1.0, 100), 3, 9);
    ASSERT_EQ(b.increments.size(), 100u);
    ASSERT_EQ(b.cumulative.size(), 101u);
    EXPECT_EQ(b.cumulative[0], 0.0);
    double sum = 0.0;
    for (std::size_t k = 0; k < 100; ++k) {
        sum += b.increments[k];
        EXPECT_EQ(b.cumulative[k + 1], sum);
    }
}

TEST(SampleBrownianTest, TerminalValueFollowsNormalLaw) {
    constexpr std::size_t n = 100000;
    const double horizon = 1.0;
    const TimeGrid g = make_grid(horizon, 4);
    double sum = 0.0, sum2 = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
        const double bt = sample_brownian(g, 42, p).cumulative.back();
        sum += bt;
        sum2 += bt * bt;
    }
    const double mean = sum / n;
    EXPECT_LT(std::abs(mean), 4.0 * std::sqrt(horizon / n));
    // Var of the sample second moment is 2 T^2 / n.
    EXPECT_NEAR(sum2 / n, horizon, 4.0 * std::sqrt(2.0 / n) * horizon);
}

TEST(CoarsenTest, PairwiseSums) {
    const BrownianPath fine = sample_brownian(make_grid(1.0, 64), 5, 2);
    const BrownianPath coarse = coarsen(fine, 2);
    ASSERT_EQ(coarse.grid.steps, 32u);
    for (std::size_t k = 0; k < 32; ++k) {
        EXPECT_EQ(coarse.increments[k], fine.increments[2 * k] + fine.increments[2 * k + 1]);
    }
    EXPECT_NEAR(coarse.cumulative.back(), fine.cumulative.back(), 1e-14);
    EXPECT_EQ(code_of([&] { coarsen(fine, 3); }), ErrorCode::InvalidGrid);
}

TEST(SimulateTest, ShapeAndInitialColumn) {
    const PathEnsemble e = simulate_euler(kVve, make_grid(1.0, 252), 50, 7);
    EXPECT_EQ(e.n_paths, 50u);
    EXPECT_EQ(e.columns(), 253u);
    EXPECT_EQ(e.values.size(), 50u * 253u);
    for (std::size_t p = 0; p < 50; ++p) EXPECT_EQ(e.at(p, 0), 100.0);
}

TEST(SimulateTest, ZeroDriftAndDiffusionGiveConstantPaths) {
    const ModelParams flat{0.0, 0.0, 0.0, 37.5};
    for (Scheme scheme : {Scheme::Euler, Scheme::Milstein}) {
        const PathEnsemble e = simulate(flat, make_grid(1.0, 20), 10, 1, scheme);
        for (double v : e.values) EXPECT_EQ(v, 37.5);
    }
}

TEST(SimulateTest, DeterministicUnderSeed) {
    for (Scheme scheme : {Scheme::Euler, Scheme::Milstein, Scheme::Exact}) {
        const PathEnsemble a = simulate(kVve, make_grid(1.0, 50), 200, 99, scheme);
        const PathEnsemble b = simulate(kVve, make_grid(1.0, 50), 200, 99, scheme);
        EXPECT_EQ(a.values, b.values) << to_string(scheme);
        EXPECT_EQ(a.exploded, b.exploded);
    }
}

// Every ensemble path is the single-path scheme applied to sample_brownian(seed, p),
// so the result does not depend on how paths are distributed over threads.
TEST(SimulateTest, PathsMatchSinglePathSchemes) {
    const TimeGrid g = make_grid(1.0, 40);
    const PathEnsemble euler = simulate_euler(kVve, g, 3000, 11);
    const PathEnsemble milstein = simulate_milstein(kVve, g, 3000, 11);
    const PathEnsemble exact = simulate_exact(kVve, g, 3000, 11);
    for (std::size_t p : {0u, 1u, 1023u, 1024u, 2999u}) {
        const BrownianPath b = sample_brownian(g, 11, p);
        const auto ep = euler.path(p);
        const auto mp = milstein.path(p);
        const auto xp = exact.path(p);
        EXPECT_TRUE(std::equal(ep.begin(), ep.end(), euler_path(kVve, b).begin()));
        EXPECT_TRUE(std::equal(mp.begin(), mp.end(), milstein_path(kVve, b).begin()));
        EXPECT_TRUE(std::equal(xp.begin(), xp.end(), exact_path(kVve, b).values.begin()));
    }
}

TEST(SimulateTest, TerminalSampleMatchesFullEnsemble) {
    const TimeGrid g = make_grid(1.0, 30);
    for (Scheme scheme : {Scheme::Euler, Scheme::Milstein, Scheme::Exact}) {
        const PathEnsemble e = simulate(kVve, g, 500, 4, scheme);
        const TerminalSample t = simulate_terminal(kVve, g, 500, 4, scheme);
        for (std::size_t p = 0; p < 500; ++p) EXPECT_EQ(t.values[p], e.at(p, 30));
        EXPECT_EQ(t.exploded, e.exploded);
    }
}

TEST(SimulateEulerTest, GbmMeanMatchesExpectation) {
    constexpr std::size_t n = 100000;
    const TerminalSample t = simulate_terminal(kGbm, make_grid(1.0, 50), n, 2024, Scheme::Euler);
    double sum = 0.0, sum2 = 0.0;
    for (double v : t.values) {
        sum += v;
        sum2 += v * v;
    }
    const double mean = sum / n;
    const double se = std::sqrt((sum2 / n - mean * mean) / (n - 1));
    EXPECT_LT(std::abs(mean - 100.0 * std::exp(0.05)), 4.0 * se);
}

TEST(SimulateMilsteinTest, GbmCorrectionMatchesClassicalScheme) {
    const BrownianPath b = sample_brownian(make_grid(1.0, 16), 8, 0);
    const std::vector<double> path = milstein_path(kGbm, b);
    const double dt = b.grid.dt();
    double s = kGbm.s0;
    for (std::size_t k = 0; k < 16; ++k) {
        const double db = b.increments[k];
        s = s + kGbm.mu * s * dt + kGbm.sigma * s * db +
            0.5 * kGbm.sigma * kGbm.sigma * s * (db * db - dt);
        EXPECT_NEAR(path[k + 1], s, 1e-12 * s);
    }
}

TEST(TruncationTest, PricesNonnegativeAndZeroAbsorbing) {
    const ModelParams wild{0.0, 3.0, 0.05, 1.0};
    std::size_t absorbed = 0;
    for (Scheme scheme : {Scheme::Euler, Scheme::Milstein}) {
        const PathEnsemble e = simulate(wild, make_grid(1.0, 8), 2000, 3, scheme);
        for (std::size_t p = 0; p < e.n_paths; ++p) {
            bool hit = false;
            for (std::size_t k = 0; k < e.columns(); ++k) {
                const double v = e.at(p, k);
                EXPECT_GE(v, 0.0);
                if (hit) EXPECT_EQ(v, 0.0);
                hit = hit || v == 0.0;
            }
            absorbed += hit ? 1 : 0;
        }
    }
    EXPECT_GT(absorbed, 0u);
}

TEST(ExactPathTest, StartsAtSpot) {
    EXPECT_EQ(*exact_value(kVve, 0.0, 0.0), 100.0);
    const ExactPath x = exact_path(kVve, sample_brownian(make_grid(1.0, 10), 1, 0));
    EXPECT_EQ(x.values[0], 100.0);
}

TEST(ExactPathTest, GbmCollapse) {
    EXPECT_NEAR(*exact_value(kGbm, 1.0, 0.0), 100.0 * std::exp(0.03), 1e-12);
    EXPECT_NEAR(*exact_value(kGbm, 1.0, 0.0), 103.0455, 5e-5);
    for (std::uint64_t p = 0; p < 20; ++p) {
        const BrownianPath b = sample_brownian(make_grid(1.0, 64), 17, p);
        const ExactPath x = exact_path(kGbm, b);
        ASSERT_FALSE(x.exploded);
        for (std::size_t k = 0; k <= 64; ++k) {
            const double ref = gbm_value(kGbm, b.grid.time(k), b.cumulative[k]);
            EXPECT_LE(std::abs(x.values[k] - ref), 1e-12 * ref);
        }
    }
}

TEST(ExactPathTest, Errors) {
    const BrownianPath b = sample_brownian(make_grid(1.0, 4), 1, 0);
    EXPECT_EQ(code_of([&] { exact_path({0.05, 0.0, 0.001, 100.0}, b); }), ErrorCode::SigmaZeroUnsupported);
    EXPECT_EQ(code_of([&] { exact_path({0.02, 0.2, 0.001, 100.0}, b); }), ErrorCode::GammaNearZero);
}

TEST(ExactPathTest, ExplosionIsFlaggedWithSentinel) {
    // c1 * s0 = 1 puts the asymptote at B of order 1.
    const ModelParams hot{0.05, 0.2, 0.01, 100.0};
    const PathEnsemble e = simulate_exact(hot, make_grid(1.0, 100), 500, 5);
    EXPECT_GT(e.exploded_count(), 0u);
    EXPECT_LT(e.exploded_count(), 500u);
    for (std::size_t p = 0; p < e.n_paths; ++p) {
        if (!e.exploded[p]) continue;
        const auto path = e.path(p);
        const auto first = std::find(path.begin(), path.end(), kExplodedSentinel);
        ASSERT_NE(first, path.end());
        EXPECT_TRUE(std::all_of(first, path.end(), [](double v) { return v == kExplodedSentinel; }));
    }
    const EnsembleSummary s = summarize(e);
    EXPECT_DOUBLE_EQ(s.exploded_fraction, e.exploded_fraction());
    EXPECT_EQ(s.live_paths, 500u - e.exploded_count());
    for (double m : s.mean) EXPECT_TRUE(std::isfinite(m));
}

// Pathwise check of the closed form against a fine Euler discretization of the
// same Brownian path.
TEST(ExactPathTest, AgreesWithRefinedEuler) {
    const TimeGrid fine = make_grid(1.0, 1u << 14);
    double worst = 0.0;
    for (std::uint64_t p = 0; p < 20; ++p) {
        const BrownianPath b = sample_brownian(fine, 2718, p);
        const ExactPath x = exact_path(kVve, b);
        if (x.exploded) continue;
        const std::vector<double> e = euler_path(kVve, b);
        worst = std::max(worst, std::abs(x.values.back() - e.back()));
    }
    EXPECT_LE(worst, 0.1);
}

TEST(SummarizeTest, MeanAndQuantiles) {
    const PathEnsemble e = simulate_euler(kVve, make_grid(1.0, 5), 101, 6);
    const EnsembleSummary s = summarize(e);
    ASSERT_EQ(s.mean.size(), 6u);
    std::vector<double> last;
    for (std::size_t p = 0; p < 101; ++p) last.push_back(e.at(p, 5));
    std::sort(last.begin(), last.end());
    EXPECT_NEAR(s.mean[5], std::accumulate(last.begin(), last.end(), 0.0) / 101.0, 1e-12);
    EXPECT_EQ(s.q50[5], last[50]);
    EXPECT_EQ(s.q05[5], last[5]);
    EXPECT_EQ(s.q95[5], last[95]);
    EXPECT_LE(s.q05[5], s.q50[5]);
}

TEST(StrongConvergenceTest, GbmOrders) {
    std::vector<double> levels;
    for (int k = 6; k <= 11; ++k) levels.push_back(std::ldexp(1.0, -k));
    const ConvergenceReport euler = strong_convergence(kGbm, 1.0, levels, 1000, 1, Scheme::Euler);
    const ConvergenceReport milstein = strong_convergence(kGbm, 1.0, levels, 1000, 1, Scheme::Milstein);
    EXPECT_GE(euler.fitted_slope, 0.35);
    EXPECT_LE(euler.fitted_slope, 0.65);
    EXPECT_GE(milstein.fitted_slope, 0.8);
    EXPECT_LE(milstein.fitted_slope, 1.2);
    for (double err : euler.strong_errors) EXPECT_GE(err, 0.0);
    EXPECT_LT(euler.strong_errors.back(), euler.strong_errors.front());
    EXPECT_LT(milstein.strong_errors.back(), milstein.strong_errors.front());
}

TEST(StrongConvergenceTest, RefinedEulerReferenceDecreases) {
    const std::vector<double> levels{1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128};
    const ConvergenceReport r = strong_convergence(kVve, 1.0, levels, 300, 2, Scheme::Euler,
                                                   ConvergenceReference::RefinedEuler, 16);
    EXPECT_EQ(r.reference, ConvergenceReference::RefinedEuler);
    EXPECT_LT(r.strong_errors.back(), r.strong_errors.front());
    EXPECT_GT(r.fitted_slope, 0.0);
}

TEST(StrongConvergenceTest, RejectsBadLevels) {
    const std::vector<double> increasing{1.0 / 32, 1.0 / 16};
    const std::vector<double> non_nested{1.0 / 4, 1.0 / 6};
    const std::vector<double> single{1.0 / 4};
    EXPECT_EQ(code_of([&] { strong_convergence(kGbm, 1.0, increasing, 10, 1, Scheme::Euler); }),
              ErrorCode::InvalidGrid);
    EXPECT_EQ(code_of([&] { strong_convergence(kGbm, 1.0, non_nested, 10, 1, Scheme::Euler); }),
              ErrorCode::InvalidGrid);
    EXPECT_EQ(code_of([&] { strong_convergence(kGbm, 1.0, single, 10, 1, Scheme::Euler); }),
              ErrorCode::InvalidArgument);
}

TEST(LeastSquaresSlopeTest, RecoversLine) {
    const std::vector<double> x{-6, -7, -8, -9};
    const std::vector<double> y{-2.5, -3.0, -3.5, -4.0};
    EXPECT_NEAR(least_squares_slope(x, y), 0.5, 1e-15);
}
