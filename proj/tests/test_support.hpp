// SPDX-License-Identifier: MIT
#pragma once

#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "vve/error.hpp"
#include "vve/sde.hpp"
#include "vve/series.hpp"

namespace vve::test {

/// Runs fn and returns the ErrorCode it throws; records a failure if it does not throw.
template <typename Fn>
ErrorCode code_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected vve::Error";
    return ErrorCode::IoError;
}

/// Consecutive weekdays starting at 2020-01-02.
inline std::vector<Date> weekdays(std::size_t n) {
    std::vector<Date> dates{Date{2020, 1, 2}};
    while (dates.size() < n) dates.push_back(next_weekday(dates.back()));
    return dates;
}

/// Daily closes from path 0 of an Euler ensemble, dt = 1/252.
inline MarketSeries synthetic_series(const ModelParams& params, std::size_t steps, std::uint64_t seed) {
    const PathEnsemble e = simulate_euler(params, make_grid(static_cast<double>(steps) / 252.0, steps), 1, seed);
    const auto path = e.path(0);
    return make_series(weekdays(path.size()), std::vector<double>(path.begin(), path.end()));
}

}  // namespace vve::test
