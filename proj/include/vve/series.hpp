// SPDX-License-Identifier: MIT
#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace vve {

/// Calendar date, ISO-8601 on the wire. Metadata only: all model time is
/// measured in trading-day steps.
struct Date {
    int year = 1970;
    int month = 1;
    int day = 1;

    auto operator<=>(const Date&) const = default;
};

/// Parses "YYYY-MM-DD"; throws ParseError on malformed or invalid dates.
Date parse_date(std::string_view text);
std::string to_string(const Date& date);
/// Next Monday-to-Friday date strictly after `date`.
Date next_weekday(const Date& date);

struct MarketSeries {
    std::vector<Date> dates;
    std::vector<double> closes;

    std::size_t size() const { return closes.size(); }
};

/// Checks strictly increasing dates, closes > 0 and length >= 2.
MarketSeries make_series(std::vector<Date> dates, std::vector<double> closes);

}  // namespace vve
