// SPDX-License-Identifier: MIT
#include "vve/series.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "vve/error.hpp"

namespace vve {

namespace {

std::chrono::year_month_day to_chrono(const Date& d) {
    return std::chrono::year_month_day{std::chrono::year{d.year},
                                       std::chrono::month{static_cast<unsigned>(d.month)},
                                       std::chrono::day{static_cast<unsigned>(d.day)}};
}

int parse_digits(std::string_view text, std::string_view whole) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error(ErrorCode::ParseError, "malformed date '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Date parse_date(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
        throw Error(ErrorCode::ParseError, "expected YYYY-MM-DD, got '" + std::string(text) + "'");
    }
    const Date date{parse_digits(text.substr(0, 4), text), parse_digits(text.substr(5, 2), text),
                    parse_digits(text.substr(8, 2), text)};
    if (!to_chrono(date).ok()) {
        throw Error(ErrorCode::ParseError, "invalid calendar date '" + std::string(text) + "'");
    }
    return date;
}

std::string to_string(const Date& date) {
    char buffer[16];
    std::snprintf(buffer, sizeof buffer, "%04d-%02d-%02d", date.year, date.month, date.day);
    return buffer;
}

Date next_weekday(const Date& date) {
    using namespace std::chrono;
    sys_days day = sys_days{to_chrono(date)} + days{1};
    while (weekday{day} == Saturday || weekday{day} == Sunday) day += days{1};
    const year_month_day ymd{day};
    return Date{static_cast<int>(ymd.year()), static_cast<int>(static_cast<unsigned>(ymd.month())),
                static_cast<int>(static_cast<unsigned>(ymd.day()))};
}

MarketSeries make_series(std::vector<Date> dates, std::vector<double> closes) {
    if (dates.size() != closes.size()) {
        throw Error(ErrorCode::InvalidArgument, "dates and closes differ in length");
    }
    if (closes.size() < 2) {
        throw Error(ErrorCode::SeriesTooShort, "a market series needs at least two closes");
    }
    for (std::size_t i = 0; i < closes.size(); ++i) {
        if (!(closes[i] > 0.0) || !std::isfinite(closes[i])) {
            throw Error(ErrorCode::NonPositiveClose,
                        "close on " + to_string(dates[i]) + " must be > 0");
        }
        if (i > 0 && !(dates[i - 1] < dates[i])) {
            throw Error(ErrorCode::InvalidArgument, "dates must be strictly increasing");
        }
    }
    return MarketSeries{std::move(dates), std::move(closes)};
}

}  // namespace vve
