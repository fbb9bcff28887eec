// SPDX-License-Identifier: MIT
#include "vve/csv_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "vve/error.hpp"

namespace vve {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

std::optional<double> parse_double(std::string_view text) {
    if (text.empty()) return std::nullopt;
    // strtod accepts a wider grammar than from_chars<double> on older toolchains.
    const std::string owned(text);
    char* end = nullptr;
    const double value = std::strtod(owned.c_str(), &end);
    if (end != owned.c_str() + owned.size()) return std::nullopt;
    return value;
}

std::string where(const std::string& source, std::size_t row, std::size_t column) {
    return source + ": row " + std::to_string(row) + ", column " + std::to_string(column);
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
    return in;
}

}  // namespace

MarketSeries ingest_csv(std::istream& in, const std::string& source) {
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, source + ": empty file, header required");
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
    const auto header = split(line);
    if (header.size() != 2 || header[0] != "date" || header[1] != "close") {
        throw Error(ErrorCode::ParseError, where(source, 1, 1) + ": header must be 'date,close'");
    }

    struct Row {
        Date date;
        double close;
        std::size_t line_number;
    };
    std::vector<Row> rows;
    std::size_t row_number = 1;
    while (std::getline(in, line)) {
        ++row_number;
        if (trim(line).empty()) continue;
        const auto fields = split(line);
        if (fields.size() != 2) {
            throw Error(ErrorCode::ParseError, where(source, row_number, fields.size()) +
                                                   ": expected 2 fields, found " +
                                                   std::to_string(fields.size()));
        }
        Date date;
        try {
            date = parse_date(fields[0]);
        } catch (const Error& e) {
            throw Error(ErrorCode::ParseError, where(source, row_number, 1) + ": " + e.what());
        }
        const auto close = parse_double(fields[1]);
        if (!close || !std::isfinite(*close)) {
            throw Error(ErrorCode::ParseError, where(source, row_number, 2) + ": '" +
                                                   std::string(fields[1]) + "' is not a number");
        }
        if (!(*close > 0.0)) {
            throw Error(ErrorCode::NonPositiveClose, where(source, row_number, 2) + ": close " +
                                                         std::string(fields[1]) + " must be > 0");
        }
        rows.push_back({date, *close, row_number});
    }

    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.date < b.date; });
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].date == rows[i - 1].date) {
            throw Error(ErrorCode::DuplicateDate,
                        source + ": date " + to_string(rows[i].date) + " appears on rows " +
                            std::to_string(std::min(rows[i - 1].line_number, rows[i].line_number)) +
                            " and " +
                            std::to_string(std::max(rows[i - 1].line_number, rows[i].line_number)));
        }
    }
    std::vector<Date> dates;
    std::vector<double> closes;
    for (const Row& row : rows) {
        dates.push_back(row.date);
        closes.push_back(row.close);
    }
    return make_series(std::move(dates), std::move(closes));
}

MarketSeries ingest_csv(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    return ingest_csv(in, path.string());
}

void write_series_csv(const std::filesystem::path& path, const MarketSeries& series) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
    out << "date,close\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out << to_string(series.dates[i]) << ',' << format_number(series.closes[i]) << '\n';
    }
}

std::map<std::string, std::vector<double>> read_numeric_columns(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    const std::string source = path.string();
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, source + ": empty file, header required");
    std::vector<std::string> names;
    for (auto field : split(line)) names.emplace_back(field);

    std::vector<std::vector<double>> columns(names.size());
    std::vector<bool> numeric(names.size(), true);
    std::size_t row_number = 1;
    while (std::getline(in, line)) {
        ++row_number;
        if (trim(line).empty()) continue;
        const auto fields = split(line);
        if (fields.size() != names.size()) {
            throw Error(ErrorCode::ParseError, where(source, row_number, fields.size()) +
                                                   ": expected " + std::to_string(names.size()) +
                                                   " fields");
        }
        for (std::size_t c = 0; c < names.size(); ++c) {
            if (!numeric[c]) continue;
            const auto value = parse_double(fields[c]);
            if (value) {
                columns[c].push_back(*value);
            } else {
                numeric[c] = false;
            }
        }
    }
    std::map<std::string, std::vector<double>> out;
    for (std::size_t c = 0; c < names.size(); ++c) {
        if (numeric[c]) out.emplace(names[c], std::move(columns[c]));
    }
    return out;
}

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

double round_to_printed(double value) {
    if (!std::isfinite(value)) return value;
    return std::strtod(format_number(value).c_str(), nullptr);
}

}  // namespace vve
