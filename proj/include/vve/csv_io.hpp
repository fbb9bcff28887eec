// SPDX-License-Identifier: MIT
#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "vve/series.hpp"

namespace vve {

/// Reads a `date,close` CSV (header required, comma-delimited). Rows are
/// sorted by date; duplicate dates are rejected. Errors name the offending
/// row (1-based, header is row 1) and column.
MarketSeries ingest_csv(const std::filesystem::path& path);
MarketSeries ingest_csv(std::istream& in, const std::string& source = "<stream>");

void write_series_csv(const std::filesystem::path& path, const MarketSeries& series);

/// Numeric columns of a headed CSV keyed by header name. Non-numeric
/// columns (e.g. dates) are skipped.
std::map<std::string, std::vector<double>> read_numeric_columns(const std::filesystem::path& path);

/// Twelve significant digits, the precision of every number the tools print.
std::string format_number(double value);

/// Rounds to the value format_number prints, for JSON emission.
double round_to_printed(double value);

}  // namespace vve
