#pragma once

#include <string>

#include "ardl/series.hpp"

namespace ardl {

/// Load a monthly dataset from a UTF-8, comma-delimited file with a header
/// row. The date column holds YYYY-MM months; all other columns are numeric.
/// Rows are sorted chronologically; a gap between months is an error.
Dataset load_csv(const std::string& path, const std::string& date_column = "date");

/// Write a dataset in the same layout load_csv reads. Values round-trip
/// exactly (17 significant digits).
void write_csv(const Dataset& d, const std::string& path,
               const std::string& date_column = "date");

}  // namespace ardl
