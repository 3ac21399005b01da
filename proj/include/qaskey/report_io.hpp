#pragma once

/// \file
/// Serialization of convergence reports and atomic file output.

#include "qaskey/limits.hpp"

#include <string>
#include <string_view>

namespace qaskey {

/// Columns exactly `h,sup_error,grid_points,precision_digits`; numbers in
/// scientific notation with precision_digits significant digits.
std::string to_csv(const ConvergenceReport& report);

/// Rows of a CSV written by to_csv. Throws std::invalid_argument on a bad
/// header or malformed row.
std::vector<ConvergenceRow> parse_csv(std::string_view text);

/// The CSV rows plus fitted_order, fit_residual, fit_constant, path_kind,
/// grid and monotone_from. Real numbers of the rows are strings so no
/// digits are lost.
std::string to_json(const ConvergenceReport& report);

/// Writes through a temporary file in the same directory and renames it
/// into place.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace qaskey
