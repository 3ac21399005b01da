#include "qaskey/report_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qaskey {

namespace {

constexpr std::string_view kCsvHeader = "h,sup_error,grid_points,precision_digits";

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t end = line.find(sep, start);
    parts.emplace_back(line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) {
      return parts;
    }
    start = end + 1;
  }
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int value = std::stoi(text, &used);
  if (used != text.size()) {
    throw std::invalid_argument("malformed integer '" + text + "'");
  }
  return value;
}

}  // namespace

std::string to_csv(const ConvergenceReport& report) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const ConvergenceRow& row : report.rows) {
    out << format_scientific(row.h, row.precision_digits) << ','
        << format_scientific(row.sup_error, row.precision_digits) << ',' << row.grid_points << ','
        << row.precision_digits << '\n';
  }
  return out.str();
}

std::vector<ConvergenceRow> parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::invalid_argument("CSV header must be '" + std::string(kCsvHeader) + "'");
  }
  std::vector<ConvergenceRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    std::vector<std::string> cells = split(line, ',');
    if (cells.size() != 4) {
      throw std::invalid_argument("CSV row needs 4 cells: '" + line + "'");
    }
    try {
      rows.push_back({parse_decimal<Real100>(cells[0]), parse_decimal<Real100>(cells[1]), parse_int(cells[2]),
                      parse_int(cells[3])});
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("CSV cell out of range in '" + line + "'");
    }
  }
  return rows;
}

std::string to_json(const ConvergenceReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ConvergenceRow& row : report.rows) {
    rows.push_back({{"h", format_scientific(row.h, row.precision_digits)},
                    {"sup_error", format_scientific(row.sup_error, row.precision_digits)},
                    {"grid_points", row.grid_points},
                    {"precision_digits", row.precision_digits}});
  }
  nlohmann::json doc = {
      {"limit", report.limit},
      {"path_kind", to_string(report.path)},
      {"grid", report.grid},
      {"fitted_order", report.fitted_order},
      {"fit_constant", report.fit_constant},
      {"fit_residual", report.fit_residual},
      {"rows", rows},
  };
  if (report.monotone_from) {
    doc["monotone_from"] = *report.monotone_from;
  }
  return doc.dump(2) + "\n";
}

void write_file_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open '" + temp.string() + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      throw std::runtime_error("write to '" + temp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp);
    throw std::runtime_error("cannot move output into '" + path + "': " + ec.message());
  }
}

}  // namespace qaskey
