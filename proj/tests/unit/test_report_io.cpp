#include "qaskey/report_io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qaskey;

namespace {

ConvergenceReport sample_report() {
  LimitDescriptor d = make_limit_descriptor("qhahn-littleqjacobi");
  std::vector<Real50> path;
  for (int N = 10; N <= 20; N += 2) {
    path.push_back(Real50(N));
  }
  return convergence_sweep<Real50>(d, 4, default_grid<Real50>(d), path);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("CSV header and round trip") {
  ConvergenceReport r = sample_report();
  std::string csv = to_csv(r);
  CHECK(csv.rfind("h,sup_error,grid_points,precision_digits\n", 0) == 0);
  std::vector<ConvergenceRow> rows = parse_csv(csv);
  REQUIRE(rows.size() == r.rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].h == r.rows[i].h);
    CHECK(rows[i].sup_error == r.rows[i].sup_error);
    CHECK(rows[i].grid_points == r.rows[i].grid_points);
    CHECK(rows[i].precision_digits == 50);
  }
  CHECK(to_csv(ConvergenceReport{r.limit, r.path, r.grid, rows, 0, 0, 0, {}}) == csv);
}

TEST_CASE("malformed CSV") {
  CHECK_THROWS_AS(parse_csv("N,err\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("h,sup_error,grid_points,precision_digits\n1,2,3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_csv("h,sup_error,grid_points,precision_digits\n1,2,x,4\n"), std::invalid_argument);
}

TEST_CASE("JSON report carries the fit and the rows") {
  ConvergenceReport r = sample_report();
  auto doc = nlohmann::json::parse(to_json(r));
  CHECK(doc["limit"] == "qhahn-littleqjacobi");
  CHECK(doc["path_kind"] == "geometric_N");
  CHECK(doc["rows"].size() == r.rows.size());
  CHECK(doc["fitted_order"].get<double>() == doctest::Approx(r.fitted_order));
  CHECK(doc.contains("fit_residual"));
  CHECK(doc.contains("grid"));
  CHECK(doc["monotone_from"] == 0);
}

TEST_CASE("sweeps are deterministic") {
  CHECK(to_csv(sample_report()) == to_csv(sample_report()));
  CHECK(to_json(sample_report()) == to_json(sample_report()));
}

TEST_CASE("atomic file output") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "qaskey_report_io_test";
  fs::create_directories(dir);
  fs::path target = dir / "out.csv";
  write_file_atomic(target.string(), "first\n");
  write_file_atomic(target.string(), "second\n");
  CHECK(slurp(target) == "second\n");
  CHECK_FALSE(fs::exists(dir / "out.csv.tmp"));
  CHECK_THROWS(write_file_atomic((dir / "missing" / "x.csv").string(), "x"));
  fs::remove_all(dir);
}
