#include "qaskey/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sstream>

using qaskey::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval prints an x,value table") {
  Run r = run({"eval", "--family", "wilson", "--n", "1", "-p", "a=0.5", "-p", "b=0.5", "-p", "c=0.5", "-p", "d=0.5",
               "--x", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "x,value\n1.00000000000000e+00,-1.50000000000000e+00\n");
}

TEST_CASE("eval on a grid at 50 digits, JSON") {
  Run r = run({"eval", "--family", "jacobi", "--n", "2", "-p", "alpha=0.3", "-p", "beta=0.7", "--grid", "0:1:5",
               "--precision", "50", "--format", "json"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["rows"].size() == 5);
  CHECK(doc["rows"][0]["value"] == "1.0000000000000000000000000000000000000000000000000e+00");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"eval", "--family", "nope", "--n", "1"}).code == 2);
  CHECK(run({"eval", "--family", "hahn", "--n", "1", "-p", "alpha=0.3"}).code == 2);
  CHECK(run({"eval", "--family", "hahn", "--n", "1", "-p", "alpha=0.3", "-p", "beta=0.3", "-p", "N=8", "--precision",
             "101"})
            .code == 2);
  CHECK(run({"eval", "--family", "q-hahn", "--n", "1", "-p", "alpha=0.3", "-p", "beta=0.3", "-p", "N=8", "-p",
             "q=1.5"})
            .code == 2);
  Run deg = run({"eval", "--family", "hahn", "--n", "9", "-p", "alpha=0.3", "-p", "beta=0.3", "-p", "N=8"});
  CHECK(deg.code == 3);
  CHECK(deg.err.find("DegreeExceedsN") != std::string::npos);
  CHECK(run({"limit", "--name", "nope"}).code == 2);
}

TEST_CASE("limit, ortho, recurrence, scheme") {
  Run lim = run({"limit", "--name", "qhahn-littleqjacobi", "--path", "10,12,14,16"});
  CHECK(lim.code == 0);
  CHECK(lim.out.rfind("h,sup_error,grid_points,precision_digits\n", 0) == 0);

  Run ortho = run({"ortho", "-p", "c=1", "-p", "N=8", "-p", "q=0.5", "-p", "alpha=0.3", "-p", "beta=0.3"});
  CHECK(ortho.code == 0);
  CHECK(ortho.out.find("passed,true") != std::string::npos);
  CHECK(run({"ortho", "-p", "c=1", "-p", "N=inf", "-p", "q=0.5", "-p", "alpha=0.3", "-p", "beta=0.3"}).code == 2);

  Run rec = run({"recurrence", "-p", "c=1", "-p", "N=8", "-p", "h=0.5", "-p", "alpha=0.3", "-p", "beta=0.3"});
  CHECK(rec.code == 0);

  Run sch = run({"scheme", "-p", "c=1", "-p", "alpha=0.3", "-p", "beta=0.3", "--k-first", "3", "--k-last", "6",
                 "--tolerance", "1e-1"});
  CHECK(sch.code == 0);
  // the default 1e-8 tolerance is out of reach on a short diagonal
  CHECK(run({"scheme", "-p", "c=1", "-p", "alpha=0.3", "-p", "beta=0.3", "--k-last", "6"}).code == 1);
}

TEST_CASE("precision from the environment") {
  setenv("QASKEY_PRECISION", "30", 1);
  Run r = run({"eval", "--family", "jacobi", "--n", "1", "-p", "alpha=0", "-p", "beta=0", "--x", "0.5"});
  unsetenv("QASKEY_PRECISION");
  CHECK(r.code == 0);
  CHECK(r.out.find("0.000000000000000000000000000") != std::string::npos);
  setenv("QASKEY_PRECISION", "zz", 1);
  CHECK(run({"eval", "--family", "jacobi", "--n", "1", "-p", "alpha=0", "-p", "beta=0", "--x", "0.5"}).code == 2);
  unsetenv("QASKEY_PRECISION");
}
