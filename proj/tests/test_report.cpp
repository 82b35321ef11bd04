#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "subsum/errors.hpp"
#include "subsum/instance.hpp"
#include "subsum/report.hpp"

using namespace subsum;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct TempPath {
  std::string path;
  explicit TempPath(const char* name)
      : path((std::filesystem::temp_directory_path() / name).string()) {
    std::remove(path.c_str());
  }
  ~TempPath() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("instance digests are stable and discriminating") {
  const Instance a(5, {1, 2, 3, 4});
  const Instance b(5, {1, 2, 3, 4});
  const Instance c(6, {1, 2, 3, 4});
  CHECK(instance_digest(a) == instance_digest(b));
  CHECK(instance_digest(a) != instance_digest(c));
  CHECK(instance_digest(a).size() == 16);
}

TEST_CASE("run reports round-trip through JSON") {
  RunReport report;
  report.mode = "greedy";
  report.digest = "0123456789abcdef";
  report.n = 8;
  report.target = 24;
  report.outcome = "solution";
  report.solutions.push_back({{4, 5, 7, 8}, {4, 5, 7, 8}});
  report.variance = 3.3333333333333335;
  report.degenerate = false;
  report.rounds_used = 5;
  report.wall_ms = 0.42;
  report.ops = 37;
  report.config = {{"round_bound", 8}};
  report.seed = 11;

  const auto doc = report_to_json(report);
  const RunReport back = report_from_json(doc);
  CHECK(back == report);
  CHECK(report_to_json(back) == doc);

  // Optional fields stay absent for other modes.
  RunReport dp;
  dp.mode = "dp";
  dp.digest = "";
  dp.outcome = "no-solution";
  dp.decision = false;
  const auto dp_doc = report_to_json(dp);
  CHECK_FALSE(dp_doc.contains("variance"));
  CHECK(report_from_json(dp_doc) == dp);
}

TEST_CASE("malformed report JSON is rejected") {
  CHECK_THROWS_AS(report_from_json(nlohmann::json::object()), ParseError);
  auto doc = report_to_json(RunReport{});
  doc.erase("outcome");
  CHECK_THROWS_AS(report_from_json(doc), ParseError);
}

TEST_CASE("bench csv writes one header and appends rows") {
  TempPath tmp("subsum_bench_test.csv");
  ensure_bench_header(tmp.path);
  CHECK(slurp(tmp.path) == std::string(kBenchCsvHeader) + "\n");
  ensure_bench_header(tmp.path);  // idempotent on a non-empty file
  CHECK(slurp(tmp.path) == std::string(kBenchCsvHeader) + "\n");

  BenchRow row;
  row.mode = "dp";
  row.n = 4;
  row.bit_length = 20;
  row.trial = 0;
  row.seed = 123;
  row.outcome = "solution";
  row.millis = 0.25;
  row.ops = 99;
  append_bench_row(tmp.path, row);
  row.trial = 1;
  append_bench_row(tmp.path, row);

  const std::string content = slurp(tmp.path);
  CHECK(content == std::string(kBenchCsvHeader) +
                       "\ndp,4,20,0,123,solution,0.25,99\ndp,4,20,1,123,solution,0.25,99\n");
}
