#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "subsum/instance.hpp"

namespace subsum {

// One solution as plain data for serialization.
struct SolutionRecord {
  std::vector<std::size_t> indices;
  std::vector<std::int64_t> values;

  friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
};

// Machine-readable record of one solver run.
struct RunReport {
  std::string mode;
  std::string digest;  // instance digest, hex
  std::size_t n = 0;
  std::int64_t target = 0;
  // One of: solution, no-solution, failure, timeout.
  std::string outcome;
  std::vector<SolutionRecord> solutions;
  std::optional<bool> decision;  // dp mode
  std::optional<double> variance;
  std::optional<bool> degenerate;
  std::optional<std::uint64_t> rounds_used;
  bool truncated = false;
  bool timed_out = false;
  double wall_ms = 0.0;
  std::uint64_t ops = 0;
  nlohmann::json config;  // echo of the effective configuration
  std::optional<std::uint64_t> seed;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

nlohmann::json report_to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& doc);

// FNV-1a 64 over the canonical text serialization, as 16 hex digits.
std::string instance_digest(const Instance& instance);

// One row of the benchmark CSV.
struct BenchRow {
  std::string mode;
  std::size_t n = 0;
  unsigned bit_length = 0;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::string outcome;
  double millis = 0.0;
  std::uint64_t ops = 0;
};

inline constexpr const char* kBenchCsvHeader = "mode,n,bit_length,trial,seed,outcome,millis,ops";

// Appends a row, writing the header first when the file is new or empty.
void append_bench_row(const std::string& path, const BenchRow& row);

// Writes just the header if the file is new or empty (the trials=0 case).
void ensure_bench_header(const std::string& path);

}  // namespace subsum
