#include "subsum/report.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "subsum/errors.hpp"
#include "subsum/io.hpp"

namespace subsum {
namespace {

template <typename T>
void put_optional(nlohmann::json& doc, const char* key, const std::optional<T>& value) {
  if (value) doc[key] = *value;
}

template <typename T>
std::optional<T> get_optional(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || doc[key].is_null()) return std::nullopt;
  return doc[key].get<T>();
}

}  // namespace

nlohmann::json report_to_json(const RunReport& report) {
  nlohmann::json doc;
  doc["mode"] = report.mode;
  doc["digest"] = report.digest;
  doc["n"] = report.n;
  doc["target"] = report.target;
  doc["outcome"] = report.outcome;
  doc["solutions"] = nlohmann::json::array();
  for (const auto& s : report.solutions)
    doc["solutions"].push_back({{"indices", s.indices}, {"values", s.values}});
  put_optional(doc, "decision", report.decision);
  put_optional(doc, "variance", report.variance);
  put_optional(doc, "degenerate", report.degenerate);
  put_optional(doc, "rounds_used", report.rounds_used);
  doc["truncated"] = report.truncated;
  doc["timed_out"] = report.timed_out;
  doc["wall_ms"] = report.wall_ms;
  doc["ops"] = report.ops;
  doc["config"] = report.config;
  put_optional(doc, "seed", report.seed);
  return doc;
}

RunReport report_from_json(const nlohmann::json& doc) {
  try {
    RunReport report;
    report.mode = doc.at("mode").get<std::string>();
    report.digest = doc.at("digest").get<std::string>();
    report.n = doc.at("n").get<std::size_t>();
    report.target = doc.at("target").get<std::int64_t>();
    report.outcome = doc.at("outcome").get<std::string>();
    for (const auto& node : doc.at("solutions")) {
      SolutionRecord record;
      record.indices = node.at("indices").get<std::vector<std::size_t>>();
      record.values = node.at("values").get<std::vector<std::int64_t>>();
      report.solutions.push_back(std::move(record));
    }
    report.decision = get_optional<bool>(doc, "decision");
    report.variance = get_optional<double>(doc, "variance");
    report.degenerate = get_optional<bool>(doc, "degenerate");
    report.rounds_used = get_optional<std::uint64_t>(doc, "rounds_used");
    report.truncated = doc.at("truncated").get<bool>();
    report.timed_out = doc.at("timed_out").get<bool>();
    report.wall_ms = doc.at("wall_ms").get<double>();
    report.ops = doc.at("ops").get<std::uint64_t>();
    report.config = doc.value("config", nlohmann::json::object());
    report.seed = get_optional<std::uint64_t>(doc, "seed");
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed run report: ") + e.what());
  }
}

std::string instance_digest(const Instance& instance) {
  const std::string text = serialize_instance_text(instance);
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << hash;
  return out.str();
}

namespace {

std::ofstream open_with_header(const std::string& path) {
  std::error_code ec;
  const bool fresh =
      !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) throw ResourceError("cannot open " + path + " for writing");
  if (fresh) out << kBenchCsvHeader << '\n';
  return out;
}

}  // namespace

void ensure_bench_header(const std::string& path) {
  auto out = open_with_header(path);
  out.flush();
  if (!out) throw ResourceError("write to " + path + " failed");
}

void append_bench_row(const std::string& path, const BenchRow& row) {
  auto out = open_with_header(path);
  out << row.mode << ',' << row.n << ',' << row.bit_length << ',' << row.trial << ','
      << row.seed << ',' << row.outcome << ',' << row.millis << ',' << row.ops << '\n';
  out.flush();
  if (!out) throw ResourceError("write to " + path + " failed");
}

}  // namespace subsum
