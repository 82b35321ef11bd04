#include "subsum/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "subsum/errors.hpp"

namespace subsum {
namespace {

std::int64_t parse_int64(std::string_view token, const char* what) {
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec == std::errc::result_out_of_range)
    throw ParseError(std::string(what) + " does not fit in a signed 64-bit integer: " + std::string(token));
  if (ec != std::errc() || end != token.data() + token.size())
    throw ParseError(std::string(what) + " is not an integer: " + std::string(token));
  return value;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::int64_t json_int64(const nlohmann::json& node, const char* what) {
  if (!node.is_number_integer())
    throw ParseError(std::string(what) + " must be an integer");
  // is_number_integer admits unsigned values up to 2^64-1, which would
  // wrap through get<int64_t>.
  if (node.is_number_unsigned() &&
      node.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    throw ParseError(std::string(what) + " does not fit in a signed 64-bit integer");
  return node.get<std::int64_t>();
}

Instance build_checked(std::int64_t target, std::vector<std::int64_t> weights) {
  // Structural problems in parsed payloads surface as ParseError, not as
  // the construction-time PreconditionError used for programmatic input.
  try {
    return Instance(target, std::move(weights));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Instance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  std::string target_line;
  std::string weights_line;
  if (!std::getline(in, target_line)) throw ParseError("missing target line");
  if (!std::getline(in, weights_line)) throw ParseError("missing weights line");
  std::string trailing;
  while (std::getline(in, trailing)) {
    if (!split_tokens(trailing).empty())
      throw ParseError("unexpected content after the weights line: " + trailing);
  }

  const auto target_tokens = split_tokens(target_line);
  if (target_tokens.size() != 1)
    throw ParseError("target line must hold exactly one integer");
  const std::int64_t target = parse_int64(target_tokens[0], "target");

  const auto weight_tokens = split_tokens(weights_line);
  if (weight_tokens.empty()) throw ParseError("weights line is empty");
  std::vector<std::int64_t> weights;
  weights.reserve(weight_tokens.size());
  for (const auto token : weight_tokens) weights.push_back(parse_int64(token, "weight"));
  return build_checked(target, std::move(weights));
}

std::string serialize_instance_text(const Instance& instance) {
  std::ostringstream out;
  out << instance.target() << '\n';
  const auto weights = instance.weights();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i > 0) out << ' ';
    out << weights[i];
  }
  out << '\n';
  return out.str();
}

Instance parse_instance_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance JSON must be an object");
  if (!doc.contains("target") || !doc.contains("weights"))
    throw ParseError("instance JSON needs \"target\" and \"weights\"");
  for (const auto& [key, value] : doc.items()) {
    if (key != "target" && key != "weights")
      throw ParseError("unexpected key in instance JSON: " + key);
  }
  const std::int64_t target = json_int64(doc["target"], "\"target\"");
  const auto& weights_node = doc["weights"];
  if (!weights_node.is_array()) throw ParseError("\"weights\" must be an array");
  std::vector<std::int64_t> weights;
  weights.reserve(weights_node.size());
  for (const auto& node : weights_node) weights.push_back(json_int64(node, "weight"));
  return build_checked(target, std::move(weights));
}

std::string serialize_instance_json(const Instance& instance) {
  nlohmann::json doc;
  doc["target"] = instance.target();
  doc["weights"] = instance.weights();
  return doc.dump();
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

}  // namespace subsum
