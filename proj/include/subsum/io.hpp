#pragma once

#include <string>

#include "subsum/instance.hpp"

namespace subsum {

// Text format: first line the target, second line the weights separated
// by spaces. Parsers throw ParseError on malformed input, including
// values that do not fit in int64.
Instance parse_instance_text(const std::string& text);
std::string serialize_instance_text(const Instance& instance);

// JSON format: {"target": <int>, "weights": [<int>, ...]}.
Instance parse_instance_json(const std::string& text);
std::string serialize_instance_json(const Instance& instance);

// True if the payload looks like the JSON format (first non-space byte
// is '{'); used to sniff files whose format is not stated.
bool looks_like_json(const std::string& text);

}  // namespace subsum
