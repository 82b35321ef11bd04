#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "subsum/instance.hpp"

namespace subsum {

struct GenSpec {
  std::size_t n = 0;            // weight count, >= 1
  unsigned bit_length = 20;     // weights drawn uniformly from [1, 2^bit_length - 1]
  std::optional<std::size_t> planted_size;
  std::uint64_t seed = 0;
};

// Random instance: n weights uniform in [1, 2^bit_length - 1], target
// uniform in [1, sum of weights]. Deterministic in the seed.
Instance gen_random(const GenSpec& spec);

// Random instance with a known witness: weights drawn as above, then
// planted_size indices chosen uniformly and the target set to their sum.
// Other solutions may exist as well.
std::pair<Instance, SubsetSolution> gen_planted(const GenSpec& spec);

}  // namespace subsum
