#include "subsum/enumerate.hpp"

#include <bit>
#include <string>

#include "subsum/errors.hpp"

namespace subsum {

ResidualBlock expand_round(const ResidualBlock& block, std::int64_t w) {
  if (block.values.empty()) throw PreconditionError("cannot expand an empty block");
  ResidualBlock out;
  out.start = block.start;
  out.values.reserve(block.values.size() * 2);
  out.values = block.values;
  for (std::int64_t v : block.values) out.values.push_back(v - w);
  return out;
}

EnumerationResult solve_all(const Instance& instance, const EnumerationConfig& config,
                            const Deadline& deadline) {
  if (config.max_n < 1 || config.max_n > 62)
    throw PreconditionError("max_n must lie in [1, 62]");
  if (config.chunk_size < 1 || !std::has_single_bit(config.chunk_size))
    throw PreconditionError("chunk_size must be a power of two");
  const std::size_t n = instance.size();
  if (n > config.max_n)
    throw ResourceError("n=" + std::to_string(n) + " exceeds the enumeration cap max_n=" +
                        std::to_string(config.max_n));

  const std::uint64_t total = 1ull << n;
  const std::uint64_t chunk = std::min<std::uint64_t>(config.chunk_size, total);
  const unsigned low_bits = static_cast<unsigned>(std::countr_zero(chunk));
  const std::uint64_t chunk_count = total >> low_bits;
  const std::int64_t t = instance.target();
  const auto weights = instance.weights();

  EnumerationResult result;
  result.peak_residuals = chunk;
  std::vector<std::int64_t> buffer(chunk);

  for (std::uint64_t c = 0; c < chunk_count; ++c) {
    if (deadline.expired()) {
      result.timed_out = true;
      return result;
    }
    // The chunk covers positions high + 1 .. high + chunk, where the high
    // bits of position-1 select which of the weights past the first
    // low_bits are already subtracted.
    const std::uint64_t high = c << low_bits;
    std::int64_t base = t;
    std::uint64_t mask = c;
    while (mask != 0) {
      const unsigned bit = static_cast<unsigned>(std::countr_zero(mask));
      base -= weights[low_bits + bit];
      ++result.ops;
      mask &= mask - 1;
    }
    buffer[0] = base;
    for (unsigned j = 0; j < low_bits; ++j) {
      const std::uint64_t half = 1ull << j;
      const std::int64_t w = weights[j];
      for (std::uint64_t i = 0; i < half; ++i) buffer[half + i] = buffer[i] - w;
      result.ops += half;
    }
    for (std::uint64_t i = 0; i < chunk; ++i) {
      if (buffer[i] != 0) continue;
      const std::uint64_t k = high + i + 1;
      if (k == 1) continue;  // the empty subset is never a solution
      result.positions.push_back(k);
      result.solutions.emplace_back(instance, decode_position(k, n));
      if (config.solution_limit && result.solutions.size() >= *config.solution_limit) {
        result.truncated = true;
        return result;
      }
    }
  }
  return result;
}

}  // namespace subsum
