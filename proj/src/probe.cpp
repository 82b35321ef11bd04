#include "subsum/probe.hpp"

#include <algorithm>
#include <string>

#include "subsum/enumerate.hpp"
#include "subsum/errors.hpp"
#include "subsum/positions.hpp"
#include "subsum/rng.hpp"

namespace subsum {

std::vector<std::pair<std::size_t, std::int64_t>> sample_piece(const Instance& instance,
                                                               std::size_t piece_length,
                                                               std::mt19937_64& rng) {
  if (piece_length < 1) throw PreconditionError("piece_length must be >= 1");
  std::vector<std::size_t> draws;
  draws.reserve(piece_length);
  for (std::size_t i = 0; i < piece_length; ++i)
    draws.push_back(static_cast<std::size_t>(uniform_index(rng, instance.size())) + 1);
  std::sort(draws.begin(), draws.end());
  draws.erase(std::unique(draws.begin(), draws.end()), draws.end());
  std::vector<std::pair<std::size_t, std::int64_t>> piece;
  piece.reserve(draws.size());
  for (std::size_t index : draws) piece.emplace_back(index, instance.weight(index));
  return piece;
}

ProbeResult solve_probabilistic(const Instance& instance, const ProbeConfig& config,
                                const Deadline& deadline) {
  if (config.piece_length < 1) throw PreconditionError("piece_length must be >= 1");
  if (config.repeat_times < 1) throw PreconditionError("repeat_times must be >= 1");
  const std::size_t cap = EnumerationConfig{}.max_n;
  if (config.piece_length > cap)
    throw ResourceError("piece_length=" + std::to_string(config.piece_length) +
                        " exceeds the enumeration cap max_n=" + std::to_string(cap));

  std::mt19937_64 rng(config.seed);
  ProbeResult result;
  std::vector<std::int64_t> buffer;

  for (std::uint64_t round = 1; round <= config.repeat_times; ++round) {
    if (deadline.expired()) {
      result.timed_out = true;
      result.rounds_used = round - 1;
      return result;
    }
    result.rounds_used = round;
    const auto piece = sample_piece(instance, config.piece_length, rng);
    const std::size_t s = piece.size();

    buffer.assign(1, instance.target());
    for (std::size_t j = 0; j < s; ++j) {
      const std::uint64_t half = 1ull << j;
      const std::int64_t w = piece[j].second;
      buffer.resize(half * 2);
      // Zeros are only sought in the freshly appended half: earlier
      // positions were checked when they appeared, and position 1 (the
      // empty subset) is never inspected at all.
      std::optional<std::uint64_t> zero_at;
      for (std::uint64_t i = 0; i < half; ++i) {
        const std::int64_t v = buffer[i] - w;
        buffer[half + i] = v;
        if (v == 0 && !zero_at) zero_at = half + i + 1;
      }
      result.ops += half;
      if (zero_at) {
        const auto local = decode_position(*zero_at, s);
        std::vector<std::size_t> indices;
        indices.reserve(local.size());
        for (std::size_t pos : local) indices.push_back(piece[pos - 1].first);
        result.solution.emplace(instance, std::move(indices));
        return result;
      }
      if (deadline.expired()) {
        result.timed_out = true;
        return result;
      }
    }
  }
  return result;
}

}  // namespace subsum
