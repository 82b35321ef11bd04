#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "subsum/deadline.hpp"
#include "subsum/instance.hpp"
#include "subsum/positions.hpp"

namespace subsum {

struct EnumerationConfig {
  // Hard cap on instance size; raising it is an explicit opt-in because
  // the enumeration touches all 2^n positions.
  std::size_t max_n = 30;
  // Number of residuals materialized at a time; must be a power of two.
  std::uint64_t chunk_size = 1ull << 20;
  // If set, stop after this many solutions and flag truncation.
  std::optional<std::uint64_t> solution_limit;
};

struct EnumerationResult {
  // All solutions in ascending position order (complete unless truncated
  // or timed out).
  std::vector<SubsetSolution> solutions;
  std::vector<std::uint64_t> positions;  // positions[i] matches solutions[i]
  bool truncated = false;
  bool timed_out = false;
  std::uint64_t ops = 0;             // residual subtractions performed
  std::uint64_t peak_residuals = 0;  // high-water mark of live residual values
};

// One doubling round: appends a copy of the block with w subtracted from
// every value. The result covers positions [start, start + 2*size).
ResidualBlock expand_round(const ResidualBlock& block, std::int64_t w);

// Enumerates every non-empty subset whose weights sum to the target by
// streaming the doubling sequence in fixed-size chunks, so memory stays
// bounded by chunk_size regardless of n.
EnumerationResult solve_all(const Instance& instance, const EnumerationConfig& config = {},
                            const Deadline& deadline = {});

}  // namespace subsum
