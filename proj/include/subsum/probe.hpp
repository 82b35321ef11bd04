#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "subsum/deadline.hpp"
#include "subsum/instance.hpp"

namespace subsum {

struct ProbeConfig {
  std::size_t piece_length = 0;     // maximum sampled sub-list size, >= 1
  std::uint64_t repeat_times = 1;   // maximum sampling rounds, >= 1
  std::uint64_t seed = 0;
};

struct ProbeResult {
  std::optional<SubsetSolution> solution;  // empty means FAILURE
  std::uint64_t rounds_used = 0;
  bool timed_out = false;
  std::uint64_t ops = 0;  // residual subtractions performed
};

// Draws piece_length indices uniformly with replacement, then returns the
// distinct draws as (index, weight) pairs in ascending index order. The
// result can be shorter than piece_length because of collisions.
std::vector<std::pair<std::size_t, std::int64_t>> sample_piece(const Instance& instance,
                                                               std::size_t piece_length,
                                                               std::mt19937_64& rng);

// Repeats up to repeat_times rounds: sample a piece, run the doubling
// expansion over it, and stop at the first zero residual. Any returned
// solution is certified; FAILURE does not prove that no solution exists
// (one-sided error).
ProbeResult solve_probabilistic(const Instance& instance, const ProbeConfig& config,
                                const Deadline& deadline = {});

}  // namespace subsum
