#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "subsum/deadline.hpp"
#include "subsum/instance.hpp"

namespace subsum {

// A live residual in the greedy sweep, carrying provenance: the original
// indices already subtracted (in subtraction order) and the round that
// produced it (0 for the initial target). Invariant:
// value = target - sum(weights[chosen]) >= 0.
struct TrackedResidual {
  std::int64_t value = 0;
  std::vector<std::size_t> chosen;
  std::size_t round = 0;
};

struct GreedyConfig {
  // Maximum rounds; the sweep runs at most min(n, round_bound) rounds.
  std::size_t round_bound = SIZE_MAX;
  // Optional cap on live residuals per round. When it bites, the
  // lowest-value residuals are dropped and FAILURE weakens to
  // "not found" (reported via beam_truncated).
  std::optional<std::size_t> beam_limit;
};

struct GreedyResult {
  std::optional<SubsetSolution> solution;  // empty means FAILURE
  double variance = 0.0;
  // A singleton solution has no sample variance; it is reported as 0 with
  // this flag set.
  bool degenerate = false;
  std::size_t rounds_used = 0;
  bool beam_truncated = false;
  bool timed_out = false;
  std::uint64_t ops = 0;  // residual values processed across rounds
};

// Sample variance with the m-1 denominator. Needs at least two values.
double sample_variance(std::span<const std::int64_t> values);

// One greedy round over a residual list sorted by strictly decreasing
// value: keeps every input residual, adds value - w for each input where
// that stays non-negative (recording index in chosen), and merges equal
// values keeping the residual whose chosen sequence ranks first under
// the decreasing-weight order (larger weight first; equal weights by
// smaller original index). weights is the full instance weight list,
// needed to rank indices; w must equal weights[index - 1].
std::vector<TrackedResidual> prune_and_merge(std::span<const std::int64_t> weights,
                                             std::vector<TrackedResidual> residuals,
                                             std::int64_t w, std::size_t index);

// Greedy sweep: stable-sorts the weights decreasingly, applies
// prune-and-merge rounds until a zero residual appears or min(n,
// round_bound) rounds have run, and reconstructs the solution recorded
// for the zero. All weights and the target must be positive.
GreedyResult solve_greedy(const Instance& instance, const GreedyConfig& config = {},
                          const Deadline& deadline = {});

}  // namespace subsum
