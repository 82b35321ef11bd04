#include <doctest.h>

#include <random>
#include <set>

#include "subsum/baselines.hpp"
#include "subsum/enumerate.hpp"
#include "subsum/errors.hpp"
#include "subsum/rng.hpp"

using namespace subsum;

namespace {

std::set<std::vector<std::size_t>> index_sets(const std::vector<SubsetSolution>& solutions) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& s : solutions) out.insert(s.indices());
  return out;
}

Instance random_mixed_instance(std::mt19937_64& rng, std::size_t max_n) {
  const std::size_t n = 1 + uniform_index(rng, max_n);
  std::vector<std::int64_t> weights(n);
  for (auto& w : weights) w = static_cast<std::int64_t>(uniform_index(rng, 101)) - 50;
  std::int64_t bound = 0;
  for (auto w : weights) bound += w < 0 ? -w : w;
  const auto t = static_cast<std::int64_t>(uniform_index(rng, 2 * bound + 3)) - (bound + 1);
  return Instance(t, std::move(weights));
}

}  // namespace

TEST_CASE("expand_round appends the subtracted copy") {
  ResidualBlock block;
  block.values = {5};
  const auto once = expand_round(block, 1);
  CHECK(once.values == std::vector<std::int64_t>{5, 4});
  const auto twice = expand_round(once, 2);
  CHECK(twice.values == std::vector<std::int64_t>{5, 4, 3, 2});
  CHECK(twice.start == 1);
  CHECK_THROWS_AS(expand_round(ResidualBlock{}, 1), PreconditionError);
}

TEST_CASE("expanding all rounds reproduces the residual sequence") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 20; ++iter) {
    const Instance inst = random_mixed_instance(rng, 10);
    ResidualBlock block;
    block.values = {inst.target()};
    for (std::size_t j = 1; j <= inst.size(); ++j) block = expand_round(block, inst.weight(j));
    REQUIRE(block.values.size() == (1ull << inst.size()));
    for (std::uint64_t k = 1; k <= block.values.size(); ++k)
      CHECK(block.values[k - 1] == residual_at(inst, k));
  }
}

TEST_CASE("solve_all finds both solutions of the two-solution example") {
  const Instance inst(5, {1, 2, 3, 4});
  const auto result = solve_all(inst);
  REQUIRE(result.solutions.size() == 2);
  CHECK(result.positions == std::vector<std::uint64_t>{7, 10});
  CHECK(result.solutions[0].indices() == std::vector<std::size_t>{2, 3});
  CHECK(result.solutions[1].indices() == std::vector<std::size_t>{1, 4});
  CHECK_FALSE(result.truncated);
  CHECK_FALSE(result.timed_out);
  CHECK(result.ops == 15);  // 2^4 - 1 subtractions in a single chunk
}

TEST_CASE("solve_all handles singletons, zero targets, and negatives") {
  const auto single = solve_all(Instance(10, {10}));
  REQUIRE(single.solutions.size() == 1);
  CHECK(single.solutions[0].indices() == std::vector<std::size_t>{1});

  // t = 0 must not report the empty subset.
  const auto zero = solve_all(Instance(0, {1, -1}));
  REQUIRE(zero.solutions.size() == 1);
  CHECK(zero.solutions[0].indices() == std::vector<std::size_t>{1, 2});

  const auto none = solve_all(Instance(3, {1, 1}));
  CHECK(none.solutions.empty());
  CHECK_FALSE(none.truncated);
}

TEST_CASE("solution_limit truncates deterministically") {
  const Instance inst(5, {1, 2, 3, 4});
  EnumerationConfig config;
  config.solution_limit = 1;
  const auto result = solve_all(inst, config);
  CHECK(result.truncated);
  REQUIRE(result.solutions.size() == 1);
  CHECK(result.solutions[0].indices() == std::vector<std::size_t>{2, 3});
}

TEST_CASE("an expired deadline reports a timeout, not an error") {
  const Instance inst(5, {1, 2, 3, 4});
  const auto result = solve_all(inst, {}, Deadline::after(std::chrono::milliseconds(0)));
  CHECK(result.timed_out);
  CHECK(result.solutions.empty());
}

TEST_CASE("chunked runs agree with single-chunk runs") {
  std::mt19937_64 rng(23);
  const Instance inst = [&] {
    std::vector<std::int64_t> weights(12);
    for (auto& w : weights) w = static_cast<std::int64_t>(uniform_index(rng, 21)) - 10;
    return Instance(4, std::move(weights));
  }();
  const auto reference = solve_all(inst);
  CHECK(reference.peak_residuals == (1ull << 12));
  for (std::uint64_t chunk : {1ull, 2ull, 8ull, 64ull, 4096ull}) {
    EnumerationConfig config;
    config.chunk_size = chunk;
    const auto result = solve_all(inst, config);
    CHECK(result.positions == reference.positions);
    CHECK(index_sets(result.solutions) == index_sets(reference.solutions));
    CHECK(result.peak_residuals == chunk);
    CHECK(result.ops >= (1ull << 12) - 1);
  }
}

TEST_CASE("solve_all agrees with the brute-force oracle") {
  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 200; ++iter) {
    const Instance inst = random_mixed_instance(rng, 16);
    const auto enumerated = solve_all(inst);
    const auto oracle = brute_force_all(inst);
    REQUIRE(enumerated.solutions.size() == oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i)
      CHECK(enumerated.solutions[i].indices() == oracle[i].indices());
  }
}

TEST_CASE("solve_all enforces the size cap and validates config") {
  const Instance inst(1, std::vector<std::int64_t>(17, 1));
  EnumerationConfig config;
  config.max_n = 16;
  CHECK_THROWS_AS(solve_all(inst, config), ResourceError);
  config.max_n = 63;
  CHECK_THROWS_AS(solve_all(inst, config), PreconditionError);
  config.max_n = 30;
  config.chunk_size = 3;
  CHECK_THROWS_AS(solve_all(inst, config), PreconditionError);
  config.chunk_size = 0;
  CHECK_THROWS_AS(solve_all(inst, config), PreconditionError);
}
