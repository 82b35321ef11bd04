#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "subsum/baselines.hpp"
#include "subsum/errors.hpp"
#include "subsum/greedy.hpp"
#include "subsum/rng.hpp"

using namespace subsum;

namespace {

// Reference sweep built from the public round operation, used as the
// oracle for solve_greedy's semantics.
struct ReferenceOutcome {
  std::optional<std::vector<std::size_t>> chosen;  // ascending indices
  std::size_t rounds_used = 0;
  std::vector<std::vector<std::int64_t>> per_round_values;
};

ReferenceOutcome reference_sweep(const Instance& inst, std::size_t round_bound) {
  const auto weights = inst.weights();
  std::vector<std::size_t> order(inst.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i + 1;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return weights[a - 1] > weights[b - 1];
  });

  ReferenceOutcome out;
  std::vector<TrackedResidual> live(1);
  live[0].value = inst.target();
  const std::size_t rounds = std::min(inst.size(), round_bound);
  for (std::size_t r = 1; r <= rounds; ++r) {
    const std::size_t index = order[r - 1];
    live = prune_and_merge(weights, std::move(live), weights[index - 1], index);
    out.rounds_used = r;
    std::vector<std::int64_t> values;
    for (const auto& res : live) values.push_back(res.value);
    out.per_round_values.push_back(values);
    if (!live.empty() && live.back().value == 0) {
      auto chosen = live.back().chosen;
      std::sort(chosen.begin(), chosen.end());
      out.chosen = std::move(chosen);
      return out;
    }
  }
  return out;
}

Instance random_positive_instance(std::mt19937_64& rng, std::size_t max_n,
                                  std::int64_t max_w) {
  const std::size_t n = 1 + uniform_index(rng, max_n);
  std::vector<std::int64_t> weights(n);
  std::int64_t total = 0;
  for (auto& w : weights) {
    w = 1 + static_cast<std::int64_t>(uniform_index(rng, static_cast<std::uint64_t>(max_w)));
    total += w;
  }
  const auto t = 1 + static_cast<std::int64_t>(uniform_index(rng, static_cast<std::uint64_t>(total)));
  return Instance(t, std::move(weights));
}

}  // namespace

TEST_CASE("sample_variance reproduces the reference table rows") {
  const auto close = [](std::vector<std::int64_t> v, double expected) {
    return std::abs(sample_variance(v) - expected) <= 1e-4;
  };
  CHECK(close({8, 7, 6, 2, 1}, 9.7000));
  CHECK(close({8, 7, 5, 3, 1}, 8.2000));
  CHECK(close({8, 6, 4, 3, 2, 1}, 6.8000));
  CHECK(close({8, 6, 5, 4, 1}, 6.7000));
  CHECK(close({8, 7, 4, 3, 2}, 6.7000));
  CHECK(close({8, 6, 5, 3, 2}, 5.7000));
  CHECK(close({7, 6, 5, 3, 2, 1}, 5.6000));
  CHECK(close({8, 7, 6, 3}, 4.6667));
  CHECK(close({7, 6, 5, 4, 2}, 3.7000));
  CHECK(close({8, 7, 5, 4}, 3.3333));
}

TEST_CASE("sample_variance handles constants and rejects singletons") {
  CHECK(sample_variance(std::vector<std::int64_t>{9, 9}) == doctest::Approx(0.0));
  CHECK(sample_variance(std::vector<std::int64_t>{-3, -3, -3}) == doctest::Approx(0.0));
  CHECK_THROWS_AS(sample_variance(std::vector<std::int64_t>{1}), PreconditionError);
  CHECK_THROWS_AS(sample_variance(std::vector<std::int64_t>{}), PreconditionError);
}

TEST_CASE("prune_and_merge walks the t=24 example rounds") {
  const std::vector<std::int64_t> weights{1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<TrackedResidual> live(1);
  live[0].value = 24;

  live = prune_and_merge(weights, std::move(live), 8, 8);
  REQUIRE(live.size() == 2);
  CHECK(live[0].value == 24);
  CHECK(live[1].value == 16);
  CHECK(live[1].chosen == std::vector<std::size_t>{8});
  CHECK(live[1].round == 1);

  live = prune_and_merge(weights, std::move(live), 7, 7);
  REQUIRE(live.size() == 4);
  CHECK(live[0].value == 24);
  CHECK(live[1].value == 17);
  CHECK(live[2].value == 16);
  CHECK(live[3].value == 9);
  CHECK(live[3].chosen == std::vector<std::size_t>{8, 7});
  CHECK(live[3].round == 2);
}

TEST_CASE("prune_and_merge leaves values unchanged when w exceeds them all") {
  const std::vector<std::int64_t> weights{30, 5, 3};
  std::vector<TrackedResidual> live(2);
  live[0].value = 20;
  live[1].value = 8;
  const auto out = prune_and_merge(weights, std::move(live), 30, 1);
  REQUIRE(out.size() == 2);
  CHECK(out[0].value == 20);
  CHECK(out[1].value == 8);
}

TEST_CASE("merge keeps the residual that subtracted larger weights earlier") {
  // t=10 over {5,3,2}: by round 3 the value 5 is reachable as {5} and as
  // {3,2}; the {5} provenance must win the merge.
  const std::vector<std::int64_t> weights{5, 3, 2};
  std::vector<TrackedResidual> live(1);
  live[0].value = 10;
  live = prune_and_merge(weights, std::move(live), 5, 1);
  live = prune_and_merge(weights, std::move(live), 3, 2);
  live = prune_and_merge(weights, std::move(live), 2, 3);
  const auto at5 = std::find_if(live.begin(), live.end(),
                                [](const TrackedResidual& r) { return r.value == 5; });
  REQUIRE(at5 != live.end());
  CHECK(at5->chosen == std::vector<std::size_t>{1});
  // The zero at the end belongs to {5,3,2} itself.
  REQUIRE(live.back().value == 0);
  CHECK(live.back().chosen == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("prune_and_merge validates its input") {
  const std::vector<std::int64_t> weights{5, 3, 2};
  std::vector<TrackedResidual> ok(1);
  ok[0].value = 4;
  CHECK_THROWS_AS(prune_and_merge(weights, ok, 0, 1), PreconditionError);
  CHECK_THROWS_AS(prune_and_merge(weights, ok, 5, 4), PreconditionError);
  CHECK_THROWS_AS(prune_and_merge(weights, ok, 5, 2), PreconditionError);  // w mismatch
  std::vector<TrackedResidual> negative(1);
  negative[0].value = -1;
  CHECK_THROWS_AS(prune_and_merge(weights, negative, 5, 1), PreconditionError);
  std::vector<TrackedResidual> unsorted(2);
  unsorted[0].value = 3;
  unsorted[1].value = 3;
  CHECK_THROWS_AS(prune_and_merge(weights, unsorted, 5, 1), PreconditionError);
}

TEST_CASE("greedy solves the t=24 walkthrough to the minimum-variance row") {
  const Instance inst(24, {1, 2, 3, 4, 5, 6, 7, 8});
  const auto result = solve_greedy(inst);
  REQUIRE(result.solution.has_value());
  CHECK(result.solution->indices() == std::vector<std::size_t>{4, 5, 7, 8});
  CHECK(std::abs(result.variance - 3.3333) <= 1e-4);
  CHECK(result.rounds_used == 5);
  CHECK_FALSE(result.degenerate);
  CHECK_FALSE(result.beam_truncated);
}

TEST_CASE("greedy trivia: first element closes, impossible target fails") {
  const auto direct = solve_greedy(Instance(7, {7, 1}));
  REQUIRE(direct.solution.has_value());
  CHECK(direct.solution->indices() == std::vector<std::size_t>{1});
  CHECK(direct.degenerate);
  CHECK(direct.variance == 0.0);
  CHECK(direct.rounds_used == 1);

  const auto failed = solve_greedy(Instance(6, {4, 4, 3}));
  CHECK_FALSE(failed.solution.has_value());
  CHECK(failed.rounds_used == 3);
}

TEST_CASE("greedy respects the round bound") {
  const Instance inst(24, {1, 2, 3, 4, 5, 6, 7, 8});
  GreedyConfig config;
  config.round_bound = 4;
  const auto failed = solve_greedy(inst, config);
  CHECK_FALSE(failed.solution.has_value());
  CHECK(failed.rounds_used == 4);
  config.round_bound = 5;
  const auto found = solve_greedy(inst, config);
  CHECK(found.solution.has_value());
}

TEST_CASE("greedy validates instance and config") {
  CHECK_THROWS_AS(solve_greedy(Instance(0, {1, 2})), PreconditionError);
  CHECK_THROWS_AS(solve_greedy(Instance(-3, {1, 2})), PreconditionError);
  CHECK_THROWS_AS(solve_greedy(Instance(3, {1, -2})), PreconditionError);
  CHECK_THROWS_AS(solve_greedy(Instance(3, {0, 3})), PreconditionError);
  GreedyConfig config;
  config.round_bound = 0;
  CHECK_THROWS_AS(solve_greedy(Instance(3, {1, 2}), config), PreconditionError);
  config.round_bound = 2;
  config.beam_limit = 0;
  CHECK_THROWS_AS(solve_greedy(Instance(3, {1, 2}), config), PreconditionError);
}

TEST_CASE("a tight beam weakens failure and is flagged") {
  const Instance inst(24, {1, 2, 3, 4, 5, 6, 7, 8});
  GreedyConfig config;
  config.beam_limit = 1;
  const auto result = solve_greedy(inst, config);
  CHECK_FALSE(result.solution.has_value());
  CHECK(result.beam_truncated);

  config.beam_limit = 1u << 20;  // generous: behaves like unlimited
  const auto wide = solve_greedy(inst, config);
  REQUIRE(wide.solution.has_value());
  CHECK(wide.solution->indices() == std::vector<std::size_t>{4, 5, 7, 8});
  CHECK_FALSE(wide.beam_truncated);
}

TEST_CASE("an expired deadline reports a timeout") {
  const Instance inst(24, {1, 2, 3, 4, 5, 6, 7, 8});
  const auto result = solve_greedy(inst, {}, Deadline::after(std::chrono::milliseconds(0)));
  CHECK(result.timed_out);
  CHECK_FALSE(result.solution.has_value());
}

TEST_CASE("per-round values match direct expansion for small instances") {
  std::mt19937_64 rng(37);
  for (int iter = 0; iter < 60; ++iter) {
    const Instance inst = random_positive_instance(rng, 11, 30);
    const auto reference = reference_sweep(inst, inst.size());

    // Direct expansion: distinct non-negative residuals over all subsets
    // of the first k sorted weights.
    const auto weights = inst.weights();
    std::vector<std::size_t> order(inst.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i + 1;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return weights[a - 1] > weights[b - 1];
    });
    for (std::size_t k = 1; k <= reference.per_round_values.size(); ++k) {
      std::set<std::int64_t, std::greater<>> expected;
      for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
        std::int64_t v = inst.target();
        for (std::size_t j = 0; j < k; ++j)
          if (mask & (1ull << j)) v -= weights[order[j] - 1];
        if (v >= 0) expected.insert(v);
      }
      const std::vector<std::int64_t> expected_values(expected.begin(), expected.end());
      CHECK(reference.per_round_values[k - 1] == expected_values);
    }
  }
}

TEST_CASE("solve_greedy matches the reference sweep") {
  std::mt19937_64 rng(41);
  int agreements_with_solution = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const Instance inst = random_positive_instance(rng, 12, 40);
    const auto reference = reference_sweep(inst, inst.size());
    const auto result = solve_greedy(inst);
    REQUIRE(result.solution.has_value() == reference.chosen.has_value());
    if (reference.chosen) {
      ++agreements_with_solution;
      CHECK(result.solution->indices() == *reference.chosen);
      CHECK(result.rounds_used == reference.rounds_used);
    }
  }
  CHECK(agreements_with_solution > 50);
}

TEST_CASE("greedy never fails when brute force finds a solution") {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 300; ++iter) {
    const Instance inst = random_positive_instance(rng, 12, 50);
    if (brute_force_all(inst).empty()) continue;
    const auto result = solve_greedy(inst);
    CHECK(result.solution.has_value());
  }
}

TEST_CASE("variance gap against the true minimum is reported") {
  std::mt19937_64 rng(47);
  double worst_gap = 0.0;
  int compared = 0;
  for (int iter = 0; iter < 100; ++iter) {
    const Instance inst = random_positive_instance(rng, 12, 30);
    const auto all = brute_force_all(inst);
    if (all.empty()) continue;
    const auto result = solve_greedy(inst);
    REQUIRE(result.solution.has_value());
    double best = std::numeric_limits<double>::infinity();
    bool any_multi = false;
    for (const auto& s : all) {
      if (s.values().size() < 2) continue;
      any_multi = true;
      best = std::min(best, sample_variance(s.values()));
    }
    if (!any_multi || result.solution->values().size() < 2) continue;
    ++compared;
    const double gap = result.variance - best;
    CHECK(result.variance >= best - 1e-9);  // the heuristic cannot beat the oracle
    worst_gap = std::max(worst_gap, gap);
  }
  REQUIRE(compared > 20);
  MESSAGE("minimum-variance diagnostic: worst observed gap ", worst_gap, " over ", compared,
          " instances");
}
