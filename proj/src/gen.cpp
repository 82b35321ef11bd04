#include "subsum/gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "subsum/errors.hpp"
#include "subsum/rng.hpp"

namespace subsum {
namespace {

void check_spec(const GenSpec& spec) {
  if (spec.n < 1) throw PreconditionError("n must be >= 1");
  if (spec.bit_length < 1 || spec.bit_length > 40)
    throw PreconditionError("bit_length must lie in [1, 40]");
  if (spec.planted_size && (*spec.planted_size < 1 || *spec.planted_size > spec.n))
    throw PreconditionError("planted_size must lie in [1, n]");
}

std::vector<std::int64_t> draw_weights(const GenSpec& spec, std::mt19937_64& rng) {
  const std::uint64_t range = (1ull << spec.bit_length) - 1;  // values 1..2^b-1
  std::vector<std::int64_t> weights(spec.n);
  for (auto& w : weights) w = static_cast<std::int64_t>(1 + uniform_index(rng, range));
  return weights;
}

}  // namespace

Instance gen_random(const GenSpec& spec) {
  check_spec(spec);
  if (spec.planted_size)
    throw PreconditionError("gen_random does not take planted_size; use gen_planted");
  std::mt19937_64 rng(spec.seed);
  auto weights = draw_weights(spec, rng);
  const std::uint64_t total =
      std::accumulate(weights.begin(), weights.end(), std::uint64_t{0});
  const std::int64_t target = static_cast<std::int64_t>(1 + uniform_index(rng, total));
  return Instance(target, std::move(weights));
}

std::pair<Instance, SubsetSolution> gen_planted(const GenSpec& spec) {
  check_spec(spec);
  if (!spec.planted_size)
    throw PreconditionError("gen_planted needs planted_size");
  std::mt19937_64 rng(spec.seed);
  auto weights = draw_weights(spec, rng);

  // Partial Fisher-Yates: the first planted_size slots end up holding a
  // uniform random subset of the indices.
  std::vector<std::size_t> indices(spec.n);
  std::iota(indices.begin(), indices.end(), 1);
  for (std::size_t i = 0; i < *spec.planted_size; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(uniform_index(rng, spec.n - i));
    std::swap(indices[i], indices[j]);
  }
  indices.resize(*spec.planted_size);
  std::sort(indices.begin(), indices.end());

  std::int64_t target = 0;
  for (std::size_t index : indices) target += weights[index - 1];
  Instance instance(target, std::move(weights));
  SubsetSolution witness(instance, std::move(indices));
  return {std::move(instance), std::move(witness)};
}

}  // namespace subsum
