#include "subsum/instance.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include "subsum/errors.hpp"

namespace subsum {
namespace {

constexpr std::uint64_t kMagnitudeBound = 1ull << 62;

std::uint64_t magnitude(std::int64_t v) {
  // |INT64_MIN| does not fit in int64; widen through uint64 instead.
  return v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

}  // namespace

Instance::Instance(std::int64_t target, std::vector<std::int64_t> weights)
    : target_(target), weights_(std::move(weights)) {
  if (weights_.empty()) throw PreconditionError("instance needs at least one weight");
  std::uint64_t total = magnitude(target_);
  for (std::int64_t w : weights_) {
    total += magnitude(w);
    // Each magnitude is < 2^63 and the running total is kept < 2^62, so
    // the uint64 addition itself cannot wrap before the check fires.
    if (total >= kMagnitudeBound)
      throw PreconditionError("instance magnitude exceeds 2^62: |target| + sum(|weight|) must stay below it");
  }
}

std::int64_t Instance::weight(std::size_t index) const {
  if (index < 1 || index > weights_.size())
    throw std::out_of_range("weight index " + std::to_string(index) + " outside [1, " +
                            std::to_string(weights_.size()) + "]");
  return weights_[index - 1];
}

SubsetSolution::SubsetSolution(const Instance& instance, std::vector<std::size_t> indices)
    : indices_(std::move(indices)) {
  if (indices_.empty()) throw PreconditionError("solution must select at least one weight");
  values_.reserve(indices_.size());
  std::int64_t sum = 0;
  std::size_t previous = 0;
  for (std::size_t index : indices_) {
    if (index <= previous)
      throw PreconditionError("solution indices must be strictly increasing");
    if (index > instance.size())
      throw PreconditionError("solution index " + std::to_string(index) + " outside [1, " +
                              std::to_string(instance.size()) + "]");
    previous = index;
    const std::int64_t w = instance.weight(index);
    values_.push_back(w);
    sum += w;  // cannot overflow: instance magnitude bound
  }
  if (sum != instance.target())
    throw PreconditionError("selected weights sum to " + std::to_string(sum) + ", not the target " +
                            std::to_string(instance.target()));
}

}  // namespace subsum
