#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace subsum {

// A subset-sum instance: a target and a non-empty list of weights,
// addressed by 1-based index. Construction enforces the magnitude bound
// |target| + sum(|weight|) < 2^62 so that every residual reachable by
// subtracting a sub-multiset of weights from the target fits in int64
// with headroom.
class Instance {
 public:
  Instance(std::int64_t target, std::vector<std::int64_t> weights);

  std::int64_t target() const { return target_; }
  std::size_t size() const { return weights_.size(); }
  std::span<const std::int64_t> weights() const { return weights_; }

  // 1-based accessor; throws std::out_of_range outside [1, size()].
  std::int64_t weight(std::size_t index) const;

 private:
  std::int64_t target_;
  std::vector<std::int64_t> weights_;
};

// A certified solution: strictly increasing 1-based indices into an
// instance whose weights sum exactly to the target. The check runs on
// every construction, so a SubsetSolution can only exist if it is valid
// for the instance it was built against.
class SubsetSolution {
 public:
  SubsetSolution(const Instance& instance, std::vector<std::size_t> indices);

  const std::vector<std::size_t>& indices() const { return indices_; }
  const std::vector<std::int64_t>& values() const { return values_; }

  friend bool operator==(const SubsetSolution& a, const SubsetSolution& b) {
    return a.indices_ == b.indices_;
  }

 private:
  std::vector<std::size_t> indices_;
  std::vector<std::int64_t> values_;
};

}  // namespace subsum
