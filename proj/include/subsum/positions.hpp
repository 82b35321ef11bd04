#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "subsum/instance.hpp"

namespace subsum {

// The enumeration order assigns every subset of {1..n} a position
// k in [1, 2^n]: position 1 is the empty subset, and appending weight j
// to the sequence maps a subset at position p to p + 2^(j-1). Hence the
// subset at position k is exactly the set of indices j whose bit j-1 is
// set in k-1, and the residual at position k is
// target - sum(weight[j] : j in subset).

// Indices at position k, ascending. Throws std::out_of_range unless
// n <= 63 and 1 <= k <= 2^n.
std::vector<std::size_t> decode_position(std::uint64_t k, std::size_t n);

// Inverse of decode_position. The subset must be strictly increasing
// with members in [1, n]; n <= 63.
std::uint64_t position_of(std::span<const std::size_t> subset, std::size_t n);

// Residual value at position k without materializing the sequence.
std::int64_t residual_at(const Instance& instance, std::uint64_t k);

// One contiguous run of the residual sequence: values[i] is the residual
// at position start + i.
struct ResidualBlock {
  std::uint64_t start = 1;
  std::vector<std::int64_t> values;
};

}  // namespace subsum
