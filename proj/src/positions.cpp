#include "subsum/positions.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "subsum/errors.hpp"

namespace subsum {
namespace {

void check_position(std::uint64_t k, std::size_t n) {
  if (n < 1 || n > 63)
    throw std::out_of_range("position space needs 1 <= n <= 63, got n=" + std::to_string(n));
  const std::uint64_t count = 1ull << n;
  if (k < 1 || k > count)
    throw std::out_of_range("position " + std::to_string(k) + " outside [1, 2^" + std::to_string(n) + "]");
}

}  // namespace

std::vector<std::size_t> decode_position(std::uint64_t k, std::size_t n) {
  check_position(k, n);
  std::vector<std::size_t> subset;
  std::uint64_t mask = k - 1;
  while (mask != 0) {
    const unsigned bit = static_cast<unsigned>(std::countr_zero(mask));
    subset.push_back(static_cast<std::size_t>(bit) + 1);
    mask &= mask - 1;
  }
  return subset;
}

std::uint64_t position_of(std::span<const std::size_t> subset, std::size_t n) {
  if (n < 1 || n > 63)
    throw std::out_of_range("position space needs 1 <= n <= 63, got n=" + std::to_string(n));
  std::uint64_t mask = 0;
  std::size_t previous = 0;
  for (std::size_t index : subset) {
    if (index <= previous)
      throw PreconditionError("subset indices must be strictly increasing");
    if (index > n)
      throw std::out_of_range("subset index " + std::to_string(index) + " outside [1, " +
                              std::to_string(n) + "]");
    previous = index;
    mask |= 1ull << (index - 1);
  }
  return mask + 1;
}

std::int64_t residual_at(const Instance& instance, std::uint64_t k) {
  check_position(k, instance.size());
  std::int64_t residual = instance.target();
  std::uint64_t mask = k - 1;
  while (mask != 0) {
    const unsigned bit = static_cast<unsigned>(std::countr_zero(mask));
    residual -= instance.weights()[bit];
    mask &= mask - 1;
  }
  return residual;
}

}  // namespace subsum
