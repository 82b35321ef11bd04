#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "subsum/instance.hpp"

namespace subsum {

// A set of integers within [0, cap], stored as a dense membership bitmap:
// constant-time membership, iteration ascending.
class SumsetSet {
 public:
  explicit SumsetSet(std::int64_t cap);

  // Builds the set from values, silently dropping any above the cap.
  // Negative values are rejected.
  static SumsetSet from_values(std::span<const std::int64_t> values, std::int64_t cap);

  std::int64_t cap() const { return cap_; }
  bool contains(std::int64_t v) const;
  void insert(std::int64_t v);  // v must lie in [0, cap]
  std::size_t count() const;
  std::vector<std::int64_t> values() const;  // ascending

  // Adds every member of other that fits under this set's cap.
  void union_with(const SumsetSet& other);

  friend bool operator==(const SumsetSet& a, const SumsetSet& b) {
    return a.cap_ == b.cap_ && a.words_ == b.words_;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend SumsetSet capped_sumset(const SumsetSet& a, const SumsetSet& b, std::int64_t t);

 private:
  std::int64_t cap_;
  std::vector<std::uint64_t> words_;
};

// {a + b : a in A union {0}, b in B union {0}} intersected with [0, t].
// 0 is always a member of the result.
SumsetSet capped_sumset(const SumsetSet& a, const SumsetSet& b, std::int64_t t);

struct ColorCodingConfig {
  std::size_t k = 1;     // solution-size bound, >= 1
  double delta = 0.25;   // error probability, in (0, 1)
  std::uint64_t seed = 0;

  // ceil(log base 4/3 of 1/delta), at least 1.
  std::size_t rounds() const;
};

// Randomized sumset cover: every round scatters Z over k^2 buckets, folds
// the buckets left-to-right with capped_sumset, and the rounds' results
// are unioned. Sound on every run; a sum with a witness of size <= k is
// covered with probability >= 1 - delta by design.
SumsetSet color_coding(std::span<const std::int64_t> z, std::int64_t t,
                       const ColorCodingConfig& config);

// Direct enumeration of all non-empty subsets; the test oracle. n <= 20.
std::vector<SubsetSolution> brute_force_all(const Instance& instance);

struct DpResult {
  bool decision = false;
  std::uint64_t cell_lookups = 0;  // table cells evaluated: n * (t + 1)
};

// Pseudo-polynomial decision table over sums 0..t, one row per weight.
// Note t = 0 answers true (the empty selection), unlike the enumerative
// solvers which never report the empty subset.
DpResult bellman_run(const Instance& instance);
bool bellman_decides(const Instance& instance);

}  // namespace subsum
