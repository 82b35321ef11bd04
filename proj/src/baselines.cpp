#include "subsum/baselines.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>
#include <unordered_set>

#include "subsum/errors.hpp"
#include "subsum/rng.hpp"

namespace subsum {
namespace {

// Bitmap allocations are bounded so a huge cap fails with a named limit
// instead of std::bad_alloc.
constexpr std::int64_t kMaxBitmapCap = 1ll << 33;

void check_cap(std::int64_t cap) {
  if (cap < 0) throw PreconditionError("set cap must be non-negative");
  if (cap > kMaxBitmapCap)
    throw ResourceError("cap " + std::to_string(cap) + " exceeds the bitmap bound 2^33");
}

}  // namespace

SumsetSet::SumsetSet(std::int64_t cap) : cap_(cap) {
  check_cap(cap);
  words_.assign(static_cast<std::size_t>(cap / 64 + 1), 0);
}

SumsetSet SumsetSet::from_values(std::span<const std::int64_t> values, std::int64_t cap) {
  SumsetSet out(cap);
  for (std::int64_t v : values) {
    if (v < 0) throw PreconditionError("sumset members must be non-negative");
    if (v <= cap) out.insert(v);
  }
  return out;
}

bool SumsetSet::contains(std::int64_t v) const {
  if (v < 0 || v > cap_) return false;
  return (words_[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1;
}

void SumsetSet::insert(std::int64_t v) {
  if (v < 0 || v > cap_)
    throw PreconditionError("value " + std::to_string(v) + " outside [0, " +
                            std::to_string(cap_) + "]");
  words_[static_cast<std::size_t>(v >> 6)] |= 1ull << (v & 63);
}

std::size_t SumsetSet::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void SumsetSet::union_with(const SumsetSet& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] |= other.words_[i];
  const unsigned used = static_cast<unsigned>((cap_ + 1) & 63);
  if (words_.size() <= other.words_.size() && used != 0) words_.back() &= (1ull << used) - 1;
}

std::vector<std::int64_t> SumsetSet::values() const {
  std::vector<std::int64_t> out;
  out.reserve(count());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      const unsigned bit = static_cast<unsigned>(std::countr_zero(w));
      out.push_back(static_cast<std::int64_t>(i * 64 + bit));
      w &= w - 1;
    }
  }
  return out;
}

SumsetSet capped_sumset(const SumsetSet& a, const SumsetSet& b, std::int64_t t) {
  SumsetSet out(t);
  out.insert(0);

  // (A u {0}) + (B u {0}) = {0} u A u B u (A + B). The pairwise part is
  // computed by OR-ing A's bitmap shifted up by every member of B, which
  // also covers A and B alone via the two zero terms.
  out.union_with(a);
  out.union_with(b);

  // Iterate the sparser side for fewer shifts.
  const SumsetSet& base = a.count() <= b.count() ? b : a;
  const SumsetSet& offsets = a.count() <= b.count() ? a : b;
  for (std::int64_t off : offsets.values()) {
    if (off == 0 || off > t) continue;
    const std::size_t word_off = static_cast<std::size_t>(off >> 6);
    const unsigned sh = static_cast<unsigned>(off & 63);
    const auto& src = base.words();
    for (std::size_t i = out.words_.size(); i-- > word_off;) {
      const std::size_t j = i - word_off;
      if (j >= src.size()) continue;
      std::uint64_t v = src[j] << sh;
      if (sh != 0 && j >= 1) v |= src[j - 1] >> (64 - sh);
      out.words_[i] |= v;
    }
  }
  // Values above t must not survive in the top word.
  const unsigned used = static_cast<unsigned>((t + 1) & 63);
  if (used != 0) out.words_.back() &= (1ull << used) - 1;
  return out;
}

std::size_t ColorCodingConfig::rounds() const {
  // The epsilon guards exact-power boundaries of the ratio against
  // floating-point drift just above the true value.
  const double raw = std::log(1.0 / delta) / std::log(4.0 / 3.0);
  const double r = std::ceil(raw - 1e-9);
  return r < 1.0 ? 1 : static_cast<std::size_t>(r);
}

SumsetSet color_coding(std::span<const std::int64_t> z, std::int64_t t,
                       const ColorCodingConfig& config) {
  if (config.k < 1) throw PreconditionError("k must be >= 1");
  if (!(config.delta > 0.0 && config.delta < 1.0))
    throw PreconditionError("delta must lie in (0, 1)");
  if (t < 0) throw PreconditionError("cap t must be non-negative");
  std::unordered_set<std::int64_t> seen;
  for (std::int64_t v : z) {
    if (v <= 0) throw PreconditionError("members of Z must be positive");
    if (!seen.insert(v).second)
      throw PreconditionError("members of Z must be distinct; " + std::to_string(v) + " repeats");
  }

  const std::size_t buckets = config.k * config.k;
  SumsetSet result(t);
  result.insert(0);

  for (std::size_t round = 1; round <= config.rounds(); ++round) {
    // Each round draws from its own seed-derived stream, so results do
    // not depend on evaluation order.
    std::mt19937_64 rng(mix_seed(config.seed, round, 0));
    std::vector<std::vector<std::int64_t>> parts(buckets);
    for (std::int64_t v : z)
      parts[static_cast<std::size_t>(uniform_index(rng, buckets))].push_back(v);

    SumsetSet acc(t);
    acc.insert(0);
    for (const auto& part : parts)
      acc = capped_sumset(acc, SumsetSet::from_values(part, t), t);
    result.union_with(acc);
  }
  return result;
}

std::vector<SubsetSolution> brute_force_all(const Instance& instance) {
  const std::size_t n = instance.size();
  if (n > 20)
    throw ResourceError("n=" + std::to_string(n) + " exceeds the brute-force cap of 20");
  const auto weights = instance.weights();
  const std::uint64_t total = 1ull << n;
  std::vector<std::int64_t> sums(total, 0);
  std::vector<SubsetSolution> out;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    const unsigned low = static_cast<unsigned>(std::countr_zero(mask));
    sums[mask] = sums[mask & (mask - 1)] + weights[low];
    if (sums[mask] == instance.target()) {
      std::vector<std::size_t> indices;
      std::uint64_t m = mask;
      while (m != 0) {
        indices.push_back(static_cast<std::size_t>(std::countr_zero(m)) + 1);
        m &= m - 1;
      }
      out.emplace_back(instance, std::move(indices));
    }
  }
  return out;
}

DpResult bellman_run(const Instance& instance) {
  const std::int64_t t = instance.target();
  if (t < 0) throw PreconditionError("the DP table needs a non-negative target");
  for (std::int64_t w : instance.weights()) {
    if (w < 1) throw PreconditionError("the DP table needs all weights >= 1");
  }
  check_cap(t);

  const std::size_t words = static_cast<std::size_t>(t / 64 + 1);
  std::vector<std::uint64_t> reach(words, 0);
  reach[0] = 1;  // row 0: only the empty sum
  DpResult result;
  for (std::int64_t w : instance.weights()) {
    // Row update reach |= reach << w, evaluated high-to-low so each cell
    // reads the previous row.
    const std::size_t off = static_cast<std::size_t>(w >> 6);
    const unsigned sh = static_cast<unsigned>(w & 63);
    for (std::size_t i = words; i-- > off;) {
      std::uint64_t v = reach[i - off] << sh;
      if (sh != 0 && i - off >= 1) v |= reach[i - off - 1] >> (64 - sh);
      reach[i] |= v;
    }
    result.cell_lookups += static_cast<std::uint64_t>(t) + 1;
  }
  const unsigned used = static_cast<unsigned>((t + 1) & 63);
  if (used != 0) reach.back() &= (1ull << used) - 1;
  result.decision = (reach[static_cast<std::size_t>(t >> 6)] >> (t & 63)) & 1;
  return result;
}

bool bellman_decides(const Instance& instance) { return bellman_run(instance).decision; }

}  // namespace subsum
