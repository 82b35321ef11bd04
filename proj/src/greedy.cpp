#include "subsum/greedy.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "subsum/errors.hpp"

namespace subsum {
namespace {

// Memory ceiling for the per-round value bitmaps; named in the error so
// callers know which bound was hit.
constexpr std::uint64_t kBitmapByteBound = 1'500'000'000ull;

// Rank of index in the canonical sweep order: weights stably sorted
// decreasingly, so an index is preceded by strictly heavier weights and
// by equal weights with smaller original index.
std::size_t rank_of(std::span<const std::int64_t> weights, std::size_t index) {
  const std::int64_t w = weights[index - 1];
  std::size_t rank = 1;
  for (std::size_t j = 1; j <= weights.size(); ++j) {
    if (weights[j - 1] > w || (weights[j - 1] == w && j < index)) ++rank;
  }
  return rank;
}

// True if a's chosen sequence outranks b's: at the first differing slot
// the larger weight wins, equal weights fall back to the smaller original
// index. Equal-value residuals can never have one chosen sequence as a
// proper prefix of the other (positive weights), so a differing slot
// always exists.
bool outranks(const TrackedResidual& a, const TrackedResidual& b,
              std::span<const std::int64_t> weights) {
  const std::size_t common = std::min(a.chosen.size(), b.chosen.size());
  for (std::size_t s = 0; s < common; ++s) {
    const std::size_t ai = a.chosen[s];
    const std::size_t bi = b.chosen[s];
    if (ai == bi) continue;
    const std::int64_t wa = weights[ai - 1];
    const std::int64_t wb = weights[bi - 1];
    if (wa != wb) return wa > wb;
    return ai < bi;
  }
  return a.chosen.size() < b.chosen.size();
}

class Bitmap {
 public:
  explicit Bitmap(std::int64_t cap)
      : cap_(cap), words_(static_cast<std::size_t>(cap / 64 + 1), 0) {}

  void set(std::int64_t v) { words_[v >> 6] |= 1ull << (v & 63); }
  bool test(std::int64_t v) const { return (words_[v >> 6] >> (v & 63)) & 1; }

  std::uint64_t count() const {
    std::uint64_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
  }

  // this |= this >> w in value space: marks v for every marked v + w.
  void or_shift_down(std::int64_t w, std::vector<std::uint64_t>& scratch) {
    const std::size_t off = static_cast<std::size_t>(w >> 6);
    const unsigned sh = static_cast<unsigned>(w & 63);
    const std::size_t size = words_.size();
    scratch.assign(size, 0);
    for (std::size_t i = 0; i + off < size; ++i) {
      std::uint64_t v = words_[i + off] >> sh;
      if (sh != 0 && i + off + 1 < size) v |= words_[i + off + 1] << (64 - sh);
      scratch[i] = v;
    }
    for (std::size_t i = 0; i < size; ++i) words_[i] |= scratch[i];
  }

  // this |= this << w in value space, dropping values above the cap.
  void or_shift_up(std::int64_t w) {
    const std::size_t off = static_cast<std::size_t>(w >> 6);
    const unsigned sh = static_cast<unsigned>(w & 63);
    const std::size_t size = words_.size();
    for (std::size_t i = size; i-- > 0;) {
      if (i < off) break;
      std::uint64_t v = words_[i - off] << sh;
      if (sh != 0 && i - off >= 1) v |= words_[i - off - 1] >> (64 - sh);
      words_[i] |= v;
    }
    mask_top();
  }

  // Clears all but the keep highest marked values. Returns true if
  // anything was dropped.
  bool keep_top(std::uint64_t keep) {
    std::uint64_t seen = 0;
    bool dropped = false;
    for (std::size_t i = words_.size(); i-- > 0;) {
      if (seen >= keep) {
        if (words_[i] != 0) dropped = true;
        words_[i] = 0;
        continue;
      }
      std::uint64_t in_word = std::popcount(words_[i]);
      if (seen + in_word > keep) {
        std::uint64_t excess = seen + in_word - keep;
        for (std::uint64_t e = 0; e < excess; ++e) words_[i] &= words_[i] - 1;
        dropped = true;
        in_word -= excess;
      }
      seen += in_word;
    }
    return dropped;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

 private:
  void mask_top() {
    const unsigned used = static_cast<unsigned>((cap_ + 1) & 63);
    if (used != 0) words_.back() &= (1ull << used) - 1;
  }

  std::int64_t cap_;
  std::vector<std::uint64_t> words_;
};

}  // namespace

double sample_variance(std::span<const std::int64_t> values) {
  if (values.size() < 2)
    throw PreconditionError("sample variance needs at least two values");
  const auto m = static_cast<__int128>(values.size());
  __int128 sum = 0;
  __int128 sum_sq = 0;
  for (std::int64_t v : values) {
    sum += v;
    sum_sq += static_cast<__int128>(v) * v;
  }
  const __int128 numerator = m * sum_sq - sum * sum;
  return static_cast<double>(numerator) /
         (static_cast<double>(m) * static_cast<double>(m - 1));
}

std::vector<TrackedResidual> prune_and_merge(std::span<const std::int64_t> weights,
                                             std::vector<TrackedResidual> residuals,
                                             std::int64_t w, std::size_t index) {
  if (w <= 0) throw PreconditionError("round weight must be positive");
  if (index < 1 || index > weights.size())
    throw PreconditionError("index " + std::to_string(index) + " outside [1, " +
                            std::to_string(weights.size()) + "]");
  if (weights[index - 1] != w)
    throw PreconditionError("w=" + std::to_string(w) + " does not match weights[" +
                            std::to_string(index) + "]=" + std::to_string(weights[index - 1]));
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    if (residuals[i].value < 0) throw PreconditionError("input residuals must be non-negative");
    if (i > 0 && residuals[i - 1].value <= residuals[i].value)
      throw PreconditionError("input residuals must be strictly decreasing in value");
  }

  const std::size_t round = rank_of(weights, index);
  // Candidates inherit the input's decreasing order: they are the
  // surviving prefix of the inputs, each lowered by the same w.
  std::vector<TrackedResidual> created;
  for (const TrackedResidual& r : residuals) {
    if (r.value - w < 0) break;
    TrackedResidual c;
    c.value = r.value - w;
    c.chosen = r.chosen;
    c.chosen.push_back(index);
    c.round = round;
    created.push_back(std::move(c));
  }

  std::vector<TrackedResidual> merged;
  merged.reserve(residuals.size() + created.size());
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < residuals.size() || b < created.size()) {
    if (b >= created.size()) {
      merged.push_back(std::move(residuals[a++]));
    } else if (a >= residuals.size()) {
      merged.push_back(std::move(created[b++]));
    } else if (residuals[a].value > created[b].value) {
      merged.push_back(std::move(residuals[a++]));
    } else if (residuals[a].value < created[b].value) {
      merged.push_back(std::move(created[b++]));
    } else {
      merged.push_back(outranks(residuals[a], created[b], weights)
                           ? std::move(residuals[a])
                           : std::move(created[b]));
      ++a;
      ++b;
    }
  }
  return merged;
}

GreedyResult solve_greedy(const Instance& instance, const GreedyConfig& config,
                          const Deadline& deadline) {
  if (config.round_bound < 1) throw PreconditionError("round_bound must be >= 1");
  if (config.beam_limit && *config.beam_limit < 1)
    throw PreconditionError("beam_limit must be >= 1 when set");
  if (instance.target() <= 0) throw PreconditionError("greedy solve needs a positive target");
  const auto weights = instance.weights();
  for (std::int64_t w : weights) {
    if (w <= 0) throw PreconditionError("greedy solve needs all weights positive");
  }

  const std::size_t n = instance.size();
  const std::int64_t t = instance.target();
  const std::size_t rounds_total = std::min(n, config.round_bound);

  // One live bitmap, one scratch, and one reachability level per round of
  // the reconstruction pass.
  const std::uint64_t words = static_cast<std::uint64_t>(t) / 64 + 1;
  const std::uint64_t need = (static_cast<std::uint64_t>(rounds_total) + 3) * words * 8;
  if (need > kBitmapByteBound)
    throw ResourceError("residual bitmaps would need " + std::to_string(need) +
                        " bytes, above the " + std::to_string(kBitmapByteBound) + "-byte cap");

  // Canonical sweep order: stable sort by decreasing weight.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return weights[a - 1] > weights[b - 1];
  });

  GreedyResult result;
  Bitmap live(t);
  live.set(t);
  std::vector<std::uint64_t> scratch;
  std::size_t zero_round = 0;
  for (std::size_t r = 1; r <= rounds_total; ++r) {
    if (deadline.expired()) {
      result.timed_out = true;
      result.rounds_used = r - 1;
      return result;
    }
    result.rounds_used = r;
    live.or_shift_down(weights[order[r - 1] - 1], scratch);
    result.ops += live.count();
    if (live.test(0)) {
      zero_round = r;
      break;
    }
    if (config.beam_limit && live.keep_top(*config.beam_limit))
      result.beam_truncated = true;
  }
  if (zero_round == 0) return result;  // FAILURE within the round bound

  // Reconstruct the zero's recorded provenance: the chosen-sequence
  // tie-break kept, for every value, the subset of rounds that is
  // lexicographically smallest in round order, so the winner at zero is
  // rebuilt by preferring the earliest feasible round at each step.
  // Feasibility comes from suffix reachability: level j holds every sum
  // the rounds j..zero_round can still contribute.
  const std::size_t levels = zero_round + 1;
  std::vector<Bitmap> reach;
  reach.reserve(levels);
  for (std::size_t j = 0; j < levels; ++j) reach.emplace_back(t);
  reach[levels - 1].set(0);
  for (std::size_t j = levels - 1; j-- > 0;) {
    reach[j].words() = reach[j + 1].words();
    reach[j].or_shift_up(weights[order[j] - 1]);
  }

  std::vector<std::size_t> indices;
  std::int64_t v = t;
  for (std::size_t j = 1; j <= zero_round; ++j) {
    const std::int64_t w = weights[order[j - 1] - 1];
    if (v >= w && reach[j].test(v - w)) {
      indices.push_back(order[j - 1]);
      v -= w;
    }
  }
  std::sort(indices.begin(), indices.end());
  result.solution.emplace(instance, std::move(indices));

  const auto& values = result.solution->values();
  if (values.size() < 2) {
    result.degenerate = true;
    result.variance = 0.0;
  } else {
    result.variance = sample_variance(values);
  }
  return result;
}

}  // namespace subsum
