#pragma once

#include <chrono>
#include <optional>

namespace subsum {

// Cooperative time budget. Solvers poll expired() at coarse checkpoints
// and report a timed-out partial result instead of aborting, so a timeout
// is an outcome rather than an error.
class Deadline {
 public:
  Deadline() = default;

  static Deadline after(std::chrono::milliseconds budget) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() + budget;
    return d;
  }

  bool expired() const {
    return at_ && std::chrono::steady_clock::now() >= *at_;
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

}  // namespace subsum
