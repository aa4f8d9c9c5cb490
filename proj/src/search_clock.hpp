#pragma once

#include <chrono>
#include <cstdint>

#include "flatwall/minors.hpp"

namespace flatwall::detail {

/// Deadline check for exponential searches; throws BudgetExceeded.
class SearchClock {
 public:
  explicit SearchClock(std::chrono::milliseconds budget)
      : enabled_(budget.count() > 0), deadline_(std::chrono::steady_clock::now() + budget) {}

  void tick() {
    if (!enabled_ || (++ticks_ & 0xfff) != 0) return;
    if (std::chrono::steady_clock::now() > deadline_) throw BudgetExceeded("search budget exceeded");
  }

  std::uint64_t ticks() const { return ticks_; }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t ticks_ = 0;
};

}  // namespace flatwall::detail
