#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "divisible/errors.hpp"

namespace divisible {

/// Size and time budgets for the exponential searches.
///
/// Every exact routine checks the order of its input against the matching cap
/// and throws BudgetExceeded instead of running unbounded.
struct Limits {
  int clique_max_n = 32;
  int chromatic_max_n = 16;
  int recognition_max_n = 32;
  int two_divisible_oracle_max_n = 12;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static Limits with_time_budget(std::chrono::milliseconds budget) {
    Limits l;
    l.deadline = std::chrono::steady_clock::now() + budget;
    return l;
  }

  void require(int n, int cap, const char* what) const {
    if (n > cap)
      throw BudgetExceeded(std::string(what) + ": order " + std::to_string(n) + " exceeds budget " +
                           std::to_string(cap));
  }
};

/// Amortised deadline polling for tight search loops.
class DeadlineTicker {
 public:
  explicit DeadlineTicker(const Limits& limits) : deadline_(limits.deadline) {}
  void tick() {
    if (!deadline_ || (++count_ & 0xfff) != 0) return;
    if (std::chrono::steady_clock::now() > *deadline_) throw BudgetExceeded("time budget exhausted");
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint32_t count_ = 0;
};

}  // namespace divisible
