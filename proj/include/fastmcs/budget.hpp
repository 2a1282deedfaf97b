#ifndef FASTMCS_BUDGET_HPP
#define FASTMCS_BUDGET_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>

namespace fastmcs {

/// Raised by an engine when its step budget reports exhaustion.
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded() : std::runtime_error("computation budget exceeded") {}
};

/// Cooperative abort hook. Engines call tick() from their inner loops; the
/// user-supplied callback is polled every `stride` accumulated steps, and a
/// positive answer aborts the computation via BudgetExceeded. Keeps the
/// engines pure: no signals, no preemption.
class StepBudget {
public:
  using AbortCheck = std::function<bool()>;

  explicit StepBudget(AbortCheck should_abort, std::uint64_t stride = 4096)
      : should_abort_(std::move(should_abort)), stride_(stride) {}

  /// Deadline-based budget on the monotonic clock.
  static StepBudget deadline(std::chrono::nanoseconds limit) {
    const auto until = std::chrono::steady_clock::now() + limit;
    return StepBudget([until] { return std::chrono::steady_clock::now() >= until; });
  }

  void tick(std::uint64_t steps = 1) const {
    pending_ += steps;
    if (pending_ < stride_) return;
    pending_ = 0;
    if (should_abort_ && should_abort_()) throw BudgetExceeded{};
  }

private:
  AbortCheck should_abort_;
  std::uint64_t stride_;
  mutable std::uint64_t pending_ = 0;
};

inline void tick(const StepBudget* budget, std::uint64_t steps = 1) {
  if (budget != nullptr) budget->tick(steps);
}

}  // namespace fastmcs

#endif  // FASTMCS_BUDGET_HPP
