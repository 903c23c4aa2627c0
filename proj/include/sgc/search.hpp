#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>

namespace sgc {

/// Limits for a single call to an exponential solver. Every solver owns its
/// own meter, so a Budget is never shared between concurrent calls.
struct Budget {
  std::uint64_t nodes = 10'000'000;
  std::optional<std::chrono::milliseconds> time{};

  static Budget unlimited() { return {std::numeric_limits<std::uint64_t>::max(), std::nullopt}; }
  static Budget of_nodes(std::uint64_t n) { return {n, std::nullopt}; }
};

/// Outcome of a budgeted decision procedure.
enum class Verdict { yes, no, unknown };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

class BudgetMeter {
 public:
  explicit BudgetMeter(const Budget& budget)
      : limit_(budget.nodes), start_(Clock::now()), time_(budget.time) {}

  /// Counts one search node. Returns false once either limit is reached;
  /// after that every further call also returns false.
  bool tick() {
    if (exhausted_) return false;
    if (++used_ > limit_) {
      exhausted_ = true;
      return false;
    }
    if (time_ && (used_ & 0x3ff) == 0 && Clock::now() - start_ > *time_) {
      exhausted_ = true;
      return false;
    }
    return true;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t used() const { return used_; }

 private:
  using Clock = std::chrono::steady_clock;
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  bool exhausted_ = false;
  Clock::time_point start_;
  std::optional<std::chrono::milliseconds> time_;
};

}  // namespace sgc
