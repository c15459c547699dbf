#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>

namespace eqcover {

// Search budget. Node counts are deterministic; the wall-clock cap is an
// optional safety net and makes results timing-dependent when it fires.
struct Budget {
  std::uint64_t max_nodes = 50'000'000;
  std::optional<std::chrono::milliseconds> wall_clock;

  static Budget nodes(std::uint64_t n) { return Budget{n, std::nullopt}; }
  static Budget unlimited() { return Budget{UINT64_MAX, std::nullopt}; }
};

class NodeCounter {
 public:
  explicit NodeCounter(const Budget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

  // Counts one node; false once the budget is exhausted (and from then on).
  bool tick() {
    if (exhausted_) return false;
    if (++nodes_ > budget_.max_nodes) return !(exhausted_ = true);
    if (budget_.wall_clock && (nodes_ & 0xFFF) == 0 &&
        std::chrono::steady_clock::now() - start_ > *budget_.wall_clock)
      return !(exhausted_ = true);
    return true;
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

enum class SolveStatus { exact, bounded, timeout };

inline constexpr std::string_view status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::exact: return "exact";
    case SolveStatus::bounded: return "bounded";
    case SolveStatus::timeout: return "timeout";
  }
  return "?";
}

enum class Decision { sat, unsat, timeout };

inline constexpr std::string_view decision_name(Decision d) {
  switch (d) {
    case Decision::sat: return "SAT";
    case Decision::unsat: return "UNSAT";
    case Decision::timeout: return "TIMEOUT";
  }
  return "?";
}

}  // namespace eqcover
