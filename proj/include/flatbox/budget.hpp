#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>

namespace flatbox {

// Node and wall-clock budget shared by the exhaustive searches. A zero limit
// means unlimited. Once exceeded() turns true the owning search must unwind
// and report a budget verdict; it must never fall through to a definite one.
// Safe for concurrent ticks from worker threads.
class SearchBudget {
 public:
  SearchBudget() = default;
  SearchBudget(std::uint64_t max_nodes, double max_seconds, int threads = 1)
      : max_nodes_(max_nodes), max_seconds_(max_seconds), threads_(threads < 1 ? 1 : threads) {}

  // Counts `count` search nodes; returns false once the budget is exhausted.
  bool tick(std::uint64_t count = 1) {
    if (exceeded_.load(std::memory_order_relaxed)) return false;
    std::uint64_t seen = nodes_.fetch_add(count, std::memory_order_relaxed) + count;
    if (max_nodes_ != 0 && seen > max_nodes_) {
      exceeded_.store(true, std::memory_order_relaxed);
      return false;
    }
    if (max_seconds_ > 0 && seen / kClockStride != (seen - count) / kClockStride) {
      std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > max_seconds_) {
        exceeded_.store(true, std::memory_order_relaxed);
        return false;
      }
    }
    return true;
  }

  bool exceeded() const { return exceeded_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }
  int threads() const { return threads_; }

 private:
  static constexpr std::uint64_t kClockStride = 1 << 12;

  std::uint64_t max_nodes_ = 0;
  double max_seconds_ = 0;
  int threads_ = 1;
  std::atomic<std::uint64_t> nodes_{0};
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
  std::atomic<bool> exceeded_{false};
};

}  // namespace flatbox
