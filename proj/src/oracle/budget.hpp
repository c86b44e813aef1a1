#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>

#include "shortness/oracle.hpp"

namespace shortness::oracle::detail {

/// Shared node/time counter. tick() is cheap; the clock is read every 4096 nodes.
class BudgetClock {
 public:
  explicit BudgetClock(const SearchBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

  bool tick() {
    const std::uint64_t k = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (k > budget_.max_nodes) exhausted_.store(true, std::memory_order_relaxed);
    if ((k & 4095) == 0 && elapsed() > budget_.max_seconds) exhausted_.store(true, std::memory_order_relaxed);
    return exhausted_.load(std::memory_order_relaxed);
  }
  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return nodes_.load(); }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  SearchStats stats(bool complete) const { return {nodes(), elapsed(), complete}; }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> exhausted_{false};
};

}  // namespace shortness::oracle::detail
