#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>

#include "mgraph/algebra.hpp"

namespace mgraph {

struct Budget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 600;
  int workers = 1;
};

enum class SearchStatus { witness, exhausted_no, budget_exceeded };

const char* to_string(SearchStatus s);

struct SearchOutcome {
  SearchStatus status = SearchStatus::exhausted_no;
  std::optional<CayleyWitness> witness;
  std::uint64_t nodes = 0;
};

// Node and wall-clock budget shared by cooperating workers. Setting `stop`
// makes every worker unwind at its next poll.
class SharedBudget {
 public:
  explicit SharedBudget(const Budget& b)
      : max_nodes_(b.max_nodes),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(b.max_seconds))) {}

  // Counts one node; false once the budget is spent or a stop was requested.
  bool tick() {
    const auto count = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (count > max_nodes_) {
      exhausted_.store(true);
      return false;
    }
    if ((count & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) {
      exhausted_.store(true);
      return false;
    }
    return !stop_.load(std::memory_order_relaxed);
  }

  void request_stop() { stop_.store(true); }
  bool stopped() const { return stop_.load(); }
  bool exhausted() const { return exhausted_.load(); }
  std::uint64_t nodes() const { return nodes_.load(); }

 private:
  std::uint64_t max_nodes_;
  std::chrono::steady_clock::time_point deadline_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
  std::atomic<bool> exhausted_{false};
};

}  // namespace mgraph
