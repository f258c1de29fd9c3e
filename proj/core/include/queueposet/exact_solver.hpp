#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <variant>

#include "queueposet/layout.hpp"
#include "queueposet/poset.hpp"

namespace queueposet {

struct SolverOptions {
  // Stop after refuting every target up to `limit`.
  std::optional<std::size_t> limit;
  std::optional<std::chrono::duration<double>> time_budget;
  // Worker threads for first-level branches; 0 reads QUEUEPOSET_THREADS and
  // defaults to 1.
  std::size_t threads = 0;
  // false enumerates every linear extension without bounds or memoization.
  bool pruning = true;
};

struct Solved {
  std::size_t queue_number = 0;
  QueueLayout layout;
};

// No extension with at most `lower_bound - 1` queues exists.
struct LowerBoundOnly {
  std::size_t lower_bound = 0;
};

struct Timeout {
  std::size_t lower_bound = 0;
  std::size_t upper_bound = 0;
  QueueLayout best_layout;
};

using SolveResult = std::variant<Solved, LowerBoundOnly, Timeout>;

// Iterative deepening over the target t = 0, 1, ...: depth-first search over
// linear extensions built by appending minimal elements (ascending index),
// pruned as soon as a rainbow larger than t is certain. Posets are limited to
// 64 elements (TooLarge otherwise).
SolveResult exact_queue_number(const Poset& p, const SolverOptions& options = {});

// Maximum number of pairwise nesting covers, by subset enumeration. Throws
// TooLarge above 20 covers.
std::size_t rainbow_bruteforce_oracle(const Poset& p, const LinearExtension& ext);

// Worker count requested through QUEUEPOSET_THREADS (at least 1).
std::size_t solver_threads_from_env();

}  // namespace queueposet
