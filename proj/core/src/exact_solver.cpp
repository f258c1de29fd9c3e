#include "queueposet/exact_solver.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_set>

#include "queueposet/errors.hpp"
#include "queueposet/strategies.hpp"

namespace queueposet {

namespace {

using Clock = std::chrono::steady_clock;
constexpr std::size_t kNoBranch = std::numeric_limits<std::size_t>::max();

struct Deadline {
  std::optional<Clock::time_point> at;

  bool passed() const { return at && Clock::now() >= *at; }
};

struct Aborted {};

// One depth-first search for an extension whose maximum rainbow is at most
// `target`. Covers with both endpoints placed are "closed"; their nesting is
// final. A placed element with an unplaced upper cover opens covers that will
// contain every closed cover starting after it, whatever comes next.
class TargetSearch {
 public:
  TargetSearch(const Poset& p, std::size_t target, const Deadline& deadline,
               const std::atomic<std::size_t>& best_branch, std::size_t branch)
      : p_(p),
        n_(p.size()),
        target_(target),
        deadline_(deadline),
        best_branch_(best_branch),
        branch_(branch),
        position_(n_, 0),
        missing_(n_, 0),
        unplaced_up_(n_, 0),
        depth_at_(n_ + 1, 0) {
    for (const auto& c : p.covers()) {
      ++missing_[c.upper];
      ++unplaced_up_[c.lower];
    }
  }

  // Places `first` and searches below it.
  bool run(Element first) {
    if (!place(first)) return false;
    return search();
  }

  const std::vector<Element>& order() const { return order_; }

 private:
  bool place(Element v) {
    const std::size_t here = order_.size();
    position_[v] = here;
    order_.push_back(v);
    placed_ |= std::uint64_t{1} << v;
    for (Element w : p_.upper_covers(v)) --missing_[w];
    for (Element u : p_.lower_covers(v)) --unplaced_up_[u];

    // Suffix maxima of closed depths by left endpoint, before v's covers.
    suffix_.assign(here + 2, 0);
    for (std::size_t i = here + 1; i-- > 0;) suffix_[i] = std::max(suffix_[i + 1], depth_at_[i]);

    Frame frame;
    frame.element = v;
    for (Element u : p_.lower_covers(v)) {
      const std::size_t d = 1 + suffix_[position_[u] + 1];
      frame.depth_changes.emplace_back(position_[u], depth_at_[position_[u]]);
      frame.new_depths.emplace_back(position_[u], d);
    }
    for (const auto& [at, d] : frame.new_depths) depth_at_[at] = std::max(depth_at_[at], d);
    frames_.push_back(std::move(frame));

    for (const auto& [at, d] : frames_.back().new_depths) {
      if (d > target_) return false;
    }
    for (std::size_t i = here + 1; i-- > 0;) suffix_[i] = std::max(suffix_[i + 1], depth_at_[i]);
    for (std::size_t i = 0; i <= here; ++i) {
      if (unplaced_up_[order_[i]] > 0 && 1 + suffix_[i + 1] > target_) return false;
    }
    return true;
  }

  void unplace() {
    Frame& frame = frames_.back();
    for (auto it = frame.depth_changes.rbegin(); it != frame.depth_changes.rend(); ++it) {
      depth_at_[it->first] = it->second;
    }
    const Element v = frame.element;
    for (Element w : p_.upper_covers(v)) ++missing_[w];
    for (Element u : p_.lower_covers(v)) ++unplaced_up_[u];
    placed_ &= ~(std::uint64_t{1} << v);
    order_.pop_back();
    frames_.pop_back();
  }

  // Everything the remainder of the search depends on: the placed set and,
  // in order, the placed elements with open covers and the deepest closed
  // rainbow after each of them.
  std::string state_key() const {
    std::string key(reinterpret_cast<const char*>(&placed_), sizeof(placed_));
    for (std::size_t i = 0; i < order_.size(); ++i) {
      if (unplaced_up_[order_[i]] == 0) continue;
      key.push_back(static_cast<char>(order_[i]));
      key.push_back(static_cast<char>(suffix_[i + 1]));
    }
    return key;
  }

  bool search() {
    if (order_.size() == n_) return true;
    if ((++nodes_ & 0x3ff) == 0) {
      if (deadline_.passed() || best_branch_.load(std::memory_order_relaxed) < branch_) {
        throw Aborted{};
      }
    }
    std::string key = state_key();
    if (failed_.contains(key)) return false;
    for (Element v = 0; v < n_; ++v) {
      if ((placed_ >> v) & 1 || missing_[v] != 0) continue;
      const bool ok = place(v);
      if (ok && search()) return true;
      unplace();
    }
    failed_.insert(std::move(key));
    return false;
  }

  struct Frame {
    Element element = 0;
    std::vector<std::pair<std::size_t, std::size_t>> depth_changes;
    std::vector<std::pair<std::size_t, std::size_t>> new_depths;
  };

  const Poset& p_;
  std::size_t n_;
  std::size_t target_;
  const Deadline& deadline_;
  const std::atomic<std::size_t>& best_branch_;
  std::size_t branch_;
  std::uint64_t placed_ = 0;
  std::vector<Element> order_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> missing_;
  std::vector<std::size_t> unplaced_up_;
  // Deepest closed rainbow whose outermost cover starts at each position.
  std::vector<std::size_t> depth_at_;
  std::vector<std::size_t> suffix_;
  std::vector<Frame> frames_;
  std::unordered_set<std::string> failed_;
  std::uint64_t nodes_ = 0;
};

enum class Outcome { kFound, kRefuted, kTimedOut };

// Runs the first-level branches of one target on `threads` workers. The
// reported extension is the one from the smallest successful branch.
Outcome search_target(const Poset& p, std::size_t target, const Deadline& deadline,
                      std::size_t threads, std::vector<Element>& found) {
  const std::vector<Element> roots = p.minimal_elements();
  std::atomic<std::size_t> best_branch{kNoBranch};
  std::atomic<std::size_t> next{0};
  std::atomic<bool> timed_out{false};
  std::mutex mutex;
  std::vector<Element> best_order;

  auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= roots.size() || b > best_branch.load()) return;
      TargetSearch search(p, target, deadline, best_branch, b);
      try {
        if (search.run(roots[b])) {
          std::lock_guard lock(mutex);
          if (b < best_branch.load()) {
            best_branch.store(b);
            best_order = search.order();
          }
        }
      } catch (const Aborted&) {
        if (deadline.passed()) timed_out.store(true);
      }
    }
  };

  const std::size_t count = std::max<std::size_t>(1, std::min(threads, roots.size()));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (best_branch.load() != kNoBranch) {
    // A timed-out smaller branch could still have succeeded; only report a
    // find when every smaller branch finished.
    if (timed_out.load()) return Outcome::kTimedOut;
    found = std::move(best_order);
    return Outcome::kFound;
  }
  return timed_out.load() ? Outcome::kTimedOut : Outcome::kRefuted;
}

// Every linear extension, scored by a full rainbow computation at the leaf.
void enumerate_all(const Poset& p, std::vector<Element>& order, std::vector<char>& placed,
                   std::vector<std::size_t>& missing, std::size_t& best,
                   std::vector<Element>& best_order, const Deadline& deadline) {
  const std::size_t n = p.size();
  if (order.size() == n) {
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    const std::size_t k = max_rainbow_in_order(p.covers(), pos).size;
    if (k < best) {
      best = k;
      best_order = order;
    }
    return;
  }
  if (deadline.passed()) throw Aborted{};
  for (Element v = 0; v < n; ++v) {
    if (placed[v] || missing[v] != 0) continue;
    placed[v] = 1;
    order.push_back(v);
    for (Element w : p.upper_covers(v)) --missing[w];
    enumerate_all(p, order, placed, missing, best, best_order, deadline);
    for (Element w : p.upper_covers(v)) ++missing[w];
    order.pop_back();
    placed[v] = 0;
  }
}

}  // namespace

std::size_t solver_threads_from_env() {
  if (const char* env = std::getenv("QUEUEPOSET_THREADS")) {
    try {
      const long value = std::stol(env);
      if (value >= 1) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

SolveResult exact_queue_number(const Poset& p, const SolverOptions& options) {
  if (p.size() > 64) throw TooLarge("exact search supports at most 64 elements");
  Deadline deadline;
  if (options.time_budget) {
    deadline.at = Clock::now() + std::chrono::duration_cast<Clock::duration>(*options.time_budget);
  }

  const QueueLayout heuristic = any_extension_layout(p);
  const std::size_t upper = heuristic.queue_count;

  if (!options.pruning) {
    std::vector<Element> order, best_order = heuristic.extension.order();
    std::vector<char> placed(p.size(), 0);
    std::vector<std::size_t> missing(p.size(), 0);
    for (const auto& c : p.covers()) ++missing[c.upper];
    std::size_t best = upper;
    try {
      enumerate_all(p, order, placed, missing, best, best_order, deadline);
    } catch (const Aborted&) {
      return Timeout{0, best, assign_queues(p, LinearExtension(p, best_order))};
    }
    if (options.limit && best > *options.limit) return LowerBoundOnly{*options.limit + 1};
    return Solved{best, assign_queues(p, LinearExtension(p, std::move(best_order)))};
  }

  const std::size_t threads = options.threads ? options.threads : solver_threads_from_env();
  for (std::size_t target = 0;; ++target) {
    if (options.limit && target > *options.limit) return LowerBoundOnly{*options.limit + 1};
    if (target >= upper) return Solved{upper, heuristic};
    std::vector<Element> found;
    switch (search_target(p, target, deadline, threads, found)) {
      case Outcome::kFound:
        return Solved{target, assign_queues(p, LinearExtension(p, std::move(found)))};
      case Outcome::kTimedOut:
        return Timeout{target, upper, heuristic};
      case Outcome::kRefuted:
        break;
    }
  }
}

std::size_t rainbow_bruteforce_oracle(const Poset& p, const LinearExtension& ext) {
  const auto& covers = p.covers();
  const std::size_t m = covers.size();
  if (m > 20) throw TooLarge("rainbow oracle supports at most 20 covers");
  if (find_order_violation(p, ext.order())) throw NotALinearExtension("not a linear extension");
  std::vector<std::size_t> pos(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) pos[ext.order()[i]] = i;

  // nests[i] has bit j set when covers i and j are nested either way.
  std::vector<std::uint32_t> nests(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && (nested_inside(covers[i], covers[j], pos) ||
                     nested_inside(covers[j], covers[i], pos))) {
        nests[i] |= std::uint32_t{1} << j;
      }
    }
  }
  std::size_t best = 0;
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << m); ++subset) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(subset));
    if (size <= best) continue;
    bool pairwise = true;
    for (std::size_t i = 0; i < m && pairwise; ++i) {
      if ((subset >> i) & 1) {
        const std::uint32_t others = subset & ~(std::uint32_t{1} << i);
        pairwise = (nests[i] & others) == others;
      }
    }
    if (pairwise) best = size;
  }
  return best;
}

}  // namespace queueposet
