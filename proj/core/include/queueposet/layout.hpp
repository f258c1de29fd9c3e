#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "queueposet/poset.hpp"

namespace queueposet {

// Covers that pairwise nest, outermost first.
struct Rainbow {
  std::vector<Cover> covers;

  std::size_t size() const noexcept { return covers.size(); }
};

struct QueueLayout {
  LinearExtension extension;
  std::map<Cover, std::size_t> queue_of;
  std::size_t queue_count = 0;
};

struct RainbowResult {
  std::size_t size = 0;
  Rainbow witness;
};

// Strict nesting: c lies strictly inside d under the given positions.
bool nested_inside(const Cover& c, const Cover& d, std::span<const std::size_t> position);

// Largest rainbow among `covers` for an arbitrary vertex ordering. Each cover
// is treated as the interval between the positions of its endpoints.
RainbowResult max_rainbow_in_order(std::span<const Cover> covers,
                                   std::span<const std::size_t> position);

// Nesting depth of each cover: the length of the longest chain of covers
// strictly containing it, counting itself.
std::vector<std::size_t> nesting_depths(std::span<const Cover> covers,
                                        std::span<const std::size_t> position);

// Throws NotALinearExtension if ext does not extend p.
RainbowResult max_rainbow(const Poset& p, const LinearExtension& ext);

// Queue index of a cover = nesting depth - 1, so queue_count equals the
// maximum rainbow size for the given extension.
QueueLayout assign_queues(const Poset& p, const LinearExtension& ext);

// Checks that every listed cover pairwise nests in the given order.
bool is_rainbow(const Poset& p, const LinearExtension& ext, const Rainbow& rainbow);

struct Violation {
  enum class Kind {
    kNotALinearExtension,
    kUnassignedCover,
    kNotACover,
    kQueueOutOfRange,
    kNestedInQueue,
  };
  Kind kind;
  std::string message;
  Cover first{};
  Cover second{};
};

struct ViolationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

ViolationReport verify_layout(const Poset& p, const QueueLayout& layout);

}  // namespace queueposet
