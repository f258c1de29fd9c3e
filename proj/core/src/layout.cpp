#include "queueposet/layout.hpp"

#include <algorithm>
#include <numeric>

#include "queueposet/errors.hpp"

namespace queueposet {

namespace {

struct Interval {
  std::size_t left;
  std::size_t right;
};

Interval interval_of(const Cover& c, std::span<const std::size_t> position) {
  const std::size_t a = position[c.lower];
  const std::size_t b = position[c.upper];
  return {std::min(a, b), std::max(a, b)};
}

// Fenwick tree over reversed right endpoints answering "deepest interval
// with right endpoint > r" as a prefix maximum.
class DeepestAbove {
 public:
  explicit DeepestAbove(std::size_t n) : n_(n), tree_(n + 1, {0, kNone}) {}

  void insert(std::size_t right, std::size_t depth, std::size_t id) {
    for (std::size_t i = n_ - right; i <= n_; i += i & (~i + 1)) {
      if (depth > tree_[i].first) tree_[i] = {depth, id};
    }
  }

  // Maximum over inserted rights strictly greater than `right`.
  std::pair<std::size_t, std::size_t> query(std::size_t right) const {
    std::pair<std::size_t, std::size_t> best{0, kNone};
    for (std::size_t i = n_ - right - 1; i > 0; i -= i & (~i + 1)) {
      if (tree_[i].first > best.first) best = tree_[i];
    }
    return best;
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> tree_;
};

struct DepthTable {
  std::vector<std::size_t> depth;
  std::vector<std::size_t> outer;  // predecessor in a deepest containment chain
};

DepthTable compute_depths(std::span<const Cover> covers, std::span<const std::size_t> position) {
  const std::size_t m = covers.size();
  DepthTable t{std::vector<std::size_t>(m, 0), std::vector<std::size_t>(m, DeepestAbove::kNone)};
  if (m == 0) return t;
  std::vector<Interval> iv(m);
  std::size_t span_end = 0;
  for (std::size_t i = 0; i < m; ++i) {
    iv[i] = interval_of(covers[i], position);
    span_end = std::max(span_end, iv[i].right + 1);
  }
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (iv[a].left != iv[b].left) return iv[a].left < iv[b].left;
    if (iv[a].right != iv[b].right) return iv[a].right > iv[b].right;
    return a < b;
  });
  DeepestAbove tree(span_end);
  // Intervals sharing a left endpoint never nest, so a whole group is
  // queried before any of it is inserted.
  for (std::size_t g = 0; g < m;) {
    std::size_t h = g;
    while (h < m && iv[idx[h]].left == iv[idx[g]].left) ++h;
    for (std::size_t k = g; k < h; ++k) {
      const std::size_t c = idx[k];
      auto [d, from] = tree.query(iv[c].right);
      t.depth[c] = d + 1;
      t.outer[c] = from;
    }
    for (std::size_t k = g; k < h; ++k) {
      const std::size_t c = idx[k];
      tree.insert(iv[c].right, t.depth[c], c);
    }
    g = h;
  }
  return t;
}

void require_extension(const Poset& p, const LinearExtension& ext) {
  if (auto bad = find_order_violation(p, ext.order())) {
    throw NotALinearExtension("not a linear extension: " + p.name(bad->first) + " < " +
                              p.name(bad->second));
  }
}

std::vector<std::size_t> positions_of(const LinearExtension& ext) {
  std::vector<std::size_t> pos(ext.size());
  for (std::size_t i = 0; i < ext.size(); ++i) pos[ext.order()[i]] = i;
  return pos;
}

}  // namespace

bool nested_inside(const Cover& c, const Cover& d, std::span<const std::size_t> position) {
  const Interval inner = interval_of(c, position);
  const Interval outer = interval_of(d, position);
  return outer.left < inner.left && inner.right < outer.right;
}

std::vector<std::size_t> nesting_depths(std::span<const Cover> covers,
                                        std::span<const std::size_t> position) {
  return compute_depths(covers, position).depth;
}

RainbowResult max_rainbow_in_order(std::span<const Cover> covers,
                                   std::span<const std::size_t> position) {
  const DepthTable t = compute_depths(covers, position);
  RainbowResult result;
  if (covers.empty()) return result;
  std::size_t inner = static_cast<std::size_t>(
      std::max_element(t.depth.begin(), t.depth.end()) - t.depth.begin());
  result.size = t.depth[inner];
  for (std::size_t c = inner; c != DeepestAbove::kNone; c = t.outer[c]) {
    result.witness.covers.push_back(covers[c]);
  }
  std::reverse(result.witness.covers.begin(), result.witness.covers.end());
  return result;
}

RainbowResult max_rainbow(const Poset& p, const LinearExtension& ext) {
  require_extension(p, ext);
  const auto pos = positions_of(ext);
  return max_rainbow_in_order(p.covers(), pos);
}

QueueLayout assign_queues(const Poset& p, const LinearExtension& ext) {
  require_extension(p, ext);
  const auto pos = positions_of(ext);
  const auto depth = nesting_depths(p.covers(), pos);
  QueueLayout layout;
  layout.extension = ext;
  for (std::size_t i = 0; i < depth.size(); ++i) {
    layout.queue_of.emplace(p.covers()[i], depth[i] - 1);
    layout.queue_count = std::max(layout.queue_count, depth[i]);
  }
  return layout;
}

bool is_rainbow(const Poset& p, const LinearExtension& ext, const Rainbow& rainbow) {
  if (find_order_violation(p, ext.order())) return false;
  const auto pos = positions_of(ext);
  for (std::size_t i = 0; i < rainbow.covers.size(); ++i) {
    const Cover& c = rainbow.covers[i];
    if (c.lower >= p.size() || c.upper >= p.size() || !p.is_cover(c.lower, c.upper)) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (!nested_inside(c, rainbow.covers[j], pos)) return false;
    }
  }
  return true;
}

ViolationReport verify_layout(const Poset& p, const QueueLayout& layout) {
  ViolationReport report;
  auto describe = [&](const Cover& c) { return p.name(c.lower) + " < " + p.name(c.upper); };

  const auto& order = layout.extension.order();
  std::optional<std::pair<Element, Element>> bad;
  try {
    bad = find_order_violation(p, order);
  } catch (const NotALinearExtension& e) {
    report.violations.push_back({Violation::Kind::kNotALinearExtension, e.what(), {}, {}});
    return report;
  }
  if (bad) {
    Cover c{bad->first, bad->second};
    report.violations.push_back(
        {Violation::Kind::kNotALinearExtension, "not a linear extension: " + describe(c), c, {}});
  }

  for (const Cover& c : p.covers()) {
    if (!layout.queue_of.contains(c)) {
      report.violations.push_back(
          {Violation::Kind::kUnassignedCover, "cover " + describe(c) + " has no queue", c, {}});
    }
  }
  std::vector<std::vector<Cover>> by_queue(layout.queue_count);
  for (const auto& [c, q] : layout.queue_of) {
    if (c.lower >= p.size() || c.upper >= p.size() || !p.is_cover(c.lower, c.upper)) {
      report.violations.push_back(
          {Violation::Kind::kNotACover, "assigned pair is not a cover", c, {}});
      continue;
    }
    if (q >= layout.queue_count) {
      report.violations.push_back({Violation::Kind::kQueueOutOfRange,
                                   "cover " + describe(c) + " uses queue " + std::to_string(q) +
                                       " of " + std::to_string(layout.queue_count),
                                   c,
                                   {}});
      continue;
    }
    by_queue[q].push_back(c);
  }
  if (bad) return report;

  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (std::size_t q = 0; q < by_queue.size(); ++q) {
    const auto& members = by_queue[q];
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (i != j && nested_inside(members[i], members[j], pos)) {
          report.violations.push_back({Violation::Kind::kNestedInQueue,
                                       describe(members[i]) + " nests inside " +
                                           describe(members[j]) + " in queue " +
                                           std::to_string(q),
                                       members[i], members[j]});
        }
      }
    }
  }
  return report;
}

}  // namespace queueposet
