#include <algorithm>

#include "queueposet/errors.hpp"
#include "queueposet/strategies.hpp"

namespace queueposet {

QueueLayout leftmost_layout(const Poset& p, const UpwardDiagram* diagram) {
  if (p.empty()) return QueueLayout{};
  if (!p.zero()) throw MissingBounds("poset has no unique minimum");
  if (!p.one()) throw MissingBounds("poset has no unique maximum");
  const Conjugate dual = diagram ? conjugate(p, *diagram) : conjugate(p);
  return assign_queues(p, leftmost_extension(p, dual.order));
}

LinearExtension color_split_extension(const Poset& p, std::span<const Element> cover_order,
                                      const std::vector<std::vector<Element>>& levels) {
  const std::size_t n = p.size();
  auto expected = minimal_levels(p);
  auto given = levels;
  for (auto& level : given) std::sort(level.begin(), level.end());
  if (given != expected) {
    throw InvalidLevels("levels are not the minimal-removal partition of the poset");
  }
  if (cover_order.size() != n) throw InvalidLevels("vertex ordering has the wrong length");
  std::vector<std::size_t> rank(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (cover_order[i] >= n || rank[cover_order[i]] != n) {
      throw InvalidLevels("vertex ordering is not a permutation");
    }
    rank[cover_order[i]] = i;
  }
  std::vector<Element> order;
  order.reserve(n);
  for (auto level : given) {
    std::sort(level.begin(), level.end(),
              [&](Element a, Element b) { return rank[a] < rank[b]; });
    order.insert(order.end(), level.begin(), level.end());
  }
  return LinearExtension(p, std::move(order));
}

}  // namespace queueposet
