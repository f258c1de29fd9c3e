#pragma once

// Slow, obviously-correct reference computations used to cross-check the
// library. None of them call library algorithms beyond Poset accessors.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "queueposet/poset.hpp"

namespace oracle {

using queueposet::Cover;
using queueposet::Element;
using queueposet::Poset;

using Matrix = std::vector<std::vector<bool>>;

// Floyd-Warshall closure of the given pairs. Returns false on a cycle.
inline bool closure(std::size_t n, const std::vector<std::pair<Element, Element>>& pairs,
                    Matrix& lt) {
  lt.assign(n, std::vector<bool>(n, false));
  for (const auto& [a, b] : pairs) lt[a][b] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (lt[i][k] && lt[k][j]) lt[i][j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (lt[i][i]) return false;
  }
  return true;
}

inline std::vector<Cover> covers(const Matrix& lt) {
  const std::size_t n = lt.size();
  std::vector<Cover> out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!lt[a][b]) continue;
      bool between = false;
      for (std::size_t c = 0; c < n && !between; ++c) between = lt[a][c] && lt[c][b];
      if (!between) out.push_back({a, b});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Largest antichain by include/exclude branching (n <= 64).
inline std::size_t max_antichain(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::uint64_t> clash(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && p.comparable(i, j)) clash[i] |= std::uint64_t{1} << j;
    }
  }
  std::size_t best = 0;
  // Branch on the lowest candidate: take it or drop it.
  std::function<void(std::uint64_t, std::size_t)> grow = [&](std::uint64_t cand, std::size_t size) {
    if (size + static_cast<std::size_t>(__builtin_popcountll(cand)) <= best) return;
    if (cand == 0) {
      best = size;
      return;
    }
    const auto v = static_cast<std::size_t>(__builtin_ctzll(cand));
    const std::uint64_t rest = cand & ~(std::uint64_t{1} << v);
    grow(rest & ~clash[v], size + 1);
    grow(rest, size);
  };
  grow(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0);
  return best;
}

// Number of elements on a longest chain, by memoized recursion on `less`.
inline std::size_t longest_chain(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> memo(n, 0);
  std::function<std::size_t(Element)> up = [&](Element v) -> std::size_t {
    if (memo[v]) return memo[v];
    std::size_t best = 1;
    for (Element w = 0; w < n; ++w) {
      if (p.less(v, w)) best = std::max(best, 1 + up(w));
    }
    return memo[v] = best;
  };
  std::size_t best = 0;
  for (Element v = 0; v < n; ++v) best = std::max(best, up(v));
  return best;
}

inline bool is_linear_extension(const Poset& p, const std::vector<Element>& order) {
  if (order.size() != p.size()) return false;
  std::vector<std::size_t> pos(p.size(), p.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= p.size() || pos[order[i]] != p.size()) return false;
    pos[order[i]] = i;
  }
  for (Element a = 0; a < p.size(); ++a) {
    for (Element b = 0; b < p.size(); ++b) {
      if (p.less(a, b) && pos[a] > pos[b]) return false;
    }
  }
  return true;
}

// Calls visit(order) for every linear extension.
inline void for_each_extension(const Poset& p,
                               const std::function<void(const std::vector<Element>&)>& visit) {
  const std::size_t n = p.size();
  std::vector<Element> order;
  std::vector<bool> used(n, false);
  std::function<void()> rec = [&] {
    if (order.size() == n) {
      visit(order);
      return;
    }
    for (Element v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ready = true;
      for (Element u = 0; u < n && ready; ++u) ready = used[u] || !p.less(u, v);
      if (!ready) continue;
      used[v] = true;
      order.push_back(v);
      rec();
      order.pop_back();
      used[v] = false;
    }
  };
  rec();
}

// Largest rainbow in a vertex order: longest chain in the strict nesting
// order of covers, by quadratic dynamic programming over interval lengths.
inline std::size_t rainbow(const Poset& p, const std::vector<Element>& order) {
  std::vector<std::size_t> pos(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  struct Iv {
    std::size_t l, r;
  };
  std::vector<Iv> iv;
  for (const auto& c : p.covers()) {
    iv.push_back({std::min(pos[c.lower], pos[c.upper]), std::max(pos[c.lower], pos[c.upper])});
  }
  std::sort(iv.begin(), iv.end(), [](const Iv& a, const Iv& b) { return a.r - a.l < b.r - b.l; });
  std::vector<std::size_t> best(iv.size(), 1);
  std::size_t out = 0;
  for (std::size_t i = 0; i < iv.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (iv[i].l < iv[j].l && iv[j].r < iv[i].r) best[i] = std::max(best[i], best[j] + 1);
    }
    out = std::max(out, best[i]);
  }
  return out;
}

// Minimum over all linear extensions of the largest rainbow.
inline std::size_t queue_number(const Poset& p) {
  std::size_t best = p.covers().size();
  for_each_extension(p, [&](const std::vector<Element>& order) {
    best = std::min(best, rainbow(p, order));
  });
  return best;
}

}  // namespace oracle
