#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

#include "queueposet/errors.hpp"
#include "queueposet/strategies.hpp"

namespace queueposet {

namespace {

// (gray edges, cover edges), compared lexicographically.
using Weight = std::pair<std::size_t, std::size_t>;
constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

struct Arc {
  Element to;
  bool gray;
};

struct AugmentedGraph {
  std::vector<std::vector<Arc>> out;
  std::map<std::pair<Element, Element>, Element> witness;  // gray edge -> z
};

AugmentedGraph build_graph(const Poset& p, const GrayGraph& g) {
  AugmentedGraph graph;
  graph.out.resize(p.size());
  for (const auto& c : g.cover_edges) graph.out[c.lower].push_back({c.upper, false});
  for (const auto& e : g.gray_edges) {
    graph.out[e.from].push_back({e.to, true});
    graph.witness.emplace(std::pair{e.from, e.to}, e.witness);
  }
  for (auto& arcs : graph.out) {
    std::sort(arcs.begin(), arcs.end(),
              [](const Arc& a, const Arc& b) { return a.to < b.to; });
  }
  return graph;
}

Weight add(Weight w, bool gray) {
  if (gray) ++w.first;
  else ++w.second;
  return w;
}

bool is_gray(const AugmentedGraph& g, Element from, Element to) {
  return g.witness.contains({from, to});
}

Weight walk_weight(const AugmentedGraph& g, const std::vector<Element>& cycle) {
  Weight w{0, 0};
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    w = add(w, is_gray(g, cycle[i], cycle[(i + 1) % cycle.size()]));
  }
  return w;
}

// Lexicographically lightest directed cycle (fewest gray edges, then fewest
// cover edges); ties go to the smallest start vertex.
std::vector<Element> lightest_cycle(const AugmentedGraph& g) {
  const std::size_t n = g.out.size();
  Weight best{kInf, kInf};
  std::vector<Element> best_cycle;
  for (Element s = 0; s < n; ++s) {
    std::vector<Weight> dist(n, Weight{kInf, kInf});
    std::vector<Element> prev(n, n);
    using Item = std::pair<Weight, Element>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[s] = {0, 0};
    heap.push({dist[s], s});
    while (!heap.empty()) {
      auto [d, v] = heap.top();
      heap.pop();
      if (d != dist[v]) continue;
      for (const Arc& arc : g.out[v]) {
        if (arc.to == s) continue;
        Weight nd = add(d, arc.gray);
        if (nd < dist[arc.to]) {
          dist[arc.to] = nd;
          prev[arc.to] = v;
          heap.push({nd, arc.to});
        }
      }
    }
    for (Element u = 0; u < n; ++u) {
      if (dist[u].first == kInf) continue;
      for (const Arc& arc : g.out[u]) {
        if (arc.to != s) continue;
        Weight w = add(dist[u], arc.gray);
        if (w < best) {
          best = w;
          best_cycle.clear();
          for (Element v = u; v != s; v = prev[v]) best_cycle.push_back(v);
          best_cycle.push_back(s);
          std::reverse(best_cycle.begin(), best_cycle.end());
        }
      }
    }
  }
  return best_cycle;
}

// Splits a closed walk at repeated vertices and keeps the lightest simple
// cycle that still has a gray edge.
std::vector<Element> simplify_walk(const AugmentedGraph& g, std::vector<Element> walk) {
  for (;;) {
    bool split = false;
    for (std::size_t i = 0; i < walk.size() && !split; ++i) {
      for (std::size_t j = i + 1; j < walk.size() && !split; ++j) {
        if (walk[i] != walk[j]) continue;
        std::vector<Element> inner(walk.begin() + i, walk.begin() + j);
        std::vector<Element> outer(walk.begin(), walk.begin() + i);
        outer.insert(outer.end(), walk.begin() + j, walk.end());
        Weight wi = walk_weight(g, inner);
        Weight wo = walk_weight(g, outer);
        bool take_inner = wi.first > 0 && (wo.first == 0 || wi < wo);
        walk = take_inner ? std::move(inner) : std::move(outer);
        split = true;
      }
    }
    if (!split) return walk;
  }
}

std::vector<Element> cover_path(const Poset& p, Element from, Element to) {
  std::vector<Element> prev(p.size(), p.size());
  std::queue<Element> queue;
  queue.push(from);
  prev[from] = from;
  while (!queue.empty()) {
    Element v = queue.front();
    queue.pop();
    if (v == to) break;
    for (Element w : p.upper_covers(v)) {
      if (prev[w] == p.size()) {
        prev[w] = v;
        queue.push(w);
      }
    }
  }
  std::vector<Element> path;
  for (Element v = to; v != from; v = prev[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

// Removes cover edges from the cycle: a gray edge c1 -> c2 followed by a
// cover c2 -> c3 becomes the gray edge c1 -> c3 when c1 || c3, and is
// replaced by a cover path from c1 to c3 when c1 < c3.
std::vector<Element> reduce_to_gray(const Poset& p, const AugmentedGraph& g,
                                    std::vector<Element> cycle) {
  for (;;) {
    const std::size_t l = cycle.size();
    std::size_t at = l;
    for (std::size_t i = 0; i < l && at == l; ++i) {
      Element c1 = cycle[i], c2 = cycle[(i + 1) % l], c3 = cycle[(i + 2) % l];
      if (is_gray(g, c1, c2) && !is_gray(g, c2, c3)) at = i;
    }
    if (at == l) return cycle;
    std::rotate(cycle.begin(), cycle.begin() + at, cycle.end());
    Element c1 = cycle[0], c3 = cycle[2];
    if (p.incomparable(c1, c3)) {
      if (!is_gray(g, c1, c3)) throw std::logic_error("missing shortcut gray edge");
      cycle.erase(cycle.begin() + 1);
    } else {
      auto path = cover_path(p, c1, c3);
      std::vector<Element> walk(path.begin(), path.end() - 1);
      walk.insert(walk.end(), cycle.begin() + 2, cycle.end());
      cycle = simplify_walk(g, std::move(walk));
    }
  }
}

}  // namespace

GrayGraph gray_graph(const Poset& p) {
  GrayGraph g;
  g.cover_edges = p.covers();
  const std::size_t n = p.size();
  std::map<std::pair<Element, Element>, Element> found;
  for (Element z = 0; z < n; ++z) {
    for (Element x : p.upper_covers(z)) {
      for (Element y = 0; y < n; ++y) {
        if (p.less(z, y) && !p.is_cover(z, y) && p.incomparable(x, y)) {
          found.emplace(std::pair{x, y}, z);
        }
      }
    }
  }
  for (const auto& [edge, z] : found) g.gray_edges.push_back({edge.first, edge.second, z});
  return g;
}

bool is_valid_crown(const Poset& p, const CrownEmbedding& crown) {
  const std::size_t k = crown.k;
  if (k < 2 || crown.a.size() != k || crown.b.size() != k || crown.c.size() != k) return false;
  std::vector<Element> all;
  for (const auto* part : {&crown.a, &crown.b, &crown.c}) all.insert(all.end(), part->begin(), part->end());
  for (Element e : all) {
    if (e >= p.size()) return false;
  }
  auto sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

  if (!p.is_cover(crown.a[0], crown.c[k - 1])) return false;
  for (std::size_t i = 1; i < k; ++i) {
    if (!p.is_cover(crown.a[i], crown.c[i - 1])) return false;
  }
  // Index layout in `all`: a = [0, k), b = [k, 2k), c = [2k, 3k).
  auto crown_less = [&](std::size_t u, std::size_t v) {
    if (u < k) {
      const std::size_t i = u;
      if (v == k + i || v == 2 * k + i) return true;
      if (i == 0) return v == 3 * k - 1;
      return v == 2 * k + i - 1;
    }
    if (u < 2 * k) return v == u + k;
    return false;
  };
  for (std::size_t u = 0; u < 3 * k; ++u) {
    for (std::size_t v = 0; v < 3 * k; ++v) {
      if (u != v && p.less(all[u], all[v]) != crown_less(u, v)) return false;
    }
  }
  return true;
}

std::variant<QueueLayout, CrownEmbedding> crown_free_layout(const Poset& p) {
  const std::size_t n = p.size();
  const GrayGraph gray = gray_graph(p);
  const AugmentedGraph g = build_graph(p, gray);

  std::vector<std::size_t> indeg(n);
  for (const auto& arcs : g.out) {
    for (const Arc& arc : arcs) ++indeg[arc.to];
  }
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (Element e = 0; e < n; ++e) {
    if (indeg[e] == 0) ready.push(e);
  }
  std::vector<Element> order;
  while (!ready.empty()) {
    Element v = ready.top();
    ready.pop();
    order.push_back(v);
    for (const Arc& arc : g.out[v]) {
      if (--indeg[arc.to] == 0) ready.push(arc.to);
    }
  }
  if (order.size() == n) return assign_queues(p, LinearExtension(p, std::move(order)));

  std::vector<Element> cycle = reduce_to_gray(p, g, lightest_cycle(g));
  const std::size_t k = cycle.size();
  CrownEmbedding crown;
  crown.k = k;
  crown.c = cycle;
  for (std::size_t i = 0; i < k; ++i) {
    Element before = cycle[(i + k - 1) % k];
    crown.a.push_back(g.witness.at({before, cycle[i]}));
  }
  for (std::size_t i = 0; i < k; ++i) {
    Element pick = n;
    for (Element b = 0; b < n && pick == n; ++b) {
      if (p.less(crown.a[i], b) && p.less(b, crown.c[i])) pick = b;
    }
    if (pick == n) throw std::logic_error("crown witness has no middle element");
    crown.b.push_back(pick);
  }
  if (!is_valid_crown(p, crown)) throw std::logic_error("extracted crown fails validation");
  return crown;
}

}  // namespace queueposet
