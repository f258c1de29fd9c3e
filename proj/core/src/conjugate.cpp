#include "queueposet/conjugate.hpp"

#include <algorithm>
#include <deque>

#include "queueposet/errors.hpp"

namespace queueposet {

namespace {

bool is_transitive(const std::vector<char>& rel, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!rel[a * n + b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (rel[b * n + c] && !rel[a * n + c]) return false;
      }
    }
  }
  return true;
}

// Checks that `rel` is a strict order comparable exactly on the incomparable
// pairs of p, then wraps it as a Poset.
Poset to_dual(const Poset& p, const std::vector<char>& rel) {
  const std::size_t n = p.size();
  std::vector<std::pair<Element, Element>> arcs;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!rel[a * n + b]) continue;
      if (rel[b * n + a] || !p.incomparable(a, b)) {
        throw NotTwoDimensional("conjugate relation is not antisymmetric on incomparable pairs");
      }
      arcs.emplace_back(a, b);
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (p.incomparable(a, b) && !rel[a * n + b] && !rel[b * n + a]) {
        throw NotTwoDimensional("conjugate relation leaves " + p.name(a) + ", " + p.name(b) +
                                " unordered");
      }
    }
  }
  if (!is_transitive(rel, n)) {
    throw NotTwoDimensional("incomparability graph has no transitive orientation");
  }
  return Poset::from_index_pairs(p.names(), arcs);
}

// Maximal chain through y: smallest-index lower covers down to the minimum,
// smallest-index upper covers up to the maximum.
std::vector<Element> maximal_chain_through(const Poset& p, Element y) {
  std::vector<Element> chain{y};
  for (Element v = y; !p.lower_covers(v).empty();) {
    v = p.lower_covers(v).front();
    chain.push_back(v);
  }
  std::reverse(chain.begin(), chain.end());
  for (Element v = y; !p.upper_covers(v).empty();) {
    v = p.upper_covers(v).front();
    chain.push_back(v);
  }
  return chain;
}

// +1 if `pt` is left of the y-monotone polyline, -1 if right, 0 if outside
// its vertical range or on it.
int side_of_polyline(const std::vector<Point>& line, const Point& pt) {
  for (std::size_t i = 0; i + 1 < line.size(); ++i) {
    const Point& lo = line[i];
    const Point& hi = line[i + 1];
    if (lo.y <= pt.y && pt.y <= hi.y) return geometry::orientation(lo, hi, pt);
  }
  return 0;
}

}  // namespace

Conjugate conjugate(const Poset& p) {
  const std::size_t n = p.size();
  // Remaining undirected edges of the incomparability graph.
  std::vector<char> remaining(n * n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) remaining[a * n + b] = p.incomparable(a, b);
  }
  std::vector<char> oriented(n * n, 0);
  auto edge = [&](Element a, Element b) { return remaining[a * n + b] != 0; };

  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (!edge(a, b)) continue;
      // Implication class of arc a -> b in the remaining graph.
      std::vector<char> in_class(n * n, 0);
      std::vector<std::pair<Element, Element>> members;
      std::deque<std::pair<Element, Element>> queue{{a, b}};
      in_class[a * n + b] = 1;
      while (!queue.empty()) {
        auto [u, v] = queue.front();
        queue.pop_front();
        members.emplace_back(u, v);
        if (in_class[v * n + u]) {
          throw NotTwoDimensional("incomparability graph has no transitive orientation");
        }
        for (Element w = 0; w < n; ++w) {
          // u -> v forces u -> w when uw is an edge and vw is not.
          if (w != v && edge(u, w) && !edge(v, w) && !in_class[u * n + w]) {
            in_class[u * n + w] = 1;
            queue.emplace_back(u, w);
          }
          // u -> v forces w -> v when wv is an edge and uw is not.
          if (w != u && edge(w, v) && !edge(u, w) && !in_class[w * n + v]) {
            in_class[w * n + v] = 1;
            queue.emplace_back(w, v);
          }
        }
      }
      for (const auto& [u, v] : members) {
        if (in_class[v * n + u]) {
          throw NotTwoDimensional("incomparability graph has no transitive orientation");
        }
      }
      for (const auto& [u, v] : members) {
        oriented[u * n + v] = 1;
        remaining[u * n + v] = 0;
        remaining[v * n + u] = 0;
      }
    }
  }
  return {to_dual(p, oriented), ConjugateMethod::kTransitiveOrientation};
}

Conjugate conjugate(const Poset& p, const UpwardDiagram& diagram) {
  if (!(diagram.poset() == p)) throw InvalidDiagram("diagram belongs to a different poset");
  if (!p.zero() || !p.one()) return conjugate(p);

  const std::size_t n = p.size();
  std::vector<char> left_of(n * n, 0);
  for (Element y = 0; y < n; ++y) {
    std::vector<Point> line;
    for (Element v : maximal_chain_through(p, y)) line.push_back(diagram.position(v));
    for (Element x = 0; x < n; ++x) {
      if (!p.incomparable(x, y)) continue;
      const int side = side_of_polyline(line, diagram.position(x));
      if (side == 0) throw NotTwoDimensional("element " + p.name(x) + " touches a maximal chain");
      if (side > 0) left_of[x * n + y] = 1;
    }
  }
  return {to_dual(p, left_of), ConjugateMethod::kDiagram};
}

LinearExtension leftmost_extension(const Poset& p, const Poset& dual) {
  const std::size_t n = p.size();
  std::vector<Element> order(n, n);
  for (Element x = 0; x < n; ++x) {
    std::size_t before = 0;
    for (Element y = 0; y < n; ++y) before += p.less(y, x) || dual.less(y, x);
    if (before >= n || order[before] != n) {
      throw NotTwoDimensional("p and its conjugate do not form a total order");
    }
    order[before] = x;
  }
  return LinearExtension(p, std::move(order));
}

}  // namespace queueposet
