#include "queueposet/diagram.hpp"

#include <algorithm>
#include <cmath>

#include "queueposet/errors.hpp"

namespace queueposet {

namespace geometry {

int orientation(const Point& a, const Point& b, const Point& c) {
  const double cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  const double scale = std::max({std::abs(b.x - a.x), std::abs(b.y - a.y), std::abs(c.x - a.x),
                                 std::abs(c.y - a.y), 1.0});
  const double eps = 1e-12 * scale * scale;
  if (cross > eps) return 1;
  if (cross < -eps) return -1;
  return 0;
}

namespace {

bool within_box(const Point& p, const Point& a, const Point& b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

}  // namespace

bool on_segment_interior(const Point& p, const Point& a, const Point& b) {
  if (p == a || p == b) return false;
  return orientation(a, b, p) == 0 && within_box(p, a, b);
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  const bool shared = a == c || a == d || b == c || b == d;
  if (shared) {
    // Segments sharing one endpoint only meet elsewhere if they overlap.
    if ((a == c && b == d) || (a == d && b == c)) return true;
    const Point& common = (a == c || a == d) ? a : b;
    const Point& p = common == a ? b : a;
    const Point& q = (common == c) ? d : c;
    if (orientation(common, p, q) != 0) return false;
    return on_segment_interior(q, common, p) || on_segment_interior(p, common, q);
  }
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
  if (o1 == 0 && within_box(c, a, b)) return true;
  if (o2 == 0 && within_box(d, a, b)) return true;
  if (o3 == 0 && within_box(a, c, d)) return true;
  if (o4 == 0 && within_box(b, c, d)) return true;
  return false;
}

}  // namespace geometry

std::optional<std::string> diagram_problem(const Poset& p, const std::vector<Point>& position) {
  const std::size_t n = p.size();
  if (position.size() != n) return "expected a position for every element";
  for (Element e = 0; e < n; ++e) {
    if (!std::isfinite(position[e].x) || !std::isfinite(position[e].y)) {
      return "non-finite coordinate for " + p.name(e);
    }
    for (Element f = e + 1; f < n; ++f) {
      if (position[e] == position[f]) return p.name(e) + " and " + p.name(f) + " share a point";
    }
  }
  const auto& covers = p.covers();
  for (const auto& [a, b] : covers) {
    if (!(position[a].y < position[b].y)) {
      return "cover " + p.name(a) + " < " + p.name(b) + " is not drawn upward";
    }
    for (Element e = 0; e < n; ++e) {
      if (geometry::on_segment_interior(position[e], position[a], position[b])) {
        return p.name(e) + " lies on cover " + p.name(a) + " < " + p.name(b);
      }
    }
  }
  for (std::size_t i = 0; i < covers.size(); ++i) {
    for (std::size_t j = i + 1; j < covers.size(); ++j) {
      const auto& c = covers[i];
      const auto& d = covers[j];
      if (geometry::segments_cross(position[c.lower], position[c.upper], position[d.lower],
                                   position[d.upper])) {
        return "covers " + p.name(c.lower) + " < " + p.name(c.upper) + " and " +
               p.name(d.lower) + " < " + p.name(d.upper) + " cross";
      }
    }
  }
  return std::nullopt;
}

UpwardDiagram::UpwardDiagram(Poset poset, std::vector<Point> position)
    : poset_(std::move(poset)), position_(std::move(position)) {
  if (auto problem = diagram_problem(poset_, position_)) throw InvalidDiagram(*problem);
}

}  // namespace queueposet
