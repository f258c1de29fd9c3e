#pragma once

#include <optional>
#include <string>
#include <vector>

#include "queueposet/poset.hpp"

namespace queueposet {

struct Point {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point&) const = default;
};

// A poset with plane coordinates whose straight-line cover segments point
// upward and do not cross.
class UpwardDiagram {
 public:
  UpwardDiagram() = default;
  // Throws InvalidDiagram when a cover is not strictly y-increasing, two
  // elements share a point, a point lies in the interior of a cover segment,
  // or two cover segments cross.
  UpwardDiagram(Poset poset, std::vector<Point> position);

  const Poset& poset() const noexcept { return poset_; }
  const std::vector<Point>& positions() const noexcept { return position_; }
  const Point& position(Element e) const { return position_.at(e); }

  bool operator==(const UpwardDiagram&) const = default;

 private:
  Poset poset_;
  std::vector<Point> position_;
};

// Human-readable reason the coordinates do not form an upward planar
// straight-line diagram, or nullopt when they do.
std::optional<std::string> diagram_problem(const Poset& p, const std::vector<Point>& position);

namespace geometry {

// Sign of the cross product (b - a) x (c - a).
int orientation(const Point& a, const Point& b, const Point& c);

// True if the closed segments intersect anywhere other than at a shared
// endpoint (collinear overlaps count as intersections).
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);

bool on_segment_interior(const Point& p, const Point& a, const Point& b);

}  // namespace geometry

}  // namespace queueposet
