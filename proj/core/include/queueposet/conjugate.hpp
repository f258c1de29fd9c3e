#pragma once

#include "queueposet/diagram.hpp"
#include "queueposet/poset.hpp"

namespace queueposet {

enum class ConjugateMethod {
  // Left-of relation read off maximal chains of a planar diagram.
  kDiagram,
  // Transitive orientation of the incomparability graph.
  kTransitiveOrientation,
};

struct Conjugate {
  Poset order;  // same elements as the input poset
  ConjugateMethod method = ConjugateMethod::kTransitiveOrientation;
};

// The conjugate order: distinct x, y are comparable in it iff they are
// incomparable in p. Uses the forcing-class transitive orientation algorithm;
// each implication class is oriented so that its lexicographically least
// remaining edge points from the smaller to the larger element index.
// Throws NotTwoDimensional when p has dimension greater than two.
Conjugate conjugate(const Poset& p);

// Geometric conjugate for a diagram of a poset with 0 and 1: x precedes y iff
// x lies strictly left of the polyline of a maximal chain through y. Falls
// back to the transitive orientation when the poset lacks a 0 or a 1. Throws
// NotTwoDimensional when the left-of relation is not a conjugate order.
Conjugate conjugate(const Poset& p, const UpwardDiagram& diagram);

// The linear extension ordering x before y iff x < y in p or in `dual`.
LinearExtension leftmost_extension(const Poset& p, const Poset& dual);

}  // namespace queueposet
