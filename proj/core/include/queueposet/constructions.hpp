#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "queueposet/diagram.hpp"
#include "queueposet/layout.hpp"
#include "queueposet/poset.hpp"

namespace queueposet {

// Subdivided k-crown on a1..ak, b1..bk, c1..ck: a_i < b_i < c_i for all i,
// diagonal covers a_i < c_{i-1} (i >= 2) and a_1 < c_k. Throws for k < 2.
Poset subdivided_crown(std::size_t k);

// Chain of antichains; level i has level_sizes[i] elements and every element
// of level i lies below every element of level i+1. Levels 0..25 are named
// with letters ("a1", "b3", ...), deeper levels "L27_1", ...
Poset weak_order(std::span<const std::size_t> level_sizes);

// Q_w: Q_1 is the two-element chain {lo < hi}; Q_w joins a lower and an upper
// copy of Q_{w-1} (prefixes "L." and "U.") with new elements a (the 0),
// b and c (the 1). The diagram stacks the copies on the line x = 0 and puts
// b to the right.
UpwardDiagram q_width(std::size_t w);

struct HeightTwoCounterexample {
  Poset poset;
  std::vector<Element> lower;  // X = {b1, ..., b10}
  std::vector<Element> upper;  // Y = {a1, a2} and c{i}_{j}
};

// 48 elements: b1..b10 below a1, a2, and four elements c{i}_1..c{i}_4 above
// b_i and b_{i+1} for i = 1..9.
HeightTwoCounterexample height2_counterexample();

// A 4-rainbow in any linear extension of height2_counterexample().poset,
// found by locating a pair b_i, b_{i+1} away from the first and last two
// b's and two c{i}_j in the same region relative to a1 and a2.
Rainbow counterexample_witness(const Poset& counterexample, const LinearExtension& ext);

struct VPoset {
  Element left = 0;    // x
  Element bottom = 0;  // y, minimal
  Element right = 0;   // z
};

struct HeightQueueFamily {
  Poset poset;
  std::vector<VPoset> v_posets;
};

// Q_h with its marked V-posets. Q_2 is the V {y < x, y < z}. Each step
// replaces the bottom y of every V-poset (x, y, z) by two new V-posets with
// bottoms y1 and y2: y1 < x, y1 < {y1l, y1r} < z, y2 < z,
// y2 < {y2l, y2r} < x; both bottoms inherit the other covers of y.
HeightQueueFamily q_height(std::size_t h);

// x < y iff x in class_a, y in class_b and xy is an edge. Throws
// NotBipartition if the classes do not partition the vertices or an edge
// stays inside a class.
Poset poset_from_bipartite(const std::vector<std::string>& vertices,
                           const std::vector<std::pair<std::string, std::string>>& edges,
                           const std::vector<std::string>& class_a,
                           const std::vector<std::string>& class_b);

// "2+2" (a < b, c < d) or "N" (a < b, c < d, c < b).
Poset small_pattern(std::string_view name);

}  // namespace queueposet
