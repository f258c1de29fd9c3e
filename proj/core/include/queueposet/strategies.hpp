#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "queueposet/conjugate.hpp"
#include "queueposet/diagram.hpp"
#include "queueposet/layout.hpp"
#include "queueposet/poset.hpp"

namespace queueposet {

// ---------------------------------------------------------------------------
// Arbitrary extensions
// ---------------------------------------------------------------------------

// Topological order taking the smallest-index minimal element first.
LinearExtension min_index_extension(const Poset& p);

// Any linear extension has at most width^2 nesting covers.
QueueLayout any_extension_layout(const Poset& p);

// ---------------------------------------------------------------------------
// Width two
// ---------------------------------------------------------------------------

// Lazy extension of a poset with a 0 with respect to a chain partition into
// at most two chains: after the first element, the next element comes from
// the chain of the previous one whenever that chain offers a minimal element.
LinearExtension lazy_extension(const Poset& p, const ChainPartition& partition);

// Maximal runs of consecutive elements from the same chain.
std::vector<std::vector<Element>> blocks(const LinearExtension& ext,
                                         const ChainPartition& partition, std::size_t n);

// At most two queues for posets of width at most two. Throws WidthExceeded.
QueueLayout lazy_width2_layout(const Poset& p);

// Pairs chains (0,1), (2,3), ... of a minimum chain partition and merges the
// lazy extensions of the pairs; at most w^2 - 2*floor(w/2) queues.
QueueLayout paired_chain_layout(const Poset& p);

// The chain pairs used by paired_chain_layout, as element sets (the last
// entry may hold a single unpaired chain).
std::vector<std::vector<Element>> chain_pairs(const Poset& p);

// ---------------------------------------------------------------------------
// Gray graph and subdivided crowns
// ---------------------------------------------------------------------------

struct GrayEdge {
  Element from = 0;
  Element to = 0;
  Element witness = 0;  // z with z covered by `from` and z < `to` not a cover
};

struct GrayGraph {
  std::vector<Cover> cover_edges;
  std::vector<GrayEdge> gray_edges;  // sorted by (from, to)
};

GrayGraph gray_graph(const Poset& p);

// An embedded subdivided k-crown: a[i] < b[i] < c[i], with diagonal covers
// a[0] < c[k-1] and a[i] < c[i-1] for i >= 1 (0-based).
struct CrownEmbedding {
  std::size_t k = 0;
  std::vector<Element> a;
  std::vector<Element> b;
  std::vector<Element> c;
};

// Checks distinctness, the diagonal covers, and that the 3k elements induce
// exactly the order of the subdivided k-crown.
bool is_valid_crown(const Poset& p, const CrownEmbedding& crown);

// A layout with at most width(p) queues taken from a topological order of
// the gray graph, or a crown certificate when the gray graph has a cycle.
std::variant<QueueLayout, CrownEmbedding> crown_free_layout(const Poset& p);

// ---------------------------------------------------------------------------
// Planar posets with 0 and 1
// ---------------------------------------------------------------------------

// Orders incomparable pairs by the conjugate order. Throws MissingBounds
// without a 0 and a 1, NotTwoDimensional if no conjugate exists.
QueueLayout leftmost_layout(const Poset& p, const UpwardDiagram* diagram = nullptr);

// ---------------------------------------------------------------------------
// Level split of an arbitrary vertex ordering
// ---------------------------------------------------------------------------

// Places the levels one after another, keeping the order of `cover_order`
// within each level. Throws InvalidLevels unless `levels` is the
// minimal-removal partition of p.
LinearExtension color_split_extension(const Poset& p, std::span<const Element> cover_order,
                                      const std::vector<std::vector<Element>>& levels);

// ---------------------------------------------------------------------------
// Planar posets of bounded width
// ---------------------------------------------------------------------------

struct InsertedRelation {
  Element lower = 0;
  Element upper = 0;
  Element extremum = 0;  // the internal extremum that triggered the insertion
  std::size_t region = 0;
};

struct PlanarWidthResult {
  QueueLayout layout;
  std::vector<InsertedRelation> inserted;
  std::vector<Cover> demoted;  // covers of p that are not covers of the augmented poset
  std::size_t base_queues = 0;  // queues used by covers that remain covers
};

// Augments the diagram so that every inner face has a unique source and
// sink, lays out the augmented poset without crowns, and gives each demoted
// cover an extra queue keyed by an inserted relation. Throws InvalidDiagram
// or AugmentationFailed.
PlanarWidthResult planar_width_layout_detailed(const UpwardDiagram& diagram);
QueueLayout planar_width_layout(const UpwardDiagram& diagram);

}  // namespace queueposet
