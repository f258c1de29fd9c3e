#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "queueposet/errors.hpp"
#include "queueposet/strategies.hpp"

namespace queueposet {

namespace {

// Plane embedding of a straight-line diagram: rotation systems, faces, and
// the regions of the plane those faces bound.
class Embedding {
 public:
  explicit Embedding(const UpwardDiagram& d) : d_(d), n_(d.poset().size()) {
    build_rotations();
    trace_faces();
    find_components();
    nest_components();
  }

  static constexpr std::size_t kOuterRegion = static_cast<std::size_t>(-1);

  // Region on the left of half-edge u -> v.
  std::size_t region_of_half_edge(Element u, Element v) const {
    return region_of_face(face_of_.at({u, v}));
  }

  // Region met when leaving x in the widest angular gap that starts at its
  // last neighbour in counter-clockwise order; for an extremum this is the
  // gap containing the vertical direction away from its covers.
  std::size_t gap_region(Element x) const {
    if (rotation_[x].empty()) return parent_[component_[x]];
    return region_of_half_edge(x, rotation_[x].back());
  }

  bool on_outer_face(Element v) const {
    const std::size_t k = component_[v];
    if (parent_[k] != kOuterRegion) return false;
    if (rotation_[v].empty()) return true;
    for (Element w : rotation_[v]) {
      if (face_of_.at({v, w}) == outer_walk_[k]) return true;
    }
    return false;
  }

  // Closed boundary walks of a region (inner face walk plus the outer walks
  // of components nested directly inside it, plus isolated points there).
  std::vector<std::vector<Element>> boundary_walks(std::size_t region) const {
    std::vector<std::vector<Element>> walks;
    if (region != kOuterRegion) walks.push_back(faces_[region]);
    for (std::size_t k = 0; k < component_count_; ++k) {
      if (parent_[k] != region) continue;
      if (outer_walk_[k] == kNone) {
        walks.push_back({component_rep_[k]});
      } else {
        walks.push_back(faces_[outer_walk_[k]]);
      }
    }
    return walks;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  const Point& pos(Element e) const { return d_.position(e); }

  void build_rotations() {
    rotation_.assign(n_, {});
    for (const auto& c : d_.poset().covers()) {
      rotation_[c.lower].push_back(c.upper);
      rotation_[c.upper].push_back(c.lower);
    }
    for (Element v = 0; v < n_; ++v) {
      auto angle = [&](Element w) { return std::atan2(pos(w).y - pos(v).y, pos(w).x - pos(v).x); };
      std::sort(rotation_[v].begin(), rotation_[v].end(),
                [&](Element a, Element b) { return angle(a) < angle(b); });
    }
  }

  // The face on the left of u -> v continues with v -> w, where w precedes u
  // in the counter-clockwise rotation at v.
  Element turn(Element u, Element v) const {
    const auto& rot = rotation_[v];
    auto it = std::find(rot.begin(), rot.end(), u);
    return it == rot.begin() ? rot.back() : *(it - 1);
  }

  void trace_faces() {
    for (Element u = 0; u < n_; ++u) {
      for (Element v : rotation_[u]) {
        if (face_of_.contains({u, v})) continue;
        const std::size_t id = faces_.size();
        std::vector<Element> walk;
        Element a = u, b = v;
        while (!face_of_.contains({a, b})) {
          face_of_[{a, b}] = id;
          walk.push_back(a);
          Element c = turn(a, b);
          a = b;
          b = c;
        }
        faces_.push_back(std::move(walk));
        area_.push_back(signed_area(faces_.back()));
      }
    }
  }

  double signed_area(const std::vector<Element>& walk) const {
    double twice = 0.0;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      const Point& p = pos(walk[i]);
      const Point& q = pos(walk[(i + 1) % walk.size()]);
      twice += p.x * q.y - q.x * p.y;
    }
    return twice / 2.0;
  }

  void find_components() {
    std::vector<std::size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& c : d_.poset().covers()) parent[root(c.lower)] = root(c.upper);
    std::map<std::size_t, std::size_t> ids;
    component_.assign(n_, 0);
    for (Element v = 0; v < n_; ++v) {
      auto [it, fresh] = ids.emplace(root(v), ids.size());
      component_[v] = it->second;
      if (fresh) component_rep_.push_back(v);
    }
    component_count_ = ids.size();
    outer_walk_.assign(component_count_, kNone);
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      const std::size_t k = component_[faces_[f].front()];
      if (outer_walk_[k] == kNone || area_[f] < area_[outer_walk_[k]]) outer_walk_[k] = f;
    }
    face_is_outer_walk_.assign(faces_.size(), false);
    for (std::size_t k = 0; k < component_count_; ++k) {
      if (outer_walk_[k] != kNone) face_is_outer_walk_[outer_walk_[k]] = true;
    }
  }

  bool inside(const Point& pt, const std::vector<Element>& walk) const {
    bool in = false;
    for (std::size_t i = 0, j = walk.size() - 1; i < walk.size(); j = i++) {
      const Point& a = pos(walk[i]);
      const Point& b = pos(walk[j]);
      if ((a.y > pt.y) != (b.y > pt.y) &&
          pt.x < (b.x - a.x) * (pt.y - a.y) / (b.y - a.y) + a.x) {
        in = !in;
      }
    }
    return in;
  }

  // Each component sits in the smallest inner face of another component
  // that contains it, or in the unbounded region.
  void nest_components() {
    parent_.assign(component_count_, kOuterRegion);
    for (std::size_t k = 0; k < component_count_; ++k) {
      const Point& probe = pos(component_rep_[k]);
      double best = 0.0;
      for (std::size_t f = 0; f < faces_.size(); ++f) {
        if (face_is_outer_walk_[f] || component_[faces_[f].front()] == k) continue;
        if (!inside(probe, faces_[f])) continue;
        if (parent_[k] == kOuterRegion || area_[f] < best) {
          parent_[k] = f;
          best = area_[f];
        }
      }
    }
  }

  std::size_t region_of_face(std::size_t f) const {
    if (!face_is_outer_walk_[f]) return f;
    return parent_[component_[faces_[f].front()]];
  }

  const UpwardDiagram& d_;
  std::size_t n_;
  std::vector<std::vector<Element>> rotation_;
  std::map<std::pair<Element, Element>, std::size_t> face_of_;
  std::vector<std::vector<Element>> faces_;
  std::vector<double> area_;
  std::vector<std::size_t> component_;
  std::vector<Element> component_rep_;
  std::size_t component_count_ = 0;
  std::vector<std::size_t> outer_walk_;
  std::vector<bool> face_is_outer_walk_;
  std::vector<std::size_t> parent_;
};

// Vertices of the walks that are local minima (sign < 0) or local maxima
// (sign > 0) in y along their walk.
std::set<Element> local_extrema(const UpwardDiagram& d,
                                const std::vector<std::vector<Element>>& walks, int sign) {
  std::set<Element> out;
  for (const auto& walk : walks) {
    const std::size_t l = walk.size();
    for (std::size_t i = 0; i < l; ++i) {
      const double y = d.position(walk[i]).y;
      const double prev = d.position(walk[(i + l - 1) % l]).y;
      const double next = d.position(walk[(i + 1) % l]).y;
      if (l == 1 || (sign < 0 && prev > y && next > y) || (sign > 0 && prev < y && next < y)) {
        out.insert(walk[i]);
      }
    }
  }
  return out;
}

bool crosses_any(const UpwardDiagram& d, Element u, Element v,
                 const std::vector<std::pair<Element, Element>>& segments) {
  const Point& a = d.position(u);
  const Point& b = d.position(v);
  for (const auto& [s, t] : segments) {
    if (geometry::segments_cross(a, b, d.position(s), d.position(t))) return true;
  }
  for (Element e = 0; e < d.poset().size(); ++e) {
    if (geometry::on_segment_interior(d.position(e), a, b)) return true;
  }
  return false;
}

}  // namespace

PlanarWidthResult planar_width_layout_detailed(const UpwardDiagram& diagram) {
  const Poset& p = diagram.poset();
  const std::size_t n = p.size();
  PlanarWidthResult result;
  if (n == 0) return result;

  const Embedding embedding(diagram);
  std::vector<std::pair<Element, Element>> segments;
  for (const auto& c : p.covers()) segments.emplace_back(c.lower, c.upper);

  std::set<Element> internal;
  for (Element x : p.minimal_elements()) {
    if (!embedding.on_outer_face(x)) internal.insert(x);
  }
  for (Element x : p.maximal_elements()) {
    if (!embedding.on_outer_face(x)) internal.insert(x);
  }

  auto insert_for = [&](Element x, bool minimum) {
    const std::size_t region = embedding.gap_region(x);
    if (region == Embedding::kOuterRegion) {
      throw AugmentationFailed("internal extremum " + p.name(x) + " opens into the outer face");
    }
    const double yx = diagram.position(x).y;
    std::vector<Element> candidates;
    for (Element v : local_extrema(diagram, embedding.boundary_walks(region), minimum ? -1 : 1)) {
      const double yv = diagram.position(v).y;
      if (minimum ? yv < yx : yv > yx) candidates.push_back(v);
    }
    // Partners that receive an inserted relation themselves come last, then
    // nearest in y, then smallest index.
    std::sort(candidates.begin(), candidates.end(), [&](Element a, Element b) {
      const bool ia = internal.count(a) > 0, ib = internal.count(b) > 0;
      if (ia != ib) return ib;
      const double ya = diagram.position(a).y, yb = diagram.position(b).y;
      if (ya != yb) return minimum ? ya > yb : ya < yb;
      return a < b;
    });
    if (candidates.empty()) {
      throw AugmentationFailed("face at " + p.name(x) + " has no admissible partner");
    }
    Element partner = candidates.front();
    for (Element v : candidates) {
      if (!crosses_any(diagram, v, x, segments)) {
        partner = v;
        break;
      }
    }
    InsertedRelation rel{minimum ? partner : x, minimum ? x : partner, x, region};
    segments.emplace_back(rel.lower, rel.upper);
    result.inserted.push_back(rel);
  };

  for (Element x : p.minimal_elements()) {
    if (!embedding.on_outer_face(x)) insert_for(x, true);
  }
  for (Element x : p.maximal_elements()) {
    if (!embedding.on_outer_face(x)) insert_for(x, false);
  }

  std::vector<std::pair<Element, Element>> pairs;
  for (const auto& c : p.covers()) pairs.emplace_back(c.lower, c.upper);
  for (const auto& rel : result.inserted) pairs.emplace_back(rel.lower, rel.upper);
  Poset augmented = Poset::from_index_pairs(p.names(), pairs);

  std::vector<Cover> kept;
  for (const auto& c : p.covers()) {
    if (augmented.is_cover(c.lower, c.upper)) kept.push_back(c);
    else result.demoted.push_back(c);
  }

  Poset bounded = with_bounds(augmented, !augmented.zero(), !augmented.one());
  auto laid = crown_free_layout(bounded);
  if (std::holds_alternative<CrownEmbedding>(laid)) {
    throw AugmentationFailed("augmented poset has an embedded subdivided crown");
  }
  std::vector<Element> order;
  for (Element e : std::get<QueueLayout>(laid).extension.order()) {
    if (e < n) order.push_back(e);
  }
  LinearExtension ext(p, std::move(order));
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[ext.order()[i]] = i;

  QueueLayout layout;
  layout.extension = ext;
  const auto depth = nesting_depths(kept, pos);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    layout.queue_of[kept[i]] = depth[i] - 1;
    result.base_queues = std::max(result.base_queues, depth[i]);
  }

  // Each demoted cover shares a face with an inserted relation incident to
  // one of its endpoints; that relation names its extra queue.
  std::vector<std::size_t> keyed(result.demoted.size());
  std::set<std::size_t> used;
  for (std::size_t i = 0; i < result.demoted.size(); ++i) {
    const Cover& c = result.demoted[i];
    const std::size_t r1 = embedding.region_of_half_edge(c.lower, c.upper);
    const std::size_t r2 = embedding.region_of_half_edge(c.upper, c.lower);
    std::size_t pick = result.inserted.size();
    std::size_t fallback = result.inserted.size();
    for (std::size_t j = 0; j < result.inserted.size(); ++j) {
      const auto& rel = result.inserted[j];
      const bool incident = rel.lower == c.lower || rel.lower == c.upper ||
                            rel.upper == c.lower || rel.upper == c.upper;
      if (!incident) continue;
      if (fallback == result.inserted.size()) fallback = j;
      // The relation must lie on the other side of the face a < b bounds in
      // the augmented poset, i.e. on a path from a to b.
      const bool on_path = (c.lower == rel.lower || augmented.less(c.lower, rel.lower)) &&
                           (rel.upper == c.upper || augmented.less(rel.upper, c.upper));
      if (on_path && (rel.region == r1 || rel.region == r2)) {
        pick = j;
        break;
      }
    }
    if (pick == result.inserted.size()) pick = fallback;
    if (pick == result.inserted.size()) {
      throw AugmentationFailed("demoted cover " + p.name(c.lower) + " < " + p.name(c.upper) +
                               " has no incident inserted relation");
    }
    keyed[i] = pick;
    used.insert(pick);
  }
  std::map<std::size_t, std::size_t> extra_queue;
  for (std::size_t j : used) extra_queue.emplace(j, result.base_queues + extra_queue.size());
  for (std::size_t i = 0; i < result.demoted.size(); ++i) {
    layout.queue_of[result.demoted[i]] = extra_queue.at(keyed[i]);
  }
  layout.queue_count = result.base_queues + extra_queue.size();

  if (auto report = verify_layout(p, layout); !report.ok()) {
    throw AugmentationFailed("augmented layout fails verification: " +
                             report.violations.front().message);
  }
  result.layout = std::move(layout);
  return result;
}

QueueLayout planar_width_layout(const UpwardDiagram& diagram) {
  return planar_width_layout_detailed(diagram).layout;
}

}  // namespace queueposet
