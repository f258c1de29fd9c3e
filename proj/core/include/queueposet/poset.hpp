#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace queueposet {

// Elements are addressed by their index in the input element list.
using Element = std::size_t;

struct Cover {
  Element lower = 0;
  Element upper = 0;

  auto operator<=>(const Cover&) const = default;
};

// A finite poset stored as the transitive closure of its generating relations,
// together with the derived cover relation (transitive reduction).
class Poset {
 public:
  Poset() = default;

  // Closes `generating_pairs` transitively. Throws CycleError when the
  // closure is not irreflexive.
  static Poset from_relations(
      std::vector<std::string> elements,
      std::span<const std::pair<std::string, std::string>> generating_pairs);
  static Poset from_index_pairs(
      std::vector<std::string> elements,
      std::span<const std::pair<Element, Element>> generating_pairs);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Element e) const { return names_.at(e); }
  std::optional<Element> find(std::string_view name) const;
  // Throws std::out_of_range for unknown names.
  Element index_of(std::string_view name) const;

  bool less(Element a, Element b) const noexcept { return lt_[a * size() + b] != 0; }
  bool comparable(Element a, Element b) const noexcept {
    return less(a, b) || less(b, a);
  }
  bool incomparable(Element a, Element b) const noexcept {
    return a != b && !comparable(a, b);
  }
  bool is_cover(Element a, Element b) const noexcept {
    return cover_[a * size() + b] != 0;
  }

  // Sorted by (lower, upper).
  const std::vector<Cover>& covers() const noexcept { return covers_; }
  std::optional<std::size_t> cover_index(Cover c) const;
  const std::vector<Element>& upper_covers(Element e) const { return up_.at(e); }
  const std::vector<Element>& lower_covers(Element e) const { return down_.at(e); }

  // All pairs (a, b) with a < b, sorted.
  std::vector<std::pair<Element, Element>> relations() const;

  std::vector<Element> minimal_elements() const;
  std::vector<Element> maximal_elements() const;
  // The unique minimum (0) or maximum (1), if present.
  std::optional<Element> zero() const;
  std::optional<Element> one() const;

  // Subposet on `subset`; element i of the result is subset[i].
  Poset induced(std::span<const Element> subset) const;

  // Same element names in the same order and the same order relation.
  bool operator==(const Poset& other) const;

 private:
  void build_index();
  void derive_covers();

  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> index_;
  std::vector<char> lt_;
  std::vector<char> cover_;
  std::vector<Cover> covers_;
  std::vector<std::vector<Element>> up_;
  std::vector<std::vector<Element>> down_;
};

// A total order on the elements that is consistent with a poset.
class LinearExtension {
 public:
  LinearExtension() = default;
  // Throws NotALinearExtension if `order` is not a permutation of the
  // elements of `p` or puts some b before a with a < b.
  LinearExtension(const Poset& p, std::vector<Element> order);

  // Only checks that `order` is a permutation of 0..n-1.
  static LinearExtension unchecked(std::vector<Element> order);

  const std::vector<Element>& order() const noexcept { return order_; }
  std::size_t position(Element e) const { return position_.at(e); }
  std::size_t size() const noexcept { return order_.size(); }

  bool operator==(const LinearExtension&) const = default;

 private:
  std::vector<Element> order_;
  std::vector<std::size_t> position_;
};

// First pair (a, b) with a < b in p but b placed before a; nullopt if the
// order is a linear extension. Throws NotALinearExtension when `order` is
// not a permutation.
std::optional<std::pair<Element, Element>> find_order_violation(
    const Poset& p, std::span<const Element> order);

struct ChainPartition {
  std::vector<std::vector<Element>> chains;

  // Index of the chain holding each element.
  std::vector<std::size_t> chain_of(std::size_t n) const;
};

struct WidthResult {
  std::size_t width = 0;
  std::vector<Element> antichain;
  ChainPartition partition;
};

struct HeightResult {
  std::size_t height = 0;
  std::vector<Element> chain;  // bottom to top
};

// Dilworth decomposition via maximum bipartite matching on the comparability
// relation; the antichain comes from the Konig vertex cover.
WidthResult width(const Poset& p);

// Longest chain, computed as a longest path over the cover relation.
HeightResult height(const Poset& p);

// Antichains A_1, ..., A_h obtained by repeatedly removing all minimal
// elements. Each level is sorted by element index.
std::vector<std::vector<Element>> minimal_levels(const Poset& p);

// Adds a new global minimum and/or maximum. The new elements are appended
// after the existing ones and named "0" / "1" (primes are appended on name
// clashes).
Poset with_bounds(const Poset& p, bool add_zero, bool add_one);

}  // namespace queueposet
