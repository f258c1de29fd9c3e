#include "queueposet/poset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "queueposet/errors.hpp"

namespace queueposet {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// Returns one directed cycle (as element indices, first element repeated at
// the end) or an empty vector.
std::vector<Element> find_cycle(const std::vector<std::vector<Element>>& adj) {
  const std::size_t n = adj.size();
  enum : char { kWhite, kGray, kBlack };
  std::vector<char> color(n, kWhite);
  std::vector<Element> parent(n, n);
  for (Element root = 0; root < n; ++root) {
    if (color[root] != kWhite) continue;
    std::vector<std::pair<Element, std::size_t>> stack{{root, 0}};
    color[root] = kGray;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == adj[v].size()) {
        color[v] = kBlack;
        stack.pop_back();
        continue;
      }
      Element w = adj[v][next++];
      if (color[w] == kGray) {
        std::vector<Element> cycle{w};
        for (Element u = v; u != w; u = parent[u]) cycle.push_back(u);
        cycle.push_back(w);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (color[w] == kWhite) {
        color[w] = kGray;
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
    }
  }
  return {};
}

}  // namespace

CycleError::CycleError(std::vector<std::string> cycle)
    : Error("relations contain a cycle: " + join(cycle, " < ")),
      cycle_(std::move(cycle)) {}

ParseError::ParseError(const std::string& what, std::size_t line, std::string field)
    : Error(what), line_(line), field_(std::move(field)) {}

Poset Poset::from_relations(
    std::vector<std::string> elements,
    std::span<const std::pair<std::string, std::string>> generating_pairs) {
  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < elements.size(); ++i) {
    if (!index.emplace(elements[i], i).second) {
      throw Error("duplicate element '" + elements[i] + "'");
    }
  }
  std::vector<std::pair<Element, Element>> pairs;
  pairs.reserve(generating_pairs.size());
  for (const auto& [a, b] : generating_pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw Error("relation names unknown element '" + a + "'");
    if (ib == index.end()) throw Error("relation names unknown element '" + b + "'");
    pairs.emplace_back(ia->second, ib->second);
  }
  return from_index_pairs(std::move(elements), pairs);
}

Poset Poset::from_index_pairs(std::vector<std::string> elements,
                              std::span<const std::pair<Element, Element>> generating_pairs) {
  Poset p;
  p.names_ = std::move(elements);
  p.build_index();
  const std::size_t n = p.size();

  std::vector<std::vector<Element>> adj(n);
  for (const auto& [a, b] : generating_pairs) {
    if (a >= n || b >= n) throw Error("relation index out of range");
    adj[a].push_back(b);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  if (auto cycle = find_cycle(adj); !cycle.empty()) {
    std::vector<std::string> names;
    for (Element e : cycle) names.push_back(p.names_[e]);
    throw CycleError(std::move(names));
  }

  p.lt_.assign(n * n, 0);
  std::vector<Element> stack;
  for (Element s = 0; s < n; ++s) {
    char* row = &p.lt_[s * n];
    stack.assign(adj[s].begin(), adj[s].end());
    while (!stack.empty()) {
      Element v = stack.back();
      stack.pop_back();
      if (row[v]) continue;
      row[v] = 1;
      for (Element w : adj[v]) {
        if (!row[w]) stack.push_back(w);
      }
    }
  }
  p.derive_covers();
  return p;
}

void Poset::build_index() {
  index_.clear();
  for (Element i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second) {
      throw Error("duplicate element '" + names_[i] + "'");
    }
  }
}

void Poset::derive_covers() {
  const std::size_t n = size();
  cover_.assign(n * n, 0);
  covers_.clear();
  up_.assign(n, {});
  down_.assign(n, {});
  // (a, b) is a cover iff a < b with nothing strictly between: O(n * |lt|).
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool between = false;
      for (Element c = 0; c < n && !between; ++c) {
        between = less(a, c) && less(c, b);
      }
      if (!between) {
        cover_[a * n + b] = 1;
        covers_.push_back({a, b});
        up_[a].push_back(b);
        down_[b].push_back(a);
      }
    }
  }
}

std::optional<Element> Poset::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element Poset::index_of(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw std::out_of_range("unknown element '" + std::string(name) + "'");
}

std::optional<std::size_t> Poset::cover_index(Cover c) const {
  auto it = std::lower_bound(covers_.begin(), covers_.end(), c);
  if (it == covers_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - covers_.begin());
}

std::vector<std::pair<Element, Element>> Poset::relations() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element a = 0; a < size(); ++a) {
    for (Element b = 0; b < size(); ++b) {
      if (less(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<Element> Poset::minimal_elements() const {
  std::vector<Element> out;
  for (Element e = 0; e < size(); ++e) {
    if (down_[e].empty()) out.push_back(e);
  }
  return out;
}

std::vector<Element> Poset::maximal_elements() const {
  std::vector<Element> out;
  for (Element e = 0; e < size(); ++e) {
    if (up_[e].empty()) out.push_back(e);
  }
  return out;
}

std::optional<Element> Poset::zero() const {
  auto mins = minimal_elements();
  if (mins.size() == 1) return mins.front();
  return std::nullopt;
}

std::optional<Element> Poset::one() const {
  auto maxs = maximal_elements();
  if (maxs.size() == 1) return maxs.front();
  return std::nullopt;
}

Poset Poset::induced(std::span<const Element> subset) const {
  std::vector<std::string> names;
  names.reserve(subset.size());
  for (Element e : subset) names.push_back(name(e));
  Poset p;
  p.names_ = std::move(names);
  p.build_index();
  const std::size_t m = subset.size();
  p.lt_.assign(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      p.lt_[i * m + j] = lt_[subset[i] * size() + subset[j]];
    }
  }
  p.derive_covers();
  return p;
}

bool Poset::operator==(const Poset& other) const {
  return names_ == other.names_ && lt_ == other.lt_;
}

LinearExtension::LinearExtension(const Poset& p, std::vector<Element> order) {
  if (auto bad = find_order_violation(p, order)) {
    throw NotALinearExtension("not a linear extension: " + p.name(bad->first) + " < " +
                              p.name(bad->second) + " but placed after it");
  }
  *this = unchecked(std::move(order));
}

LinearExtension LinearExtension::unchecked(std::vector<Element> order) {
  LinearExtension ext;
  const std::size_t n = order.size();
  ext.position_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || ext.position_[order[i]] != n) {
      throw NotALinearExtension("order is not a permutation of the elements");
    }
    ext.position_[order[i]] = i;
  }
  ext.order_ = std::move(order);
  return ext;
}

std::optional<std::pair<Element, Element>> find_order_violation(
    const Poset& p, std::span<const Element> order) {
  const std::size_t n = p.size();
  if (order.size() != n) {
    throw NotALinearExtension("order has " + std::to_string(order.size()) +
                              " entries for " + std::to_string(n) + " elements");
  }
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != n) {
      throw NotALinearExtension("order is not a permutation of the elements");
    }
    pos[order[i]] = i;
  }
  for (const auto& [a, b] : p.covers()) {
    if (pos[a] > pos[b]) return std::pair{a, b};
  }
  return std::nullopt;
}

std::vector<std::size_t> ChainPartition::chain_of(std::size_t n) const {
  std::vector<std::size_t> out(n, chains.size());
  for (std::size_t c = 0; c < chains.size(); ++c) {
    for (Element e : chains[c]) out[e] = c;
  }
  return out;
}

WidthResult width(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) throw EmptyPosetError("width of an empty poset");

  // Split graph: left copy a -> right copy b whenever a < b. Kuhn's
  // augmenting paths, scanning vertices and neighbours in index order.
  std::vector<std::vector<Element>> adj(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (p.less(a, b)) adj[a].push_back(b);
    }
  }
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> match_left(n, kNone), match_right(n, kNone);
  std::vector<char> seen(n);
  auto augment = [&](auto&& self, Element a) -> bool {
    for (Element b : adj[a]) {
      if (seen[b]) continue;
      seen[b] = 1;
      if (match_right[b] == kNone || self(self, match_right[b])) {
        match_left[a] = b;
        match_right[b] = a;
        return true;
      }
    }
    return false;
  };
  std::size_t matched = 0;
  for (Element a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    if (augment(augment, a)) ++matched;
  }

  WidthResult result;
  result.width = n - matched;

  // Chains follow matched edges upward from elements with no matched
  // predecessor.
  for (Element e = 0; e < n; ++e) {
    if (match_right[e] != kNone) continue;
    std::vector<Element> chain;
    for (std::size_t v = e; v != kNone; v = match_left[v]) chain.push_back(v);
    result.partition.chains.push_back(std::move(chain));
  }

  // Konig: Z = vertices reachable from unmatched left vertices along
  // alternating paths; the antichain is {x : left(x) in Z, right(x) not in Z}.
  std::vector<char> z_left(n, 0), z_right(n, 0);
  std::queue<Element> queue;
  for (Element a = 0; a < n; ++a) {
    if (match_left[a] == kNone) {
      z_left[a] = 1;
      queue.push(a);
    }
  }
  while (!queue.empty()) {
    Element a = queue.front();
    queue.pop();
    for (Element b : adj[a]) {
      if (z_right[b] || match_left[a] == b) continue;
      z_right[b] = 1;
      std::size_t next = match_right[b];
      if (next != kNone && !z_left[next]) {
        z_left[next] = 1;
        queue.push(next);
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (z_left[x] && !z_right[x]) result.antichain.push_back(x);
  }
  return result;
}

HeightResult height(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) throw EmptyPosetError("height of an empty poset");
  // Longest chain ending at each element, processed in a topological order.
  std::vector<std::size_t> indeg(n), best(n, 1), prev(n, n);
  for (const auto& c : p.covers()) ++indeg[c.upper];
  std::vector<Element> order;
  for (Element e = 0; e < n; ++e) {
    if (indeg[e] == 0) order.push_back(e);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    Element v = order[i];
    for (Element w : p.upper_covers(v)) {
      if (best[v] + 1 > best[w]) {
        best[w] = best[v] + 1;
        prev[w] = v;
      }
      if (--indeg[w] == 0) order.push_back(w);
    }
  }
  Element top = static_cast<Element>(std::max_element(best.begin(), best.end()) - best.begin());
  HeightResult result;
  result.height = best[top];
  for (Element v = top; v != n; v = prev[v]) result.chain.push_back(v);
  std::reverse(result.chain.begin(), result.chain.end());
  return result;
}

std::vector<std::vector<Element>> minimal_levels(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> indeg(n);
  for (const auto& c : p.covers()) ++indeg[c.upper];
  std::vector<std::vector<Element>> levels;
  std::vector<Element> current;
  for (Element e = 0; e < n; ++e) {
    if (indeg[e] == 0) current.push_back(e);
  }
  while (!current.empty()) {
    std::vector<Element> next;
    for (Element v : current) {
      for (Element w : p.upper_covers(v)) {
        if (--indeg[w] == 0) next.push_back(w);
      }
    }
    std::sort(next.begin(), next.end());
    levels.push_back(std::move(current));
    current = std::move(next);
  }
  return levels;
}

Poset with_bounds(const Poset& p, bool add_zero, bool add_one) {
  std::vector<std::string> names = p.names();
  auto fresh = [&](std::string base) {
    while (std::find(names.begin(), names.end(), base) != names.end()) base += '\'';
    return base;
  };
  const std::size_t n = p.size();
  std::vector<std::pair<Element, Element>> pairs(p.relations());
  if (add_zero) {
    names.push_back(fresh("0"));
    for (Element e = 0; e < n; ++e) pairs.emplace_back(names.size() - 1, e);
  }
  if (add_one) {
    names.push_back(fresh("1"));
    for (Element e = 0; e < n; ++e) pairs.emplace_back(e, names.size() - 1);
    if (add_zero) pairs.emplace_back(n, n + 1);
  }
  return Poset::from_index_pairs(std::move(names), pairs);
}

}  // namespace queueposet
