#include "queueposet/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "queueposet/errors.hpp"

namespace queueposet {

namespace {

using NamedPairs = std::vector<std::pair<std::string, std::string>>;

struct Drawing {
  std::vector<std::string> names;
  NamedPairs covers;
  std::vector<Point> position;
  std::string zero;
  std::string one;
  double right = 0.0;   // largest x coordinate
  double height = 0.0;  // y(one) - y(zero), with y(zero) = 0
};

Drawing draw_q_width(std::size_t w) {
  if (w == 1) return {{"lo", "hi"}, {{"lo", "hi"}}, {{0, 0}, {0, 1}}, "lo", "hi", 0.0, 1.0};
  const Drawing sub = draw_q_width(w - 1);
  const double top = 3.0 + 2.0 * sub.height;
  const double mid = top / 2.0;
  // b sits far enough right that a-b and b-c clear both copies, which lie
  // in the triangle (0,0), (0,height), (right, height/2) of their frame.
  const double bx = sub.right * mid / (1.0 + sub.height / 2.0) + 1.0;

  Drawing d;
  d.names = {"a", "b", "c"};
  d.position = {{0.0, 0.0}, {bx, mid}, {0.0, top}};
  auto place = [&](const std::string& prefix, double dy) {
    for (std::size_t i = 0; i < sub.names.size(); ++i) {
      d.names.push_back(prefix + sub.names[i]);
      d.position.push_back({sub.position[i].x, sub.position[i].y + dy});
    }
    for (const auto& [u, v] : sub.covers) d.covers.emplace_back(prefix + u, prefix + v);
  };
  place("L.", 1.0);
  place("U.", 2.0 + sub.height);
  d.covers.emplace_back("a", "L." + sub.zero);
  d.covers.emplace_back("L." + sub.one, "U." + sub.zero);
  d.covers.emplace_back("U." + sub.one, "c");
  d.covers.emplace_back("a", "b");
  d.covers.emplace_back("b", "c");
  d.zero = "a";
  d.one = "c";
  d.right = bx;
  d.height = top;
  return d;
}

std::string letter_name(std::size_t level, std::size_t j) {
  if (level < 26) return std::string(1, static_cast<char>('a' + level)) + std::to_string(j + 1);
  return "L" + std::to_string(level + 1) + "_" + std::to_string(j + 1);
}

}  // namespace

Poset subdivided_crown(std::size_t k) {
  if (k < 2) throw Error("subdivided crown needs k >= 2");
  std::vector<std::string> names;
  for (const char* part : {"a", "b", "c"}) {
    for (std::size_t i = 1; i <= k; ++i) names.push_back(part + std::to_string(i));
  }
  auto a = [](std::size_t i) { return i - 1; };
  auto b = [k](std::size_t i) { return k + i - 1; };
  auto c = [k](std::size_t i) { return 2 * k + i - 1; };
  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t i = 1; i <= k; ++i) {
    pairs.emplace_back(a(i), b(i));
    pairs.emplace_back(b(i), c(i));
    pairs.emplace_back(a(i), i == 1 ? c(k) : c(i - 1));
  }
  return Poset::from_index_pairs(std::move(names), pairs);
}

Poset weak_order(std::span<const std::size_t> level_sizes) {
  if (level_sizes.empty()) throw Error("weak order needs at least one level");
  std::vector<std::string> names;
  std::vector<std::pair<Element, Element>> pairs;
  std::size_t previous_begin = 0;
  for (std::size_t level = 0; level < level_sizes.size(); ++level) {
    if (level_sizes[level] == 0) throw Error("weak order levels must be nonempty");
    const std::size_t begin = names.size();
    for (std::size_t j = 0; j < level_sizes[level]; ++j) names.push_back(letter_name(level, j));
    if (level > 0) {
      for (std::size_t u = previous_begin; u < begin; ++u) {
        for (std::size_t v = begin; v < names.size(); ++v) pairs.emplace_back(u, v);
      }
    }
    previous_begin = begin;
  }
  return Poset::from_index_pairs(std::move(names), pairs);
}

UpwardDiagram q_width(std::size_t w) {
  if (w == 0) throw Error("q_width needs w >= 1");
  Drawing d = draw_q_width(w);
  Poset p = Poset::from_relations(d.names, d.covers);
  return UpwardDiagram(std::move(p), std::move(d.position));
}

HeightTwoCounterexample height2_counterexample() {
  std::vector<std::string> names;
  for (int i = 1; i <= 10; ++i) names.push_back("b" + std::to_string(i));
  names.push_back("a1");
  names.push_back("a2");
  for (int i = 1; i <= 9; ++i) {
    for (int j = 1; j <= 4; ++j) names.push_back("c" + std::to_string(i) + "_" + std::to_string(j));
  }
  std::vector<std::pair<Element, Element>> pairs;
  for (Element b = 0; b < 10; ++b) {
    pairs.emplace_back(b, 10);
    pairs.emplace_back(b, 11);
  }
  for (Element i = 0; i < 9; ++i) {
    for (Element j = 0; j < 4; ++j) {
      const Element c = 12 + 4 * i + j;
      pairs.emplace_back(i, c);
      pairs.emplace_back(i + 1, c);
    }
  }
  HeightTwoCounterexample out;
  out.poset = Poset::from_index_pairs(std::move(names), pairs);
  for (Element e = 0; e < 10; ++e) out.lower.push_back(e);
  for (Element e = 10; e < out.poset.size(); ++e) out.upper.push_back(e);
  return out;
}

Rainbow counterexample_witness(const Poset& p, const LinearExtension& ext) {
  if (auto bad = find_order_violation(p, ext.order())) {
    throw NotALinearExtension("not a linear extension: " + p.name(bad->first) + " < " +
                              p.name(bad->second));
  }
  auto at = [&](const std::string& name) { return ext.position(p.index_of(name)); };
  auto b = [&](std::size_t i) { return p.index_of("b" + std::to_string(i)); };
  auto c = [&](std::size_t i, std::size_t j) {
    return p.index_of("c" + std::to_string(i) + "_" + std::to_string(j));
  };

  Element a_first = p.index_of("a1");
  Element a_second = p.index_of("a2");
  if (at("a2") < at("a1")) std::swap(a_first, a_second);

  std::vector<std::size_t> xs(10);
  for (std::size_t i = 0; i < 10; ++i) xs[i] = i + 1;
  std::sort(xs.begin(), xs.end(), [&](std::size_t u, std::size_t v) {
    return ext.position(b(u)) < ext.position(b(v));
  });
  const std::size_t i1 = xs[0], i2 = xs[1], j1 = xs[8], j2 = xs[9];
  const std::set<std::size_t> reserved{i1, i2, j1, j2};

  std::size_t i = 1;
  while (reserved.contains(i) || reserved.contains(i + 1)) ++i;

  // 0: below both a's, 1: between them, 2: above both.
  auto region = [&](Element e) {
    const std::size_t pe = ext.position(e);
    if (pe < ext.position(a_first)) return 0;
    if (pe < ext.position(a_second)) return 1;
    return 2;
  };
  std::size_t j = 0, k = 0;
  for (std::size_t u = 1; u <= 4 && j == 0; ++u) {
    for (std::size_t v = u + 1; v <= 4 && j == 0; ++v) {
      if (region(c(i, u)) == region(c(i, v))) {
        j = u;
        k = v;
      }
    }
  }
  Element beta1 = b(i), beta2 = b(i + 1);
  if (ext.position(beta2) < ext.position(beta1)) std::swap(beta1, beta2);
  Element gamma1 = c(i, j), gamma2 = c(i, k);
  if (ext.position(gamma2) < ext.position(gamma1)) std::swap(gamma1, gamma2);
  const Cover outer_pair{beta1, gamma2};
  const Cover inner_pair{beta2, gamma1};

  Rainbow r;
  switch (region(gamma1)) {
    case 0:
      r.covers = {{b(i1), a_second}, {b(i2), a_first}, outer_pair, inner_pair};
      break;
    case 1:
      r.covers = {{b(i1), a_second}, outer_pair, inner_pair, {b(j1), a_first}};
      break;
    default:
      r.covers = {outer_pair, inner_pair, {b(j1), a_second}, {b(j2), a_first}};
      break;
  }
  return r;
}

HeightQueueFamily q_height(std::size_t h) {
  if (h < 2) throw Error("q_height needs h >= 2");
  std::vector<std::string> names{"x", "y", "z"};
  std::set<std::pair<std::string, std::string>> covers{{"y", "x"}, {"y", "z"}};
  struct NamedV {
    std::string left, bottom, right;
  };
  std::vector<NamedV> marked{{"x", "y", "z"}};

  for (std::size_t level = 3; level <= h; ++level) {
    std::vector<NamedV> next;
    for (const auto& v : marked) {
      std::vector<std::string> inherited;
      for (auto it = covers.begin(); it != covers.end();) {
        if (it->first == v.bottom) {
          if (it->second != v.left && it->second != v.right) inherited.push_back(it->second);
          it = covers.erase(it);
        } else {
          ++it;
        }
      }
      names.erase(std::find(names.begin(), names.end(), v.bottom));
      const std::string y1 = v.bottom + "1", y2 = v.bottom + "2";
      for (const auto& s : {y1, y1 + "l", y1 + "r", y2, y2 + "l", y2 + "r"}) names.push_back(s);
      covers.insert({y1, v.left});
      covers.insert({y1, y1 + "l"});
      covers.insert({y1, y1 + "r"});
      covers.insert({y1 + "l", v.right});
      covers.insert({y1 + "r", v.right});
      covers.insert({y2, v.right});
      covers.insert({y2, y2 + "l"});
      covers.insert({y2, y2 + "r"});
      covers.insert({y2 + "l", v.left});
      covers.insert({y2 + "r", v.left});
      for (const auto& u : inherited) {
        covers.insert({y1, u});
        covers.insert({y2, u});
      }
      next.push_back({y1 + "l", y1, y1 + "r"});
      next.push_back({y2 + "l", y2, y2 + "r"});
    }
    marked = std::move(next);
  }

  NamedPairs pairs(covers.begin(), covers.end());
  HeightQueueFamily out;
  out.poset = Poset::from_relations(names, pairs);
  for (const auto& v : marked) {
    out.v_posets.push_back({out.poset.index_of(v.left), out.poset.index_of(v.bottom),
                            out.poset.index_of(v.right)});
  }
  return out;
}

Poset poset_from_bipartite(const std::vector<std::string>& vertices,
                           const std::vector<std::pair<std::string, std::string>>& edges,
                           const std::vector<std::string>& class_a,
                           const std::vector<std::string>& class_b) {
  const std::set<std::string> all(vertices.begin(), vertices.end());
  const std::set<std::string> a(class_a.begin(), class_a.end());
  const std::set<std::string> b(class_b.begin(), class_b.end());
  if (all.size() != vertices.size()) throw NotBipartition("duplicate vertex");
  for (const auto& v : vertices) {
    if (a.contains(v) == b.contains(v)) {
      throw NotBipartition("vertex " + v + " must lie in exactly one class");
    }
  }
  if (a.size() + b.size() != all.size() || a.size() != class_a.size() ||
      b.size() != class_b.size()) {
    throw NotBipartition("classes name vertices outside the graph or repeat them");
  }
  NamedPairs pairs;
  for (const auto& [u, v] : edges) {
    if (!all.contains(u) || !all.contains(v)) throw NotBipartition("edge names unknown vertex");
    if (a.contains(u) && b.contains(v)) pairs.emplace_back(u, v);
    else if (a.contains(v) && b.contains(u)) pairs.emplace_back(v, u);
    else throw NotBipartition("edge " + u + "-" + v + " lies inside one class");
  }
  return Poset::from_relations(vertices, pairs);
}

Poset small_pattern(std::string_view name) {
  std::vector<std::string> names{"a", "b", "c", "d"};
  NamedPairs pairs{{"a", "b"}, {"c", "d"}};
  if (name == "N") {
    pairs.emplace_back("c", "b");
  } else if (name != "2+2") {
    throw Error("unknown pattern '" + std::string(name) + "'");
  }
  return Poset::from_relations(names, pairs);
}

}  // namespace queueposet
