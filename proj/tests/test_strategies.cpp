#include <doctest.h>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "queueposet/constructions.hpp"
#include "queueposet/errors.hpp"
#include "queueposet/layout.hpp"
#include "queueposet/strategies.hpp"
#include "support/oracles.hpp"
#include "support/random_posets.hpp"

using namespace queueposet;

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

Poset chain(std::size_t n) {
  std::vector<std::pair<Element, Element>> rel;
  for (Element i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return Poset::from_index_pairs(testgen::numbered(n), rel);
}

std::size_t paired_bound(std::size_t w) { return w * w - 2 * (w / 2); }

}  // namespace

TEST_CASE("min_index_extension takes the smallest available element") {
  const Pairs rel{{"c", "a"}};
  const Poset p = Poset::from_relations({"a", "b", "c"}, rel);
  CHECK(min_index_extension(p).order() == std::vector<Element>{1, 2, 0});
}

TEST_CASE("any extension stays within width squared") {
  CHECK(any_extension_layout(chain(5)).queue_count == 1);
  const std::vector<std::size_t> sizes{3, 3};
  CHECK(any_extension_layout(weak_order(sizes)).queue_count <= 9);

  testgen::Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Poset p = testgen::random_width_k(rng, testgen::uniform(rng, 4, 20), 4, 0.3);
    const auto w = width(p).width;
    const auto layout = any_extension_layout(p);
    CHECK(layout.queue_count <= w * w);
    CHECK(verify_layout(p, layout).ok());
  }
}

TEST_CASE("lazy layout of small posets") {
  CHECK(lazy_width2_layout(chain(2)).queue_count == 1);
  CHECK(lazy_width2_layout(small_pattern("N")).queue_count <= 2);
  CHECK_THROWS_AS(lazy_width2_layout(subdivided_crown(3)), WidthExceeded);
}

TEST_CASE("lazy blocks alternate and each block sits above the previous one") {
  testgen::Rng rng(22);
  int tested = 0;
  while (tested < 200) {
    Poset p = testgen::random_width_k(rng, testgen::uniform(rng, 3, 25), 2, 0.25);
    if (!p.zero()) p = with_bounds(p, true, false);
    const auto w = width(p);
    if (w.width != 2) continue;
    ChainPartition partition = w.partition;
    // The 0 must open the first chain.
    const Element zero = *p.zero();
    if (partition.chains[1].front() == zero) std::swap(partition.chains[0], partition.chains[1]);
    const auto ext = lazy_extension(p, partition);
    const auto bl = blocks(ext, partition, p.size());
    const auto chain_of = partition.chain_of(p.size());
    CHECK(bl.front().front() == zero);
    for (std::size_t i = 1; i < bl.size(); ++i) {
      CHECK(chain_of[bl[i].front()] != chain_of[bl[i - 1].front()]);
      for (Element x : bl[i]) {
        const bool above = std::any_of(bl[i - 1].begin(), bl[i - 1].end(),
                                       [&](Element y) { return p.less(y, x); });
        CHECK(above);
      }
    }
    CHECK(assign_queues(p, ext).queue_count <= 2);
    ++tested;
  }
}

TEST_CASE("lazy layouts of random width-2 posets need at most two queues") {
  testgen::Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const Poset p = testgen::random_width_k(rng, testgen::uniform(rng, 1, 40), 2, 0.2);
    const auto layout = lazy_width2_layout(p);
    CHECK(layout.queue_count <= 2);
    CHECK(verify_layout(p, layout).ok());
  }
}

TEST_CASE("paired chains on small widths") {
  CHECK(paired_chain_layout(chain(4)).queue_count == 1);
  testgen::Rng rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const Poset p = testgen::random_width_k(rng, testgen::uniform(rng, 2, 20), 2, 0.3);
    CHECK(paired_chain_layout(p).queue_count <= paired_bound(width(p).width));
  }
}

TEST_CASE("paired chain layouts meet the pairing bound") {
  testgen::Rng rng(25);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = testgen::uniform(rng, 3, 5);
    const Poset p = testgen::random_width_k(rng, testgen::uniform(rng, 4, 20), k, 0.25);
    const auto w = width(p).width;
    const auto layout = paired_chain_layout(p);
    CHECK(verify_layout(p, layout).ok());
    CHECK(layout.queue_count <= paired_bound(w));

    // Covers inside one pair come from a width-2 lazy order.
    const auto groups = chain_pairs(p);
    CHECK(groups.size() == (w + 1) / 2);
    std::vector<std::size_t> group_of(p.size());
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (Element e : groups[g]) group_of[e] = g;
    }
    std::vector<std::size_t> pos(p.size());
    for (Element e = 0; e < p.size(); ++e) pos[e] = layout.extension.position(e);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      std::vector<Cover> inner;
      for (const auto& c : p.covers()) {
        if (group_of[c.lower] == g && group_of[c.upper] == g) inner.push_back(c);
      }
      CHECK(max_rainbow_in_order(inner, pos).size <= 2);
    }
  }
}

TEST_CASE("color split keeps levels in order and bounds the rainbow") {
  testgen::Rng rng(26);
  for (int trial = 0; trial < 150; ++trial) {
    const Poset p = testgen::random_leveled(rng, testgen::uniform(rng, 2, 18), 4, 0.35);
    const auto order = testgen::random_permutation(rng, p.size());
    const auto levels = minimal_levels(p);
    const auto ext = color_split_extension(p, order, levels);
    REQUIRE(oracle::is_linear_extension(p, ext.order()));
    // Levels appear one after another, each in the inherited order.
    std::size_t at = 0;
    for (const auto& level : levels) {
      std::vector<Element> expected;
      for (Element e : order) {
        if (std::find(level.begin(), level.end(), e) != level.end()) expected.push_back(e);
      }
      const std::vector<Element> got(ext.order().begin() + static_cast<std::ptrdiff_t>(at),
                                     ext.order().begin() +
                                         static_cast<std::ptrdiff_t>(at + level.size()));
      CHECK(got == expected);
      at += level.size();
    }
    const std::size_t h = levels.size();
    const std::size_t k = oracle::rainbow(p, order);
    CHECK(max_rainbow(p, ext).size <= 2 * (h - 1) * k);
  }
}

TEST_CASE("color split of an antichain keeps the input order") {
  const Poset p = Poset::from_index_pairs(testgen::numbered(4), {});
  const std::vector<Element> order{2, 0, 3, 1};
  const auto ext = color_split_extension(p, order, minimal_levels(p));
  CHECK(ext.order() == order);
  CHECK(max_rainbow(p, ext).size == 0);
}

TEST_CASE("color split of a chain is its unique extension") {
  const Poset p = chain(3);
  const std::vector<Element> order{2, 1, 0};
  CHECK(color_split_extension(p, order, minimal_levels(p)).order() ==
        std::vector<Element>{0, 1, 2});
}

TEST_CASE("color split rejects other partitions") {
  const Poset p = chain(3);
  const std::vector<Element> order{0, 1, 2};
  const std::vector<std::vector<Element>> wrong{{0, 1}, {2}};
  CHECK_THROWS_AS(color_split_extension(p, order, wrong), InvalidLevels);
  const std::vector<Element> short_order{0, 1};
  CHECK_THROWS_AS(color_split_extension(p, short_order, minimal_levels(p)), InvalidLevels);
}

TEST_CASE("color split on the height-two counterexample") {
  const auto ce = height2_counterexample();
  testgen::Rng rng(27);
  for (int trial = 0; trial < 20; ++trial) {
    const auto order = testgen::random_permutation(rng, ce.poset.size());
    const auto ext = color_split_extension(ce.poset, order, minimal_levels(ce.poset));
    const std::size_t k = oracle::rainbow(ce.poset, order);
    CHECK(max_rainbow(ce.poset, ext).size <= 2 * k);
  }
}
