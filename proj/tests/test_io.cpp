#include <doctest.h>

#include <set>
#include <string>
#include <variant>

#include "queueposet/constructions.hpp"
#include "queueposet/errors.hpp"
#include "queueposet/io.hpp"
#include "queueposet/strategies.hpp"
#include "support/random_posets.hpp"

using namespace queueposet;

TEST_CASE("a two-element chain parses") {
  const auto parsed = parse_poset(R"({"elements":["a","b"],"relations":[["a","b"]]})");
  REQUIRE(std::holds_alternative<Poset>(parsed));
  const Poset& p = std::get<Poset>(parsed);
  CHECK(p.size() == 2);
  CHECK(p.is_cover(0, 1));
}

TEST_CASE("coordinates for every element give a diagram") {
  const auto parsed = parse_poset(
      R"({"elements":["a","b"],"relations":[["a","b"]],"pos":{"a":[0,0],"b":[0,1]}})");
  REQUIRE(std::holds_alternative<UpwardDiagram>(parsed));
  CHECK(std::get<UpwardDiagram>(parsed).position(1).y == 1);
}

TEST_CASE("partial coordinates give a plain poset") {
  const auto parsed =
      parse_poset(R"({"elements":["a","b"],"relations":[["a","b"]],"pos":{"a":[0,0]}})");
  CHECK(std::holds_alternative<Poset>(parsed));
}

TEST_CASE("integer element names are accepted") {
  const auto parsed = parse_poset(R"({"elements":[1,2,3],"relations":[[1,3],[3,2]]})");
  const Poset& p = std::get<Poset>(parsed);
  CHECK(p.names() == std::vector<std::string>{"1", "2", "3"});
  CHECK(p.less(0, 1));
}

TEST_CASE("cycles and bad diagrams are reported") {
  CHECK_THROWS_AS(parse_poset(R"({"elements":["a","b"],"relations":[["a","b"],["b","a"]]})"),
                  CycleError);
  CHECK_THROWS_AS(
      parse_poset(
          R"({"elements":["a","b"],"relations":[["a","b"]],"pos":{"a":[0,1],"b":[0,0]}})"),
      InvalidDiagram);
}

TEST_CASE("parse errors carry line and field") {
  const std::string text =
      "{\n"
      "  \"elements\": [\"a\", \"b\"],\n"
      "  \"relations\": [\n"
      "    [\"a\", \"b\"],\n"
      "    [\"a\", \"zz\"]\n"
      "  ]\n"
      "}\n";
  try {
    parse_poset(text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
    CHECK(e.field() == "relations[1][1]");
  }

  try {
    parse_poset("{\n  \"elements\": [\"a\",\n  ]\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }

  try {
    parse_poset("{\"relations\": []}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.field() == "elements");
  }

  CHECK_THROWS_AS(parse_poset(R"({"elements":["a","a"]})"), ParseError);
  CHECK_THROWS_AS(parse_poset(R"({"elements":[true]})"), ParseError);
  CHECK_THROWS_AS(parse_poset(R"({"elements":["a"],"relations":[["a"]]})"), ParseError);
  CHECK_THROWS_AS(parse_poset(R"({"elements":["a"],"pos":{"b":[0,0]}})"), ParseError);
  CHECK_THROWS_AS(parse_poset(R"({"elements":["a"],"pos":{"a":[0,"x"]}})"), ParseError);
  CHECK_THROWS_AS(parse_poset(R"([1, 2])"), ParseError);
}

TEST_CASE("poset JSON round-trips") {
  testgen::Rng rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const Poset p = testgen::random_dag(rng, testgen::uniform(rng, 0, 12), 0.3);
    const auto back = parse_poset(poset_to_json(p));
    REQUIRE(std::holds_alternative<Poset>(back));
    CHECK(std::get<Poset>(back) == p);
  }
}

TEST_CASE("diagram JSON round-trips") {
  for (std::size_t w = 1; w <= 3; ++w) {
    const UpwardDiagram d = q_width(w);
    const auto back = parse_poset(diagram_to_json(d));
    REQUIRE(std::holds_alternative<UpwardDiagram>(back));
    CHECK(std::get<UpwardDiagram>(back) == d);
  }
}

TEST_CASE("layout JSON round-trips") {
  const Poset p = q_width(3).poset();
  const QueueLayout layout = any_extension_layout(p);
  const std::string text = layout_to_json(p, layout);
  const QueueLayout back = parse_layout(p, text);
  CHECK(back.extension == layout.extension);
  CHECK(back.queue_of == layout.queue_of);
  CHECK(back.queue_count == layout.queue_count);
  CHECK(verify_layout(p, back).ok());
}

TEST_CASE("layout JSON without a queue count infers it") {
  const auto parsed = parse_poset(R"({"elements":["a","b","c"],"relations":[["a","b"],["b","c"]]})");
  const Poset& p = std::get<Poset>(parsed);
  const auto layout =
      parse_layout(p, R"({"order":["a","b","c"],"queues":[[["a","b"],0],[["b","c"],1]]})");
  CHECK(layout.queue_count == 2);
  CHECK(verify_layout(p, layout).ok());
}

TEST_CASE("malformed layouts are parse errors, wrong ones are violations") {
  const auto parsed = parse_poset(R"({"elements":["a","b"],"relations":[["a","b"]]})");
  const Poset& p = std::get<Poset>(parsed);
  CHECK_THROWS_AS(parse_layout(p, R"({"order":["a"],"queues":[]})"), ParseError);
  CHECK_THROWS_AS(parse_layout(p, R"({"order":["a","a"],"queues":[]})"), ParseError);
  CHECK_THROWS_AS(parse_layout(p, R"({"order":["a","q"],"queues":[]})"), ParseError);
  CHECK_THROWS_AS(parse_layout(p, R"({"order":["a","b"],"queues":[[["a","b"],-1]]})"), ParseError);
  CHECK_THROWS_AS(parse_layout(p, R"({"order":["a","b"]})"), ParseError);
  const auto backwards = parse_layout(p, R"({"order":["b","a"],"queues":[[["a","b"],0]]})");
  CHECK_FALSE(verify_layout(p, backwards).ok());
}

TEST_CASE("DOT export shows queues as colors") {
  const std::vector<std::size_t> sizes{2, 2};
  const Poset p = weak_order(sizes);
  std::vector<Element> order{0, 1, 3, 2};
  const QueueLayout layout = assign_queues(p, LinearExtension(p, order));
  REQUIRE(layout.queue_count >= 2);
  DotOptions options;
  options.layout = &layout;
  const std::string dot = to_dot(p, options);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  std::set<std::string> colors;
  for (std::size_t at = dot.find("color=\""); at != std::string::npos;
       at = dot.find("color=\"", at + 1)) {
    colors.insert(dot.substr(at + 7, 7));
  }
  CHECK(colors.size() == layout.queue_count);
  CHECK(dot.find("label=\"1\"") != std::string::npos);
}

TEST_CASE("DOT export of a diagram has positions") {
  const UpwardDiagram d = q_width(2);
  DotOptions options;
  options.positions = &d.positions();
  const std::string dot = to_dot(d.poset(), options);
  std::size_t count = 0;
  for (std::size_t at = dot.find("pos=\""); at != std::string::npos; at = dot.find("pos=\"", at + 1)) {
    ++count;
  }
  CHECK(count == d.poset().size());
}
