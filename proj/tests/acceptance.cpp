// Acceptance checks 1-11. Prints one PASS/FAIL line per criterion.
//
// Exit status is 0 when the set of failing criteria equals the set given by
// --expect-fail (empty by default), so a known and documented failure keeps
// showing as FAIL without breaking the build.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "queueposet/constructions.hpp"
#include "queueposet/errors.hpp"
#include "queueposet/exact_solver.hpp"
#include "queueposet/layout.hpp"
#include "queueposet/strategies.hpp"
#include "support/random_posets.hpp"

using namespace queueposet;
using Clock = std::chrono::steady_clock;

namespace {

// Time limits and sample sizes.
constexpr double kWidth2Seconds = 10.0;
constexpr double kExactSeconds = 120.0;
constexpr double kCounterexampleSeconds = 30.0;
constexpr std::size_t kCounterexampleElements = 46;
constexpr int kWidth2Samples = 500;
constexpr int kCrownFreeSamples = 200;
constexpr int kPairedSamples = 100;
constexpr int kColorSplitSamples = 100;
constexpr int kWitnessSamples = 10000;
constexpr int kRainbowOracleSamples = 1000;
constexpr int kExactOracleSamples = 500;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

// Resamples until the width is exactly k.
Poset width_exactly(testgen::Rng& rng, std::size_t n_max, std::size_t k, double p) {
  for (;;) {
    Poset q = testgen::random_width_k(rng, testgen::uniform(rng, k, n_max), k, p);
    if (width(q).width == k) return q;
  }
}

std::size_t solved_value(const SolveResult& r) {
  if (const auto* s = std::get_if<Solved>(&r)) return s->queue_number;
  return 0;
}

Outcome width_two() {
  testgen::Rng rng(1001);
  const auto start = Clock::now();
  int bad = 0;
  for (int i = 0; i < kWidth2Samples; ++i) {
    const Poset p = width_exactly(rng, 40, 2, 0.2);
    const QueueLayout layout = lazy_width2_layout(p);
    if (layout.queue_count > 2 || !verify_layout(p, layout).ok()) ++bad;
  }
  const double t = seconds_since(start);
  return {bad == 0 && t < kWidth2Seconds,
          std::to_string(kWidth2Samples - bad) + "/" + std::to_string(kWidth2Samples) +
              " width-2 posets laid out in <= 2 verified queues, " + fmt_seconds(t)};
}

Outcome exact_width_family() {
  const auto start = Clock::now();
  const std::size_t q2 = solved_value(exact_queue_number(q_width(2).poset()));
  const std::size_t q3 = solved_value(exact_queue_number(q_width(3).poset()));
  const double t = seconds_since(start);
  return {q2 == 2 && q3 == 3 && t < kExactSeconds,
          "qn(Q_2)=" + std::to_string(q2) + " qn(Q_3)=" + std::to_string(q3) + ", " +
              fmt_seconds(t)};
}

Outcome exact_height_family() {
  const auto start = Clock::now();
  const std::size_t q3 = solved_value(exact_queue_number(q_height(3).poset));
  const std::size_t q4 = solved_value(exact_queue_number(q_height(4).poset));
  const double t = seconds_since(start);
  return {q3 == 2 && q4 == 3 && t < kExactSeconds,
          "qn(Q_h3)=" + std::to_string(q3) + " qn(Q_h4)=" + std::to_string(q4) + ", " +
              fmt_seconds(t)};
}

Outcome counterexample() {
  const auto start = Clock::now();
  const auto ce = height2_counterexample();
  const std::size_t n = ce.poset.size();
  const std::size_t h = height(ce.poset).height;
  testgen::Rng rng(1004);
  int good = 0;
  for (int i = 0; i < kWitnessSamples; ++i) {
    const LinearExtension ext(ce.poset, testgen::random_extension(rng, ce.poset));
    const Rainbow r = counterexample_witness(ce.poset, ext);
    if (r.size() == 4 && is_rainbow(ce.poset, ext, r)) ++good;
  }
  const double t = seconds_since(start);
  const bool pass = n == kCounterexampleElements && h == 2 && good == kWitnessSamples &&
                    t < kCounterexampleSeconds;
  return {pass, std::to_string(n) + " elements (required " +
                    std::to_string(kCounterexampleElements) + "), height " + std::to_string(h) +
                    ", " + std::to_string(good) + "/" + std::to_string(kWitnessSamples) +
                    " witnesses are 4-rainbows, " + fmt_seconds(t)};
}

Outcome crown_free() {
  testgen::Rng rng(1005);
  int layouts = 0;
  auto check = [&](const Poset& p) {
    const auto r = crown_free_layout(p);
    const auto* layout = std::get_if<QueueLayout>(&r);
    if (layout && layout->queue_count <= width(p).width && verify_layout(p, *layout).ok()) {
      ++layouts;
    }
  };
  for (int i = 0; i < kCrownFreeSamples; ++i) {
    check(testgen::random_interval_order(rng, testgen::uniform(rng, 1, 30), 40));
  }
  for (int i = 0; i < kCrownFreeSamples; ++i) {
    check(testgen::random_series_parallel(rng, testgen::uniform(rng, 1, 30)));
  }
  int crowns = 0;
  for (std::size_t k = 2; k <= 4; ++k) {
    const Poset p = subdivided_crown(k);
    const auto r = crown_free_layout(p);
    const auto* crown = std::get_if<CrownEmbedding>(&r);
    if (crown && crown->k == k && is_valid_crown(p, *crown)) ++crowns;
  }
  return {layouts == 2 * kCrownFreeSamples && crowns == 3,
          std::to_string(layouts) + "/" + std::to_string(2 * kCrownFreeSamples) +
              " interval and series-parallel orders within width, " + std::to_string(crowns) +
              "/3 crowns certified"};
}

Outcome worst_case_rainbow() {
  std::ostringstream detail;
  bool pass = true;
  for (std::size_t k = 2; k <= 3; ++k) {
    const std::vector<std::size_t> sizes{k, k};
    const Poset p = weak_order(sizes);
    std::vector<Element> order;
    for (std::size_t i = 1; i <= k; ++i) order.push_back(p.index_of("a" + std::to_string(i)));
    for (std::size_t i = k; i >= 1; --i) order.push_back(p.index_of("b" + std::to_string(i)));
    const std::size_t got = max_rainbow(p, LinearExtension(p, order)).size;
    pass = pass && got == k * k;
    detail << "k=" << k << ": max rainbow " << got << " (required " << k * k << ") ";
  }
  return {pass, detail.str()};
}

Outcome paired() {
  testgen::Rng rng(1007);
  int good = 0;
  std::size_t worst4 = 0, worst3 = 0;
  for (int i = 0; i < kPairedSamples; ++i) {
    const Poset p4 = width_exactly(rng, 20, 4, 0.3);
    const QueueLayout l4 = paired_chain_layout(p4);
    worst4 = std::max(worst4, l4.queue_count);
    const Poset p3 = width_exactly(rng, 20, 3, 0.3);
    const QueueLayout l3 = paired_chain_layout(p3);
    worst3 = std::max(worst3, l3.queue_count);
    if (l4.queue_count <= 12 && l3.queue_count <= 7 && verify_layout(p4, l4).ok() &&
        verify_layout(p3, l3).ok()) {
      ++good;
    }
  }
  return {good == kPairedSamples,
          std::to_string(good) + "/" + std::to_string(kPairedSamples) +
              " pairs within bounds, worst width-4 " + std::to_string(worst4) +
              " (<= 12), worst width-3 " + std::to_string(worst3) + " (<= 7)"};
}

Outcome planar_width() {
  std::ostringstream detail;
  bool pass = true;
  for (std::size_t w = 2; w <= 3; ++w) {
    const UpwardDiagram d = q_width(w);
    try {
      const QueueLayout layout = planar_width_layout(d);
      const bool ok = verify_layout(d.poset(), layout).ok() && layout.queue_count <= 3 * w - 2;
      pass = pass && ok;
      detail << "w=" << w << ": " << layout.queue_count << " queues (<= " << 3 * w - 2 << ") ";
    } catch (const Error& e) {
      pass = false;
      detail << "w=" << w << ": " << e.what() << " ";
    }
  }
  return {pass, detail.str()};
}

Outcome leftmost() {
  std::ostringstream detail;
  bool pass = true;
  for (std::size_t w = 2; w <= 4; ++w) {
    const UpwardDiagram d = q_width(w);
    const QueueLayout layout = leftmost_layout(d.poset(), &d);
    const std::size_t h = height(d.poset()).height;
    pass = pass && layout.queue_count + 1 <= h && verify_layout(d.poset(), layout).ok();
    detail << "w=" << w << ": " << layout.queue_count << " queues, height " << h << " ";
  }
  return {pass, detail.str()};
}

Outcome color_split() {
  testgen::Rng rng(1010);
  int good = 0;
  for (int i = 0; i < kColorSplitSamples; ++i) {
    const Poset p = testgen::random_leveled(rng, testgen::uniform(rng, 1, 20), 4, 0.3);
    const auto order = testgen::random_permutation(rng, p.size());
    std::vector<std::size_t> pos(p.size());
    for (std::size_t j = 0; j < order.size(); ++j) pos[order[j]] = j;
    const std::size_t k = max_rainbow_in_order(p.covers(), pos).size;
    const std::size_t h = height(p).height;
    const LinearExtension ext = color_split_extension(p, order, minimal_levels(p));
    const std::size_t got = max_rainbow(p, ext).size;
    if (got <= 2 * (h - 1) * k) ++good;
  }
  return {good == kColorSplitSamples, std::to_string(good) + "/" +
                                          std::to_string(kColorSplitSamples) +
                                          " split orders within 2(h-1)k"};
}

Outcome oracle_equivalence() {
  testgen::Rng rng(1011);
  int rainbow_ok = 0;
  for (int i = 0; i < kRainbowOracleSamples;) {
    const Poset p = testgen::random_dag(rng, testgen::uniform(rng, 1, 10), 0.35);
    if (p.covers().size() > 12) continue;
    ++i;
    const LinearExtension ext(p, testgen::random_extension(rng, p));
    if (max_rainbow(p, ext).size == rainbow_bruteforce_oracle(p, ext)) ++rainbow_ok;
  }
  int exact_ok = 0;
  SolverOptions exhaustive;
  exhaustive.pruning = false;
  for (int i = 0; i < kExactOracleSamples; ++i) {
    const Poset p = testgen::random_dag(rng, testgen::uniform(rng, 1, 9), 0.35);
    const auto a = exact_queue_number(p);
    const auto b = exact_queue_number(p, exhaustive);
    if (std::holds_alternative<Solved>(a) && std::holds_alternative<Solved>(b) &&
        solved_value(a) == solved_value(b)) {
      ++exact_ok;
    }
  }
  return {rainbow_ok == kRainbowOracleSamples && exact_ok == kExactOracleSamples,
          std::to_string(rainbow_ok) + "/" + std::to_string(kRainbowOracleSamples) +
              " rainbow pairs, " + std::to_string(exact_ok) + "/" +
              std::to_string(kExactOracleSamples) + " exact vs exhaustive"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<int> expected_failures;
  app.add_option("--expect-fail", expected_failures, "Criteria known to fail")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"width-2 lazy layouts", width_two},
      {"exact width family", exact_width_family},
      {"exact height family", exact_height_family},
      {"height-2 counterexample", counterexample},
      {"crown-free layouts", crown_free},
      {"worst-case rainbow", worst_case_rainbow},
      {"paired chains", paired},
      {"planar 3w-2 pipeline", planar_width},
      {"leftmost layouts", leftmost},
      {"color split", color_split},
      {"oracle equivalence", oracle_equivalence},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) failed.insert(id);
    std::printf("%s %2d %s: %s\n", outcome.pass ? "PASS" : "FAIL", id,
                criteria[i].first.c_str(), outcome.detail.c_str());
    std::fflush(stdout);
  }
  const std::set<int> expected(expected_failures.begin(), expected_failures.end());
  if (failed != expected) {
    std::printf("failing set differs from the expected set\n");
    return 1;
  }
  return 0;
}
