#include <benchmark/benchmark.h>

#include <variant>
#include <vector>

#include "queueposet/constructions.hpp"
#include "queueposet/exact_solver.hpp"
#include "queueposet/layout.hpp"
#include "queueposet/strategies.hpp"

namespace qp = queueposet;

namespace {

// Weak order with `levels` levels of `size` elements: dense cover graph.
qp::Poset dense_weak_order(std::size_t levels, std::size_t size) {
  const std::vector<std::size_t> sizes(levels, size);
  return qp::weak_order(sizes);
}

void BM_MaxRainbow(benchmark::State& state) {
  const qp::Poset p = dense_weak_order(static_cast<std::size_t>(state.range(0)), 8);
  const qp::LinearExtension ext = qp::min_index_extension(p);
  for (auto _ : state) benchmark::DoNotOptimize(qp::max_rainbow(p, ext).size);
  state.counters["covers"] = static_cast<double>(p.covers().size());
}
BENCHMARK(BM_MaxRainbow)->Arg(2)->Arg(8)->Arg(32);

void BM_AssignQueues(benchmark::State& state) {
  const qp::Poset p = dense_weak_order(static_cast<std::size_t>(state.range(0)), 8);
  const qp::LinearExtension ext = qp::min_index_extension(p);
  for (auto _ : state) benchmark::DoNotOptimize(qp::assign_queues(p, ext).queue_count);
}
BENCHMARK(BM_AssignQueues)->Arg(8)->Arg(32);

void BM_CrownFreeLayout(benchmark::State& state) {
  const qp::Poset p = qp::q_width(static_cast<std::size_t>(state.range(0))).poset();
  for (auto _ : state) benchmark::DoNotOptimize(qp::crown_free_layout(p).index());
  state.counters["elements"] = static_cast<double>(p.size());
}
BENCHMARK(BM_CrownFreeLayout)->DenseRange(3, 5);

void BM_CrownCertificate(benchmark::State& state) {
  const qp::Poset p = qp::subdivided_crown(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qp::crown_free_layout(p).index());
}
BENCHMARK(BM_CrownCertificate)->Arg(4)->Arg(16);

void BM_PlanarWidth(benchmark::State& state) {
  const qp::UpwardDiagram d = qp::q_width(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qp::planar_width_layout(d).queue_count);
}
BENCHMARK(BM_PlanarWidth)->DenseRange(2, 4);

void BM_ExactWidthFamily(benchmark::State& state) {
  const qp::Poset p = qp::q_width(static_cast<std::size_t>(state.range(0))).poset();
  for (auto _ : state) benchmark::DoNotOptimize(qp::exact_queue_number(p).index());
}
BENCHMARK(BM_ExactWidthFamily)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_ExactHeightFamily(benchmark::State& state) {
  const qp::Poset p = qp::q_height(3).poset;
  for (auto _ : state) benchmark::DoNotOptimize(qp::exact_queue_number(p).index());
}
BENCHMARK(BM_ExactHeightFamily)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
