// Serial reference vs OpenMP kernels: Bareiss determinant, trail table,
// Cramer cofactors, and the brute-force oracle.

#include <benchmark/benchmark.h>

#include <random>

#include "egs/corpus.hpp"
#include "egs/oracle.hpp"
#include "egs/pid.hpp"
#include "egs/splines.hpp"

using namespace egs;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

Matrix random_matrix(std::size_t n) {
  const auto ring = RingDescriptor::polynomial({"x", "y"}, BaseRing::integers);
  const auto x = RingElement::variable(ring, 0), y = RingElement::variable(ring, 1);
  std::mt19937_64 rng(n);
  Matrix m(ring, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = RingElement::integer(ring, static_cast<long>(rng() % 7) - 3) * x +
                RingElement::integer(ring, static_cast<long>(rng() % 5) - 2) * y * y +
                RingElement::integer(ring, static_cast<long>(rng() % 9) - 4);
  return m;
}

// Complete graph with distinct prime edge labels.
LabeledGraph dense_graph(std::size_t n) {
  const auto zz = RingDescriptor::integers();
  std::vector<Vertex> vs;
  for (std::size_t v = 0; v < n; ++v) vs.push_back({"v" + std::to_string(v + 1), RingElement::integer(zz, 1)});
  std::vector<Edge> es;
  long p = 1;
  auto next_prime = [&] {
    for (;;) {
      ++p;
      bool prime = true;
      for (long d = 2; d * d <= p; ++d) prime = prime && p % d;
      if (prime) return p;
    }
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) es.push_back({a, b, RingElement::integer(zz, next_prime())});
  return LabeledGraph::validated(zz, vs, es);
}

void BM_Determinant(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m, mode(state)));
}
BENCHMARK(BM_Determinant)->ArgsProduct({{0, 1}, {6, 10}})->Unit(benchmark::kMillisecond);

void BM_TrailTable(benchmark::State& state) {
  const auto g = dense_graph(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(TrailTable(g, {}, mode(state)));
}
BENCHMARK(BM_TrailTable)->ArgsProduct({{0, 1}, {5, 6}})->Unit(benchmark::kMillisecond);

void BM_Qhat(benchmark::State& state) {
  const auto g = corpus::instance("t4.json");
  for (auto _ : state) benchmark::DoNotOptimize(qhat(g, {}, mode(state)));
}
BENCHMARK(BM_Qhat)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_MinimalLeadingEntry(benchmark::State& state) {
  const auto g = oracle::random_instance({52, 6, 0.6, 50, false});
  const auto formula = qhat_components(g);
  for (auto _ : state)
    for (std::size_t i = 0; i < g.num_vertices(); ++i)
      benchmark::DoNotOptimize(
          oracle::brute_minimal_leading_entry(g, i, formula[i].constant_value().get_num(), mode(state)));
}
BENCHMARK(BM_MinimalLeadingEntry)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EnumerateSplines(benchmark::State& state) {
  const auto g = oracle::random_instance({7, 5, 0.5, 6, false});
  for (auto _ : state) benchmark::DoNotOptimize(oracle::enumerate_small_splines(g, 30, mode(state)));
}
BENCHMARK(BM_EnumerateSplines)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CramerSetup(benchmark::State& state) {
  const auto g = corpus::instance("t4.json");
  const auto b = corpus::spline_set("t4_set_b.json", g);
  for (auto _ : state) benchmark::DoNotOptimize(CramerSolver(g, b).determinant());
}
BENCHMARK(BM_CramerSetup)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
