// Serial reference kernels against their OpenMP counterparts. Thread count
// follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "deloop/constructions.hpp"
#include "deloop/kernels.hpp"

namespace k = deloop::kernels;

template <auto Kernel>
static void triangle_random(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto triples = k::random_triples(n, 100000, 1);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(n, triples));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(triples.size()));
}
BENCHMARK(triangle_random<k::serial::triangle_violations>)->Name("triangle_random/serial")->Arg(6)->Arg(8)->Arg(11);
BENCHMARK(triangle_random<k::parallel::triangle_violations>)->Name("triangle_random/parallel")->Arg(6)->Arg(8)->Arg(11);

template <auto Kernel>
static void triangle_exhaustive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(n));
}
BENCHMARK(triangle_exhaustive<k::serial::triangle_violations_exhaustive>)->Name("triangle_exhaustive/serial")->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(triangle_exhaustive<k::parallel::triangle_violations_exhaustive>)->Name("triangle_exhaustive/parallel")->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

template <auto Kernel>
static void fixed_tables(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(n));
}
BENCHMARK(fixed_tables<k::serial::fixed_point_tables>)->Name("fixed_point_tables/serial")->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(fixed_tables<k::parallel::fixed_point_tables>)->Name("fixed_point_tables/parallel")->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

template <auto Kernel>
static void sign_disagreements(benchmark::State& state) {
  const auto q = deloop::cartier_delooping(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(q));
}
BENCHMARK(sign_disagreements<k::serial::sign_disagreements>)->Name("sign_disagreements/serial")->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(sign_disagreements<k::parallel::sign_disagreements>)->Name("sign_disagreements/parallel")->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

template <auto Kernel>
static void class_sizes(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(n));
}
BENCHMARK(class_sizes<k::serial::cartier_class_sizes>)->Name("cartier_class_sizes/serial")->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(class_sizes<k::parallel::cartier_class_sizes>)->Name("cartier_class_sizes/parallel")->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void cartier_partition(benchmark::State& state) {
  const auto exec = state.range(1) ? deloop::Execution::parallel : deloop::Execution::serial;
  const auto x = deloop::LabeledSet::fin(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(deloop::cartier_classes(x, exec));
}
BENCHMARK(cartier_partition)->ArgNames({"n", "parallel"})->Args({5, 0})->Args({5, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
