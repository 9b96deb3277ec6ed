#include <benchmark/benchmark.h>

#include <vector>

#include "symball/embedding.hpp"
#include "symball/induced.hpp"
#include "symball/random.hpp"
#include "symball/sym_power.hpp"

using namespace symball;

namespace {

OrderedConfig sample_tuple(SampleStream& st, int m, int s) {
  std::vector<BallPoint> pts;
  for (int i = 0; i < m; ++i) pts.push_back(st.ball_point(s, 0.9));
  return OrderedConfig(std::move(pts));
}

void BM_Mobius(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  SampleStream st("bench-mobius", 0);
  const BallPoint a = st.ball_point(s, 0.9);
  const BallPoint z = st.ball_point(s, 0.95);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mobius(a, z));
  }
}
BENCHMARK(BM_Mobius)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_Compose(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  SampleStream st("bench-compose", 0);
  const Automorphism g1 = random_automorphism(st, s);
  const Automorphism g2 = random_automorphism(st, s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(g1, g2));
  }
}
BENCHMARK(BM_Compose)->Arg(2)->Arg(4)->Arg(8);

void BM_Project(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  SampleStream st("bench-project", 0);
  const OrderedConfig t = sample_tuple(st, m, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(project(t));
  }
}
BENCHMARK(BM_Project)->Arg(2)->Arg(4)->Arg(8);

void BM_SegreWhitney(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int s = static_cast<int>(state.range(1));
  SampleStream st("bench-embed", 0);
  const SymConfig c = project(sample_tuple(st, m, s));
  for (auto _ : state) {
    benchmark::DoNotOptimize(segre_whitney(c));
  }
}
BENCHMARK(BM_SegreWhitney)->Args({2, 2})->Args({4, 2})->Args({4, 4})->Args({6, 3});

void BM_Fiber(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  SampleStream st("bench-fiber", 0);
  // Half the points coincide, so the fiber is smaller than m!.
  const BallPoint a = st.ball_point(2, 0.9);
  std::vector<BallPoint> pts(m / 2, a);
  while (static_cast<int>(pts.size()) < m) pts.push_back(st.ball_point(2, 0.9));
  const SymConfig c = SymConfig(std::move(pts));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fiber(c));
  }
}
BENCHMARK(BM_Fiber)->Arg(4)->Arg(6)->Arg(8);

void BM_ExtractGenerator(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  SampleStream st("bench-extract", 0);
  const Automorphism g = random_automorphism(st, s);
  const InducedMap f(g, m);
  const auto fn = [&f](const SymConfig& c) { return f(c); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_generator(fn, s, m));
  }
}
BENCHMARK(BM_ExtractGenerator)->Args({2, 2})->Args({3, 3});

}  // namespace

BENCHMARK_MAIN();
