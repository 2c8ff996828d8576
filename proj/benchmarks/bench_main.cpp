#include <benchmark/benchmark.h>

#include <random>

#include "steincalc/configurations.hpp"
#include "steincalc/integer_matrix.hpp"
#include "steincalc/invariants.hpp"
#include "steincalc/word.hpp"

using namespace steincalc;

namespace {

IntMatrix random_matrix(std::size_t n, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> d(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(gen);
  return m;
}

Word planar_word(int b, std::size_t length, std::mt19937_64& gen) {
  auto sys = std::make_shared<CurveSystem>(Surface(0, b));
  std::vector<CurveId> pool;
  for (int i = 0; i < 12; ++i) {
    std::vector<int> holes;
    for (int h = 2; h <= b; ++h)
      if (gen() & 1U) holes.push_back(h);
    if (holes.empty()) holes.push_back(2);
    pool.push_back(sys->add(Curve::around_holes(sys->surface(), "c" + std::to_string(i), holes)));
  }
  std::vector<CurveId> letters;
  for (std::size_t i = 0; i < length; ++i) letters.push_back(pool[gen() % pool.size()]);
  return Word::positive(sys, letters);
}

}  // namespace

static void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937_64 gen(1);
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), gen);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(12);

static void BM_Contains(benchmark::State& state) {
  std::mt19937_64 gen(2);
  const Word host = planar_word(8, static_cast<std::size_t>(state.range(0)), gen);
  const Word target(host.system_ptr(), {host[host.size() - 1], host[0]});
  for (auto _ : state) benchmark::DoNotOptimize(contains(host, target));
}
BENCHMARK(BM_Contains)->Arg(10)->Arg(20)->Arg(40);

static void BM_PlanarForm(benchmark::State& state) {
  std::mt19937_64 gen(3);
  const Word w = planar_word(8, static_cast<std::size_t>(state.range(0)), gen);
  for (auto _ : state) benchmark::DoNotOptimize(planar_intersection_form(w));
}
BENCHMARK(BM_PlanarForm)->Arg(10)->Arg(20)->Arg(40);

static void BM_H1BoundaryFamily(benchmark::State& state) {
  for (auto _ : state)
    for (int g = 0; g <= 3; ++g)
      for (int b = 2; b <= 12; ++b) benchmark::DoNotOptimize(h1_boundary(tau_boundary_configuration(g, b).word()));
}
BENCHMARK(BM_H1BoundaryFamily);

BENCHMARK_MAIN();
