#include <benchmark/benchmark.h>

#include <sl3web/decomposition.hpp>
#include <sl3web/global_coords.hpp>
#include <sl3web/oracle.hpp>
#include <sl3web/pants_coords.hpp>

#include <vector>

using namespace sl3web;

namespace {

ShearVector sample_shear(Int k) {
  return {k % 3, (k + 1) % 4, (k + 2) % 3, k % 5, (k + 3) % 4, (k + 1) % 3, k % 7 - 3, k % 5 - 2};
}

void BM_Forward(benchmark::State& state) {
  Int k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(forward_unchecked(sample_shear(k++ & 1023)));
  }
}
BENCHMARK(BM_Forward);

void BM_Invert(benchmark::State& state) {
  std::vector<PantsTuple> tuples;
  for (Int k = 0; k < 1024; ++k) tuples.push_back(forward_unchecked(sample_shear(k)));
  std::size_t i = 0;
  for (auto _ : state) {
    auto r = try_invert(tuples[i++ & 1023]);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Invert);

void BM_ImageCheck(benchmark::State& state) {
  Int k = 0;
  for (auto _ : state) {
    PantsTuple p{k % 3, k % 4, k % 5, k % 2, k % 3, k % 6, k % 5 - 2, k % 7 - 3};
    benchmark::DoNotOptimize(image_check(p));
    ++k;
  }
}
BENCHMARK(BM_ImageCheck);

void BM_ReconstructKappa(benchmark::State& state) {
  const int genus = static_cast<int>(state.range(0));
  const DecompositionGraph g = standard_graph(genus);
  GlobalCoordinate c = GlobalCoordinate::zero(g);
  for (auto& t : c.t1) t = 1;
  for (auto& t : c.t2) t = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kappa(reconstruct(g, c)));
  }
}
BENCHMARK(BM_ReconstructKappa)->Arg(2)->Arg(4)->Arg(8);

void BM_OraclePantsBound1(benchmark::State& state) {
  BoxSpec box;
  box.shear_bound = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_pants_image(box));
  }
}
BENCHMARK(BM_OraclePantsBound1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
