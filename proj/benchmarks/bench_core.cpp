#include <benchmark/benchmark.h>

#include "ghom/corpus.hpp"

using namespace ghom;

namespace {

ModulePres torsion_family(int n) {
  Ring R = default_ring(2);
  return example_cautionary2x2(R, n);
}

void BM_Buchberger(benchmark::State& state) {
  // image of a tensor-square presentation: the engine's typical hot spot
  ModulePres a = torsion_family(static_cast<int>(state.range(0)));
  ModulePres t = tensor_pres(a, a);
  for (auto _ : state) {
    GroebnerBasis gb = buchberger(image_of(t.phi));
    benchmark::DoNotOptimize(gb.g.size());
  }
}
BENCHMARK(BM_Buchberger)->Arg(2)->Arg(4)->Arg(6);

void BM_KernelOfMap(benchmark::State& state) {
  Ring R = default_ring(3);
  Rng rng(5);
  ModulePres p = example_bourbaki(R, static_cast<int>(state.range(0)), 2, rng);
  GradedMatrix phi_t = mat_transpose(p.phi);
  for (auto _ : state) {
    Submodule k = kernel_of_map(phi_t);
    benchmark::DoNotOptimize(k.gens.size());
  }
}
BENCHMARK(BM_KernelOfMap)->Arg(1)->Arg(2);

void BM_Resolution(benchmark::State& state) {
  Ring R = default_ring(3);
  Rng rng(7);
  ModulePres p = example_bourbaki(R, static_cast<int>(state.range(0)), 2, rng);
  for (auto _ : state) {
    auto rr = free_resolution(p);
    benchmark::DoNotOptimize(rr.res.length());
  }
}
BENCHMARK(BM_Resolution)->Arg(1)->Arg(2);

void BM_TensorH0(benchmark::State& state) {
  ModulePres a = torsion_family(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    InvariantCache cache;
    ModulePres t = tensor_pres(a, a);
    benchmark::DoNotOptimize(cache.h0_via_saturation(t));
  }
}
BENCHMARK(BM_TensorH0)->Arg(2)->Arg(4)->Arg(6);

void BM_Hdeg(benchmark::State& state) {
  Ring R = default_ring(3);
  Rng rng(11);
  ModulePres a = example_bourbaki(R, 2, 2, rng);
  for (auto _ : state) {
    InvariantCache cache;
    benchmark::DoNotOptimize(cache.hdeg(a));
  }
}
BENCHMARK(BM_Hdeg);

void BM_HilbertNumerator(benchmark::State& state) {
  Ring R = default_ring(3);
  Rng rng(13);
  std::vector<Monomial> gens;
  for (int i = 0; i < 12; ++i) {
    Monomial m(3, 0);
    m[0] = static_cast<int>(rng.below(4));
    m[1] = static_cast<int>(rng.below(4));
    m[2] = static_cast<int>(rng.below(4));
    if (mono_degree(m) > 0) gens.push_back(m);
  }
  for (auto _ : state) {
    IntLaurent n = monomial_ideal_numerator(R, gens);
    benchmark::DoNotOptimize(n.c.size());
  }
}
BENCHMARK(BM_HilbertNumerator);

}  // namespace

BENCHMARK_MAIN();
