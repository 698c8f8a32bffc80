#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "extcrystal/affine_a.hpp"
#include "extcrystal/enumerate.hpp"
#include "extcrystal/ext_crystal.hpp"
#include "extcrystal/text_format.hpp"

namespace {

using namespace extcrystal;
using Ext = ExtElement<Multisegment>;

std::vector<Ext> sample_ext(int n, std::size_t count) {
  Rng rng(11);
  std::vector<Ext> out;
  for (std::size_t idx = 0; idx < count; ++idx) out.push_back(random_ext(n, {-3, 3}, 12, rng));
  return out;
}

void BM_F_ext(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ExtCrystal<MultisegmentCrystal> crystal{MultisegmentCrystal(n)};
  const auto inputs = sample_ext(n, 256);
  std::size_t idx = 0;
  for (auto _ : state) {
    const auto& c = inputs[idx++ % inputs.size()];
    benchmark::DoNotOptimize(crystal.F(c, 1 + static_cast<int>(idx % n), 0));
  }
}
BENCHMARK(BM_F_ext)->Arg(2)->Arg(4)->Arg(8);

void BM_F_hl(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const AffineA model(n);
  std::vector<HLWeight> inputs;
  for (const auto& c : sample_ext(n, 256)) inputs.push_back(model.gamma(c));
  std::size_t idx = 0;
  for (auto _ : state) {
    const auto& lambda = inputs[idx++ % inputs.size()];
    benchmark::DoNotOptimize(model.F_hl(lambda, 1 + static_cast<int>(idx % n), 0));
  }
}
BENCHMARK(BM_F_hl)->Arg(2)->Arg(4)->Arg(8);

void BM_worked_example(benchmark::State& state) {
  const AffineA model(3);
  const HLWeight lambda =
      parse_weight("(3,-4),(3,-2),2*(2,-1),(1,-2),(1,2),(2,1),(2,3),2*(3,4),(2,5),(2,7)");
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.F_hl(lambda, 1, 0));
    benchmark::DoNotOptimize(model.F_hl(lambda, 1, -1));
  }
}
BENCHMARK(BM_worked_example);

void BM_star(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MultisegmentCrystal ms(n);
  Rng rng(5);
  std::vector<Multisegment> inputs;
  for (int idx = 0; idx < 256; ++idx) inputs.push_back(random_multisegment(n, 12, rng));
  std::size_t idx = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ms.star(inputs[idx++ % inputs.size()]));
}
BENCHMARK(BM_star)->Arg(2)->Arg(4)->Arg(8);

void BM_cr_sweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ExtCrystal<MultisegmentCrystal> crystal{MultisegmentCrystal(n)};
  const AffineA model(n);
  const auto elements = ext_elements_up_to(n, {-2, 2}, 4);
  for (auto _ : state) {
    std::size_t mismatches = 0;
    for (const auto& c : elements) {
      const auto lambda = model.gamma(c);
      for (int i = 1; i <= n; ++i) {
        for (SlotIndex k = -2; k <= 1; ++k) {
          mismatches += model.gamma(crystal.F(c, i, k)) != model.F_hl(lambda, i, k);
        }
      }
    }
    benchmark::DoNotOptimize(mismatches);
  }
  state.counters["elements"] = static_cast<double>(elements.size());
}
BENCHMARK(BM_cr_sweep)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
