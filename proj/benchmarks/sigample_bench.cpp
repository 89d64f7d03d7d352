#include <benchmark/benchmark.h>

#include "sigample/sigample.hpp"

using namespace sigample;

namespace {

ComponentDescriptor surface(std::initializer_list<std::pair<MultiIndex, long>> values, std::size_t rank) {
  ComponentDescriptor c;
  c.name = "X";
  c.dim = 2;
  c.top_form = SymmetricForm(rank, 2);
  for (const auto& [idx, v] : values) c.top_form.set(idx, v);
  return c;
}

const IntegerMatrix kWehler = IntegerMatrix{{1, 4}, {0, -1}} * IntegerMatrix{{-1, 0}, {4, 1}};
const IntegerMatrix kShear{{2, 0, 1}, {2, 1, 0}, {-1, 0, 0}};

IntegerMatrix jordan(std::size_t n) {
  IntegerMatrix m = IntegerMatrix::identity(n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
  return m;
}

void BM_CharPoly(benchmark::State& state) {
  const IntegerMatrix m = mat_pow(jordan(static_cast<std::size_t>(state.range(0))), 7);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->Arg(2)->Arg(4)->Arg(8);

void BM_QuasiUnipotence(benchmark::State& state) {
  const IntegerMatrix m = jordan(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(quasi_unipotence(m));
}
BENCHMARK(BM_QuasiUnipotence)->Arg(2)->Arg(3)->Arg(4);

void BM_SpectralRadius(benchmark::State& state) {
  const Rational eps(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(kWehler, eps));
}
BENCHMARK(BM_SpectralRadius)->Arg(1000)->Arg(1000000);

void BM_SigmaAmple(benchmark::State& state) {
  const ComponentDescriptor x = surface({{{0, 1}, 1}, {{0, 2}, 1}, {{1, 2}, 1}}, 3);
  const SchemeDescriptor scheme{3, {x}, std::nullopt};
  const AmplenessOracle oracle{"ample", SurfacePositiveCone{x, DivisorClass{1, 1, 1}, {}}};
  const AutomorphismAction shear{"shear", kShear};
  for (auto _ : state) benchmark::DoNotOptimize(is_sigma_ample(scheme, shear, oracle, DivisorClass{1, 0, 0}));
}
BENCHMARK(BM_SigmaAmple);

void BM_GkDimension(benchmark::State& state) {
  const ComponentDescriptor x = surface({{{0, 1}, 1}, {{0, 2}, 1}, {{1, 2}, 1}}, 3);
  const SchemeDescriptor scheme{3, {x}, std::nullopt};
  const AmplenessOracle oracle{"ample", SurfacePositiveCone{x, DivisorClass{1, 1, 1}, {}}};
  const AutomorphismAction shear{"shear", kShear};
  for (auto _ : state) benchmark::DoNotOptimize(gk_dimension(scheme, shear, oracle, DivisorClass{1, 1, 1}));
}
BENCHMARK(BM_GkDimension);

}  // namespace

BENCHMARK_MAIN();
