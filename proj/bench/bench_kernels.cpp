#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "mst/hilbert_operator.hpp"
#include "mst/transform.hpp"

namespace {

mst::CoeffSeq probe(int n) {
  std::vector<double> x(n);
  for (int k = 0; k < n; ++k) x[k] = 1.0 / std::sqrt(k + 1.0);
  return mst::CoeffSeq(std::move(x));
}

std::vector<mst::EvalPoint> points(int n) {
  std::vector<mst::EvalPoint> out;
  for (int k = 0; k < n; ++k) out.push_back(mst::EvalPoint::at({-1.0 + 1.8 * k / n, 0.1}));
  return out;
}

const mst::FuncSpec kSine([](double t, double tc) { return std::sin(std::numbers::pi * std::min(t, tc)); });

void BM_apply(benchmark::State& state) {
  const mst::HilbertOpTrunc h(static_cast<int>(state.range(0)));
  const auto x = probe(h.size());
  for (auto _ : state) benchmark::DoNotOptimize(h.apply(x));
}

void BM_apply_serial(benchmark::State& state) {
  const mst::HilbertOpTrunc h(static_cast<int>(state.range(0)));
  const auto x = probe(h.size());
  for (auto _ : state) benchmark::DoNotOptimize(h.apply_serial(x));
}

void BM_spectrum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mst::truncated_spectrum(static_cast<int>(state.range(0))));
}

void BM_spectrum_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mst::truncated_spectrum_serial(static_cast<int>(state.range(0))));
}

void BM_forward_grid(benchmark::State& state) {
  const auto pts = points(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mst::forward_grid(kSine, pts));
}

void BM_forward_grid_serial(benchmark::State& state) {
  const auto pts = points(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mst::forward_grid_serial(kSine, pts));
}

}  // namespace

BENCHMARK(BM_apply)->Arg(1024)->Arg(4096);
BENCHMARK(BM_apply_serial)->Arg(1024)->Arg(4096);
BENCHMARK(BM_spectrum)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_spectrum_serial)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_forward_grid)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_forward_grid_serial)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
