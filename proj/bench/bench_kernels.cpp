// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "witkit/geometry.hpp"
#include "witkit/hakye.hpp"
#include "witkit/scan.hpp"
#include "witkit/states.hpp"
#include "witkit/witness.hpp"

using namespace witkit;

namespace {

const DensityOperator& sigma33() {
  static const DensityOperator s = random_density(Dims(3, 3), 7);
  return s;
}

ScanSpec scan_spec() {
  ScanSpec spec;
  spec.base = HaKyeParams::reference_instance();
  spec.axes = {parse_grid_axis("a=0.5:2:20"), parse_grid_axis("theta=0:3.14:50")};
  return normalize(spec);
}

void BM_SeeSawSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(c_sigma_max_serial(sigma33()).value);
}

void BM_SeeSawParallel(benchmark::State& state) {
  SeeSawOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(c_sigma_max(sigma33(), opts).value);
}

void BM_ScanSerial(benchmark::State& state) {
  const ScanSpec spec = scan_spec();
  for (auto _ : state) benchmark::DoNotOptimize(run_scan_serial(spec).size());
}

void BM_ScanParallel(benchmark::State& state) {
  const ScanSpec spec = scan_spec();
  for (auto _ : state) benchmark::DoNotOptimize(run_scan(spec, static_cast<int>(state.range(0))).size());
}

void BM_GeometrySerial(benchmark::State& state) {
  const HermitianOperator w = hakye_witness(HaKyeParams::reference_instance());
  GeometryOptions opts;
  opts.samples = 500;
  for (auto _ : state) benchmark::DoNotOptimize(sample_geometry_serial(w, opts).size());
}

void BM_GeometryParallel(benchmark::State& state) {
  const HermitianOperator w = hakye_witness(HaKyeParams::reference_instance());
  GeometryOptions opts;
  opts.samples = 500;
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_geometry(w, opts, static_cast<int>(state.range(0))).size());
}

}  // namespace

BENCHMARK(BM_SeeSawSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeeSawParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeometrySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeometryParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
