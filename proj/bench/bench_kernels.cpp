// Parallel kernels against their serial references. The argument of the
// parallel variants is the worker count.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <algorithm>

#include "dybrace/dbrace.hpp"
#include "dybrace/dyb.hpp"
#include "dybrace/reference.hpp"

using namespace dybrace;

namespace {

const Holomorph& z7() {
  static const Holomorph hol(make_group({7}));
  return hol;
}

// The census family of Z8 with the most parameters.
const DBrace& wide_dbrace() {
  static const DBrace d = [] {
    const auto fams = enumerate_families(std::make_shared<const Holomorph>(make_group({8})));
    const auto it = std::max_element(fams.begin(), fams.end(),
                                     [](const auto& a, const auto& b) { return a.params() < b.params(); });
    return family_to_dbrace(*it);
  }();
  return d;
}

void BM_enumerate_parallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_family_codes(z7(), {}));
}

void BM_enumerate_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::minimal_family_codes(z7()));
}

void BM_verify_dyb_parallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  const auto m = dyb_from_dbrace(wide_dbrace());
  for (auto _ : state) benchmark::DoNotOptimize(verify_dyb(m));
}

void BM_verify_dyb_serial(benchmark::State& state) {
  const auto m = dyb_from_dbrace(wide_dbrace());
  for (auto _ : state) benchmark::DoNotOptimize(reference::dyb_failures(m));
}

void BM_check_dbrace_parallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_dbrace(wide_dbrace()));
}

void BM_check_dbrace_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::dbrace_axiom_failures(wide_dbrace()));
}

}  // namespace

BENCHMARK(BM_enumerate_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_dyb_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_verify_dyb_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_check_dbrace_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_check_dbrace_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
