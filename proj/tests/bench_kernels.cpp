// Throughput comparison of the quadrature kernels across backends.
// Not part of the test suite; build target bench_kernels.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "wedgeflow/simd/kernels.hpp"

using namespace wedgeflow;

namespace {

struct Data {
    std::vector<double> x, y, qw, out;
    simd::BumpSpec spec{0.25, 0.35, 1.0 / 0.12, 1.0 / 0.12};
};

Data make_data(std::size_t n)
{
    std::mt19937_64 rng(7);
    auto u = [&rng](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    };
    Data d;
    d.x.resize(n);
    d.y.resize(n);
    d.qw.resize(n);
    d.out.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        d.x[i] = u(0.1, 0.4);
        d.y[i] = u(0.2, 0.5);
        d.qw[i] = u(0.0, 1e-3);
    }
    return d;
}

void bench_bump(benchmark::State& state, simd::Backend backend)
{
    if (backend == simd::Backend::avx2 && !simd::cpu_has_avx2()) {
        state.SkipWithError("no AVX2");
        return;
    }
    simd::set_backend(backend);
    const auto kernel = simd::bump_kernel();
    Data d = make_data(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        kernel(d.spec, simd::BumpPart::value, d.x.data(), d.y.data(), d.qw.data(),
               d.out.data(), d.x.size());
        benchmark::DoNotOptimize(d.out.data());
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void bench_sector(benchmark::State& state, simd::Backend backend)
{
    if (backend == simd::Backend::avx2 && !simd::cpu_has_avx2()) {
        state.SkipWithError("no AVX2");
        return;
    }
    simd::set_backend(backend);
    const auto kernel = simd::sector_kernel();
    Data d = make_data(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        kernel(1.05, 1.0, 2.5, d.x.data(), d.y.data(), d.out.data(), d.x.size());
        benchmark::DoNotOptimize(d.out.data());
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(bench_bump, scalar, simd::Backend::scalar)->Arg(1 << 10)->Arg(1 << 16);
BENCHMARK_CAPTURE(bench_bump, avx2, simd::Backend::avx2)->Arg(1 << 10)->Arg(1 << 16);
BENCHMARK_CAPTURE(bench_sector, scalar, simd::Backend::scalar)->Arg(1 << 16);
BENCHMARK_CAPTURE(bench_sector, avx2, simd::Backend::avx2)->Arg(1 << 16);

BENCHMARK_MAIN();
