// Implicit-operator kernels: OpenMP gather kernel vs the serial scatter reference,
// and the two iterative eigensolvers.

#include <vector>

#include <benchmark/benchmark.h>

#include "hcert/certificate_operator.hpp"
#include "hcert/spectral.hpp"

namespace {

hcert::CertificateOperator make_op(std::uint32_t k, std::uint32_t n) {
    return {hcert::sample({.k = k, .n = n, .p = 0.5, .seed = 1}), 0.5};
}

void BM_MatvecKernel(benchmark::State& state) {
    const auto op = make_op(static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1)));
    std::vector<double> x(op.dim(), 1.0);
    std::vector<double> y(op.dim());
    for (auto _ : state) {
        op.apply(x, y);
        benchmark::DoNotOptimize(y.data());
    }
    state.counters["D"] = static_cast<double>(op.dim());
    state.counters["nnz"] = static_cast<double>(op.edge_entries());
}

void BM_MatvecReference(benchmark::State& state) {
    const auto op = make_op(static_cast<std::uint32_t>(state.range(0)), static_cast<std::uint32_t>(state.range(1)));
    std::vector<double> x(op.dim(), 1.0);
    std::vector<double> y(op.dim());
    for (auto _ : state) {
        op.apply_reference(x, y);
        benchmark::DoNotOptimize(y.data());
    }
    state.counters["D"] = static_cast<double>(op.dim());
}

void BM_SpectralNorm(benchmark::State& state) {
    const auto op = make_op(4, static_cast<std::uint32_t>(state.range(0)));
    hcert::SpectralConfig cfg;
    cfg.dense_threshold = 0;
    cfg.method = state.range(1) == 0 ? hcert::SpectralMethod::lanczos : hcert::SpectralMethod::power;
    for (auto _ : state) {
        const auto r = hcert::spectral_norm(op, cfg);
        benchmark::DoNotOptimize(r.value);
        state.counters["iters"] = static_cast<double>(r.iterations);
    }
}

}  // namespace

BENCHMARK(BM_MatvecKernel)->Args({4, 30})->Args({4, 60})->Args({6, 20})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MatvecReference)->Args({4, 30})->Args({4, 60})->Args({6, 20})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SpectralNorm)->Args({40, 0})->Args({40, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
