// Serial reference against the OpenMP kernel on rational and q-polynomial coefficients.
#include <benchmark/benchmark.h>

#include "symtriple/kernels.hpp"
#include "symtriple/sampling.hpp"

using namespace symtriple;

namespace {

std::vector<FieldElement> rational_coeffs(int n, std::uint64_t seed) {
    Sampler s(seed);
    std::vector<FieldElement> v;
    for (int i = 0; i < n; ++i) v.emplace_back(s.rational(99, 99));
    return v;
}

std::vector<FieldElement> poly_coeffs(int n, std::uint64_t seed) {
    Sampler s(seed);
    std::vector<FieldElement> v;
    for (int i = 0; i < n; ++i) v.emplace_back(s.poly("q", 6));
    return v;
}

template <void (*Kernel)(std::span<const FieldElement>, std::span<const FieldElement>, std::span<FieldElement>)>
void run(benchmark::State& state, std::vector<FieldElement> (*make)(int, std::uint64_t)) {
    const int n = static_cast<int>(state.range(0));
    auto a = make(n, 1), b = make(n, 2);
    std::vector<FieldElement> out(static_cast<std::size_t>(n));
    for (auto _ : state) {
        Kernel(a, b, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetComplexityN(n);
}

void serial_rational(benchmark::State& s) { run<kernels::convolve_serial>(s, rational_coeffs); }
void parallel_rational(benchmark::State& s) { run<kernels::convolve_parallel>(s, rational_coeffs); }
void serial_poly(benchmark::State& s) { run<kernels::convolve_serial>(s, poly_coeffs); }
void parallel_poly(benchmark::State& s) { run<kernels::convolve_parallel>(s, poly_coeffs); }

}  // namespace

BENCHMARK(serial_rational)->RangeMultiplier(2)->Range(16, 256)->Complexity();
BENCHMARK(parallel_rational)->RangeMultiplier(2)->Range(16, 256)->Complexity();
BENCHMARK(serial_poly)->RangeMultiplier(2)->Range(16, 128)->Complexity();
BENCHMARK(parallel_poly)->RangeMultiplier(2)->Range(16, 128)->Complexity();

BENCHMARK_MAIN();
