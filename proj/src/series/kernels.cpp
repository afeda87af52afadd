#include "symtriple/kernels.hpp"

#include <vector>

namespace symtriple::kernels {

namespace {

std::vector<std::size_t> nonzero_indices(std::span<const FieldElement> a, std::size_t limit) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < a.size() && i < limit; ++i)
        if (!a[i].is_zero()) idx.push_back(i);
    return idx;
}

FieldElement coefficient(std::span<const FieldElement> a, std::span<const FieldElement> b,
                         const std::vector<std::size_t>& support, std::size_t n) {
    FieldElement acc;
    for (std::size_t i : support) {
        if (i > n) break;
        std::size_t j = n - i;
        if (j < b.size() && !b[j].is_zero()) acc += a[i] * b[j];
    }
    return acc;
}

constexpr std::size_t kParallelThreshold = 16;

}  // namespace

void convolve_serial(std::span<const FieldElement> a, std::span<const FieldElement> b, std::span<FieldElement> out) {
    for (std::size_t n = 0; n < out.size(); ++n) {
        FieldElement acc;
        for (std::size_t i = 0; i <= n && i < a.size(); ++i) {
            std::size_t j = n - i;
            if (j < b.size()) acc += a[i] * b[j];
        }
        out[n] = acc;
    }
}

void convolve_parallel(std::span<const FieldElement> a, std::span<const FieldElement> b, std::span<FieldElement> out) {
    const auto support = nonzero_indices(a, out.size());
    const long count = static_cast<long>(out.size());
    // Work grows with n, so hand out single coefficients dynamically.
#pragma omp parallel for schedule(dynamic, 1)
    for (long n = 0; n < count; ++n) out[static_cast<std::size_t>(n)] = coefficient(a, b, support, static_cast<std::size_t>(n));
}

void convolve(std::span<const FieldElement> a, std::span<const FieldElement> b, std::span<FieldElement> out) {
    if (out.size() >= kParallelThreshold) {
        convolve_parallel(a, b, out);
        return;
    }
    const auto support = nonzero_indices(a, out.size());
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = coefficient(a, b, support, n);
}

}  // namespace symtriple::kernels
