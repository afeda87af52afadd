#pragma once

#include <span>

#include "symtriple/exact.hpp"

namespace symtriple::kernels {

// Truncated Cauchy product: out[n] = sum_{i+j=n} a[i]*b[j] for 0 <= n < out.size().
// Entries of a or b beyond their spans are treated as absent, never read.
void convolve_serial(std::span<const FieldElement> a, std::span<const FieldElement> b, std::span<FieldElement> out);

// Same contract, output coefficients distributed over OpenMP threads.
void convolve_parallel(std::span<const FieldElement> a, std::span<const FieldElement> b, std::span<FieldElement> out);

// The single multiplication seam used by Series. Dispatches on problem size.
void convolve(std::span<const FieldElement> a, std::span<const FieldElement> b, std::span<FieldElement> out);

}  // namespace symtriple::kernels
