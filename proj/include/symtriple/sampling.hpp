#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "symtriple/exact.hpp"

namespace symtriple {

// Deterministic source of small random rationals and field elements.
// Range reduction is done by hand so streams agree across standard libraries.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi);
    Rational rational(long max_num = 9, long max_den = 9);
    Rational nonzero_rational(long max_num = 9, long max_den = 9);
    UniPoly poly(const std::string& symbol, int max_degree);
    // Rational, polynomial or rational function with roughly equal probability.
    FieldElement element(const std::string& symbol);

private:
    std::mt19937_64 rng_;
};

}  // namespace symtriple
