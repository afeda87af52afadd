#include "symtriple/sampling.hpp"

namespace symtriple {

long Sampler::uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng_() % span);
}

Rational Sampler::rational(long max_num, long max_den) {
    return make_rational(uniform(-max_num, max_num), uniform(1, max_den));
}

Rational Sampler::nonzero_rational(long max_num, long max_den) {
    long n = uniform(1, max_num);
    if (uniform(0, 1) == 0) n = -n;
    return make_rational(n, uniform(1, max_den));
}

UniPoly Sampler::poly(const std::string& symbol, int max_degree) {
    int d = static_cast<int>(uniform(0, max_degree));
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i) c.push_back(rational());
    return UniPoly(symbol, std::move(c));
}

FieldElement Sampler::element(const std::string& symbol) {
    switch (uniform(0, 2)) {
        case 0: return FieldElement(rational());
        case 1: return FieldElement(poly(symbol, 3));
        default: {
            UniPoly den = poly(symbol, 2);
            while (den.is_zero()) den = poly(symbol, 2);
            return FieldElement::fraction(poly(symbol, 3), den);
        }
    }
}

}  // namespace symtriple
