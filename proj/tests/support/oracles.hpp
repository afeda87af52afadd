#pragma once

// Independent slow implementations used only as test oracles.

#include "symtriple/sampling.hpp"
#include "symtriple/series.hpp"

namespace testutil {

using symtriple::FieldElement;
using symtriple::Series;

// Coefficient-by-coefficient reversion: solve [x^n] F(G(x)) = δ_{n,1} for g_n in turn.
inline Series reversion_naive(const Series& F) {
    const int N = F.order();
    std::vector<FieldElement> g(static_cast<std::size_t>(N) + 1);
    FieldElement inv1 = F[1].inverse();
    g[1] = inv1;
    for (int n = 2; n <= N; ++n) {
        Series G(g);
        // With g_n = 0 the x^n coefficient of F(G) misses exactly F_1 g_n.
        FieldElement c = symtriple::compose(F, G)[n];
        g[static_cast<std::size_t>(n)] = -(c * inv1);
    }
    return Series(g);
}

inline Series random_series(symtriple::Sampler& s, int order, const FieldElement& c0) {
    return Series::from_function(order, [&](int n) { return n == 0 ? c0 : FieldElement(s.rational(5, 4)); });
}

inline Series random_series(symtriple::Sampler& s, int order) {
    return Series::from_function(order, [&](int) { return FieldElement(s.rational(5, 4)); });
}

inline FieldElement frac(long n, long d = 1) { return FieldElement(symtriple::make_rational(n, d)); }

inline symtriple::Integer factorial_oracle(long n) {
    symtriple::Integer f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Series exp_series(int order, const FieldElement& x = FieldElement(1L)) {
    return Series::from_function(order, [&](int n) { return x.pow(n) / FieldElement(factorial_oracle(n)); });
}

inline long divisor_sum(long m) {
    long s = 0;
    for (long d = 1; d <= m; ++d)
        if (m % d == 0) s += d;
    return s;
}

// Euler's pentagonal coefficients of prod (1 - q^j) by the closed form.
inline long pentagonal_oracle(long m) {
    for (long r = -m - 1; r <= m + 1; ++r)
        if (r * (3 * r - 1) / 2 == m) return r % 2 == 0 ? 1 : -1;
    return 0;
}

// Stirling numbers from the triangular recurrences, as exact integers.
inline symtriple::Integer stirling_subset_oracle(long n, long k) {
    std::vector<std::vector<symtriple::Integer>> s(static_cast<std::size_t>(n) + 1, std::vector<symtriple::Integer>(static_cast<std::size_t>(n) + 2, 0));
    s[0][0] = 1;
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    return k <= n && k >= 0 ? s[n][k] : symtriple::Integer(0);
}

inline symtriple::Integer stirling_cycle_oracle(long n, long k) {
    std::vector<std::vector<symtriple::Integer>> s(static_cast<std::size_t>(n) + 1, std::vector<symtriple::Integer>(static_cast<std::size_t>(n) + 2, 0));
    s[0][0] = 1;
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= i; ++j) s[i][j] = (i - 1) * s[i - 1][j] + s[i - 1][j - 1];
    return k <= n && k >= 0 ? s[n][k] : symtriple::Integer(0);
}

// B_0..B_n with B_1 = -1/2, from sum_{j<=n} C(n+1, j) B_j = 0.
inline std::vector<symtriple::Rational> bernoulli_oracle(long n) {
    std::vector<symtriple::Rational> b(static_cast<std::size_t>(n) + 1);
    b[0] = 1;
    for (long m = 1; m <= n; ++m) {
        symtriple::Rational acc = 0;
        for (long j = 0; j < m; ++j) acc += symtriple::Rational(symtriple::binomial(m + 1, j)) * b[static_cast<std::size_t>(j)];
        b[static_cast<std::size_t>(m)] = -acc / (m + 1);
    }
    return b;
}

// Norlund values B_n^{(z)} for n <= max_n and integer z, from the Bernoulli numbers and the
// recurrence z B_n^{(z+1)} = (z - n) B_n^{(z)} - z n B_{n-1}^{(z)}.
inline std::vector<symtriple::Rational> norlund_oracle(long z, long max_n) {
    const std::size_t len = static_cast<std::size_t>(max_n) + 1;
    std::vector<symtriple::Rational> cur = bernoulli_oracle(max_n);
    if (z == 0) {
        std::vector<symtriple::Rational> d(len, 0);
        d[0] = 1;
        return d;
    }
    for (long w = 1; w < z; ++w) {
        std::vector<symtriple::Rational> next(len);
        for (std::size_t n = 0; n < len; ++n) {
            symtriple::Rational v = symtriple::Rational(w - static_cast<long>(n)) * cur[n];
            if (n > 0) v -= symtriple::Rational(w * static_cast<long>(n)) * cur[n - 1];
            next[n] = v / w;
        }
        cur = next;
    }
    if (z >= 1) return cur;
    // Downward: B_n^{(w)} = (w B_n^{(w+1)} + w n B_{n-1}^{(w)}) / (w - n), starting from w + 1 = 0.
    std::vector<symtriple::Rational> up(len, 0);
    up[0] = 1;
    for (long w = -1; w >= z; --w) {
        std::vector<symtriple::Rational> next(len);
        for (std::size_t n = 0; n < len; ++n) {
            symtriple::Rational v = symtriple::Rational(w) * up[n];
            if (n > 0) v += symtriple::Rational(w * static_cast<long>(n)) * next[n - 1];
            next[n] = v / (w - static_cast<long>(n));
        }
        up = next;
    }
    return up;
}

inline symtriple::Rational harmonic_oracle(long n, long r = 1) {
    symtriple::Rational h = 0;
    for (long j = 1; j <= n; ++j) h += symtriple::Rational(1) / symtriple::Rational(symtriple::power(symtriple::Rational(j), r));
    return h;
}

inline symtriple::Integer catalan_oracle(long n) {
    std::vector<symtriple::Integer> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    for (long m = 1; m <= n; ++m)
        for (long i = 0; i < m; ++i) c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
    return c[static_cast<std::size_t>(n)];
}

// p(0..n) by the coin-change recurrence over part sizes.
inline std::vector<long> partition_oracle(long n) {
    std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (long part = 1; part <= n; ++part)
        for (long m = part; m <= n; ++m) p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - part)];
    return p;
}

}  // namespace testutil
