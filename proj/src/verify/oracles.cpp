#include <map>
#include <mutex>

#include "suite.hpp"

namespace symtriple::verify::oracle {

long divisor_sum(long m) {
    long s = 0;
    for (long d = 1; d <= m; ++d)
        if (m % d == 0) s += d;
    return s;
}

std::vector<Integer> partitions(int n) {
    std::vector<Integer> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int m = part; m <= n; ++m) p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - part)];
    return p;
}

long pentagonal(long m) {
    for (long r = -m - 1; r <= m + 1; ++r)
        if (r * (3 * r - 1) / 2 == m) return r % 2 == 0 ? 1 : -1;
    return 0;
}

std::vector<Integer> product(long n, long a, long b) {
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    auto times = [&](long j, long sign) {
        for (long m = n; m >= j; --m) c[static_cast<std::size_t>(m)] += sign * c[static_cast<std::size_t>(m - j)];
    };
    // (1 + s q^j)^{-1} = sum (-s)^i q^{ij}
    auto divide = [&](long j, long sign) {
        for (long m = j; m <= n; ++m) c[static_cast<std::size_t>(m)] -= sign * c[static_cast<std::size_t>(m - j)];
    };
    for (long j = 1; j <= n; ++j) {
        for (long i = 0; i < std::abs(a); ++i) a > 0 ? times(j, -1) : divide(j, -1);
        for (long i = 0; i < std::abs(b); ++i) b > 0 ? times(j, 1) : divide(j, 1);
    }
    return c;
}

namespace {

Integer lattice(long r, long n, bool squares) {
    static std::map<std::tuple<bool, long, long>, Integer> memo;
    static std::recursive_mutex lock;
    if (r == 0) return n == 0 ? 1 : 0;
    std::lock_guard guard(lock);
    auto key = std::make_tuple(squares, r, n);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer count = 0;
    if (squares)
        for (long x = 0; x * x <= n; ++x) count += (x == 0 ? 1 : 2) * lattice(r - 1, n - x * x, true);
    else
        for (long m = 0; m * (m + 1) / 2 <= n; ++m) count += lattice(r - 1, n - m * (m + 1) / 2, false);
    memo[key] = count;
    return count;
}

}  // namespace

Integer lattice_squares(long r, long n) { return lattice(r, n, true); }
Integer lattice_triangular(long r, long n) { return lattice(r, n, false); }

Integer stirling_subset(long n, long k) {
    if (n == 0 || k == 0) return n == k ? 1 : 0;
    if (k > n) return 0;
    return k * stirling_subset(n - 1, k) + stirling_subset(n - 1, k - 1);
}

Integer stirling_cycle(long n, long k) {
    if (n == 0 || k == 0) return n == k ? 1 : 0;
    if (k > n) return 0;
    return (n - 1) * stirling_cycle(n - 1, k) + stirling_cycle(n - 1, k - 1);
}

std::vector<Rational> bernoulli(int n) {
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1, 0);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational s = 0;
        for (int j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * b[static_cast<std::size_t>(j)];
        b[static_cast<std::size_t>(m)] = -s / Rational(m + 1);
    }
    return b;
}

Rational harmonic(long n, long r) {
    Rational h = 0;
    for (long j = 1; j <= n; ++j) h += Rational(1) / power(Rational(j), r);
    return h;
}

std::vector<Rational> norlund(long z, int n) {
    const std::size_t len = static_cast<std::size_t>(n) + 1;
    if (z == 0) {
        std::vector<Rational> d(len, 0);
        d[0] = 1;
        return d;
    }
    // w B_m^{(w+1)} = (w - m) B_m^{(w)} - w m B_{m-1}^{(w)}
    if (z > 0) {
        std::vector<Rational> cur = bernoulli(n);
        for (long w = 1; w < z; ++w) {
            std::vector<Rational> next(len);
            for (std::size_t m = 0; m < len; ++m) {
                Rational v = Rational(w - static_cast<long>(m)) * cur[m];
                if (m > 0) v -= Rational(w * static_cast<long>(m)) * cur[m - 1];
                next[m] = v / Rational(w);
            }
            cur = std::move(next);
        }
        return cur;
    }
    // Downward from B^{(0)}: B_m^{(w)} = (w B_m^{(w+1)} + w m B_{m-1}^{(w)}) / (w - m).
    std::vector<Rational> up(len, 0);
    up[0] = 1;
    for (long w = -1; w >= z; --w) {
        std::vector<Rational> next(len);
        for (std::size_t m = 0; m < len; ++m) {
            Rational v = Rational(w) * up[m];
            if (m > 0) v += Rational(w * static_cast<long>(m)) * next[m - 1];
            next[m] = v / Rational(w - static_cast<long>(m));
        }
        up = std::move(next);
    }
    return up;
}

FieldElement inv_factorial(long n) { return FieldElement(Rational(1) / Rational(factorial(n))); }

Series series(int order, const std::function<FieldElement(int)>& f) { return Series::from_function(order, f); }

Series random_series(Sampler& s, int order, const FieldElement& c0) {
    return Series::from_function(order, [&](int n) { return n == 0 ? c0 : FieldElement(s.rational(5, 4)); });
}

SymTriple random_triple(Sampler& s, int order) { return SymTriple::from_series(Family::h, random_series(s, order, FieldElement(1L))); }

}  // namespace symtriple::verify::oracle
