#include "suite.hpp"

namespace symtriple::verify {

namespace {

using oracle::inv_factorial;

FieldElement I(long n) { return FieldElement(n); }
FieldElement Q(const Rational& r) { return FieldElement(r); }
FieldElement Z(const Integer& z) { return FieldElement(Rational(z)); }
FieldElement sign(long n) { return I(n % 2 ? -1 : 1); }

const Family kFamilies[] = {Family::e, Family::h, Family::p};

const char* family_name(Family f) { return f == Family::e ? "e" : f == Family::h ? "h" : "p"; }

DmInput input_of(int m, const std::function<FieldElement(int)>& a) {
    std::vector<FieldElement> c;
    for (int j = 1; j <= m; ++j) c.push_back(a(j));
    return DmInput(std::move(c));
}

// sum_k w(k) A_{n,k}(a) for n <= table size.
FieldElement dm_sum(const DmTable& table, int n, const std::function<FieldElement(int)>& w) {
    FieldElement s;
    for (int k = 0; k <= n; ++k) s += w(k) * table(n, k);
    return s;
}

// Sum of the divisors of m that are not multiples of r.
long omega(long r, long m) {
    long s = 0;
    for (long d = 1; d <= m; ++d)
        if (m % d == 0 && d % r != 0) s += d;
    return s;
}

bool check_valid(Recorder& r, const std::string& what, long index, const SymTriple& t) {
    IdentityCheck bad = check_triple(t.E(), t.H(), t.P());
    if (!bad) bad = check_newton(t);
    if (bad) {
        r.fail(what + ": " + bad->identity, bad->index, bad->lhs, bad->rhs);
        return false;
    }
    return r.check_true(what, index, true);
}

void check_predictions(Recorder& r, const std::string& what, const catalog::TripleSpec& spec, const SymTriple& t) {
    for (Family f : kFamilies) {
        auto pred = catalog::predicted(spec, f);
        if (!pred) continue;
        auto got = t.family(f, spec.order);
        for (int k = 1; k <= spec.order; ++k)
            if (!r.check(what + " closed form " + family_name(f), k, got[static_cast<std::size_t>(k - 1)], (*pred)[static_cast<std::size_t>(k - 1)]))
                break;
    }
}

FieldElement sampled_param(Sampler& s) {
    for (;;) {
        Rational v = s.nonzero_rational(5, 3);
        if (v != 1 && v != -1) return Q(v);
    }
}

}  // namespace

void suite_catalog(Recorder& r) {
    const int N = r.config().order;
    Sampler s = r.sampler(0);
    for (const auto& entry : catalog::registry()) {
        catalog::TripleSpec spec{entry.name, {}, {}, N};
        SymTriple t = catalog::make_triple(spec);
        check_valid(r, entry.name + " is a symmetric triple", N, t);
        check_predictions(r, entry.name, spec, t);
        bool has_field = false;
        for (const auto& p : entry.params) has_field |= p.kind == catalog::ParamKind::field;
        if (!has_field) continue;
        // Rational parameters away from 0 and +-1.
        for (int i = 0; i < 2; ++i) {
            catalog::TripleSpec sampled{entry.name, {}, {}, 12};
            std::string tag = entry.name;
            for (const auto& p : entry.params)
                if (p.kind == catalog::ParamKind::field) {
                    sampled.params[p.name] = sampled_param(s);
                    tag += " " + p.name + "=" + sampled.params[p.name].to_string();
                }
            SymTriple u = catalog::make_triple(sampled);
            check_valid(r, tag + " is a symmetric triple", i, u);
            check_predictions(r, tag, sampled, u);
        }
    }
    // Central binomial sums from the half-integer binomial triples.
    {
        DmTable odd(input_of(20, [](int j) { return j % 2 ? Q(make_rational(1, j)) : I(0); }), 20);
        DmTable even(input_of(20, [](int j) { return j % 2 ? I(0) : Q(make_rational(1, j)); }), 20);
        for (int n = 0; n <= 10; ++n) {
            FieldElement want = Q(Rational(binomial(2 * n, n)) / power(Rational(2), 2 * n));
            r.check("sum A_{2n,k}(1, 0, 1/3, ...)/k! = C(2n, n)/4^n", n, dm_sum(odd, 2 * n, inv_factorial), want);
            r.check("sum A_{2n,k}(0, 1/2, 0, 1/4, ...)/k! = C(2n, n)/4^n", n, dm_sum(even, 2 * n, inv_factorial), want);
        }
    }
    // Triangular numbers: (r/n)(sigma + omega_2 - omega_4)(n) = sum (-1)^{n-j}/j C(n, j) Delta_{rj}(n).
    for (long rr = 1; rr <= 3; ++rr)
        for (long n = 1; n <= 15; ++n) {
            FieldElement lhs = Q(make_rational(rr * (oracle::divisor_sum(n) + omega(2, n) - omega(4, n)), n));
            FieldElement rhs;
            for (long j = 1; j <= n; ++j)
                rhs += sign(n - j) * Q(make_rational(1, j)) * Z(binomial(n, j)) * Z(oracle::lattice_triangular(rr * j, n));
            r.check(at("triangular divisor sum by representation counts", "r", rr), n, lhs, rhs);
        }
}

void suite_pentagonal(Recorder& r) {
    const int N = 60;
    SymTriple t = catalog::make_triple({"partition_divisor", {}, {}, N});
    auto dp = oracle::partitions(N);
    auto product = oracle::product(N, 1, 0);
    for (long m = 1; m <= N; ++m) {
        FieldElement c = sign(m) * t.e(static_cast<int>(m));
        // Search for m = j(3j - 1)/2 with j of either sign.
        long sgn = 0;
        for (long j = -m; j <= m; ++j)
            if (j * (3 * j - 1) == 2 * m) sgn = j % 2 ? -1 : 1;
        r.check("(-1)^m e_m is (-1)^j at m = j(3j - 1)/2, else 0", m, c, I(sgn));
        r.check_true("e_m is nonzero exactly at generalized pentagonal numbers", m, c.is_zero() == (sgn == 0), c.to_string(),
                     std::to_string(sgn));
        r.check("(-1)^m e_m is [q^m] prod (1 - q^j)", m, c, Z(product[static_cast<std::size_t>(m)]));
        r.check("(-1)^m e_m matches the pentagonal oracle", m, c, I(oracle::pentagonal(m)));
        r.check("h_m is the partition count", m, t.h(static_cast<int>(m)), Z(dp[static_cast<std::size_t>(m)]));
        r.check("p_m is the divisor sum", m, t.p(static_cast<int>(m)), I(oracle::divisor_sum(m)));
        r.check("pentagonal_c agrees", m, Z(catalog::pentagonal_c(m)), I(oracle::pentagonal(m)));
    }
}

void suite_partition_polynomials(Recorder& r) {
    const int N = 40;
    auto p = oracle::partitions(N);
    auto c = [](long n) { return I(oracle::pentagonal(n)); };
    auto sig = [](long n) { return I(oracle::divisor_sum(n)); };
    DmTable table(input_of(N, [&](int j) { return sig(j) / I(j); }), N);
    std::vector<FieldElement> ps;
    for (int k = 1; k <= N; ++k) ps.push_back(sig(k));
    auto e = transition(Family::p, Family::e, ps, N);
    auto h = transition(Family::p, Family::h, ps, N);
    for (int n = 1; n <= N; ++n) {
        r.check("c(n) = sum (-1)^k/k! A_{n,k}(sigma(j)/j)", n, dm_sum(table, n, [](int k) { return sign(k) * inv_factorial(k); }), c(n));
        r.check("c(n) = (-1)^n e_n from the p -> e transition", n, sign(n) * e[static_cast<std::size_t>(n - 1)], c(n));
        r.check("p(n) from the p -> h transition", n, h[static_cast<std::size_t>(n - 1)], Z(p[static_cast<std::size_t>(n)]));
        FieldElement euler, divisor;
        for (int k = 0; k < n; ++k) {
            euler -= Z(p[static_cast<std::size_t>(k)]) * c(n - k);
            divisor += Z(p[static_cast<std::size_t>(k)]) * sig(n - k);
        }
        r.check("p(n) = -sum_{k<n} p(k) c(n - k)", n, euler, Z(p[static_cast<std::size_t>(n)]));
        r.check("p(n) = (1/n) sum_{k<n} p(k) sigma(n - k)", n, divisor / I(n), Z(p[static_cast<std::size_t>(n)]));
    }
    // The first three partition polynomials written out.
    FieldElement s1 = sig(1), s2 = sig(2), s3 = sig(3);
    r.check("c(1) = -sigma(1)", 1, c(1), -s1);
    r.check("c(2) = sigma(1)^2/2 - sigma(2)/2", 2, c(2), s1 * s1 / I(2) - s2 / I(2));
    r.check("c(3) = -sigma(1)^3/6 + sigma(1) sigma(2)/2 - sigma(3)/3", 3, c(3), -s1 * s1 * s1 / I(6) + s1 * s2 / I(2) - s3 / I(3));
}

void suite_ramanujan(Recorder& r) {
    const int N = 30;
    std::vector<catalog::BellFactor> factors{{catalog::IntSet::multiples(5), I(5), I(1)}, {catalog::IntSet::all(), I(-6), I(1)}};
    auto p = oracle::partitions(5 * N + 4);
    for (long m = 1; m <= N; ++m) {
        FieldElement brute = I(oracle::divisor_sum(m) + 5 * omega(5, m));
        r.check("psi(m) = sigma(m) + 5 omega_5(m)", m, catalog::bell_small_psi(factors, m), brute);
    }
    SymTriple t = catalog::make_triple({"mod5_partition", {}, {}, N});
    for (int n = 0; n <= N; ++n) {
        FieldElement psi = catalog::bell_psi(factors, n);
        const Integer& big = p[static_cast<std::size_t>(5 * n + 4)];
        r.check_true("Psi(n) is an integer", n, psi.is_rational() && psi.rational().get_den() == 1, psi.to_string(), "integer");
        r.check("5 Psi(n) = p(5n + 4)", n, I(5) * psi, Z(big));
        r.check_true("5 divides p(5n + 4)", n, big % 5 == 0, big.get_str(), "0 mod 5");
        r.check("Psi(n) is the product coefficient", n, psi, catalog::bell_product_coeff(factors, n));
        if (n >= 1) {
            r.check("mod-5 triple h_n = p(5n + 4)/5", n, t.h(n), Z(big) / I(5));
            r.check("mod-5 triple p_n = sigma(n) + 5 omega_5(n)", n, t.p(n), I(oracle::divisor_sum(n) + 5 * omega(5, n)));
        }
    }
}

void suite_jacobi(Recorder& r) {
    const int N = 60;
    SymTriple euler = catalog::make_triple({"partition_divisor", {}, {}, N});
    SymTriple cube = pow(euler, I(-3));
    SymTriple direct = catalog::make_triple({"partition_divisor", {{"r", I(-3)}}, {}, N});
    SymTriple three = catalog::make_triple({"partition_divisor", {{"r", I(3)}}, {}, N});
    auto product = oracle::product(N, 3, 0);
    for (long m = 1; m <= N; ++m) {
        long d = 0;
        for (long j = 0; j * (j + 1) / 2 <= m; ++j)
            if (j * (j + 1) / 2 == m) d = (j % 2 ? -1 : 1) * (2 * j + 1);
        int k = static_cast<int>(m);
        r.check("[q^m] prod (1 - q^j)^3 = d(m)", m, cube.h(k), I(d));
        r.check("cube matches the product oracle", m, cube.h(k), Z(product[static_cast<std::size_t>(m)]));
        r.check("partition_divisor r = -3 has h_m = d(m)", m, direct.h(k), I(d));
        r.check("partition_divisor r = 3 has e_m = (-1)^m d(m)", m, three.e(k), sign(m) * I(d));
        r.check("partition_divisor r = 3 has p_m = 3 sigma(m)", m, three.p(k), I(3 * oracle::divisor_sum(m)));
        r.check("jacobi_d agrees", m, Z(catalog::jacobi_d(m)), I(d));
    }
}

void suite_squares(Recorder& r) {
    {
        const int N = 100;
        SymTriple t = catalog::make_triple({"squares", {{"r", I(2)}}, {}, N});
        for (long n = 1; n <= N; ++n) r.check("N_2(n) from the triple is the lattice count", n, t.e(static_cast<int>(n)), Z(oracle::lattice_squares(2, n)));
    }
    const int M = 20;
    auto sq = [](long rr, long n) { return Z(catalog::squares_count(rr, static_cast<int>(n))[static_cast<std::size_t>(n)]); };
    auto over = [](long rr, long n) { return Z(catalog::overpartitions(rr, static_cast<int>(n))[static_cast<std::size_t>(n)]); };
    // Library counts against the brute-force oracles, over every (r, n) used below.
    for (long rr = 0; rr <= 45; ++rr) {
        auto a = catalog::squares_count(rr, 15);
        auto b = catalog::overpartitions(rr, 15);
        for (long n = 0; n <= 15; ++n) {
            r.check(at("squares_count is the lattice count", "r", rr), n, Z(a[static_cast<std::size_t>(n)]), Z(oracle::lattice_squares(rr, n)));
            r.check(at("overpartitions is the product expansion", "r", rr), n, Z(b[static_cast<std::size_t>(n)]),
                    Z(oracle::product(n, -rr, rr)[static_cast<std::size_t>(n)]));
        }
    }
    for (long rr = 1; rr <= 3; ++rr) {
        std::string tag = "r=" + std::to_string(rr);
        DmTable bars(input_of(M, [&](int j) { return over(rr, j); }), M);
        DmTable divs(input_of(M, [&](int j) { return I(oracle::divisor_sum(j) + omega(2, j)) / I(j); }), M);
        for (long n = 1; n <= 15; ++n) {
            int ni = static_cast<int>(n);
            FieldElement N_r = Z(oracle::lattice_squares(rr, n));
            r.check("N_r(n) = sum (-1)^{n-k} A_{n,k}(overpartitions) [" + tag + "]", n, dm_sum(bars, ni, [&](int k) { return sign(n - k); }), N_r);
            r.check("N_r(n) = sum (-1)^{n-k} r^k/k! A_{n,k}((sigma + omega_2)(j)/j) [" + tag + "]", n,
                    dm_sum(divs, ni, [&](int k) { return sign(n - k) * I(rr).pow(k) * inv_factorial(k); }), N_r);
            FieldElement left, right;
            for (long j = 0; j <= n; ++j) {
                FieldElement w = sign(n - j) * Z(binomial(n + 1, j + 1));
                left += w * over(rr * j, n);
                right += w * sq(rr * j, n);
            }
            r.check("N_r(n) = sum (-1)^{n-j} C(n+1, j+1) pbar_{rj}(n) [" + tag + "]", n, left, N_r);
            r.check("pbar_r(n) = sum (-1)^{n-j} C(n+1, j+1) N_{rj}(n) [" + tag + "]", n, right, Z(oracle::product(n, -rr, rr)[static_cast<std::size_t>(n)]));
        }
        for (long n = 1; n <= M; ++n) {
            FieldElement conv;
            for (long j = 1; j <= n; ++j)
                conv += sign(j - 1) * I(j) * Z(oracle::lattice_squares(rr, j)) * Z(oracle::product(n - j, -rr, rr)[static_cast<std::size_t>(n - j)]);
            r.check("r(sigma + omega_2)(n) = sum (-1)^{j-1} j N_r(j) pbar_r(n - j) [" + tag + "]", n, conv,
                    I(rr * (oracle::divisor_sum(n) + omega(2, n))));
        }
    }
    // Overpartitions from representation counts.
    for (long n = 1; n <= M; ++n) {
        FieldElement sum;
        for (long j = 0; j <= n; ++j) sum += sign(n - j) * Z(binomial(n + 1, j + 1)) * Z(oracle::lattice_squares(j, n));
        r.check("pbar(n) = sum (-1)^{n-j} C(n+1, j+1) N_j(n)", n, sum, Z(oracle::product(n, -1, 1)[static_cast<std::size_t>(n)]));
    }
}

}  // namespace symtriple::verify
