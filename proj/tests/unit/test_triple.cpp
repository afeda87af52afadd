#include "doctest.h"
#include "support/checks.hpp"
#include "support/oracles.hpp"
#include "symtriple/triple.hpp"

using namespace symtriple;
using testutil::fe;
using testutil::frac;
using testutil::throws_kind;

namespace {

FieldElement rat(const Rational& r) { return FieldElement(r); }
FieldElement integer(long n) { return FieldElement(n); }

SymTriple random_triple(Sampler& s, int order) {
    return SymTriple::from_series(Family::h, testutil::random_series(s, order, integer(1)));
}

Series partition_H(int N) {
    auto p = testutil::partition_oracle(N);
    return Series::from_function(N, [&](int n) { return integer(p[static_cast<std::size_t>(n)]); });
}

Series series_of(int N, const std::function<Rational(int)>& f) {
    return Series::from_function(N, [&](int n) { return rat(f(n)); });
}

Rational inv_fact(long n) { return Rational(1) / Rational(factorial(n)); }

// Sum over 1 <= j_1 < ... < j_r <= n of x_{j_1}^{a_1} ... x_{j_r}^{a_r} with a_i >= 1, sum a_i = k.
FieldElement macmahon_brute(const std::vector<FieldElement>& xs, int k, int r) {
    std::function<FieldElement(std::size_t, int, int)> rec = [&](std::size_t start, int left, int parts) -> FieldElement {
        if (parts == 0) return integer(left == 0 ? 1 : 0);
        FieldElement total;
        for (std::size_t i = start; i < xs.size(); ++i)
            for (int a = 1; a <= left - (parts - 1); ++a) total += xs[i].pow(a) * rec(i + 1, left - a, parts - 1);
        return total;
    };
    return rec(0, k, r);
}

}  // namespace

TEST_CASE("construction from one series") {
    FieldElement alpha = FieldElement::symbol("alpha");
    const int N = 10;
    Series H = pow_general(Series::from_function(N, [](int n) { return integer(n == 0 ? 1 : n == 1 ? -1 : 0); }), -alpha);
    SymTriple b = SymTriple::from_series(Family::h, H);
    for (int k = 1; k <= N; ++k) {
        CHECK(b.p(k) == alpha);
        CHECK(b.e(k) == binom_general(alpha, k));
        CHECK(b.h(k) == binom_general(alpha + integer(k - 1), k));
    }
    CHECK(SymTriple::from_series(Family::p, Series(7)) == SymTriple::identity(8));
    SymTriple fromE = SymTriple::from_series(Family::e, b.E());
    CHECK(fromE == b);
    CHECK(SymTriple::from_series(Family::p, b.P()) == b);

    const int M = 30;
    SymTriple part = SymTriple::from_series(Family::h, partition_H(M));
    for (int n = 1; n <= M; ++n) {
        CHECK(part.p(n) == integer(testutil::divisor_sum(n)));
        CHECK(part.e(n) == integer((n % 2 ? -1 : 1) * testutil::pentagonal_oracle(n)));
    }
    CHECK(check_newton(part) == std::nullopt);
    CHECK(throws_kind([&] { (void)part.p(0); }, ErrorKind::IndexOutOfRange));
    CHECK(throws_kind([] { SymTriple::from_series(Family::h, Series::constant(fe("2"), 4)); }, ErrorKind::BadConstantTerm));
    CHECK(throws_kind([&] { SymTriple(b.E(), b.E(), b.P()); }, ErrorKind::InvalidTriple));
    CHECK(check_triple(b.E(), b.E(), b.P()).has_value());
}

TEST_CASE("transition formulas") {
    const int N = 25;
    SymTriple part = SymTriple::from_series(Family::h, partition_H(N));
    auto p = testutil::partition_oracle(N);
    std::vector<FieldElement> sig;
    for (int n = 1; n <= N; ++n) sig.push_back(integer(testutil::divisor_sum(n)));
    auto h = transition(Family::p, Family::h, sig, N);
    for (int n = 1; n <= N; ++n) CHECK(h[static_cast<std::size_t>(n - 1)] == integer(p[static_cast<std::size_t>(n)]));
    // c(n) from the divisor sums, written out for n <= 3.
    auto e = transition(Family::p, Family::e, sig, 3);
    Rational s1 = 1, s2 = 3, s3 = 4;
    Rational c1 = -s1, c2 = s1 * s1 / 2 - s2 / 2, c3 = -s1 * s1 * s1 / 6 + s1 * s2 / 2 - s3 / 3;
    CHECK(e[0] == rat(-c1));
    CHECK(e[1] == rat(c2));
    CHECK(e[2] == rat(-c3));
    CHECK(c1 == testutil::pentagonal_oracle(1));
    CHECK(c2 == testutil::pentagonal_oracle(2));
    CHECK(c3 == testutil::pentagonal_oracle(3));
    // Binomial e family gives p_r = alpha.
    FieldElement alpha = FieldElement::symbol("alpha");
    std::vector<FieldElement> eb;
    for (int k = 1; k <= 10; ++k) eb.push_back(binom_general(alpha, k));
    for (const auto& v : transition(Family::e, Family::p, eb, 10)) CHECK(v == alpha);
    CHECK(throws_kind([&] { transition(Family::e, Family::h, eb, 11); }, ErrorKind::InsufficientCoefficients));

    Sampler s(11);
    const Family fams[] = {Family::e, Family::h, Family::p};
    for (int trial = 0; trial < 3; ++trial) {
        SymTriple t = random_triple(s, 20);
        for (Family a : fams)
            for (Family b : fams) {
                auto there = transition(a, b, t.family(a, 20), 20);
                CHECK(there == t.family(b, 20));
                CHECK(transition(b, a, there, 20) == t.family(a, 20));
            }
    }
}

TEST_CASE("group operations") {
    Sampler s(12);
    const int N = 20;
    FieldElement half = frac(1, 2);
    for (int trial = 0; trial < 10; ++trial) {
        SymTriple a = random_triple(s, N), b = random_triple(s, N), c = random_triple(s, N);
        CHECK(flip(flip(a)) == a);
        CHECK(mul(a, pow(a, integer(-1))) == SymTriple::identity(N));
        CHECK(div(a, a) == SymTriple::identity(N));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(flip(mul(a, b)) == mul(flip(a), flip(b)));
        CHECK(flip(pow(a, half)) == pow(flip(a), half));
        CHECK(pow(pow(a, half), integer(2)) == a);
        CHECK(check_newton(a) == std::nullopt);
    }
    // The two square-root binomial triples.
    const int M = 16;
    Series onept = Series::from_function(M, [](int n) { return integer(n <= 1 ? 1 : 0); });
    SymTriple b1 = SymTriple::from_series(Family::e, pow_general(onept, half));
    SymTriple b2 = flip(b1);
    SymTriple prod = mul(b1, b2), quot = div(b1, b2);
    for (int n = 1; 2 * n <= M; ++n) {
        FieldElement central = rat(Rational(binomial(2 * n, n)) / power(Rational(2), 2 * n));
        // H = (1 + t)(1 - t^2)^{-1/2}, so each central value appears at 2n and 2n + 1.
        CHECK(prod.h(2 * n) == central);
        if (2 * n + 1 <= M) CHECK(prod.h(2 * n + 1) == central);
        CHECK(prod.p(2 * n - 1) == integer(1));
        CHECK(prod.p(2 * n).is_zero());
        CHECK(quot.h(2 * n) == central);
        CHECK(quot.h(2 * n - 1).is_zero());
        CHECK(quot.p(2 * n - 1).is_zero());
        CHECK(quot.p(2 * n) == integer(1));
    }
    CHECK(prod.e(1) == prod.h(1));
}

TEST_CASE("substitution and variable changes") {
    Sampler s(13);
    const int N = 12;
    SymTriple t = random_triple(s, N);
    FieldElement c(s.nonzero_rational());
    CHECK(substitute(t, Series::variable(N) * c) == scale(t, c));
    Series phi = testutil::random_series(s, N, FieldElement());
    SymTriple u = substitute(t, phi);
    CHECK(u.H() == compose(t.H(), phi));
    CHECK(throws_kind([&] { substitute(t, Series::constant(fe("1"), N)); }, ErrorKind::NonzeroInnerConstant));
    CHECK(scale(t, integer(1)) == t);
    SymTriple sc = scale(t, c);
    for (int k = 1; k <= N; ++k) {
        CHECK(sc.e(k) == c.pow(k) * t.e(k));
        CHECK(sc.h(k) == c.pow(k) * t.h(k));
        CHECK(sc.p(k) == c.pow(k) * t.p(k));
    }
    for (int m = 1; m <= 3; ++m) {
        SymTriple st = stretch(t, m);
        CHECK(st.order() == m * N);
        CHECK(st.H() == compose(t.H().zero_extended(m * N), pow_int(Series::variable(m * N), m)));
        CHECK(unstretch(st, m) == t);
    }
    CHECK(throws_kind([&] { unstretch(t, 2); }, ErrorKind::UnstretchPrecondition));

    // Cosine: H = cos t, halved into the t^2 grid.
    const int C = 20;
    Series cosine = series_of(C, [](int n) -> Rational { return n % 2 ? Rational(0) : Rational((n / 2) % 2 ? -1 : 1) * inv_fact(n); });
    SymTriple cs = SymTriple::from_series(Family::h, cosine);
    SymTriple half = unstretch(cs, 2);
    CHECK(half.order() == C / 2);
    for (int k = 1; k <= C / 2; ++k) {
        CHECK(half.e(k) == (k % 2 ? -cs.e(2 * k) : cs.e(2 * k)));
        CHECK(half.h(k) == cs.h(2 * k));
        CHECK(half.p(k) == cs.p(2 * k) * frac(1, 2));
    }
}

TEST_CASE("multisection") {
    const int N = 16;
    FieldElement x = FieldElement::symbol("x");
    SymTriple ex = SymTriple::from_series(Family::h, Series::from_function(N, [&](int k) { return x.pow(k) / FieldElement(Rational(factorial(k))); }));
    CHECK(multisect(ex, 2) == SymTriple::identity(N));
    Sampler s(14);
    for (int trial = 0; trial < 4; ++trial) {
        SymTriple t = random_triple(s, N);
        SymTriple m2 = multisect(t, 2);
        CHECK(m2.E() == t.E() * negate_variable(t.E()));
        CHECK(m2.H() == t.H() * negate_variable(t.H()));
        for (int m = 2; m <= 4; ++m) {
            SymTriple ms = multisect(t, m);
            for (int k = 1; k <= N; ++k) {
                if (k % m) {
                    CHECK(ms.e(k).is_zero());
                    CHECK(ms.h(k).is_zero());
                    CHECK(ms.p(k).is_zero());
                } else {
                    CHECK(ms.p(k) == integer(m) * t.p(k));
                }
            }
        }
    }
}

TEST_CASE("starred triples") {
    const int N = 15;
    // Bernoulli triple from E with e_k = (-1)^k/(k+1)!, flipped and starred.
    SymTriple bern = SymTriple::from_series(Family::e, series_of(N, [](int k) -> Rational { return Rational(k % 2 ? -1 : 1) * inv_fact(k + 1); }));
    SymTriple logt = star_triple(flip(bern));
    for (int n = 0; n <= N; ++n) CHECK(logt.h(n) == frac(1, n + 1));
    Sampler s(15);
    const Family fams[] = {Family::e, Family::h, Family::p};
    for (int trial = 0; trial < 10; ++trial) {
        SymTriple t = random_triple(s, 20);
        SymTriple st = star_triple(t);
        CHECK(star_triple(st) == t);
        if (trial < 3)
            for (Family f : fams)
                for (int n = 1; n <= 15; ++n) {
                    const FieldElement& want = f == Family::e ? st.e(n) : f == Family::h ? st.h(n) : st.p(n);
                    CHECK(star_direct(t, f, n) == want);
                    CHECK(star_power_formula(t, f, n) == want);
                    const FieldElement& back = f == Family::e ? t.e(n) : f == Family::h ? t.h(n) : t.p(n);
                    CHECK(star_power_formula(st, f, n) == back);
                }
    }
}

TEST_CASE("finite roots and Pascal updates") {
    const int N = 10;
    for (int n = 1; n <= 6; ++n) {
        SymTriple ones = from_roots(std::vector<FieldElement>(static_cast<std::size_t>(n), integer(1)), N);
        std::vector<FieldElement> xs, inv;
        for (int j = 1; j <= n; ++j) {
            xs.push_back(integer(j));
            inv.push_back(frac(1, j));
        }
        SymTriple st = from_roots(xs, N), hm = from_roots(inv, N);
        for (int k = 1; k <= N; ++k) {
            CHECK(ones.e(k) == rat(Rational(binomial(n, k))));
            CHECK(ones.h(k) == rat(Rational(binomial(n + k - 1, k))));
            CHECK(ones.p(k) == integer(n));
            CHECK(st.e(k) == rat(Rational(testutil::stirling_cycle_oracle(n + 1, n + 1 - k))));
            CHECK(st.h(k) == rat(Rational(testutil::stirling_subset_oracle(n + k, n))));
            Rational pk = 0, closed = 0;
            for (int j = 1; j <= n; ++j) {
                pk += power(Rational(j), k);
                closed += Rational((j % 2 ? 1 : -1)) * Rational(binomial(n, j)) / power(Rational(j), k);
            }
            CHECK(st.p(k) == rat(pk));
            CHECK(hm.p(k) == rat(testutil::harmonic_oracle(n, k)));
            CHECK(hm.h(k) == rat(closed));
        }
        if (n >= 2) {
            std::vector<FieldElement> prefix(xs.begin(), xs.end() - 1), iprefix(inv.begin(), inv.end() - 1);
            SymTriple st_prev = from_roots(prefix, N), hm_prev = from_roots(iprefix, N);
            CHECK(pascal_extend(st_prev, xs.back()) == st);
            CHECK(pascal_extend(hm_prev, inv.back()) == hm);
            SymTriple ones_prev = from_roots(std::vector<FieldElement>(static_cast<std::size_t>(n - 1), integer(1)), N);
            SymTriple ones_next = pascal_extend(ones_prev, integer(1));
            CHECK(ones_next == ones);
            for (int k = 2; k <= N; ++k) {
                // Classic Pascal, both Stirling recurrences and the harmonic one.
                CHECK(ones_next.e(k) == ones_prev.e(k) + ones_prev.e(k - 1));
                Rational c_up = Rational(testutil::stirling_cycle_oracle(n + 1, n + 1 - k));
                Rational c_rec = n * Rational(testutil::stirling_cycle_oracle(n, n + 1 - k)) + Rational(testutil::stirling_cycle_oracle(n, n - k));
                CHECK(c_up == c_rec);
                CHECK(st.e(k) == st_prev.e(k) + integer(n) * st_prev.e(k - 1));
                CHECK(st.h(k) == st_prev.h(k) + integer(n) * st.h(k - 1));
                CHECK(integer(n) * hm.h(k) == integer(n) * hm_prev.h(k) + hm.h(k - 1));
            }
        }
    }
    FieldElement q = FieldElement::symbol("q");
    std::vector<FieldElement> qs = {integer(1), q, q * q};
    SymTriple qt = from_roots(qs, 6);
    CHECK(qt.e(3) == q.pow(3));
    CHECK(qt.e(4).is_zero());
}

TEST_CASE("MacMahon polynomials") {
    Sampler s(16);
    std::vector<FieldElement> xs;
    for (int j = 0; j < 4; ++j) xs.push_back(FieldElement(s.nonzero_rational()));
    const int N = 7;
    SymTriple t = from_roots(xs, N);
    for (int k = 0; k <= N; ++k)
        for (int r = 0; r <= k; ++r) CHECK(macmahon_S(t, k, r) == macmahon_brute(xs, k, r));
    for (int trial = 0; trial < 2; ++trial) {
        SymTriple u = random_triple(s, 15);
        for (int k = 1; k <= 15; ++k) {
            CHECK(macmahon_S(u, k, k) == u.e(k));
            CHECK(macmahon_S(u, k, 1) == u.p(k));
            FieldElement total;
            for (int r = 0; r <= k; ++r) total += macmahon_S(u, k, r);
            CHECK(total == u.h(k));
            for (int j = 0; j <= k; ++j) {
                FieldElement inv;
                for (int r = j; r <= k; ++r) inv += FieldElement(Rational(binomial(r, j))) * macmahon_S(u, k, r);
                CHECK(inv == u.e(j) * u.h(k - j));
            }
        }
    }
    FieldElement alpha = FieldElement::symbol("alpha");
    Series H = pow_general(Series::from_function(10, [](int n) { return integer(n == 0 ? 1 : n == 1 ? -1 : 0); }), -alpha);
    SymTriple b = SymTriple::from_series(Family::h, H);
    for (int k = 1; k <= 10; ++k)
        for (int r = 0; r <= k; ++r)
            CHECK(macmahon_S(b, k, r) == FieldElement(Rational(binomial(k - 1, r - 1))) * binom_general(alpha, r));
    CHECK(throws_kind([&] { macmahon_S(b, 11, 1); }, ErrorKind::IndexOutOfRange));
    CHECK(throws_kind([&] { macmahon_S(b, 3, 4); }, ErrorKind::IndexOutOfRange));
}

TEST_CASE("equal-coefficient characterizations") {
    const int N = 12;
    SymTriple geo = SymTriple::from_series(Family::h, series_of(N, [](int n) { return power(Rational(3), n); }));
    Characterization c = characterize(geo);
    CHECK(c.h_equals_p);
    CHECK(c.h_equals_p_closed_form);
    CHECK(c.c_h_equals_p == integer(3));
    CHECK_FALSE(c.e_equals_h);

    Series cosine = series_of(N, [](int n) -> Rational { return n % 2 ? Rational(0) : Rational((n / 2) % 2 ? -1 : 1) * inv_fact(n); });
    Characterization cc = characterize(SymTriple::from_series(Family::h, cosine));
    CHECK_FALSE(cc.e_equals_h);
    CHECK_FALSE(cc.p_even);

    Sampler s(17);
    for (int trial = 0; trial < 5; ++trial) {
        Series P = Series::from_function(N - 1, [&](int i) { return i % 2 ? FieldElement() : FieldElement(s.rational()); });
        Characterization ec = characterize(SymTriple::from_series(Family::p, P));
        CHECK(ec.p_even);
        CHECK(ec.e_equals_h);
        SymTriple r = random_triple(s, N);
        Characterization rc = characterize(r);
        CHECK(rc.e_equals_h == rc.p_even);
    }

    // E = t/(e^t - 1): the e = p form with c = -1.
    SymTriple bform = SymTriple::from_series(Family::e, inverse(series_of(N, [](int k) -> Rational { return inv_fact(k + 1); })));
    Characterization bc = characterize(bform);
    CHECK(bc.e_equals_p);
    CHECK(bc.e_equals_p_closed_form);
    CHECK(bc.c_e_equals_p == integer(-1));

    Characterization id = characterize(SymTriple::identity(5));
    CHECK(id.e_equals_h);
    CHECK(id.h_equals_p);
    CHECK(id.e_equals_p);
    CHECK(id.h_equals_p_closed_form);
    CHECK(id.e_equals_p_closed_form);
}
