#include "suite.hpp"

namespace symtriple::verify {

namespace {

using oracle::inv_factorial;

FieldElement I(long n) { return FieldElement(n); }
FieldElement Q(const Rational& r) { return FieldElement(r); }
FieldElement Z(const Integer& z) { return FieldElement(Rational(z)); }
FieldElement sign(long n) { return I(n % 2 ? -1 : 1); }

DmInput input_of(int m, const std::function<FieldElement(int)>& a) {
    std::vector<FieldElement> c;
    for (int j = 1; j <= m; ++j) c.push_back(a(j));
    return DmInput(std::move(c));
}

FieldElement dm_sum(const DmTable& table, int n, const std::function<FieldElement(int)>& w) {
    FieldElement s;
    for (int k = 0; k <= n; ++k) s += w(k) * table(n, k);
    return s;
}

// B_n^{(value)} from the library polynomial.
FieldElement norlund_at(int n, const FieldElement& value) { return FieldElement(catalog::norlund(n)).evaluate_at(value); }

// Integral over [0, 1] of prod_{i<m} (x + step i).
Rational factorial_integral(int m, long step) {
    UniPoly f = UniPoly::constant("x", 1);
    for (int i = 0; i < m; ++i) f *= UniPoly("x", {Rational(step * i), Rational(1)});
    Rational s = 0;
    for (int i = 0; i <= f.degree(); ++i) s += f.coeff(i) / Rational(i + 1);
    return s;
}

Rational closed_stirc(long n, long k) {
    Rational s = 0;
    for (long j = 1; j <= n; ++j) {
        Rational term = k >= 0 ? Rational(1) / power(Rational(j), k) : power(Rational(j), -k);
        s += Rational(binomial(n, j)) * term * (j % 2 ? 1 : -1);
    }
    return s;
}

std::vector<std::pair<std::string, Series>> seeds(int N) {
    return {{"1+t", oracle::series(N, [](int n) { return I(n <= 1 ? 1 : 0); })},
            {"exp", oracle::series(N, [](int n) { return inv_factorial(n); })},
            {"t/(e^t-1)", inverse(oracle::series(N, [](int n) { return inv_factorial(n + 1); }))}};
}

// D_n(b) = [t^n] rho^b and D_n(b)/b (n >= 1) from sum (1/k) C(b - 1, k - 1) A_{n,k}(rho_1, rho_2, ...).
struct PowerCoeffs {
    Series rho;
    DmTable table;
    PowerCoeffs(const Series& r, int N) : rho(r), table(input_of(N, [&](int j) { return r[j]; }), N) {}
    FieldElement D(int n, const FieldElement& b) const { return pow_general(rho, b)[n]; }
    FieldElement D_over(int n, const FieldElement& b) const {
        FieldElement s;
        for (int k = 1; k <= n; ++k) s += binom_general(b - I(1), k - 1) / I(k) * table(n, k);
        return s;
    }
};

FieldElement sampled(Sampler& s) { return Q(s.nonzero_rational(5, 3)); }

}  // namespace

void suite_norlund(Recorder& r) {
    const int M = 12;
    const FieldElement z = FieldElement::symbol("z");
    // (-2)^n B_n^{(z)} for n = 0..4.
    const std::vector<std::vector<Rational>> table{
        {1}, {0, 1}, {0, make_rational(-1, 3), 1}, {0, 0, -1, 1}, {0, make_rational(2, 15), make_rational(1, 3), -2, 1}};
    for (int n = 0; n <= 4; ++n)
        r.check("(-2)^n B_n^{(z)} table", n, I(1) * FieldElement(catalog::norlund(n) * power(Rational(-2), n)), FieldElement(UniPoly("z", table[static_cast<std::size_t>(n)])));
    std::vector<FieldElement> B;
    for (int n = 0; n <= M; ++n) B.push_back(FieldElement(catalog::norlund(n)));
    auto shifted = [&](int n, const FieldElement& by) { return B[static_cast<std::size_t>(n)].evaluate_at(z + by); };
    for (int n = 0; n <= M; ++n) {
        FieldElement rhs = (z - I(n)) * B[static_cast<std::size_t>(n)];
        if (n > 0) rhs -= z * I(n) * B[static_cast<std::size_t>(n - 1)];
        r.check("z B_n^{(z+1)} = (z - n) B_n^{(z)} - z n B_{n-1}^{(z)}", n, z * shifted(n, I(1)), rhs);
    }
    // Integer orders against the recursion-in-z oracle.
    for (long w = -6; w <= 6; ++w) {
        auto want = oracle::norlund(w, M);
        for (int n = 0; n <= M; ++n) r.check(at("B_n^{(z)} at integer z", "z", w), n, norlund_at(n, I(w)), Q(want[static_cast<std::size_t>(n)]));
    }
    auto bern = oracle::bernoulli(M + 1);
    DmTable by_bernoulli(input_of(M, [&](int j) { return Q(bern[static_cast<std::size_t>(j)]) * inv_factorial(j); }), M);
    DmTable by_factorial(input_of(M, [](int j) { return inv_factorial(j + 1); }), M);
    DmTable by_reciprocal(input_of(M, [](int j) { return Q(make_rational(1, j + 1)); }), M);
    Series log_ratio = oracle::series(M, [](int n) { return Q(make_rational(n % 2 ? -1 : 1, n + 1)); });
    Series log_power = pow_general(log_ratio, z);
    for (int n = 0; n <= M; ++n) {
        FieldElement Bn = B[static_cast<std::size_t>(n)] * inv_factorial(n);
        r.check("B_n^{(z)}/n! = sum C(z, k) A_{n,k}(B_j/j!)", n, Bn, dm_sum(by_bernoulli, n, [&](int k) { return binom_general(z, k); }));
        r.check("B_n^{(z)}/n! = sum C(-z, k) A_{n,k}(1/(j+1)!)", n, Bn, dm_sum(by_factorial, n, [&](int k) { return binom_general(-z, k); }));
        FieldElement diag = shifted(n, I(n)) * inv_factorial(n);
        r.check("[t^n] (log(1+t)/t)^z = z/(n+z) B_n^{(n+z)}/n!", n, log_power[n], z / (I(n) + z) * diag);
        r.check("B_n^{(n+z)}/n! = (-1)^n (n+z)/z sum C(z, k) A_{n,k}(1/(j+1))", n, diag,
                sign(n) * (I(n) + z) / z * dm_sum(by_reciprocal, n, [&](int k) { return binom_general(z, k); }));
    }
    // Stirling numbers and special orders.
    for (long m = 0; m <= 10; ++m)
        for (long k = 0; k <= 10; ++k) {
            int mi = static_cast<int>(m);
            std::string tag = "m=" + std::to_string(m);
            r.check("S(m+k, k) = C(m+k, m) B_m^{(-k)} [" + tag + "]", k, Z(oracle::stirling_subset(m + k, k)), Z(binomial(m + k, m)) * norlund_at(mi, I(-k)));
            r.check("s(m+k, k) = C(-k, m) B_m^{(m+k)} [" + tag + "]", k, Z(oracle::stirling_cycle(m + k, k)), Z(binomial(-k, m)) * norlund_at(mi, I(m + k)));
        }
    for (int m = 0; m <= 10; ++m) {
        auto at_order = [&](long w) { return norlund_at(m, I(w)); };
        FieldElement mf = Z(factorial(m));
        if (m >= 1) r.check("B_m^{(m-1)} = -(m-1) C-_m", m, at_order(m - 1), I(1 - m) * Q(factorial_integral(m, -1)));
        r.check("B_m^{(m)} = (-1)^m C+_m", m, at_order(m), sign(m) * Q(factorial_integral(m, 1)));
        r.check("B_m^{(m+1)}/m! = (-1)^m", m, at_order(m + 1) / mf, sign(m));
        r.check("B_m^{(m+2)}/m! = (-1)^m H_{m+1}", m, at_order(m + 2) / mf, sign(m) * Q(oracle::harmonic(m + 1)));
        Rational h = oracle::harmonic(m + 2), h2 = oracle::harmonic(m + 2, 2);
        r.check("B_m^{(m+3)}/m! = (-1)^m (H_{m+2}^2 - H_{m+2}^{(2)})", m, at_order(m + 3) / mf, sign(m) * Q(h * h - h2));
        r.check("B_m^{(1)} = B_m", m, at_order(1), Q(bern[static_cast<std::size_t>(m)]));
        if (m >= 1)
            r.check("B_m^{(2)} = (1-m) B_m - m B_{m-1}", m, at_order(2),
                    I(1 - m) * Q(bern[static_cast<std::size_t>(m)]) - I(m) * Q(bern[static_cast<std::size_t>(m - 1)]));
        r.check("B_m^{(0)} = delta_{m,0}", m, at_order(0), I(m == 0 ? 1 : 0));
        r.check("B_m^{(-1)}/m! = 1/(m+1)!", m, at_order(-1) / mf, inv_factorial(m + 1));
        r.check("B_m^{(-2)}/m! = (2^{m+2} - 2)/(m+2)!", m, at_order(-2) / mf, (Q(power(Rational(2), m + 2)) - I(2)) * inv_factorial(m + 2));
    }
}

void suite_harmonic_multiset(Recorder& r) {
    {
        catalog::HarmonicMultisetTable t(0, 12, -5, 12);
        for (long n = 0; n <= 12; ++n)
            for (long k = -5; k <= 12; ++k) {
                std::string id = at("stirc(n, k) = sum (-1)^{j-1} C(n, j) j^{-k}", "n", n);
                r.check(id, k, Q(t.at(n, k)), Q(closed_stirc(n, k)));
                r.check(at("stirc_closed agrees", "n", n), k, Q(catalog::stirc_closed(n, k)), Q(closed_stirc(n, k)));
            }
    }
    catalog::HarmonicMultisetTable t(-12, 12, -12, 13);
    auto S = [&](long n, long k) { return Q(t.at(n, k)); };
    for (long n = -6; n <= 6; ++n)
        for (long k = -6; k <= 6; ++k) {
            r.check(at("n stirc(n, k) = n stirc(n-1, k) + stirc(n, k-1)", "n", n), k, I(n) * S(n, k), I(n) * S(n - 1, k) + S(n, k - 1));
            r.check(at("stirc agrees with the table", "n", n), k, Q(catalog::stirc(n, k)), S(n, k));
        }
    for (long j = -6; j <= 6; ++j) {
        r.check("stirc(n, -1) = delta_{n,1}", j, S(j, -1), I(j == 1 ? 1 : 0));
        r.check("stirc(-1, k) = delta_{k,1}", j, S(-1, j), I(j == 1 ? 1 : 0));
    }
    for (long n = 1; n <= 10; ++n)
        for (long k = 0; k <= 10; ++k) {
            r.check(at("S(n, k) = (-1)^{k+1}/k! stirc(k, -n)", "n", n), k, Z(oracle::stirling_subset(n, k)), sign(k + 1) * inv_factorial(k) * S(k, -n));
            r.check(at("s(n, k) = (n-1)! stirc(-n, k)", "n", n), k, Z(oracle::stirling_cycle(n, k)), Z(factorial(n - 1)) * S(-n, k));
        }
    for (long k = -6; k <= 12; ++k) {
        r.check("stirc(0, k) = 0", k, S(0, k), I(0));
        r.check("stirc(1, k) = 1", k, S(1, k), I(1));
        r.check("stirc(2, k) = 2 - 2^{-k}", k, S(2, k), I(2) - Q(power(Rational(2), -k)));
        r.check("stirc(3, k) = 3 - 3/2^k + 1/3^k", k, S(3, k), I(3) - I(3) * Q(power(Rational(2), -k)) + Q(power(Rational(3), -k)));
    }
    for (long n = 1; n <= 10; ++n) {
        FieldElement H = Q(oracle::harmonic(n));
        r.check("s(n+1, 2)/n! = H_n", n, Z(oracle::stirling_cycle(n + 1, 2)) / Z(factorial(n)), H);
        r.check("stirc(-n-1, 2) = H_n", n, S(-n - 1, 2), H);
        r.check("stirc(n, 1) = H_n", n, S(n, 1), H);
        DmTable powers(input_of(10, [&](int j) { return Q(oracle::harmonic(n, j)) / I(j); }), 10);
        for (int k = 0; k <= 10; ++k)
            r.check(at("stirc(n, k) = sum A_{k,j}(H_n^{(i)}/i)/j!", "n", n), k, S(n, k), dm_sum(powers, k, inv_factorial));
        FieldElement h1 = Q(oracle::harmonic(n)), h2 = Q(oracle::harmonic(n, 2)), h3 = Q(oracle::harmonic(n, 3));
        r.check("stirc(n, 0) = 1", n, S(n, 0), I(1));
        r.check("stirc(n, 2) = H^2/2 + H^(2)/2", n, S(n, 2), h1 * h1 / I(2) + h2 / I(2));
        r.check("stirc(n, 3) = H^3/6 + H H^(2)/2 + H^(3)/3", n, S(n, 3), h1 * h1 * h1 / I(6) + h1 * h2 / I(2) + h3 / I(3));
        // The harmonic triple.
        const int K = 12;
        SymTriple tr = catalog::make_triple({"harmonic", {{"n", I(n)}}, {}, K});
        for (int k = 1; k <= K; ++k) {
            std::string tag = " [n=" + std::to_string(n) + "]";
            r.check("harmonic triple e_k = s(n+1, k+1)/n!" + tag, k, tr.e(k), Z(oracle::stirling_cycle(n + 1, k + 1)) / Z(factorial(n)));
            r.check("harmonic triple e_k = stirc(-n-1, k+1)" + tag, k, tr.e(k), S(-n - 1, k + 1));
            r.check("harmonic triple h_k = stirc(n, k)" + tag, k, tr.h(k), S(n, k));
            r.check("harmonic triple p_k = H_n^{(k)}" + tag, k, tr.p(k), Q(oracle::harmonic(n, k)));
        }
    }
}

void suite_q_identities(Recorder& r) {
    const FieldElement q = FieldElement::symbol("q");
    // Brute-force symmetric functions of the roots 1, q, ..., q^{n-1}.
    for (int n = 1; n <= 6; ++n) {
        const int K = 8;
        SymTriple t = catalog::make_triple({"qbinomial", {{"n", I(n)}}, {}, K});
        std::vector<FieldElement> e(K + 1), h(K + 1);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            int size = __builtin_popcount(mask), weight = 0;
            for (int j = 0; j < n; ++j)
                if (mask >> j & 1u) weight += j;
            if (size <= K) e[static_cast<std::size_t>(size)] += q.pow(weight);
        }
        // Multisets: h_k(x_1..x_j) = h_k(x_1..x_{j-1}) + x_j h_{k-1}(x_1..x_j).
        h[0] = I(1);
        for (int j = 0; j < n; ++j)
            for (int k = 1; k <= K; ++k) h[static_cast<std::size_t>(k)] += q.pow(j) * h[static_cast<std::size_t>(k - 1)];
        std::string tag = " [n=" + std::to_string(n) + "]";
        for (int k = 1; k <= K; ++k) {
            FieldElement pk;
            for (int j = 0; j < n; ++j) pk += q.pow(static_cast<long>(j) * k);
            r.check("e_k is the subset sum" + tag, k, t.e(k), e[static_cast<std::size_t>(k)]);
            r.check("h_k is the multiset sum" + tag, k, t.h(k), h[static_cast<std::size_t>(k)]);
            r.check("p_k is the power sum" + tag, k, t.p(k), pk);
            r.check("e_k = q^{C(k,2)} [n, k]_q" + tag, k, e[static_cast<std::size_t>(k)], q.pow(k * (k - 1) / 2) * catalog::q_binomial(q, n, k));
            r.check("h_k = [n+k-1, k]_q" + tag, k, h[static_cast<std::size_t>(k)], catalog::q_binomial(q, n + k - 1, k));
            r.check("p_k = (1 - q^{nk})/(1 - q^k)" + tag, k, pk, (I(1) - q.pow(static_cast<long>(n) * k)) / (I(1) - q.pow(k)));
        }
    }
    {
        const int M = 10;
        DmTable table(input_of(M, [&](int j) { return (I(1) + q.pow(j)) / I(j); }), M);
        for (int m = 0; m <= M; ++m) {
            FieldElement geometric;
            for (int i = 0; i <= m; ++i) geometric += q.pow(i);
            r.check("sum A_{m,k}((1 + q^j)/j)/k! = 1 + q + ... + q^m", m, dm_sum(table, m, inv_factorial), geometric);
        }
    }
    const int M = 8;
    auto poch = [](const FieldElement& a, const FieldElement& base, int m) {
        FieldElement v(1L);
        for (int i = 0; i < m; ++i) v *= I(1) - a * base.pow(i);
        return v;
    };
    Sampler s = r.sampler(0);
    for (int i = 0; i < 16; ++i) {
        FieldElement a = Q(s.nonzero_rational(5, 3));
        DmTable table(input_of(M, [&](int j) { return (I(1) - a.pow(j)) / (I(j) * (I(1) - q.pow(j))); }), M);
        for (int m = 0; m <= M; ++m)
            r.check(at("sum A_{m,k}((1 - a^j)/(j(1 - q^j)))/k! = (a;q)_m/(q;q)_m", "a", a), m, dm_sum(table, m, inv_factorial),
                    poch(a, q, m) / poch(q, q, m));
    }
    {
        const FieldElement a = FieldElement::symbol("a");
        DmTable cauchy(input_of(M, [](int j) { return Q(make_rational(1, j)); }), M);
        DmTable moak(input_of(M, [&](int j) { return (I(1) - a.pow(j)) / I(j); }), M);
        DmTable macmahon(input_of(M, [&](int j) { return I(1) / (I(j) * (I(1) - q.pow(j))); }), M);
        for (int m = 0; m <= M; ++m) {
            r.check("sum A_{m,k}(1/j)/k! = 1", m, dm_sum(cauchy, m, inv_factorial), I(1));
            if (m >= 1) r.check("sum A_{m,k}((1 - a^j)/j)/k! = 1 - a", m, dm_sum(moak, m, inv_factorial), I(1) - a);
            r.check("sum A_{m,k}(1/(j(1 - q^j)))/k! = 1/(q;q)_m", m, dm_sum(macmahon, m, inv_factorial), poch(q, q, m).inverse());
        }
    }
    for (long rr = 2; rr <= 4; ++rr) {
        DmTable table(input_of(10, [&](int j) { return j % rr ? Q(make_rational(1, j)) : I(0); }), 10);
        for (long n = 1; n <= 10; ++n)
            r.check(at("sum r^k/k! A_{n,k}(1/j off multiples of r) = C(n+r-1, r-1) - C(n-1, r-1)", "r", rr), n,
                    dm_sum(table, static_cast<int>(n), [&](int k) { return I(rr).pow(k) * inv_factorial(k); }),
                    Z(binomial(n + rr - 1, rr - 1) - binomial(n - 1, rr - 1)));
    }
}

void suite_general_series(Recorder& r) {
    const int N = 18;
    Sampler s = r.sampler(0);
    const char* registry_name[] = {"general_binomial", "general_exponential", "general_bernoulli"};
    int which = 0;
    for (const auto& [name, rho] : seeds(N)) {
        PowerCoeffs D(rho, N);
        for (int i = 0; i < 3; ++i) {
            FieldElement al = sampled(s), be = sampled(s);
            std::string tag = " [" + name + " alpha=" + al.to_string() + " beta=" + be.to_string() + "]";
            Series Qa = catalog::general_series({rho, al, N});
            Series Qb = pow_general(Qa, be);
            r.check("Q_alpha = rho(t Q_alpha^alpha)" + tag, i, Qa, compose(rho, multiply_by_t(pow_general(Qa, al)).truncated(N)));
            Series cc = Series::from_function(N, [&](int n) -> FieldElement {
                if (n == 0) return I(1);
                return be * D.D_over(n, al * I(n) + be);
            });
            r.check("Q_alpha^beta = 1 + sum beta/(alpha n + beta) D_n(alpha n + beta) t^n" + tag, i, Qb, cc);
            r.check("q_pow agrees" + tag, i, catalog::q_pow({rho, al, N}, be), cc);
            Series log_derivative = multiply_by_t(derivative(Qa) * inverse(Qa.truncated(N - 1)));
            Series cc2 = Series::from_function(N, [&](int n) { return n == 0 ? I(1) : D.D(n, al * I(n) + be); });
            r.check("Q_alpha^beta (1 + alpha t Q'/Q) = 1 + sum D_n(alpha n + beta) t^n" + tag, i,
                    Qb * (Series::constant(I(1), N) + al * log_derivative), cc2);
            r.check("(Q_alpha^beta)* = Q_{alpha-beta}^{-beta}" + tag, i, star(Qb), catalog::q_pow({rho, al - be, N}, -be));
            // The triple (Q(-t)^{-beta}, Q^beta, beta Q'/Q).
            SymTriple T(pow_general(negate_variable(Qa), -be), Qb, be * derivative(Qa) * inverse(Qa.truncated(N - 1)));
            for (int n = 1; n <= N; ++n) {
                FieldElement an = al * I(n);
                r.check("e_n = (-1)^n (-beta)/(alpha n - beta) D_n(alpha n - beta)" + tag, n, T.e(n), sign(n) * -be * D.D_over(n, an - be));
                r.check("h_n = beta/(alpha n + beta) D_n(alpha n + beta)" + tag, n, T.h(n), be * D.D_over(n, an + be));
                r.check("p_n = beta/alpha D_n(alpha n)" + tag, n, T.p(n), be * I(n) * D.D_over(n, an));
            }
            SymTriple reg = catalog::make_triple({registry_name[which], {{"alpha", al}, {"beta", be}}, {}, N});
            r.check_true(std::string("general triple equals ") + registry_name[which] + tag, i, T == reg);
            r.check_true("general triple is the star of a powered triple" + tag, i,
                         star_triple(pow(SymTriple::from_series(Family::h, rho), be)) == SymTriple::from_series(Family::h, catalog::q_pow({rho, -be, N}, -be)));
            // Zero-safe D_n(b)/b.
            for (int n = 1; n <= 6; ++n) {
                r.check("D_n(b)/b at b = 0" + tag, n, catalog::general_D_over(rho, n, I(0)), D.D_over(n, I(0)));
                r.check("b (D_n(b)/b) = D_n(b)" + tag, n, be * catalog::general_D_over(rho, n, be), D.D(n, be));
                r.check("general_D agrees" + tag, n, catalog::general_D(rho, n, be), D.D(n, be));
            }
        }
        ++which;
    }
    // Abel's identity.
    for (int i = 0; i < 20; ++i) {
        FieldElement al = sampled(s), be = sampled(s);
        for (int n = 0; n <= 10; ++n) {
            FieldElement sum;
            for (int j = 0; j <= n; ++j) {
                FieldElement base = be + al * I(j);
                FieldElement head = j == 0 ? I(1) : be * base.pow(j - 1);
                sum += Z(binomial(n, j)) * head * (al * I(n + 1) - base).pow(n - j);
            }
            r.check(at(at("(alpha(n+1))^n = sum C(n, j) beta (beta + alpha j)^{j-1} (alpha(n+1) - beta - alpha j)^{n-j}", "alpha", al), "beta", be), n,
                    (al * I(n + 1)).pow(n), sum);
        }
    }
}

}  // namespace symtriple::verify
