#include "symtriple/kernels.hpp"
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

DmInput random_input(Sampler& s, int m) {
    return input_of(m, [&](int) { return Q(s.rational(5, 4)); });
}

// A_{m+k,k}(b_0, b_1, ...) for m, k <= 10.
class Shifted {
public:
    explicit Shifted(const std::function<FieldElement(int)>& b) : table_(input_of(20, [&](int j) { return b(j - 1); }), 20) {}
    FieldElement operator()(int m, int k) const { return table_(m + k, k); }

private:
    DmTable table_;
};

FieldElement horner(const UniPoly& p, const FieldElement& x) {
    FieldElement v;
    for (int i = p.degree(); i >= 0; --i) v = v * x + Q(p.coeff(i));
    return v;
}

// B_n^{(z)}/z for n >= 1 as a polynomial in z.
UniPoly norlund_over_z(int n) { return UniPoly::exact_div(catalog::norlund(n), UniPoly::variable("z")); }

}  // namespace

void suite_exact(Recorder& r) {
    const int trials = r.config().trials;
    Sampler s = r.sampler(0);
    for (int i = 0; i < trials; ++i) {
        FieldElement a = s.element("s");
        FieldElement again = FieldElement::fraction(a.numerator(), a.denominator());
        r.check("normalization is idempotent", i, again, a);
        r.check_true("normalized numerator and denominator agree", i,
                     again.numerator() == a.numerator() && again.denominator() == a.denominator(), again.to_string(), a.to_string());
        r.check("print and parse round trip", i, FieldElement::parse(a.to_string()), a);
    }
    // Distributivity and the other field axioms on 1000 samples.
    for (int i = 0; i < 1000; ++i) {
        FieldElement a = s.element("s"), b = s.element("s"), c = s.element("s");
        r.check("a(b + c) = ab + ac", i, a * (b + c), a * b + a * c);
        r.check("ab = ba", i, a * b, b * a);
        if (!b.is_zero()) r.check("(a/b) b = a", i, a / b * b, a);
    }
    for (int i = 0; i < trials; ++i) {
        FieldElement a = s.element("s"), b = s.element("s");
        if (b.is_zero()) continue;
        FieldElement q = a / b;
        UniPoly num = q.numerator(), den = q.denominator();
        r.check_true("quotient is in lowest terms", i, gcd(num, den).is_one() && den.leading() == 1, num.to_string(), den.to_string());
        UniPoly x = s.poly("s", 6), y = s.poly("s", 6);
        UniPoly g = gcd(x, y);
        if (g.is_zero()) {
            r.check_true("gcd is zero only for zero inputs", i, x.is_zero() && y.is_zero());
            continue;
        }
        r.check_true("gcd is monic", i, g.leading() == 1, g.to_string(), "monic");
        bool divides = UniPoly::divmod(x, g).second.is_zero() && UniPoly::divmod(y, g).second.is_zero();
        r.check_true("gcd divides both inputs", i, divides, g.to_string(), x.to_string() + " ; " + y.to_string());
        UniPoly rest = gcd(UniPoly::divmod(x, g).first, UniPoly::divmod(y, g).first);
        r.check_true("cofactors are coprime", i, rest.is_one() || (x.is_zero() || y.is_zero()), rest.to_string(), "1");
    }
}

void suite_series(Recorder& r) {
    const int N = r.config().order, trials = r.config().trials;
    Sampler s = r.sampler(0);
    Series zero(N), one = Series::constant(I(1), N);
    for (int i = 0; i < trials; ++i) {
        Series a = oracle::random_series(s, N, Q(s.rational(5, 4))), b = oracle::random_series(s, N, Q(s.rational(5, 4)));
        Series c = oracle::random_series(s, N, Q(s.rational(5, 4)));
        r.check("a(b + c) = ab + ac", i, a * (b + c), a * b + a * c);
        r.check("(ab)c = a(bc)", i, (a * b) * c, a * (b * c));
        r.check("ab = ba", i, a * b, b * a);
        r.check("a - a = 0", i, a - a, zero);
        r.check("a 1 = a", i, a * one, a);
    }
    for (int i = 0; i < 50; ++i) {
        Series f = oracle::random_series(s, N, I(0)), g = oracle::random_series(s, N, I(1));
        r.check("log1(exp0(f)) = f", i, log1(exp0(f)), f);
        r.check("exp0(log1(g)) = g", i, exp0(log1(g)), g);
    }
    for (int i = 0; i < trials; ++i) {
        Series f = oracle::random_series(s, N, I(1));
        FieldElement a = Q(s.rational(7, 5)), b = Q(s.rational(7, 5));
        r.check("pow(f, a + b) = pow(f, a) pow(f, b)", i, pow_general(f, a + b), pow_general(f, a) * pow_general(f, b));
        r.check("pow_general agrees with pow_int", i, pow_general(f, I(3)), pow_int(f, 3));
    }
    // Symbolic exponent, checked through specialization.
    {
        const int M = std::min(N, 8);
        Series f = oracle::random_series(s, M, I(1));
        FieldElement a = FieldElement::symbol("a");
        Series fa = pow_general(f, a), fb = pow_general(f, I(2) * a);
        for (int i = 0; i < 16; ++i) {
            FieldElement v = Q(s.rational(9, 7));
            Series at_v = Series::from_function(M, [&](int n) { return fa[n].evaluate_at(v); });
            r.check(at(at("symbolic pow specializes", "a", v), "sample", i), i, at_v, pow_general(f, v));
        }
        r.check("pow(f, 2a) = pow(f, a)^2 symbolically", 0, fb, fa * fa);
    }
    Series t = Series::variable(N);
    for (int i = 0; i < trials; ++i) {
        Series F = oracle::random_series(s, N, I(0));
        Series lin = Series::from_function(N, [&](int n) { return n == 1 ? Q(s.nonzero_rational(5, 4)) : F[n]; });
        Series G = reversion(lin);
        r.check("reversion is an involution", i, reversion(G), lin);
        r.check("compose(F, reversion(F)) = t", i, compose(lin, G), t);
        r.check("compose(reversion(F), F) = t", i, compose(G, lin), t);
        Series u = oracle::random_series(s, N, Q(s.nonzero_rational(5, 4)));
        r.check("star is an involution", i, star(star(u)), u);
    }
    for (int i = 0; i < trials; ++i) {
        std::size_t na = static_cast<std::size_t>(s.uniform(1, 30)), nb = static_cast<std::size_t>(s.uniform(1, 30));
        std::size_t no = static_cast<std::size_t>(s.uniform(1, 40));
        std::vector<FieldElement> a(na), b(nb), o1(no), o2(no);
        for (auto& x : a) x = s.element("q");
        for (auto& x : b) x = s.element("q");
        kernels::convolve_serial(a, b, o1);
        kernels::convolve_parallel(a, b, o2);
        r.check_true("parallel convolution matches the serial reference", i, o1 == o2);
    }
}

void suite_lagrange(Recorder& r) {
    Sampler s = r.sampler(0);
    const int N = 12;
    for (int trial = 0; trial < 20; ++trial) {
        Series phi = oracle::random_series(s, N, Q(s.rational(5, 4)));
        Series f = oracle::random_series(s, N, Q(s.nonzero_rational(5, 4)));
        Series F = multiply_by_t(f);
        Series G = reversion(F).truncated(N);
        Series phiG = compose(phi, G);
        // G = x U(x), so G'/G = 1/x + U'/U and [x^n] phi(G) G'/G = [x^{n+1}] phi(G) + [x^n] phi(G) U'/U.
        Series U = divide_by_t(reversion(F));
        Series ratio = derivative(U) * inverse(U.truncated(N - 1));
        Series weighted = phiG.truncated(N - 1) * ratio;
        for (int n = 0; n <= 10; ++n) {
            r.check(at("plain form equals [x^n] phi(G(x))", "trial", trial), n, lagrange_coeff(phi, f, n, LagrangeVariant::plain), phiG[n]);
            r.check(at("weighted form equals [x^n] phi(G(x)) G'(x)/G(x)", "trial", trial), n,
                    lagrange_coeff(phi, f, n, LagrangeVariant::weighted), phiG[n + 1] + weighted[n]);
        }
    }
    // phi = (1 + t)^beta, f = (1 + t)^{-alpha}: [x^n] = beta/(n alpha + beta) C(n alpha + beta, n).
    for (int trial = 0; trial < 8; ++trial) {
        FieldElement alpha = Q(s.nonzero_rational()), beta = Q(s.nonzero_rational());
        Series one_t = oracle::series(N, [](int n) { return I(n <= 1 ? 1 : 0); });
        Series phi = pow_general(one_t, beta), f = pow_general(one_t, -alpha);
        for (int n = 1; n <= 10; ++n) {
            FieldElement want = beta / I(n) * binom_general(I(n) * alpha + beta - I(1), n - 1);
            r.check(at("binomial series coefficient", "trial", trial), n, lagrange_coeff(phi, f, n, LagrangeVariant::plain), want);
        }
    }
}

void suite_demoivre(Recorder& r) {
    Sampler s = r.sampler(0);
    for (int i = 0; i < 50; ++i) {
        int n = static_cast<int>(s.uniform(0, 10)), k = static_cast<int>(s.uniform(0, n + 1));
        FieldElement c = Q(s.nonzero_rational(5, 4));
        DmInput a = random_input(s, std::max(n, 1));
        DmInput ca = input_of(a.size(), [&](int j) { return c * a.at(j); });
        DmInput cja = input_of(a.size(), [&](int j) { return c.pow(j) * a.at(j); });
        r.check(at("A(c a) = c^k A(a)", "k", k), n, dm(n, k, ca), c.pow(k) * dm(n, k, a));
        r.check(at("A(c^j a_j) = c^n A(a)", "k", k), n, dm(n, k, cja), c.pow(n) * dm(n, k, a));
    }
    DmInput a = random_input(s, 12);
    for (int n = 0; n <= 10; ++n) {
        r.check("A_{n,0} = delta", n, dm(n, 0, a), I(n == 0 ? 1 : 0));
        if (n >= 1) r.check("A_{n,1} = a_n", n, dm(n, 1, a), a.at(n));
        for (int k = n + 1; k <= 10; ++k) r.check(at("A_{n,k} = 0 for n < k", "k", k), n, dm(n, k, a), I(0));
    }
    for (int i = 0; i < std::min(r.config().trials, 16); ++i) {
        DmInput b = random_input(s, 8);
        DmTable T(b, 8);
        for (int n = 0; n <= 8; ++n)
            for (int k = 0; k <= n; ++k) {
                FieldElement v = dm_partition_sum(n, k, b);
                r.check(at("power sum equals multinomial sum", "k", k), n, dm(n, k, b), v);
                r.check(at("table equals multinomial sum", "k", k), n, T(n, k), v);
            }
    }
    // Composition: [x^n] g(f(x)) = sum_k b_k A_{n,k}(f).
    for (int i = 0; i < 8; ++i) {
        const int N = 10;
        Series f = oracle::random_series(s, N, I(0)), g = oracle::random_series(s, N, Q(s.rational()));
        DmTable T(input_of(N, [&](int j) { return f[j]; }), N);
        Series h = compose(g, f);
        for (int n = 0; n <= N; ++n) {
            FieldElement sum;
            for (int k = 0; k <= n; ++k) sum += g[k] * T(n, k);
            r.check("composition coefficient as a De Moivre sum", n, sum, h[n]);
        }
        // [x^n] e^{alpha f} = sum alpha^k/k! A_{n,k}
        FieldElement alpha = Q(s.rational());
        Series e = exp0(f * alpha);
        for (int n = 0; n <= N; ++n) {
            FieldElement sum;
            for (int k = 0; k <= n; ++k) sum += alpha.pow(k) * inv_factorial(k) * T(n, k);
            r.check("exponential coefficient as a De Moivre sum", n, sum, e[n]);
        }
    }
    // Shift helpers against their defining sums.
    for (int i = 0; i < 4; ++i) {
        DmInput b = random_input(s, 22);
        for (int n = 0; n <= 8; ++n)
            for (int k = 0; k <= 8; ++k) {
                FieldElement rem, pre;
                for (int j = 0; j <= k; ++j) {
                    FieldElement c = Z(binomial(k, j));
                    rem += (-b.at(1)).pow(k - j) * c * dm(n + j, j, b);
                    pre += b.at(1).pow(k - j) * c * dm(n - k, j, b.tail());
                }
                r.check(at("remove-first shift", "k", k), n, dm_shift(DmShift::remove_first, n, k, b), rem);
                r.check(at("constant-prepend shift", "k", k), n, dm_shift(DmShift::constant_prepend, n, k, b), pre);
            }
    }
}

void suite_determinants(Recorder& r) {
    Sampler s = r.sampler(0);
    // Laplace expansion along the first row.
    std::function<FieldElement(const std::vector<std::vector<FieldElement>>&)> laplace = [&](const auto& m) -> FieldElement {
        const std::size_t n = m.size();
        if (n == 0) return I(1);
        FieldElement d;
        for (std::size_t c = 0; c < n; ++c) {
            if (m[0][c].is_zero()) continue;
            std::vector<std::vector<FieldElement>> minor;
            for (std::size_t i = 1; i < n; ++i) {
                std::vector<FieldElement> row;
                for (std::size_t j = 0; j < n; ++j)
                    if (j != c) row.push_back(m[i][j]);
                minor.push_back(std::move(row));
            }
            d += sign(static_cast<long>(c)) * m[0][c] * laplace(minor);
        }
        return d;
    };
    for (int trial = 0; trial < 8; ++trial)
        for (int n = 1; n <= 8; ++n) {
            DmInput a = random_input(s, n);
            FieldElement t = Q(s.rational());
            DmInput scaled = input_of(n, [&](int j) { return a.at(j) / I(j); });
            FieldElement sm, sn, so;
            for (int k = 0; k <= n; ++k) {
                FieldElement sg = sign(n + k);
                sm += sg * t.pow(k) * dm(n, k, a);
                sn += sg * t.pow(k) * inv_factorial(k) * dm(n, k, scaled);
                if (k > 0) so += sg * t.pow(k) / I(k) * dm(n, k, a);
            }
            std::string tag = "trial=" + std::to_string(trial);
            r.check("det M_n(t) = sum (-1)^{n+k} t^k A_{n,k} [" + tag + "]", n, dm_determinant(DmMatrix::M, n, t, a), sm);
            r.check("det N_n(t)/n! = sum (-1)^{n+k} t^k/k! A_{n,k}(a_j/j) [" + tag + "]", n,
                    dm_determinant(DmMatrix::N, n, t, a) * inv_factorial(n), sn);
            r.check("det O_n(t)/n = sum (-1)^{n+k} t^k/k A_{n,k} [" + tag + "]", n, dm_determinant(DmMatrix::O, n, t, a) / I(n), so);
            if (n <= 6)
                for (DmMatrix form : {DmMatrix::M, DmMatrix::N, DmMatrix::O})
                    r.check("elimination equals cofactor expansion [" + tag + "]", n, dm_determinant(form, n, t, a),
                            laplace(dm_matrix(form, n, t, a)));
        }
    // Symbolic t: each determinant is a polynomial identity in t.
    FieldElement t = FieldElement::symbol("t");
    for (int n = 1; n <= 8; ++n) {
        DmInput a = random_input(s, n);
        FieldElement sm;
        for (int k = 0; k <= n; ++k) sm += sign(n + k) * t.pow(k) * dm(n, k, a);
        r.check("det M_n(t) with symbolic t", n, dm_determinant(DmMatrix::M, n, t, a), sm);
    }
}

void suite_special_values(Recorder& r) {
    const int M = 10, K = 10;
    Sampler s = r.sampler(0);
    FieldElement alpha = FieldElement::symbol("alpha"), beta = FieldElement::symbol("beta");
    auto S2 = [](long n, long k) { return Z(oracle::stirling_subset(n, k)); };
    auto S1 = [](long n, long k) { return Z(oracle::stirling_cycle(n, k)); };
    auto fact = [](long n) { return Z(factorial(n)); };
    auto grid = [&](const std::string& name, const Shifted& A, const std::function<FieldElement(int, int)>& rhs, bool skip_origin = false) {
        for (int m = 0; m <= M; ++m)
            for (int k = 0; k <= K; ++k) {
                if (skip_origin && m == 0 && k == 0) continue;
                r.check(at(name, "k", k), m, A(m, k), rhs(m, k));
            }
    };

    // Binomial coefficients and their first-coefficient removal, symbolic alpha.
    {
        DmTable A(input_of(20, [&](int j) { return binom_general(alpha, j - 1); }), 20);
        DmTable T(input_of(20, [&](int j) { return binom_general(alpha, j); }), 20);
        for (int m = 0; m <= M; ++m)
            for (int k = 0; k <= K; ++k) {
                int n = m + k;
                r.check(at("A_{n,k}(C(alpha, j - 1)) = C(k alpha, n - k)", "k", k), n, A(n, k), binom_general(I(k) * alpha, n - k));
                FieldElement sum;
                for (int j = 0; j <= k; ++j) sum += sign(k - j) * Z(binomial(k, j)) * binom_general(I(j) * alpha, m);
                r.check(at("A_{n,k}(C(alpha, j)) as an alternating sum", "k", k), m, T(m, k), sum);
            }
    }
    // Stirling numbers from 1/j! and 1/j, and from the shifted inputs 1/(j+1)!, 1/(j+1).
    {
        DmTable F(input_of(20, [](int j) { return inv_factorial(j); }), 20);
        DmTable L(input_of(20, [](int j) { return Q(make_rational(1, j)); }), 20);
        DmTable F2(input_of(20, [](int j) { return inv_factorial(j + 1); }), 20);
        DmTable L2(input_of(20, [](int j) { return Q(make_rational(1, j + 1)); }), 20);
        for (int m = 0; m <= M; ++m)
            for (int k = 0; k <= K; ++k) {
                int n = m + k;
                r.check(at("A_{n,k}(1/j!) = k!/n! S(n, k)", "k", k), n, F(n, k), fact(k) / fact(n) * S2(n, k));
                r.check(at("A_{n,k}(1/j) = k!/n! s(n, k)", "k", k), n, L(n, k), fact(k) / fact(n) * S1(n, k));
                FieldElement sub, cyc;
                for (int j = 0; j <= k; ++j) {
                    FieldElement c = sign(k - j) * Z(binomial(m + k, m + j));
                    sub += c * S2(m + j, j);
                    cyc += c * S1(m + j, j);
                }
                r.check(at("A_{m,k}(1/(j+1)!) as a sum of subset numbers", "k", k), m, F2(m, k), fact(k) / fact(m + k) * sub);
                r.check(at("A_{m,k}(1/(j+1)) as a sum of cycle numbers", "k", k), m, L2(m, k), fact(k) / fact(m + k) * cyc);
                FieldElement explicit_sum;
                for (int j = 0; j <= k; ++j) explicit_sum += sign(k - j) * Z(binomial(k, j)) * Q(power(Rational(j), m));
                r.check(at("S(m, k) = 1/k! sum (-1)^{k-j} C(k, j) j^m", "k", k), m, S2(m, k), explicit_sum / fact(k));
                r.check(at("stirling_eval subset", "k", k), m, Q(stirling_eval(StirlingKind::subset, m, k)), S2(m, k));
                r.check(at("stirling_eval cycle", "k", k), m, Q(stirling_eval(StirlingKind::cycle, m, k)), S1(m, k));
            }
    }
    // Adding or removing the first argument, on 16 sampled inputs.
    for (int i = 0; i < 16; ++i) {
        DmInput b = random_input(s, 21);
        std::vector<FieldElement> tail_c(b.coeffs().begin() + 1, b.coeffs().end());
        DmTable A(b, 20), T(DmInput(tail_c), 20);
        for (int n = 0; n <= M; ++n)
            for (int k = 0; k <= K; ++k) {
                FieldElement rem, pre;
                for (int j = 0; j <= k; ++j) {
                    FieldElement c = Z(binomial(k, j));
                    rem += (-b.at(1)).pow(k - j) * c * A(n + j, j);
                    if (n - k >= 0) pre += b.at(1).pow(k - j) * c * T(n - k, j);
                }
                std::string tag = "sample=" + std::to_string(i) + " k";
                r.check(at("A_{n,k}(a_2, a_3, ...) from A_{n+j,j}(a)", tag, k), n, T(n, k), rem);
                r.check(at("A_{n,k}(a) from A_{n-k,j}(a_2, ...)", tag, k), n, A(n, k), pre);
            }
    }

    // Powers of (1 + x)^beta and e^{beta x}, symbolic beta.
    grid("A_{m+k,k}(C(beta, j)) = C(beta k, m)", Shifted([&](int j) { return binom_general(beta, j); }),
         [&](int m, int k) { return binom_general(I(k) * beta, m); });
    grid("A_{m+k,k}(beta^j/j!) = (beta k)^m/m!", Shifted([&](int j) { return beta.pow(j) * inv_factorial(j); }),
         [&](int m, int k) { return (I(k) * beta).pow(m) * inv_factorial(m); });
    // Generalized exponential and binomial series: symbolic beta, 16 sampled alpha.
    for (int i = 0; i < 16; ++i) {
        FieldElement a = Q(s.rational(9, 7));
        std::string tag = "alpha=" + a.to_string();
        grid("generalized exponential values [" + tag + "]", Shifted([&](int j) {
                 return j == 0 ? I(1) : (I(j) * a + beta).pow(j - 1) * beta * inv_factorial(j);
             }),
             [&](int m, int k) {
                 if (m == 0) return I(1);
                 return (I(m) * a + I(k) * beta).pow(m - 1) * I(k) * beta * inv_factorial(m);
             },
             true);
        // beta/(j a + beta) C(j a + beta, j) written as beta/j C(j a + beta - 1, j - 1) so it stays defined.
        grid("generalized binomial values [" + tag + "]", Shifted([&](int j) {
                 return j == 0 ? I(1) : beta / I(j) * binom_general(I(j) * a + beta - I(1), j - 1);
             }),
             [&](int m, int k) {
                 if (m == 0) return I(1);
                 return I(k) * beta / I(m) * binom_general(I(m) * a + I(k) * beta - I(1), m - 1);
             });
        std::vector<UniPoly> over;
        for (int j = 1; j <= 20; ++j) over.push_back(norlund_over_z(j));
        auto over_at = [&](int j, const FieldElement& z) { return horner(over[static_cast<std::size_t>(j - 1)], z); };
        grid("generalized Bernoulli values [" + tag + "]", Shifted([&](int j) {
                 return j == 0 ? I(1) : over_at(j, I(j) * a + beta) * beta * inv_factorial(j);
             }),
             [&](int m, int k) {
                 if (m == 0) return I(1);
                 return over_at(m, I(m) * a + I(k) * beta) * I(k) * beta * inv_factorial(m);
             });
    }
    grid("A_{m+k,k}((j+1)^{j-1}/j!) = (m+k)^{m-1} k/m!", Shifted([](int j) { return Q(power(Rational(j + 1), j - 1)) * inv_factorial(j); }),
         [&](int m, int k) { return m == 0 ? I(1) : Q(power(Rational(m + k), m - 1)) * I(k) * inv_factorial(m); }, true);
    grid("A_{m+k,k}(C_j) = k/(2m+k) C(2m+k, m)", Shifted([](int j) { return Z(binomial(2 * j, j)) / I(j + 1); }),
         [&](int m, int k) { return Q(make_rational(k, 2 * m + k)) * Z(binomial(2 * m + k, m)); }, true);

    // Bernoulli, Stirling and harmonic cases.
    auto bern = oracle::bernoulli(20);
    std::vector<std::vector<Rational>> nor;
    for (int k = 0; k <= K; ++k) nor.push_back(oracle::norlund(k, M));
    grid("A_{m+k,k}(B_j/j!) = B_m^{(k)}/m!", Shifted([&](int j) { return Q(bern[static_cast<std::size_t>(j)]) * inv_factorial(j); }),
         [&](int m, int k) { return Q(nor[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)]) * inv_factorial(m); });
    auto rising = [&](int m, int k, bool subset, int scale) {
        FieldElement st = subset ? S2(m + scale * k, scale * k) : S1(m + scale * k, scale * k);
        return fact(scale * k) / fact(m + scale * k) * st;
    };
    {
        DmTable F(input_of(20, [](int j) { return inv_factorial(j); }), 20);
        DmTable G(input_of(20, [](int j) { return Q((power(Rational(2), j + 1) - 2) / Rational(factorial(j + 1))); }), 20);
        DmTable L(input_of(20, [](int j) { return Q(make_rational(1, j)); }), 20);
        DmTable H(input_of(20, [](int j) { return Q(oracle::harmonic(j) / Rational(j + 1)); }), 20);
        for (int m = 0; m <= M; ++m)
            for (int k = 0; k <= K; ++k) {
                r.check(at("A_{m+k,k}(1/j!) = k!/(m+k)! S(m+k, k)", "k", k), m, F(m + k, k), rising(m, k, true, 1));
                r.check(at("A_{m+k,k}((2^{j+1}-2)/(j+1)!) = (2k)!/(m+2k)! S(m+2k, 2k)", "k", k), m, G(m + k, k), rising(m, k, true, 2));
                r.check(at("A_{m+k,k}(1/j) = k!/(m+k)! s(m+k, k)", "k", k), m, L(m + k, k), rising(m, k, false, 1));
                r.check(at("A_{m+k,k}(H_j/(j+1)) = (2k)!/(2^k (m+2k)!) s(m+2k, 2k)", "k", k), m, H(m + k, k),
                        rising(m, k, false, 2) / Q(power(Rational(2), k)));
            }
    }
}

}  // namespace symtriple::verify
