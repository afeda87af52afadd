#include <algorithm>

#include "symtriple/catalog.hpp"

namespace symtriple::catalog {

namespace {

using Vec = std::vector<FieldElement>;
using Family3 = std::optional<Vec>;

FieldElement F(long v) { return FieldElement(v); }
FieldElement Q(const Rational& r) { return FieldElement(r); }
FieldElement inv_fact(long n) { return FieldElement(Rational(1) / Rational(factorial(n))); }
long neg1(long n) { return n % 2 ? -1 : 1; }

// Read access to a resolved spec.
class Ctx {
public:
    explicit Ctx(const TripleSpec& s) : spec(s), N(s.order) {}
    const FieldElement& field(const std::string& name) const { return spec.params.at(name); }
    long integer(const std::string& name) const {
        const FieldElement& v = field(name);
        if (!v.is_rational() || v.rational().get_den() != 1) throw Error(ErrorKind::BadParams, "parameter " + name + " must be an integer");
        return v.rational().get_num().get_si();
    }
    long nonneg(const std::string& name) const {
        long v = integer(name);
        if (v < 0) throw Error(ErrorKind::BadParams, "parameter " + name + " must be >= 0");
        return v;
    }
    const IntSet& set(const std::string& name) const { return spec.sets.at(name); }
    bool is_integer(const std::string& name) const {
        const FieldElement& v = field(name);
        return v.is_rational() && v.rational().get_den() == 1;
    }
    const TripleSpec& spec;
    const int N;
};

struct Predictions {
    Family3 e, h, p;
};

struct Impl {
    TripleEntry info;
    std::function<SymTriple(const Ctx&)> build;
    std::function<Predictions(const Ctx&)> predict;
};

// v[i] = f(i + 1) for i < N
Vec family(int N, const std::function<FieldElement(long)>& f) {
    Vec v;
    for (long k = 1; k <= N; ++k) v.push_back(f(k));
    return v;
}

Vec from_integers(int N, const std::vector<Integer>& seq, long sign_pow = 0) {
    return family(N, [&](long k) { return FieldElement(Rational(seq[static_cast<std::size_t>(k)])) * F(sign_pow ? neg1(k) : 1); });
}

SymTriple from_p(int N, const std::function<FieldElement(long)>& p) {
    return SymTriple::from_series(Family::p, Series::from_function(N - 1, [&](int i) { return p(i + 1); }));
}

SymTriple from_h(const Series& H) { return SymTriple::from_series(Family::h, H); }

Series series(int N, const std::function<FieldElement(int)>& f) { return Series::from_function(N, f); }

// ---- shared building blocks ----

SymTriple bernoulli_triple(int N) {
    return SymTriple::from_series(Family::e, series(N, [](int k) { return F(neg1(k)) * inv_fact(k + 1); }));
}

SymTriple exponential_triple(int N, const FieldElement& x) {
    return from_p(N, [&](long k) { return k == 1 ? x : FieldElement(); });
}

SymTriple cosine_triple(int N) {
    return from_h(series(N, [](int n) { return n % 2 ? FieldElement() : F(neg1(n / 2)) * inv_fact(n); }));
}

SymTriple sine_triple(int N) {
    return from_h(series(N, [](int n) { return n % 2 ? FieldElement() : F(neg1(n / 2)) * inv_fact(n + 1); }));
}

SymTriple hermite_triple(int N, const FieldElement& x) {
    return from_p(N, [&](long k) { return k == 1 ? F(2) * x : k == 2 ? F(-2) : FieldElement(); });
}

SymTriple lucas_triple(int N, const FieldElement& a, const FieldElement& b) {
    return SymTriple::from_series(Family::e, series(N, [&](int k) { return k == 0 ? F(1) : k == 1 ? a : k == 2 ? b : FieldElement(); }));
}

Series exp_series(int N) { return series(N, [](int k) { return inv_fact(k); }); }

Series bernoulli_rho(int N) { return inverse(series(N, [](int k) { return inv_fact(k + 1); })); }

SymTriple general_triple(int N, const Series& rho, const FieldElement& alpha, const FieldElement& beta) {
    return from_h(q_pow(GeneralSeriesSpec{rho, alpha, N}, beta));
}

Vec bernoulli_over_fact(int N) {
    auto B = bernoulli_numbers(N + 1);
    Vec v;
    for (int k = 0; k <= N + 1; ++k) v.push_back(Q(B[static_cast<std::size_t>(k)]) * inv_fact(k));
    return v;
}

// B_n^{(z)}/z evaluated at z = gamma (n >= 1), which is a polynomial since B_n^{(0)} = 0.
FieldElement norlund_over(int n, const FieldElement& gamma) {
    UniPoly b = norlund(n);
    std::vector<Rational> c(b.coeffs().begin() + 1, b.coeffs().end());
    FieldElement poly(UniPoly("z", c));
    return poly.is_rational() ? poly : poly.evaluate_at(gamma);
}

// c (1/k) C(g - 1, k - 1) = c C(g, k)/g for k >= 1, without dividing by g.
FieldElement binom_over(const FieldElement& g, long k) { return binom_general(g - F(1), k - 1) / F(k); }

Vec stirc_row(long n, int N) {
    HarmonicMultisetTable t(n, n, 1, N);
    return family(N, [&](long k) { return Q(t.at(n, k)); });
}

// ---- the registry ----

std::vector<Impl> build_registry() {
    std::vector<Impl> r;
    auto add = [&](std::string name, std::string description, std::vector<ParamInfo> params,
                   std::function<SymTriple(const Ctx&)> build, std::function<Predictions(const Ctx&)> predict) {
        r.push_back(Impl{TripleEntry{std::move(name), std::move(description), std::move(params)}, std::move(build), std::move(predict)});
    };
    const auto field = ParamKind::field;
    const auto integer = ParamKind::integer;
    const auto set = ParamKind::set;

    add("partition_divisor", "prod_{j in S} (1 - t^j)^{-r}", {{"S", set, "all"}, {"r", field, "1"}},
        [](const Ctx& c) {
            const FieldElement& rr = c.field("r");
            const IntSet& S = c.set("S");
            return from_p(c.N, [&](long k) { return rr * Q(Rational(sigma_S(S, k))); });
        },
        [](const Ctx& c) {
            Predictions out;
            const IntSet& S = c.set("S");
            const FieldElement& rr = c.field("r");
            out.p = family(c.N, [&](long k) { return rr * Q(Rational(sigma_S(S, k))); });
            if (c.is_integer("r")) {
                long rv = c.integer("r");
                out.h = from_integers(c.N, partition_counts(S, rv, c.N));
                out.e = from_integers(c.N, partition_counts(S, -rv, c.N), 1);
            }
            return out;
        });

    auto squares_p = [](long k) { return Q(Rational(sigma(k) + omega(2, k))); };
    add("squares", "theta(t)^r", {{"r", integer, "2"}},
        [squares_p](const Ctx& c) {
            FieldElement rr = F(c.nonneg("r"));
            return from_p(c.N, [&](long k) { return rr * squares_p(k); });
        },
        [squares_p](const Ctx& c) {
            long rv = c.nonneg("r");
            return Predictions{from_integers(c.N, squares_count(rv, c.N)), from_integers(c.N, overpartitions(rv, c.N)),
                               family(c.N, [&](long k) { return F(rv) * squares_p(k); })};
        });

    auto tri_p = [](long k) { return Q(Rational(sigma(k) + omega(2, k) - omega(4, k))); };
    add("triangular", "psi(t)^r for the triangular theta series", {{"r", integer, "1"}},
        [tri_p](const Ctx& c) {
            FieldElement rr = F(c.nonneg("r"));
            return from_p(c.N, [&](long k) { return rr * tri_p(k); });
        },
        [tri_p](const Ctx& c) {
            long rv = c.nonneg("r");
            return Predictions{from_integers(c.N, triangular_count(rv, c.N)),
                               from_integers(c.N, partition_counts(IntSet::non_residue(2, 4), rv, c.N)),
                               family(c.N, [&](long k) { return F(rv) * tri_p(k); })};
        });

    add("overpartition", "E = theta(t), H = overpartition series", {},
        [squares_p](const Ctx& c) { return from_p(c.N, squares_p); },
        [squares_p](const Ctx& c) {
            Vec e = family(c.N, [](long n) {
                long s = 0;
                while ((s + 1) * (s + 1) <= n) ++s;
                return F(s * s == n ? 2 : 0);
            });
            return Predictions{e, from_integers(c.N, overpartitions(1, c.N)), family(c.N, squares_p)};
        });

    add("mod5_partition", "H = (t^5; t^5)^5 / (t; t)^6", {},
        [](const Ctx& c) { return from_p(c.N, [](long k) { return Q(Rational(sigma(k) + 5 * omega(5, k))); }); },
        [](const Ctx& c) {
            auto p = partition_counts(IntSet::all(), 1, 5 * c.N + 4);
            Vec h = family(c.N, [&](long n) { return Q(Rational(p[static_cast<std::size_t>(5 * n + 4)]) / 5); });
            return Predictions{from_integers(c.N, mod5_f(c.N), 1), h,
                               family(c.N, [](long k) { return Q(Rational(sigma(k) + 5 * omega(5, k))); })};
        });

    add("binomial", "H = (1 - t)^{-alpha}", {{"alpha", field, "alpha"}},
        [](const Ctx& c) {
            FieldElement a = c.field("alpha");
            return from_p(c.N, [&](long) { return a; });
        },
        [](const Ctx& c) {
            FieldElement a = c.field("alpha");
            return Predictions{family(c.N, [&](long k) { return binom_general(a, k); }),
                               family(c.N, [&](long k) { return binom_general(a + F(k - 1), k); }), family(c.N, [&](long) { return a; })};
        });

    add("stirling", "roots x_j = j for j = 1..n", {{"n", integer, "5"}},
        [](const Ctx& c) {
            Vec xs;
            for (long j = 1; j <= c.nonneg("n"); ++j) xs.push_back(F(j));
            return from_roots(xs, c.N);
        },
        [](const Ctx& c) {
            long n = c.nonneg("n");
            return Predictions{family(c.N, [&](long k) { return Q(Rational(stirling_cycle(n + 1, n + 1 - k))); }),
                               family(c.N, [&](long k) { return Q(Rational(stirling_subset(n + k, n))); }),
                               family(c.N, [&](long k) {
                                   Integer s = 0;
                                   for (long j = 1; j <= n; ++j) s += Integer(power(Rational(j), k));
                                   return Q(Rational(s));
                               })};
        });

    add("harmonic", "roots x_j = 1/j for j = 1..n", {{"n", integer, "5"}},
        [](const Ctx& c) {
            Vec xs;
            for (long j = 1; j <= c.nonneg("n"); ++j) xs.push_back(Q(make_rational(1, j)));
            return from_roots(xs, c.N);
        },
        [](const Ctx& c) {
            long n = c.nonneg("n");
            return Predictions{family(c.N, [&](long k) { return Q(Rational(stirling_cycle(n + 1, k + 1)) / Rational(factorial(n))); }),
                               stirc_row(n, c.N), family(c.N, [&](long k) { return Q(harmonic_number(n, k)); })};
        });

    add("exponential", "(e^{xt}, e^{xt}, x)", {{"x", field, "x"}},
        [](const Ctx& c) { return exponential_triple(c.N, c.field("x")); },
        [](const Ctx& c) {
            FieldElement x = c.field("x");
            Vec eh = family(c.N, [&](long k) { return x.pow(k) * inv_fact(k); });
            return Predictions{eh, eh, family(c.N, [&](long k) { return k == 1 ? x : FieldElement(); })};
        });

    add("hermite", "H = exp(2xt - t^2)", {{"x", field, "x"}},
        [](const Ctx& c) { return hermite_triple(c.N, c.field("x")); },
        [](const Ctx& c) {
            FieldElement x = c.field("x");
            auto Hr = hermite_polynomials(x, c.N), Hi = hermite_polynomials(x, c.N, true);
            return Predictions{family(c.N, [&](long k) { return Hi[static_cast<std::size_t>(k)] * inv_fact(k); }),
                               family(c.N, [&](long k) { return Hr[static_cast<std::size_t>(k)] * inv_fact(k); }),
                               family(c.N, [&](long k) { return k == 1 ? F(2) * x : k == 2 ? F(-2) : FieldElement(); })};
        });

    add("bernoulli", "H = t/(e^t - 1)", {}, [](const Ctx& c) { return bernoulli_triple(c.N); },
        [](const Ctx& c) {
            Vec b = bernoulli_over_fact(c.N);
            return Predictions{family(c.N, [](long k) { return F(neg1(k)) * inv_fact(k + 1); }),
                               family(c.N, [&](long k) { return b[static_cast<std::size_t>(k)]; }),
                               family(c.N, [&](long k) { return F(-neg1(k)) * b[static_cast<std::size_t>(k)]; })};
        });

    add("bernoulli_sun", "Bernoulli triple at -t divided by the same at -2t", {},
        [](const Ctx& c) {
            SymTriple b = bernoulli_triple(c.N);
            return div(scale(b, F(-1)), scale(b, F(-2)));
        },
        [](const Ctx& c) {
            Vec b = bernoulli_over_fact(c.N);
            auto two = [](long k) { return Q(power(Rational(2), k)); };
            return Predictions{family(c.N, [&](long k) { return (F(2) - two(k + 2)) * b[static_cast<std::size_t>(k + 1)]; }),
                               family(c.N, [](long k) { return F(neg1(k)) * inv_fact(k) / F(2); }),
                               family(c.N, [&](long k) { return (two(k) - F(1)) * b[static_cast<std::size_t>(k)]; })};
        });

    add("bernoulli_poly", "exponential(x) times bernoulli", {{"x", field, "x"}},
        [](const Ctx& c) { return mul(exponential_triple(c.N, c.field("x")), bernoulli_triple(c.N)); },
        [](const Ctx& c) {
            FieldElement x = c.field("x");
            Vec b = bernoulli_over_fact(c.N);
            auto Bx = bernoulli_polynomials(x, c.N);
            return Predictions{family(c.N, [&](long k) { return (x.pow(k + 1) - (x - F(1)).pow(k + 1)) * inv_fact(k + 1); }),
                               family(c.N, [&](long k) { return Bx[static_cast<std::size_t>(k)] * inv_fact(k); }),
                               family(c.N, [&](long k) { return F(-neg1(k)) * b[static_cast<std::size_t>(k)] + (k == 1 ? x : FieldElement()); })};
        });

    add("eulerian", "H = (x - 1)/(x - e^{(x-1)t})", {{"x", field, "x"}},
        [](const Ctx& c) {
            FieldElement xm1 = c.field("x") - F(1);
            // (x - 1)/(x - e^{(x-1)t}) = 1/(1 - sum_{k>=1} (x-1)^{k-1} t^k/k!)
            return from_h(inverse(series(c.N, [&](int k) { return k == 0 ? F(1) : -(xm1.pow(k - 1) * inv_fact(k)); })));
        },
        [](const Ctx& c) {
            FieldElement x = c.field("x");
            auto A = eulerian_polynomials(x, c.N);
            return Predictions{family(c.N, [&](long k) { return (F(1) - x).pow(k - 1) * inv_fact(k); }),
                               family(c.N, [&](long k) { return A[static_cast<std::size_t>(k)] * inv_fact(k); }),
                               family(c.N, [&](long k) { return x * A[static_cast<std::size_t>(k - 1)] * inv_fact(k - 1) + (k == 1 ? F(1) - x : FieldElement()); })};
        });

    add("cosine", "(sec t, cos t, -tan t)", {}, [](const Ctx& c) { return cosine_triple(c.N); },
        [](const Ctx& c) {
            auto U = alternating_permutations(c.N);
            auto even = [](const std::function<FieldElement(long)>& f) { return [f](long n) { return n % 2 ? FieldElement() : f(n / 2); }; };
            return Predictions{family(c.N, even([&](long k) { return Q(Rational(U[static_cast<std::size_t>(2 * k)])) * inv_fact(2 * k); })),
                               family(c.N, even([](long k) { return F(neg1(k)) * inv_fact(2 * k); })),
                               family(c.N, even([&](long k) { return -Q(Rational(U[static_cast<std::size_t>(2 * k - 1)])) * inv_fact(2 * k - 1); }))};
        });

    add("sine", "(t csc t, sin(t)/t, cot t - 1/t)", {}, [](const Ctx& c) { return sine_triple(c.N); },
        [](const Ctx& c) {
            Vec b = bernoulli_over_fact(c.N);
            auto four = [](long k) { return Q(power(Rational(4), k)); };
            auto even = [](const std::function<FieldElement(long)>& f) { return [f](long n) { return n % 2 ? FieldElement() : f(n / 2); }; };
            return Predictions{family(c.N, even([&](long k) { return F(-neg1(k)) * (four(k) - F(2)) * b[static_cast<std::size_t>(2 * k)]; })),
                               family(c.N, even([](long k) { return F(neg1(k)) * inv_fact(2 * k + 1); })),
                               family(c.N, even([&](long k) { return F(neg1(k)) * four(k) * b[static_cast<std::size_t>(2 * k)]; }))};
        });

    add("tangent", "sine divided by cosine", {}, [](const Ctx& c) { return div(sine_triple(c.N), cosine_triple(c.N)); },
        [](const Ctx& c) {
            Vec b = bernoulli_over_fact(c.N);
            auto U = alternating_permutations(c.N + 1);
            auto two = [](long k) { return Q(power(Rational(2), k)); };
            auto even = [](const std::function<FieldElement(long)>& f) { return [f](long n) { return n % 2 ? FieldElement() : f(n / 2); }; };
            return Predictions{family(c.N, even([&](long k) { return F(neg1(k)) * two(2 * k) * b[static_cast<std::size_t>(2 * k)]; })),
                               family(c.N, even([&](long k) { return Q(Rational(U[static_cast<std::size_t>(2 * k + 1)])) * inv_fact(2 * k + 1); })),
                               family(c.N, even([&](long k) { return F(neg1(k)) * (two(2 * k + 1) - two(4 * k)) * b[static_cast<std::size_t>(2 * k)]; }))};
        });

    add("sinh_squared", "(4/t) sinh^2(sqrt(t)/2) from the sine triple", {},
        [](const Ctx& c) {
            SymTriple s = scale(sine_triple(2 * c.N), Q(make_rational(1, 2)));
            return pow(scale(unstretch(s, 2), F(-1)), F(2));
        },
        [](const Ctx& c) {
            Vec b = bernoulli_over_fact(2 * c.N);
            return Predictions{family(c.N, [&](long k) { return F(neg1(k) * (1 - 2 * k)) * b[static_cast<std::size_t>(2 * k)]; }),
                               family(c.N, [](long k) { return F(2) * inv_fact(2 * k + 2); }),
                               family(c.N, [&](long k) { return b[static_cast<std::size_t>(2 * k)]; })};
        });

    add("qbinomial", "roots 1, q, ..., q^{n-1}", {{"n", integer, "4"}},
        [](const Ctx& c) {
            FieldElement q = FieldElement::symbol("q");
            Vec xs;
            for (long j = 0; j < c.nonneg("n"); ++j) xs.push_back(q.pow(j));
            return from_roots(xs, c.N);
        },
        [](const Ctx& c) {
            FieldElement q = FieldElement::symbol("q");
            long n = c.nonneg("n");
            return Predictions{family(c.N, [&](long k) { return q.pow(k * (k - 1) / 2) * q_binomial(q, static_cast<int>(n), static_cast<int>(k)); }),
                               family(c.N, [&](long k) { return q_binomial(q, static_cast<int>(n + k - 1), static_cast<int>(k)); }),
                               family(c.N, [&](long k) { return (F(1) - q.pow(n * k)) / (F(1) - q.pow(k)); })};
        });

    add("qbinomial_limit", "H = 1/(t; q)_infinity", {},
        [](const Ctx& c) {
            FieldElement q = FieldElement::symbol("q");
            return from_p(c.N, [&](long k) { return (F(1) - q.pow(k)).inverse(); });
        },
        [](const Ctx& c) {
            FieldElement q = FieldElement::symbol("q");
            return Predictions{family(c.N, [&](long k) { return q.pow(k * (k - 1) / 2) / q_pochhammer(q, q, static_cast<int>(k)); }),
                               family(c.N, [&](long k) { return q_pochhammer(q, q, static_cast<int>(k)).inverse(); }),
                               family(c.N, [&](long k) { return (F(1) - q.pow(k)).inverse(); })};
        });

    add("qtwoparam", "H = (bt; q)_infinity / (at; q)_infinity", {{"a", field, "2"}, {"b", field, "1/3"}},
        [](const Ctx& c) {
            FieldElement q = FieldElement::symbol("q"), a = c.field("a"), b = c.field("b");
            return from_p(c.N, [&](long k) { return (a.pow(k) - b.pow(k)) / (F(1) - q.pow(k)); });
        },
        [](const Ctx& c) {
            FieldElement q = FieldElement::symbol("q"), a = c.field("a"), b = c.field("b");
            auto prod = [&](const FieldElement& u, const FieldElement& v, long k) {
                FieldElement s(1L);
                for (long j = 0; j < k; ++j) s *= u - v * q.pow(j);
                return s;
            };
            return Predictions{family(c.N, [&](long k) { return F(neg1(k)) * prod(b, a, k) / q_pochhammer(q, q, static_cast<int>(k)); }),
                               family(c.N, [&](long k) { return prod(a, b, k) / q_pochhammer(q, q, static_cast<int>(k)); }),
                               family(c.N, [&](long k) { return (a.pow(k) - b.pow(k)) / (F(1) - q.pow(k)); })};
        });

    add("schur_morris", "H = (1 - t^r)/(1 - t)^r", {{"r", integer, "3"}},
        [](const Ctx& c) {
            long rv = c.nonneg("r");
            if (rv < 1) throw Error(ErrorKind::BadParams, "schur_morris needs r >= 1");
            Series top = series(c.N, [&](int n) { return n == 0 ? F(1) : n == rv ? F(-1) : FieldElement(); });
            Series bottom = series(c.N, [&](int n) { return Q(Rational(binomial(n + rv - 1, n))); });
            return from_h(top * bottom);
        },
        [](const Ctx& c) {
            long rv = c.nonneg("r");
            return Predictions{family(c.N, [&](long n) {
                                   long fl = n / rv;
                                   Integer v = neg1(rv * fl) * binomial(rv, n - rv * fl);
                                   if (n % rv == 0) v += neg1(n - rv);
                                   return Q(Rational(v));
                               }),
                               family(c.N, [&](long n) { return Q(Rational(binomial(n + rv - 1, rv - 1) - binomial(n - 1, rv - 1))); }),
                               family(c.N, [&](long n) { return F(n % rv ? rv : 0); })};
        });

    add("lucas", "E = 1 + alpha t + beta t^2", {{"alpha", field, "alpha"}, {"beta", field, "3"}},
        [](const Ctx& c) { return lucas_triple(c.N, c.field("alpha"), c.field("beta")); },
        [](const Ctx& c) {
            FieldElement a = c.field("alpha"), b = c.field("beta");
            auto h = lucas_h(a, b, c.N), p = lucas_p(a, b, c.N);
            return Predictions{family(c.N, [&](long k) { return k == 1 ? a : k == 2 ? b : FieldElement(); }),
                               family(c.N, [&](long k) { return h[static_cast<std::size_t>(k)]; }),
                               family(c.N, [&](long k) { return p[static_cast<std::size_t>(k)]; })};
        });

    add("chebyshev", "E = 1 + 2xt + t^2", {{"x", field, "x"}},
        [](const Ctx& c) { return lucas_triple(c.N, F(2) * c.field("x"), F(1)); },
        [](const Ctx& c) {
            FieldElement x = c.field("x");
            auto T = chebyshev_T(x, c.N), U = chebyshev_U(x, c.N);
            return Predictions{family(c.N, [&](long k) { return k == 1 ? F(2) * x : k == 2 ? F(1) : FieldElement(); }),
                               family(c.N, [&](long k) { return U[static_cast<std::size_t>(k)]; }),
                               family(c.N, [&](long k) { return F(2) * T[static_cast<std::size_t>(k)]; })};
        });

    add("logarithm", "star of the flipped bernoulli triple", {}, [](const Ctx& c) { return star_triple(flip(bernoulli_triple(c.N))); },
        [](const Ctx& c) {
            auto cm = cauchy_minus(c.N), cp = cauchy_plus(c.N);
            return Predictions{family(c.N, [&](long n) { return Q(cm[static_cast<std::size_t>(n)]) * inv_fact(n); }),
                               family(c.N, [](long n) { return Q(make_rational(1, n + 1)); }),
                               family(c.N, [&](long n) { return Q(cp[static_cast<std::size_t>(n)]) * inv_fact(n); })};
        });

    add("arctan", "star of the tangent triple", {},
        [](const Ctx& c) { return star_triple(div(sine_triple(c.N), cosine_triple(c.N))); },
        [](const Ctx& c) {
            return Predictions{std::nullopt, family(c.N, [](long n) { return n % 2 ? FieldElement() : Q(make_rational(neg1(n / 2), n + 1)); }),
                               std::nullopt};
        });

    add("hermite_inverse", "star of the hermite triple", {{"x", field, "x"}},
        [](const Ctx& c) { return star_triple(hermite_triple(c.N, c.field("x"))); },
        [](const Ctx& c) {
            FieldElement x2 = F(2) * c.field("x");
            // sum_m (2x)^{n-2m} b^{n-m-s} / (m! (n-2m)!)
            auto sum = [&](long n, long b, long s) {
                FieldElement total;
                for (long m = 0; 2 * m <= n; ++m) total += x2.pow(n - 2 * m) * Q(power(Rational(b), n - m - s)) * inv_fact(m) * inv_fact(n - 2 * m);
                return total;
            };
            Vec h = family(c.N, [&](long n) { return F(neg1(n)) * sum(n, n + 1, 1); });
            Vec e = family(c.N, [&](long n) { return n == 1 ? h[0] : -sum(n, n - 1, 1); });
            return Predictions{e, h, family(c.N, [&](long n) { return F(neg1(n)) * sum(n, n, 0); })};
        });

    add("general_binomial", "Q_alpha^beta for rho = 1 + t", {{"alpha", field, "2"}, {"beta", field, "beta"}},
        [](const Ctx& c) {
            Series rho = series(c.N, [](int n) { return n <= 1 ? F(1) : FieldElement(); });
            return general_triple(c.N, rho, c.field("alpha"), c.field("beta"));
        },
        [](const Ctx& c) {
            FieldElement a = c.field("alpha"), b = c.field("beta");
            return Predictions{family(c.N, [&](long n) { return b * binom_over((F(1) - a) * F(n) + b, n); }),
                               family(c.N, [&](long n) { return b * binom_over(a * F(n) + b, n); }),
                               family(c.N, [&](long n) { return b * binom_general(a * F(n) - F(1), n - 1); })};
        });

    add("general_exponential", "Q_alpha^beta for rho = e^t", {{"alpha", field, "2"}, {"beta", field, "beta"}},
        [](const Ctx& c) { return general_triple(c.N, exp_series(c.N), c.field("alpha"), c.field("beta")); },
        [](const Ctx& c) {
            FieldElement a = c.field("alpha"), b = c.field("beta");
            return Predictions{family(c.N, [&](long n) { return b * (b - a * F(n)).pow(n - 1) * inv_fact(n); }),
                               family(c.N, [&](long n) { return b * (a * F(n) + b).pow(n - 1) * inv_fact(n); }),
                               family(c.N, [&](long n) { return b * (a * F(n)).pow(n - 1) * inv_fact(n - 1); })};
        });

    add("general_bernoulli", "Q_alpha^beta for rho = t/(e^t - 1)", {{"alpha", field, "2"}, {"beta", field, "beta"}},
        [](const Ctx& c) { return general_triple(c.N, bernoulli_rho(c.N), c.field("alpha"), c.field("beta")); },
        [](const Ctx& c) {
            FieldElement a = c.field("alpha"), b = c.field("beta");
            return Predictions{family(c.N, [&](long n) { return F(-neg1(n)) * b * inv_fact(n) * norlund_over(static_cast<int>(n), a * F(n) - b); }),
                               family(c.N, [&](long n) { return b * inv_fact(n) * norlund_over(static_cast<int>(n), a * F(n) + b); }),
                               family(c.N, [&](long n) { return b * inv_fact(n) * F(n) * norlund_over(static_cast<int>(n), a * F(n)); })};
        });

    add("bernoulli_squared", "square of the bernoulli triple", {}, [](const Ctx& c) { return pow(bernoulli_triple(c.N), F(2)); },
        [](const Ctx& c) {
            auto B = bernoulli_numbers(c.N);
            auto Bk = [&](long k) { return Q(B[static_cast<std::size_t>(k)]); };
            return Predictions{family(c.N, [](long n) { return F(neg1(n)) * (Q(power(Rational(2), n + 2)) - F(2)) * inv_fact(n + 2); }),
                               family(c.N, [&](long n) { return (F(1 - n) * Bk(n) - F(n) * Bk(n - 1)) * inv_fact(n); }),
                               family(c.N, [&](long n) { return F(-2 * neg1(n)) * Bk(n) * inv_fact(n); })};
        });

    add("log_squared", "general_bernoulli with alpha = 1, beta = 2", {},
        [](const Ctx& c) { return general_triple(c.N, bernoulli_rho(c.N), F(1), F(2)); },
        [](const Ctx& c) {
            auto cp = cauchy_plus(c.N);
            return Predictions{family(c.N, [](long n) { return F(2 * -neg1(n)) * inv_fact(n) * norlund_over(static_cast<int>(n), F(n - 2)); }),
                               family(c.N, [](long n) { return F(2 * neg1(n)) * Q(harmonic_number(n + 1) / Rational(n + 2)); }),
                               family(c.N, [&](long n) { return F(2 * neg1(n)) * Q(cp[static_cast<std::size_t>(n)]) * inv_fact(n); })};
        });

    return r;
}

const std::vector<Impl>& impls() {
    static const std::vector<Impl> r = build_registry();
    return r;
}

const Impl& find(const std::string& name) {
    for (const auto& i : impls())
        if (i.info.name == name) return i;
    throw Error(ErrorKind::UnknownTriple, "no registry triple named '" + name + "'");
}

}  // namespace

const std::vector<TripleEntry>& registry() {
    static const std::vector<TripleEntry> r = [] {
        std::vector<TripleEntry> out;
        for (const auto& i : impls()) out.push_back(i.info);
        return out;
    }();
    return r;
}

const TripleEntry& lookup(const std::string& name) { return find(name).info; }

TripleSpec resolved(const TripleSpec& spec) {
    const Impl& impl = find(spec.name);
    if (spec.order < 1) throw Error(ErrorKind::BadParams, "triple order must be >= 1");
    TripleSpec out{spec.name, {}, {}, spec.order};
    auto declared = [&](const std::string& n) {
        return std::any_of(impl.info.params.begin(), impl.info.params.end(), [&](const ParamInfo& p) { return p.name == n; });
    };
    for (const auto& [k, v] : spec.params)
        if (!declared(k)) throw Error(ErrorKind::BadParams, spec.name + " has no parameter '" + k + "'");
    for (const auto& [k, v] : spec.sets)
        if (!declared(k)) throw Error(ErrorKind::BadParams, spec.name + " has no parameter '" + k + "'");
    for (const auto& p : impl.info.params) {
        if (p.kind == ParamKind::set) {
            if (spec.params.count(p.name)) throw Error(ErrorKind::BadParams, "parameter " + p.name + " is a set");
            auto it = spec.sets.find(p.name);
            out.sets.emplace(p.name, it != spec.sets.end() ? it->second : IntSet::parse(p.default_value));
        } else {
            if (spec.sets.count(p.name)) throw Error(ErrorKind::BadParams, "parameter " + p.name + " is not a set");
            auto it = spec.params.find(p.name);
            out.params.emplace(p.name, it != spec.params.end() ? it->second : FieldElement::parse(p.default_value));
        }
    }
    return out;
}

SymTriple make_triple(const TripleSpec& spec) {
    TripleSpec r = resolved(spec);
    return find(r.name).build(Ctx(r));
}

std::optional<std::vector<FieldElement>> predicted(const TripleSpec& spec, Family f) {
    TripleSpec r = resolved(spec);
    Predictions p = find(r.name).predict(Ctx(r));
    return f == Family::e ? p.e : f == Family::h ? p.h : p.p;
}

}  // namespace symtriple::catalog
