#include "suite.hpp"

namespace symtriple::verify {

namespace {

FieldElement I(long n) { return FieldElement(n); }
FieldElement Q(const Rational& r) { return FieldElement(r); }

const Family kFamilies[] = {Family::e, Family::h, Family::p};

const char* family_name(Family f) { return f == Family::e ? "e" : f == Family::h ? "h" : "p"; }

std::string pair_name(Family a, Family b) { return std::string(family_name(a)) + "->" + family_name(b); }

void check_valid(Recorder& r, const std::string& what, long index, const SymTriple& t) {
    IdentityCheck bad = check_triple(t.E(), t.H(), t.P());
    if (bad) {
        r.fail(what + ": " + bad->identity, bad->index, bad->lhs, bad->rhs);
        return;
    }
    IdentityCheck newton = check_newton(t);
    if (newton) {
        r.fail(what + ": " + newton->identity, newton->index, newton->lhs, newton->rhs);
        return;
    }
    r.check_true(what, index, true);
}

// The three general series seeds with constant term 1.
std::vector<std::pair<std::string, Series>> seeds(int N) {
    return {{"1+t", oracle::series(N, [](int n) { return I(n <= 1 ? 1 : 0); })},
            {"exp", oracle::series(N, [](int n) { return oracle::inv_factorial(n); })},
            {"t/(e^t-1)", inverse(oracle::series(N, [](int n) { return oracle::inv_factorial(n + 1); }))}};
}

}  // namespace

void suite_triple(Recorder& r) {
    const int N = r.config().order;
    Sampler s = r.sampler(0);
    const int count = std::min(r.config().trials, 8);
    for (int i = 0; i < count; ++i) {
        SymTriple a = oracle::random_triple(s, N), b = oracle::random_triple(s, N);
        FieldElement alpha = Q(s.nonzero_rational(5, 3)), c = Q(s.nonzero_rational(5, 3));
        check_valid(r, "random triple", i, a);
        check_valid(r, "product", i, mul(a, b));
        check_valid(r, "quotient", i, div(a, b));
        check_valid(r, "power", i, pow(a, alpha));
        check_valid(r, "flip", i, flip(a));
        check_valid(r, "substitution", i, substitute(a, oracle::random_series(s, N, I(0))));
        check_valid(r, "scaling", i, scale(a, c));
        check_valid(r, "stretch", i, stretch(a, 2));
        check_valid(r, "multisection", i, multisect(a, 3));
        check_valid(r, "star", i, star_triple(a));
        // Newton's identity and e/h/p convolutions written out.
        for (int k = 1; k <= N; ++k) {
            FieldElement newton, power_sum, conv;
            for (int j = 1; j <= k; ++j) {
                FieldElement sg = I(j % 2 ? 1 : -1);
                newton += sg * a.p(j) * a.e(k - j);
                power_sum += sg * I(j) * a.e(j) * a.h(k - j);
            }
            for (int j = 0; j <= k; ++j) conv += I(j % 2 ? -1 : 1) * a.e(j) * a.h(k - j);
            r.check("k e_k = sum (-1)^{j-1} p_j e_{k-j}", k, I(k) * a.e(k), newton);
            r.check("p_k = sum (-1)^{j-1} j e_j h_{k-j}", k, a.p(k), power_sum);
            r.check("sum (-1)^j e_j h_{k-j} = 0", k, conv, I(0));
        }
    }
    // Transition round trips, all ordered pairs, n <= 20.
    const int T = 20;
    for (int i = 0; i < 3; ++i) {
        SymTriple t = oracle::random_triple(s, T);
        for (Family a : kFamilies)
            for (Family b : kFamilies) {
                if (a == b) continue;
                auto there = transition(a, b, t.family(a, T), T);
                r.check_true("transition " + pair_name(a, b), i, there == t.family(b, T));
                r.check_true("round trip " + pair_name(a, b) + " and back", i, transition(b, a, there, T) == t.family(a, T));
            }
    }
    // Multisection.
    for (int i = 0; i < 3; ++i) {
        SymTriple t = oracle::random_triple(s, T);
        SymTriple m2 = multisect(t, 2);
        r.check("multisection m = 2 E is E(t)E(-t)", i, m2.E(), t.E() * negate_variable(t.E()));
        r.check("multisection m = 2 H is H(t)H(-t)", i, m2.H(), t.H() * negate_variable(t.H()));
        for (int m = 2; m <= 4; ++m) {
            SymTriple ms = multisect(t, m);
            for (int k = 1; k <= T; ++k) {
                std::string tag = at("multisection", "m", m);
                if (k % m) {
                    r.check(tag + " e vanishes off multiples", k, ms.e(k), I(0));
                    r.check(tag + " h vanishes off multiples", k, ms.h(k), I(0));
                    r.check(tag + " p vanishes off multiples", k, ms.p(k), I(0));
                } else {
                    r.check(tag + " p scales by m", k, ms.p(k), I(m) * t.p(k));
                }
            }
        }
    }
    // Finite roots, the Pascal update and the MacMahon inversion.
    {
        const int R = 10;
        std::vector<FieldElement> xs;
        for (int i = 0; i < 4; ++i) xs.push_back(Q(s.nonzero_rational(5, 3)));
        SymTriple t = from_roots(xs, R);
        Series E = Series::constant(I(1), R);
        for (const auto& x : xs) E *= oracle::series(R, [&](int n) { return n == 0 ? I(1) : n == 1 ? x : I(0); });
        r.check("from_roots E is the product of 1 + x t", 0, t.E(), E);
        FieldElement y = Q(s.nonzero_rational(5, 3));
        std::vector<FieldElement> more = xs;
        more.push_back(y);
        r.check_true("Pascal update adds one root", 0, pascal_extend(t, y) == from_roots(more, R));
        for (int k = 0; k <= R; ++k)
            for (int j = 0; j <= k; ++j) {
                FieldElement sum;
                for (int q = j; q <= k; ++q) sum += Q(Rational(binomial(q, j))) * macmahon_S(t, k, q);
                r.check(at("e_j h_{k-j} = sum C(r, j) S_{k,r}", "j", j), k, t.e(j) * t.h(k - j), sum);
            }
    }
}

void suite_transitions(Recorder& r) {
    const int N = r.config().order;
    for (const auto& entry : catalog::registry()) {
        catalog::TripleSpec spec{entry.name, {}, {}, N};
        SymTriple t = catalog::make_triple(spec);
        for (Family a : kFamilies)
            for (Family b : kFamilies) {
                if (a == b) continue;
                auto got = transition(a, b, t.family(a, N), N);
                auto want = t.family(b, N);
                std::string id = entry.name + " " + pair_name(a, b);
                bool ok = true;
                for (int k = 0; k < N && ok; ++k)
                    ok = r.check(id, k + 1, got[static_cast<std::size_t>(k)], want[static_cast<std::size_t>(k)]);
            }
    }
}

void suite_group_laws(Recorder& r) {
    const int N = 20;
    Sampler s = r.sampler(0);
    SymTriple id = SymTriple::identity(N);
    for (int i = 0; i < 10; ++i) {
        SymTriple a = oracle::random_triple(s, N), b = oracle::random_triple(s, N), c = oracle::random_triple(s, N);
        FieldElement alpha = Q(s.nonzero_rational(5, 3)), beta = Q(s.nonzero_rational(5, 3));
        auto same = [&](const std::string& law, const SymTriple& x, const SymTriple& y) { r.check_true(law, i, x == y); };
        same("mul is associative", mul(mul(a, b), c), mul(a, mul(b, c)));
        same("mul is commutative", mul(a, b), mul(b, a));
        same("identity is neutral", mul(a, id), a);
        same("identity is (1, 1, 0)", id, SymTriple(Series::constant(I(1), N), Series::constant(I(1), N), Series(N - 1)));
        same("a pow(a, -1) = identity", mul(a, pow(a, I(-1))), id);
        same("a / a = identity", div(a, a), id);
        same("a / b = a pow(b, -1)", div(a, b), mul(a, pow(b, I(-1))));
        same("flip is an involution", flip(flip(a)), a);
        same("flip is multiplicative", flip(mul(a, b)), mul(flip(a), flip(b)));
        same("flip(pow(a, alpha)) = pow(flip(a), alpha)", flip(pow(a, alpha)), pow(flip(a), alpha));
        same("pow(pow(a, alpha), beta) = pow(a, alpha beta)", pow(pow(a, alpha), beta), pow(a, alpha * beta));
        same("pow(a, alpha) pow(a, beta) = pow(a, alpha + beta)", mul(pow(a, alpha), pow(a, beta)), pow(a, alpha + beta));
        same("star is an involution", star_triple(star_triple(a)), a);
        if (i < 3) {
            SymTriple st = star_triple(a);
            for (Family f : kFamilies)
                for (int n = 1; n <= 10; ++n) {
                    const FieldElement& want = f == Family::e ? st.e(n) : f == Family::h ? st.h(n) : st.p(n);
                    r.check(std::string("star by De Moivre sum, family ") + family_name(f), n, star_direct(a, f, n), want);
                    r.check(std::string("star by power formula, family ") + family_name(f), n, star_power_formula(a, f, n), want);
                }
        }
    }
    // Closure of a seed series under powers and star, as triples and as series.
    for (const auto& [name, rho] : seeds(N)) {
        for (int i = 0; i < 3; ++i) {
            FieldElement al = Q(s.nonzero_rational(5, 3)), be = Q(s.nonzero_rational(5, 3));
            auto Qp = [&](const FieldElement& a, const FieldElement& b) { return catalog::q_pow({rho, a, N}, b); };
            std::string tag = name + " alpha=" + al.to_string() + " beta=" + be.to_string();
            r.check("rho = Q_0 [" + tag + "]", i, catalog::general_series({rho, I(0), N}), rho);
            r.check("rho^beta = Q_0^beta [" + tag + "]", i, pow_general(rho, be), Qp(I(0), be));
            r.check("rho* = Q_{-1}^{-1} [" + tag + "]", i, star(rho), Qp(I(-1), I(-1)));
            r.check("(rho^beta)* = Q_{-beta}^{-beta} [" + tag + "]", i, star(pow_general(rho, be)), Qp(-be, -be));
            r.check("(((rho^beta)*)^alpha)* = Q_{beta(alpha-1)}^{beta alpha} [" + tag + "]", i,
                    star(pow_general(star(pow_general(rho, be)), al)), Qp(be * (al - I(1)), be * al));
            r.check("(Q_alpha^beta)* = Q_{alpha-beta}^{-beta} [" + tag + "]", i, star(Qp(al, be)), Qp(al - be, -be));
            SymTriple T = SymTriple::from_series(Family::h, rho);
            r.check_true("star of the powered triple is the general triple [" + tag + "]", i,
                         star_triple(pow(T, be)) == SymTriple::from_series(Family::h, Qp(-be, -be)));
        }
    }
}

}  // namespace symtriple::verify
