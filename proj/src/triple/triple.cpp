#include "symtriple/triple.hpp"

#include "symtriple/demoivre.hpp"

namespace symtriple {

namespace {

FieldElement integer(long n) { return FieldElement(n); }
FieldElement rat(long n, long d) { return FieldElement(make_rational(n, d)); }

IdentityCheck compare_series(const std::string& identity, const Series& lhs, const Series& rhs) {
    for (int n = 0; n <= lhs.order(); ++n)
        if (auto f = compare(identity, n, lhs[n], rhs[n])) return f;
    return std::nullopt;
}

Series p_from_h(const Series& H) { return derivative(H) * inverse(H.truncated(H.order() - 1)); }

// Coefficients 1..N of a family as a Series of order N-1 (index i holds entry i+1).
Series shift_down(const std::vector<FieldElement>& c) { return Series(c); }

void require_positive_order(int order) {
    if (order < 1) throw Error(ErrorKind::BadParams, "triple order must be at least 1");
}

std::vector<FieldElement> bernoulli_over_factorial(int n) {
    Series ex = Series::from_function(n, [](int k) { return FieldElement(Rational(1) / Rational(factorial(k + 1))); });
    return inverse(ex).coeffs();
}

}  // namespace

IdentityCheck check_triple(const Series& E, const Series& H, const Series& P) {
    const int N = E.order();
    if (N < 1) return IdentityFailure{"order >= 1", N, std::to_string(N), "1"};
    if (H.order() != N || P.order() != N - 1)
        return IdentityFailure{"orders (N, N, N-1)", N, std::to_string(H.order()), std::to_string(P.order())};
    if (auto f = compare("e_0 = 1", 0, E[0], integer(1))) return f;
    if (auto f = compare("h_0 = 1", 0, H[0], integer(1))) return f;
    if (auto f = compare_series("H(t)E(-t) = 1", H * negate_variable(E), Series::constant(integer(1), N))) return f;
    const Series E1 = E.truncated(N - 1), H1 = H.truncated(N - 1);
    const Series dE = derivative(E), dH = derivative(H);
    if (auto f = compare_series("E(t)P(-t) = E'(t)", E1 * negate_variable(P), dE)) return f;
    if (auto f = compare_series("H(t)P(t) = H'(t)", H1 * P, dH)) return f;
    if (auto f = compare_series("P(t) = E(-t)H'(t)", negate_variable(E1) * dH, P)) return f;
    if (auto f = compare_series("P(t) = E'(-t)H(t)", negate_variable(dE) * H1, P)) return f;
    if (auto f = compare("e_1 = p_1", 1, E[1], P[0])) return f;
    if (auto f = compare("h_1 = p_1", 1, H[1], P[0])) return f;
    return std::nullopt;
}

SymTriple::SymTriple(Series E, Series H, Series P) : E_(std::move(E)), H_(std::move(H)), P_(std::move(P)) {
    if (auto f = check_triple(E_, H_, P_))
        throw Error(ErrorKind::InvalidTriple, f->identity + " fails at index " + std::to_string(f->index) + ": " + f->lhs + " vs " + f->rhs);
}

SymTriple SymTriple::identity(int order) {
    require_positive_order(order);
    return SymTriple(Series::constant(integer(1), order), Series::constant(integer(1), order), Series(order - 1));
}

SymTriple SymTriple::from_series(Family which, const Series& s) {
    if (which == Family::p) {
        Series H = exp0(antiderivative(s));
        return SymTriple(Derived{}, inverse(negate_variable(H)), H, s);
    }
    require_positive_order(s.order());
    if (!s[0].is_one()) throw Error(ErrorKind::BadConstantTerm, "E and H need constant term 1");
    if (which == Family::h) return SymTriple(Derived{}, inverse(negate_variable(s)), s, p_from_h(s));
    Series H = inverse(negate_variable(s));
    return SymTriple(Derived{}, s, H, p_from_h(H));
}

const FieldElement& SymTriple::p(int k) const {
    if (k < 1 || k > order()) throw Error(ErrorKind::IndexOutOfRange, "p_" + std::to_string(k) + " outside 1.." + std::to_string(order()));
    return P_[k - 1];
}

std::vector<FieldElement> SymTriple::family(Family f, int upto) const {
    if (upto > order()) throw Error(ErrorKind::IndexOutOfRange, "family index beyond triple order");
    std::vector<FieldElement> out;
    for (int k = 1; k <= upto; ++k) out.push_back(f == Family::e ? e(k) : f == Family::h ? h(k) : p(k));
    return out;
}

IdentityCheck check_newton(const SymTriple& t) {
    for (int k = 1; k <= t.order(); ++k) {
        FieldElement rhs, rhs2;
        for (int j = 1; j <= k; ++j) {
            FieldElement sign = integer(j % 2 ? 1 : -1);
            rhs += sign * t.p(j) * t.e(k - j);
            rhs2 += sign * integer(j) * t.e(j) * t.h(k - j);
        }
        if (auto f = compare("k e_k = sum (-1)^{j-1} p_j e_{k-j}", k, integer(k) * t.e(k), rhs)) return f;
        if (auto f = compare("p_k = sum (-1)^{j-1} j e_j h_{k-j}", k, t.p(k), rhs2)) return f;
    }
    return std::nullopt;
}

std::vector<FieldElement> transition(Family src, Family dst, const std::vector<FieldElement>& coeffs, int upto) {
    if (upto < 0) throw Error(ErrorKind::BadParams, "negative transition length");
    if (static_cast<int>(coeffs.size()) < upto)
        throw Error(ErrorKind::InsufficientCoefficients, "transition needs " + std::to_string(upto) + " source coefficients");
    const std::vector<FieldElement> used(coeffs.begin(), coeffs.begin() + upto);
    if (src == dst) return used;
    std::vector<FieldElement> arg = used;
    if (src == Family::p)
        for (int j = 1; j <= upto; ++j) arg[static_cast<std::size_t>(j - 1)] *= rat(1, j);
    DmTable A{DmInput(arg), upto};
    std::vector<FieldElement> out;
    for (int r = 1; r <= upto; ++r) {
        FieldElement sum;
        for (int k = 1; k <= r; ++k) {
            FieldElement w;
            const bool odd_rk = (r - k) % 2 != 0;
            if (src != Family::p && dst != Family::p) {
                w = integer(odd_rk ? -1 : 1);
            } else if (src == Family::p) {
                w = FieldElement(Rational(1) / Rational(factorial(k)));
                if (dst == Family::e && odd_rk) w = -w;
            } else {
                // p_r / r from e: (-1)^{r-k}/k; from h: (-1)^{k-1}/k.
                bool negative = src == Family::e ? odd_rk : (k % 2 == 0);
                w = rat(negative ? -1 : 1, k) * integer(r);
            }
            sum += w * A(r, k);
        }
        out.push_back(sum);
    }
    return out;
}

SymTriple mul(const SymTriple& a, const SymTriple& b) { return SymTriple(a.E() * b.E(), a.H() * b.H(), a.P() + b.P()); }

SymTriple pow(const SymTriple& t, const FieldElement& alpha) {
    if (alpha.is_rational() && alpha.rational().get_den() == 1 && abs(alpha.rational()) <= 64) {
        long k = alpha.rational().get_num().get_si();
        return SymTriple(pow_int(t.E(), k), pow_int(t.H(), k), t.P() * alpha);
    }
    return SymTriple(pow_general(t.E(), alpha), pow_general(t.H(), alpha), t.P() * alpha);
}

SymTriple div(const SymTriple& a, const SymTriple& b) { return mul(a, pow(b, integer(-1))); }

SymTriple flip(const SymTriple& t) { return SymTriple(t.H(), t.E(), negate_variable(t.P())); }

SymTriple substitute(const SymTriple& t, const Series& phi) {
    require_same_order(t.E(), phi);
    const int N = t.order();
    Series E = compose(t.E(), -negate_variable(phi));
    Series H = compose(t.H(), phi);
    Series P = derivative(phi) * compose(t.P(), phi.truncated(N - 1));
    return SymTriple(E, H, P);
}

SymTriple scale(const SymTriple& t, const FieldElement& c) {
    return SymTriple(scale_variable(t.E(), c), scale_variable(t.H(), c), scale_variable(t.P(), c) * c);
}

SymTriple stretch(const SymTriple& t, int m) {
    if (m < 1) throw Error(ErrorKind::BadParams, "stretch factor must be positive");
    const int N = t.order(), M = m * N;
    std::vector<FieldElement> e(static_cast<std::size_t>(M) + 1), h(e.size()), p(static_cast<std::size_t>(M));
    for (int k = 0; k <= N; ++k) {
        const bool negative = (m % 2 == 0) && (k % 2 == 1);
        e[static_cast<std::size_t>(m * k)] = negative ? -t.e(k) : t.e(k);
        h[static_cast<std::size_t>(m * k)] = t.h(k);
        if (k >= 1) p[static_cast<std::size_t>(m * k - 1)] = integer(m) * t.p(k);
    }
    return SymTriple(Series(e), Series(h), Series(p));
}

SymTriple unstretch(const SymTriple& t, int m) {
    if (m < 1) throw Error(ErrorKind::BadParams, "unstretch factor must be positive");
    const int N = t.order();
    for (int k = 1; k <= N; ++k)
        if (k % m != 0 && !t.h(k).is_zero())
            throw Error(ErrorKind::UnstretchPrecondition, "h_" + std::to_string(k) + " is nonzero but not at a multiple of " + std::to_string(m));
    const int M = N / m;
    if (M < 1) throw Error(ErrorKind::UnstretchPrecondition, "triple order below the unstretch factor");
    std::vector<FieldElement> e, h, p;
    for (int k = 0; k <= M; ++k) {
        const bool negative = (m % 2 == 0) && (k % 2 == 1);
        e.push_back(negative ? -t.e(m * k) : t.e(m * k));
        h.push_back(t.h(m * k));
        if (k >= 1) p.push_back(t.p(m * k) * rat(1, m));
    }
    return SymTriple(Series(e), Series(h), Series(p));
}

SymTriple multisect(const SymTriple& t, int m) {
    if (m < 1) throw Error(ErrorKind::BadParams, "multisection factor must be positive");
    std::vector<FieldElement> p;
    for (int k = 1; k <= t.order(); ++k) p.push_back(k % m == 0 ? integer(m) * t.p(k) : FieldElement());
    return SymTriple::from_series(Family::p, shift_down(p));
}

SymTriple star_triple(const SymTriple& t) { return SymTriple::from_series(Family::h, star(t.H())); }

FieldElement star_direct(const SymTriple& t, Family f, int n) {
    if (n < 1 || n > t.order()) throw Error(ErrorKind::IndexOutOfRange, "starred coefficient index outside 1..N");
    if (f == Family::e && n == 1) return star_direct(t, Family::h, 1);
    std::vector<FieldElement> arg = t.family(f, n);
    if (f == Family::p)
        for (int j = 1; j <= n; ++j) arg[static_cast<std::size_t>(j - 1)] *= rat(1, j);
    DmTable A{DmInput(arg), n};
    FieldElement sum;
    for (int k = 0; k <= n; ++k) {
        FieldElement w;
        if (f == Family::e) w = FieldElement(Rational(binomial(n - 1, k)));
        else if (f == Family::h) w = FieldElement(Rational(binomial(-n - 1, k)));
        else w = FieldElement(power(Rational(-n), k) / Rational(factorial(k)));
        sum += w * A(n, k);
    }
    if (f == Family::e) return sum * rat(-1, n - 1);
    if (f == Family::h) return sum * rat(1, n + 1);
    return sum;
}

FieldElement star_power_formula(const SymTriple& t, Family f, int n) {
    if (n < 1 || n > t.order()) throw Error(ErrorKind::IndexOutOfRange, "starred coefficient index outside 1..N");
    if (f == Family::e && n == 1) return star_power_formula(t, Family::h, 1);
    const Series& H = t.H();
    if (f == Family::e) {
        FieldElement v = pow_int(H, -(n - 1))[n] * rat(1, n - 1);
        return n % 2 ? v : -v;
    }
    if (f == Family::h) return pow_int(H, -(n + 1))[n] * rat(1, n + 1);
    return pow_int(H, -n)[n];
}

SymTriple from_roots(const std::vector<FieldElement>& xs, int order) {
    require_positive_order(order);
    Series E = Series::constant(integer(1), order), H = E, P(order - 1);
    for (const auto& x : xs) {
        E = E * Series::from_function(order, [&](int k) { return k == 0 ? integer(1) : k == 1 ? x : FieldElement(); });
        H = H * Series::from_function(order, [&](int k) { return x.pow(k); });
        P = P + Series::from_function(order - 1, [&](int k) { return x.pow(k + 1); });
    }
    return SymTriple(E, H, P);
}

SymTriple pascal_extend(const SymTriple& t, const FieldElement& x) {
    const int N = t.order();
    std::vector<FieldElement> e(static_cast<std::size_t>(N) + 1), h(e.size()), p;
    e[0] = h[0] = integer(1);
    for (int k = 1; k <= N; ++k) {
        e[static_cast<std::size_t>(k)] = t.e(k) + x * t.e(k - 1);
        h[static_cast<std::size_t>(k)] = t.h(k) + x * h[static_cast<std::size_t>(k - 1)];
        p.push_back(t.p(k) + x.pow(k));
    }
    return SymTriple(Series(e), Series(h), Series(p));
}

FieldElement macmahon_S(const SymTriple& t, int k, int r) {
    if (r < 0 || r > k || k > t.order())
        throw Error(ErrorKind::IndexOutOfRange, "S_{k,r} needs 0 <= r <= k <= N");
    FieldElement sum;
    for (int j = r; j <= k; ++j) {
        FieldElement w(Rational(binomial(j, r)));
        sum += ((j - r) % 2 ? -w : w) * t.e(j) * t.h(k - j);
    }
    return sum;
}

Characterization characterize(const SymTriple& t) {
    const int N = t.order();
    Characterization c;
    c.e_equals_h = c.p_even = c.h_equals_p = c.e_equals_p = true;
    for (int k = 1; k <= N; ++k) {
        if (t.e(k) != t.h(k)) c.e_equals_h = false;
        if (k % 2 == 0 && !t.p(k).is_zero()) c.p_even = false;
        if (t.h(k) != t.p(k)) c.h_equals_p = false;
        if (t.e(k) != t.p(k)) c.e_equals_p = false;
    }
    if (c.h_equals_p) {
        c.c_h_equals_p = t.e(1);
        bool ok = true;
        for (int k = 1; k <= N; ++k) {
            if (t.e(k) != (k == 1 ? c.c_h_equals_p : FieldElement())) ok = false;
            if (t.h(k) != c.c_h_equals_p.pow(k) || t.p(k) != c.c_h_equals_p.pow(k)) ok = false;
        }
        c.h_equals_p_closed_form = ok;
    }
    if (c.e_equals_p) {
        c.c_e_equals_p = integer(2) * t.e(1);
        const FieldElement& cc = c.c_e_equals_p;
        std::vector<FieldElement> b = bernoulli_over_factorial(N);
        bool ok = true;
        for (int k = 1; k <= N; ++k) {
            FieldElement ek = cc.pow(k) * b[static_cast<std::size_t>(k)];
            if (k % 2) ek = -ek;
            if (t.e(k) != ek || t.p(k) != ek) ok = false;
            if (t.h(k) != cc.pow(k) * FieldElement(Rational(1) / Rational(factorial(k + 1)))) ok = false;
        }
        c.e_equals_p_closed_form = ok;
    }
    return c;
}

}  // namespace symtriple
