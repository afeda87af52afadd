#include <algorithm>

#include "symtriple/catalog.hpp"

namespace symtriple::catalog {

namespace {

using Vec = std::vector<FieldElement>;

FieldElement F(long v) { return FieldElement(v); }
FieldElement Z(const Integer& v) { return FieldElement(Rational(v)); }
FieldElement fact(long n) { return FieldElement(Rational(factorial(n))); }
long neg1(long n) { return n % 2 ? -1 : 1; }

struct SeqParam {
    std::string name;
    ParamKind kind;
    std::string default_value;
};

class Args {
public:
    Args(const std::string& seq, const std::vector<SeqParam>& decl, const SeqParams& given) {
        for (const auto& [k, v] : given)
            if (std::none_of(decl.begin(), decl.end(), [&](const SeqParam& p) { return p.name == k; }))
                throw Error(ErrorKind::BadParams, seq + " has no parameter '" + k + "'");
        for (const auto& p : decl) {
            auto it = given.find(p.name);
            const std::string& text = it != given.end() ? it->second : p.default_value;
            if (p.kind == ParamKind::set) {
                sets_.emplace(p.name, IntSet::parse(text));
                continue;
            }
            FieldElement v = FieldElement::parse(text);
            if (p.kind == ParamKind::integer && (!v.is_rational() || v.rational().get_den() != 1))
                throw Error(ErrorKind::BadParams, "parameter " + p.name + " must be an integer");
            fields_.emplace(p.name, v);
        }
    }
    const FieldElement& field(const std::string& n) const { return fields_.at(n); }
    long integer(const std::string& n) const { return field(n).rational().get_num().get_si(); }
    long nonneg(const std::string& n) const {
        long v = integer(n);
        if (v < 0) throw Error(ErrorKind::BadParams, "parameter " + n + " must be >= 0");
        return v;
    }
    const IntSet& set(const std::string& n) const { return sets_.at(n); }

private:
    std::map<std::string, FieldElement> fields_;
    std::map<std::string, IntSet> sets_;
};

// Each path returns terms first_index .. first_index + count - 1.
using Path = std::function<Vec(const Args&, int count)>;

struct SeqImpl {
    SequenceEntry info;
    std::vector<SeqParam> params;
    Path oracle;
    Path triple;
};

TripleSpec spec(std::string name, int order, std::map<std::string, FieldElement> params = {}, std::map<std::string, IntSet> sets = {}) {
    return TripleSpec{std::move(name), std::move(params), std::move(sets), std::max(order, 1)};
}

// Coefficients 0..count-1 of one family, with the constant term 1 supplied.
Vec family0(const SymTriple& t, Family f, int count) {
    Vec v;
    for (int k = 0; k < count; ++k) {
        if (k == 0) v.push_back(F(f == Family::p ? 0 : 1));
        else if (f == Family::e) v.push_back(t.e(k));
        else if (f == Family::h) v.push_back(t.h(k));
        else v.push_back(t.p(k));
    }
    return v;
}

Vec integers(const std::vector<Integer>& v, int count, int offset = 0, bool alternate = false) {
    Vec out;
    for (int k = 0; k < count; ++k) out.push_back(Z(v[static_cast<std::size_t>(k + offset)]) * F(alternate ? neg1(k + offset) : 1));
    return out;
}

Vec generate(int count, int first, const std::function<FieldElement(long)>& f) {
    Vec out;
    for (long k = first; k < first + count; ++k) out.push_back(f(k));
    return out;
}

// n! times the coefficients of a family, index 0 through count-1.
Vec egf(const SymTriple& t, Family f, int count) {
    Vec v = family0(t, f, count);
    for (int k = 0; k < count; ++k) v[static_cast<std::size_t>(k)] *= fact(k);
    return v;
}

Vec fields(const Vec& v, int count) { return Vec(v.begin(), v.begin() + count); }

std::vector<SeqImpl> build_sequences() {
    std::vector<SeqImpl> r;
    auto add = [&](std::string name, int first, std::string description, std::vector<SeqParam> params, Path oracle, Path triple) {
        r.push_back(SeqImpl{SequenceEntry{std::move(name), first, std::move(description)}, std::move(params), std::move(oracle), std::move(triple)});
    };
    const auto field = ParamKind::field;
    const auto integer = ParamKind::integer;
    const auto set = ParamKind::set;

    add("sigma", 1, "sum of divisors", {},
        [](const Args&, int n) { return generate(n, 1, [](long m) { return Z(sigma(m)); }); },
        [](const Args&, int n) {
            SymTriple t = make_triple(spec("partition_divisor", n));
            return generate(n, 1, [&](long m) { return t.p(static_cast<int>(m)); });
        });

    add("sigma_S", 1, "sum of the divisors lying in S", {{"S", set, "all"}},
        [](const Args& a, int n) { return generate(n, 1, [&](long m) { return Z(sigma_S(a.set("S"), m)); }); },
        [](const Args& a, int n) {
            SymTriple t = make_triple(spec("partition_divisor", n, {}, {{"S", a.set("S")}}));
            return generate(n, 1, [&](long m) { return t.p(static_cast<int>(m)); });
        });

    add("omega", 1, "sum of the divisors that are not multiples of r", {{"r", integer, "2"}},
        [](const Args& a, int n) {
            long rv = a.integer("r");
            if (rv < 1) throw Error(ErrorKind::BadParams, "omega needs r >= 1");
            return generate(n, 1, [&](long m) { return Z(omega(rv, m)); });
        },
        [](const Args& a, int n) {
            long rv = a.integer("r");
            if (rv < 1) throw Error(ErrorKind::BadParams, "omega needs r >= 1");
            SymTriple all = make_triple(spec("partition_divisor", n));
            SymTriple mult = make_triple(spec("partition_divisor", n, {}, {{"S", IntSet::multiples(rv)}}));
            return generate(n, 1, [&](long m) { return all.p(static_cast<int>(m)) - mult.p(static_cast<int>(m)); });
        });

    add("partitions", 0, "[q^n] prod_{j in S} (1 - q^j)^{-r}", {{"S", set, "all"}, {"r", integer, "1"}},
        [](const Args& a, int n) { return integers(partition_counts(a.set("S"), a.integer("r"), n), n); },
        [](const Args& a, int n) {
            return family0(make_triple(spec("partition_divisor", n, {{"r", a.field("r")}}, {{"S", a.set("S")}})), Family::h, n);
        });

    add("pentagonal_c", 1, "[q^m] prod (1 - q^j)", {},
        [](const Args&, int n) { return generate(n, 1, [](long m) { return Z(pentagonal_c(m)); }); },
        [](const Args&, int n) {
            SymTriple t = make_triple(spec("partition_divisor", n));
            return generate(n, 1, [&](long m) { return F(neg1(m)) * t.e(static_cast<int>(m)); });
        });

    add("jacobi_d", 0, "[q^m] prod (1 - q^j)^3", {},
        [](const Args&, int n) { return generate(n, 0, [](long m) { return Z(jacobi_d(m)); }); },
        [](const Args&, int n) {
            Vec v = family0(make_triple(spec("partition_divisor", n, {{"r", F(3)}})), Family::e, n);
            for (int m = 0; m < n; ++m) v[static_cast<std::size_t>(m)] *= F(neg1(m));
            return v;
        });

    add("squares_N", 0, "representations as a sum of r squares", {{"r", integer, "2"}},
        [](const Args& a, int n) { return integers(squares_count(a.nonneg("r"), n), n); },
        [](const Args& a, int n) { return family0(make_triple(spec("squares", n, {{"r", a.field("r")}})), Family::e, n); });

    add("triangular_Delta", 0, "representations as a sum of r triangular numbers", {{"r", integer, "1"}},
        [](const Args& a, int n) { return integers(triangular_count(a.nonneg("r"), n), n); },
        [](const Args& a, int n) { return family0(make_triple(spec("triangular", n, {{"r", a.field("r")}})), Family::e, n); });

    add("overpartitions", 0, "[q^n] prod ((1 + q^j)/(1 - q^j))^r", {{"r", integer, "1"}},
        [](const Args& a, int n) { return integers(overpartitions(a.nonneg("r"), n), n); },
        [](const Args& a, int n) { return family0(make_triple(spec("squares", n, {{"r", a.field("r")}})), Family::h, n); });

    add("mod5_f", 0, "[q^n] (q;q)^6/(q^5;q^5)^5", {},
        [](const Args&, int n) { return integers(mod5_f(n), n); },
        [](const Args&, int n) {
            Vec v = family0(make_triple(spec("mod5_partition", n)), Family::e, n);
            for (int m = 0; m < n; ++m) v[static_cast<std::size_t>(m)] *= F(neg1(m));
            return v;
        });

    add("stirling_cycle", 0, "row n of the cycle numbers [n, k], k = 0, 1, ...", {{"n", integer, "5"}},
        [](const Args& a, int n) { return generate(n, 0, [&](long k) { return Z(stirling_cycle(a.nonneg("n"), k)); }); },
        [](const Args& a, int count) {
            long n = a.nonneg("n");
            if (n == 0) return generate(count, 0, [](long k) { return F(k == 0 ? 1 : 0); });
            // roots 1..n-1 give e_j = [n, n - j]
            SymTriple t = make_triple(spec("stirling", static_cast<int>(n), {{"n", F(n - 1)}}));
            return generate(count, 0, [&](long k) { return k > n ? FieldElement() : k == n ? F(1) : t.e(static_cast<int>(n - k)); });
        });

    add("stirling_subset", 0, "row n of the subset numbers {n, k}, k = 0, 1, ...", {{"n", integer, "5"}},
        [](const Args& a, int n) { return generate(n, 0, [&](long k) { return Z(stirling_subset(a.nonneg("n"), k)); }); },
        [](const Args& a, int count) {
            long n = a.nonneg("n");
            return generate(count, 0, [&](long k) {
                if (k > n) return FieldElement();
                if (k == n) return F(1);
                if (k == 0) return FieldElement();
                // roots 1..k give h_j = {k + j, k}
                return make_triple(spec("stirling", static_cast<int>(n - k), {{"n", F(k)}})).h(static_cast<int>(n - k));
            });
        });

    add("bernoulli", 0, "Bernoulli numbers with B_1 = -1/2", {},
        [](const Args&, int n) {
            Vec v;
            for (const auto& b : bernoulli_numbers(n)) v.push_back(FieldElement(b));
            return fields(v, n);
        },
        [](const Args&, int n) { return egf(make_triple(spec("bernoulli", n)), Family::h, n); });

    add("bernoulli_poly", 0, "Bernoulli polynomials B_n(x)", {{"x", field, "x"}},
        [](const Args& a, int n) { return fields(bernoulli_polynomials(a.field("x"), n), n); },
        [](const Args& a, int n) { return egf(make_triple(spec("bernoulli_poly", n, {{"x", a.field("x")}})), Family::h, n); });

    add("cauchy_minus", 0, "integral over [0, 1] of the falling factorial", {},
        [](const Args&, int n) {
            Vec v;
            for (const auto& c : cauchy_minus(n)) v.push_back(FieldElement(c));
            return fields(v, n);
        },
        [](const Args&, int n) { return egf(make_triple(spec("logarithm", n)), Family::e, n); });

    add("cauchy_plus", 0, "integral over [0, 1] of the rising factorial", {},
        [](const Args&, int n) {
            Vec v;
            for (const auto& c : cauchy_plus(n)) v.push_back(FieldElement(c));
            return fields(v, n);
        },
        [](const Args&, int n) {
            Vec v = egf(make_triple(spec("logarithm", n)), Family::p, n);
            if (n > 0) v[0] = F(1);
            return v;
        });

    add("eulerian", 0, "Eulerian polynomials A_n(x)", {{"x", field, "x"}},
        [](const Args& a, int n) { return fields(eulerian_polynomials(a.field("x"), n), n); },
        [](const Args& a, int n) { return egf(make_triple(spec("eulerian", n, {{"x", a.field("x")}})), Family::h, n); });

    add("catalan", 0, "Catalan numbers", {},
        [](const Args&, int n) { return integers(catalan_numbers(n), n); },
        [](const Args&, int n) { return family0(make_triple(spec("general_binomial", n, {{"alpha", F(2)}, {"beta", F(1)}})), Family::h, n); });

    add("hermite", 0, "physicists' Hermite polynomials H_n(x)", {{"x", field, "x"}},
        [](const Args& a, int n) { return fields(hermite_polynomials(a.field("x"), n), n); },
        [](const Args& a, int n) { return egf(make_triple(spec("hermite", n, {{"x", a.field("x")}})), Family::h, n); });

    add("chebyshev_T", 0, "Chebyshev polynomials of the first kind", {{"x", field, "x"}},
        [](const Args& a, int n) { return fields(chebyshev_T(a.field("x"), n), n); },
        [](const Args& a, int n) {
            Vec v = family0(make_triple(spec("chebyshev", n, {{"x", a.field("x")}})), Family::p, n);
            for (auto& c : v) c /= F(2);
            if (n > 0) v[0] = F(1);
            return v;
        });

    add("chebyshev_U", 0, "Chebyshev polynomials of the second kind", {{"x", field, "x"}},
        [](const Args& a, int n) { return fields(chebyshev_U(a.field("x"), n), n); },
        [](const Args& a, int n) { return family0(make_triple(spec("chebyshev", n, {{"x", a.field("x")}})), Family::h, n); });

    add("lucas_h", 0, "h_{n+1} = alpha h_n - beta h_{n-1}, h_0 = 1, h_1 = alpha", {{"alpha", field, "alpha"}, {"beta", field, "3"}},
        [](const Args& a, int n) { return fields(lucas_h(a.field("alpha"), a.field("beta"), n), n); },
        [](const Args& a, int n) {
            return family0(make_triple(spec("lucas", n, {{"alpha", a.field("alpha")}, {"beta", a.field("beta")}})), Family::h, n);
        });

    add("lucas_p", 0, "p_{n+1} = alpha p_n - beta p_{n-1}, p_0 = 2, p_1 = alpha", {{"alpha", field, "alpha"}, {"beta", field, "3"}},
        [](const Args& a, int n) { return fields(lucas_p(a.field("alpha"), a.field("beta"), n), n); },
        [](const Args& a, int n) {
            Vec v = family0(make_triple(spec("lucas", n, {{"alpha", a.field("alpha")}, {"beta", a.field("beta")}})), Family::p, n);
            if (n > 0) v[0] = F(2);
            return v;
        });

    add("secant", 0, "U_{2k}: alternating permutations of even length", {},
        [](const Args&, int n) {
            auto U = alternating_permutations(2 * n);
            return generate(n, 0, [&](long k) { return Z(U[static_cast<std::size_t>(2 * k)]); });
        },
        [](const Args&, int n) {
            SymTriple t = make_triple(spec("cosine", 2 * n));
            return generate(n, 0, [&](long k) { return k == 0 ? F(1) : fact(2 * k) * t.e(static_cast<int>(2 * k)); });
        });

    add("tangent_numbers", 0, "U_{2k+1}: alternating permutations of odd length", {},
        [](const Args&, int n) {
            auto U = alternating_permutations(2 * n + 1);
            return generate(n, 0, [&](long k) { return Z(U[static_cast<std::size_t>(2 * k + 1)]); });
        },
        [](const Args&, int n) {
            SymTriple t = make_triple(spec("tangent", 2 * n));
            return generate(n, 0, [&](long k) { return k == 0 ? F(1) : fact(2 * k + 1) * t.h(static_cast<int>(2 * k)); });
        });

    add("harmonic", 1, "generalized harmonic numbers H_n^{(r)}", {{"r", integer, "1"}},
        [](const Args& a, int n) { return generate(n, 1, [&](long m) { return FieldElement(harmonic_number(m, a.integer("r"))); }); },
        [](const Args& a, int n) {
            long rv = a.integer("r");
            if (rv < 1) throw Error(ErrorKind::BadParams, "the triple path needs r >= 1");
            return generate(n, 1, [&](long m) {
                return make_triple(spec("harmonic", static_cast<int>(rv), {{"n", F(m)}})).p(static_cast<int>(rv));
            });
        });

    return r;
}

const std::vector<SeqImpl>& impls() {
    static const std::vector<SeqImpl> r = build_sequences();
    return r;
}

const SeqImpl& find(const std::string& name) {
    for (const auto& s : impls())
        if (s.info.name == name) return s;
    throw Error(ErrorKind::UnknownSequence, "no sequence named '" + name + "'");
}

Vec run(const std::string& name, const SeqParams& params, int count, bool oracle) {
    const SeqImpl& s = find(name);
    if (count < 0) throw Error(ErrorKind::BadParams, "count must be >= 0");
    Args args(name, s.params, params);
    if (count == 0) return {};
    return oracle ? s.oracle(args, count) : s.triple(args, count);
}

}  // namespace

const std::vector<SequenceEntry>& sequences() {
    static const std::vector<SequenceEntry> r = [] {
        std::vector<SequenceEntry> out;
        for (const auto& s : impls()) out.push_back(s.info);
        return out;
    }();
    return r;
}

std::vector<FieldElement> seq(const std::string& name, const SeqParams& params, int count) { return run(name, params, count, true); }

std::vector<FieldElement> seq_from_triple(const std::string& name, const SeqParams& params, int count) {
    return run(name, params, count, false);
}

}  // namespace symtriple::catalog
