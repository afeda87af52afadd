#include <algorithm>
#include <cmath>
#include <sstream>

#include "symtriple/catalog.hpp"

namespace symtriple::catalog {

namespace {

long parse_long(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(ErrorKind::BadParams, "bad integer in " + what + ": '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

void require_nonneg(int max_n) {
    if (max_n < 0) throw Error(ErrorKind::BadParams, "negative length");
}

// Multiplies a by (1 + sign q^j) (times > 0) or divides by it (times < 0), in place.
void apply_factor(std::vector<Integer>& a, long j, long sign, long times) {
    const long n = static_cast<long>(a.size()) - 1;
    if (j > n) return;
    for (long t = 0; t < std::abs(times); ++t) {
        if (times > 0) {
            for (long i = n; i >= j; --i) a[static_cast<std::size_t>(i)] += sign * a[static_cast<std::size_t>(i - j)];
        } else {
            for (long i = j; i <= n; ++i) a[static_cast<std::size_t>(i)] -= sign * a[static_cast<std::size_t>(i - j)];
        }
    }
}

std::vector<Integer> unit_series(int max_n) {
    std::vector<Integer> a(static_cast<std::size_t>(max_n) + 1, 0);
    a[0] = 1;
    return a;
}

std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> c(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size() && j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

std::vector<Integer> representation_power(const std::vector<Integer>& base, long r) {
    if (r < 0) throw Error(ErrorKind::BadParams, "representation counts need r >= 0");
    std::vector<Integer> acc = unit_series(static_cast<int>(base.size()) - 1);
    for (long i = 0; i < r; ++i) acc = convolve(acc, base);
    return acc;
}

}  // namespace

// ---- IntSet ----

IntSet IntSet::multiples(long m) {
    if (m < 1) throw Error(ErrorKind::BadParams, "multiples need m >= 1");
    IntSet s(Kind::multiples);
    s.m_ = m;
    return s;
}

IntSet IntSet::non_multiples(long m) {
    if (m < 1) throw Error(ErrorKind::BadParams, "non_multiples need m >= 1");
    IntSet s(Kind::non_multiples);
    s.m_ = m;
    return s;
}

IntSet IntSet::residue(long r, long m) {
    if (m < 1) throw Error(ErrorKind::BadParams, "residue classes need m >= 1");
    IntSet s(Kind::residue);
    s.m_ = m;
    s.r_ = ((r % m) + m) % m;
    return s;
}

IntSet IntSet::non_residue(long r, long m) {
    IntSet s = residue(r, m);
    s.kind_ = Kind::non_residue;
    return s;
}

IntSet IntSet::finite(std::vector<long> members) {
    for (long j : members)
        if (j < 1) throw Error(ErrorKind::BadParams, "set members must be positive");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    IntSet s(Kind::finite);
    s.members_ = std::move(members);
    return s;
}

IntSet IntSet::parse(const std::string& text) {
    auto parts = split(text, ':');
    if (parts.empty()) throw Error(ErrorKind::BadParams, "empty set descriptor");
    const std::string& head = parts[0];
    auto arg = [&](std::size_t i) {
        if (i >= parts.size()) throw Error(ErrorKind::BadParams, "set descriptor '" + text + "' is missing an argument");
        return parse_long(parts[i], "set descriptor");
    };
    const std::map<std::string, std::size_t> arity{{"all", 1}, {"odd", 1}, {"multiples", 2}, {"non_multiples", 2},
                                                   {"residue", 3}, {"non_residue", 3}, {"finite", 2}};
    auto it = arity.find(head);
    if (it == arity.end()) throw Error(ErrorKind::BadParams, "unknown set descriptor '" + text + "'");
    if (parts.size() != it->second) throw Error(ErrorKind::BadParams, "set descriptor '" + text + "' has the wrong number of arguments");
    if (head == "all") return all();
    if (head == "odd") return odd();
    if (head == "multiples") return multiples(arg(1));
    if (head == "non_multiples") return non_multiples(arg(1));
    if (head == "residue") return residue(arg(1), arg(2));
    if (head == "non_residue") return non_residue(arg(1), arg(2));
    std::vector<long> members;
    for (const auto& item : split(parts[1], ',')) members.push_back(parse_long(item, "finite set"));
    return finite(std::move(members));
}

bool IntSet::contains(long j) const {
    if (j < 1) return false;
    switch (kind_) {
        case Kind::all: return true;
        case Kind::multiples: return j % m_ == 0;
        case Kind::non_multiples: return j % m_ != 0;
        case Kind::odd: return j % 2 == 1;
        case Kind::residue: return j % m_ == r_;
        case Kind::non_residue: return j % m_ != r_;
        case Kind::finite: return std::binary_search(members_.begin(), members_.end(), j);
    }
    return false;
}

std::string IntSet::to_string() const {
    switch (kind_) {
        case Kind::all: return "all";
        case Kind::odd: return "odd";
        case Kind::multiples: return "multiples:" + std::to_string(m_);
        case Kind::non_multiples: return "non_multiples:" + std::to_string(m_);
        case Kind::residue: return "residue:" + std::to_string(r_) + ":" + std::to_string(m_);
        case Kind::non_residue: return "non_residue:" + std::to_string(r_) + ":" + std::to_string(m_);
        case Kind::finite: {
            std::string s = "finite:";
            for (std::size_t i = 0; i < members_.size(); ++i) s += (i ? "," : "") + std::to_string(members_[i]);
            return s;
        }
    }
    return "";
}

// ---- divisor sums and products ----

Integer sigma_S(const IntSet& S, long m) {
    if (m < 1) throw Error(ErrorKind::BadParams, "divisor sums need m >= 1");
    Integer total = 0;
    for (long d = 1; d * d <= m; ++d) {
        if (m % d) continue;
        if (S.contains(d)) total += d;
        long e = m / d;
        if (e != d && S.contains(e)) total += e;
    }
    return total;
}

Integer sigma(long m) { return sigma_S(IntSet::all(), m); }

Integer omega(long r, long m) { return sigma_S(IntSet::non_multiples(r), m); }

std::vector<Integer> partition_counts(const IntSet& S, long r, int max_n) {
    require_nonneg(max_n);
    std::vector<Integer> a = unit_series(max_n);
    for (long j = 1; j <= max_n; ++j)
        if (S.contains(j)) apply_factor(a, j, -1, -r);
    return a;
}

Integer pentagonal_c(long m) {
    if (m < 0) return 0;
    // m = r(3r - 1)/2 for r in Z; solve 24m + 1 = (6r - 1)^2.
    long s = std::lround(std::sqrt(static_cast<double>(24 * m + 1)));
    for (long c = s - 1; c <= s + 1; ++c) {
        if (c <= 0 || c * c != 24 * m + 1) continue;
        // 6r - 1 = +-c
        if ((c + 1) % 6 == 0) return ((c + 1) / 6) % 2 ? -1 : 1;
        if ((1 - c) % 6 == 0) return (((c - 1) / 6) % 2) ? -1 : 1;
    }
    return 0;
}

Integer jacobi_d(long m) {
    if (m < 0) return 0;
    // m = r(r + 1)/2 with r >= 0: 8m + 1 = (2r + 1)^2.
    long s = std::lround(std::sqrt(static_cast<double>(8 * m + 1)));
    for (long c = s - 1; c <= s + 1; ++c) {
        if (c > 0 && c * c == 8 * m + 1) {
            long r = (c - 1) / 2;
            return (r % 2 ? -1 : 1) * (2 * r + 1);
        }
    }
    return 0;
}

std::vector<Integer> squares_count(long r, int max_n) {
    require_nonneg(max_n);
    std::vector<Integer> base(static_cast<std::size_t>(max_n) + 1, 0);
    for (long x = -max_n; x <= max_n; ++x)
        if (x * x <= max_n) base[static_cast<std::size_t>(x * x)] += 1;
    return representation_power(base, r);
}

std::vector<Integer> triangular_count(long r, int max_n) {
    require_nonneg(max_n);
    std::vector<Integer> base(static_cast<std::size_t>(max_n) + 1, 0);
    for (long x = 0; x * (x + 1) / 2 <= max_n; ++x) base[static_cast<std::size_t>(x * (x + 1) / 2)] += 1;
    return representation_power(base, r);
}

std::vector<Integer> overpartitions(long r, int max_n) {
    require_nonneg(max_n);
    std::vector<Integer> a = unit_series(max_n);
    for (long j = 1; j <= max_n; ++j) {
        apply_factor(a, j, 1, r);
        apply_factor(a, j, -1, -r);
    }
    return a;
}

std::vector<Integer> mod5_f(int max_n) {
    require_nonneg(max_n);
    std::vector<Integer> d(static_cast<std::size_t>(max_n) + 1), p5(static_cast<std::size_t>(max_n) + 1, 0);
    for (int i = 0; i <= max_n; ++i) d[static_cast<std::size_t>(i)] = jacobi_d(i);
    std::vector<Integer> p = partition_counts(IntSet::all(), 5, max_n / 5);
    for (int k = 0; 5 * k <= max_n; ++k) p5[static_cast<std::size_t>(5 * k)] = p[static_cast<std::size_t>(k)];
    return convolve(convolve(d, d), p5);
}

// ---- classical numbers ----

namespace {

std::vector<std::vector<Integer>> stirling_table(long n, bool cycle) {
    std::vector<std::vector<Integer>> t(static_cast<std::size_t>(n) + 1, std::vector<Integer>(static_cast<std::size_t>(n) + 1, 0));
    t[0][0] = 1;
    for (long i = 1; i <= n; ++i)
        for (long k = 1; k <= i; ++k) {
            Integer mult = cycle ? Integer(i - 1) : Integer(k);
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                mult * t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)] + t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)];
        }
    return t;
}

}  // namespace

Integer stirling_cycle(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return stirling_table(n, true)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Integer stirling_subset(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return stirling_table(n, false)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::vector<Rational> bernoulli_numbers(int max_n) {
    require_nonneg(max_n);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
    std::vector<Rational> B(static_cast<std::size_t>(max_n) + 1);
    B[0] = 1;
    for (int m = 1; m <= max_n; ++m) {
        Rational s = 0;
        for (int j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * B[static_cast<std::size_t>(j)];
        B[static_cast<std::size_t>(m)] = -s / Rational(m + 1);
    }
    return B;
}

std::vector<FieldElement> bernoulli_polynomials(const FieldElement& x, int max_n) {
    auto B = bernoulli_numbers(max_n);
    std::vector<FieldElement> out;
    for (int k = 0; k <= max_n; ++k) {
        FieldElement s;
        for (int j = 0; j <= k; ++j) s += FieldElement(Rational(binomial(k, j)) * B[static_cast<std::size_t>(j)]) * x.pow(k - j);
        out.push_back(s);
    }
    return out;
}

std::vector<Rational> cauchy_minus(int max_n) {
    require_nonneg(max_n);
    auto t = stirling_table(max_n, true);
    std::vector<Rational> out;
    for (int n = 0; n <= max_n; ++n) {
        Rational s = 0;
        for (int k = 0; k <= n; ++k)
            s += Rational((n - k) % 2 ? -1 : 1) * Rational(t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]) / Rational(k + 1);
        out.push_back(s);
    }
    return out;
}

std::vector<Rational> cauchy_plus(int max_n) {
    require_nonneg(max_n);
    auto t = stirling_table(max_n, true);
    std::vector<Rational> out;
    for (int n = 0; n <= max_n; ++n) {
        Rational s = 0;
        for (int k = 0; k <= n; ++k) s += Rational(t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]) / Rational(k + 1);
        out.push_back(s);
    }
    return out;
}

std::vector<FieldElement> eulerian_polynomials(const FieldElement& x, int max_n) {
    require_nonneg(max_n);
    auto t = stirling_table(max_n, false);
    std::vector<FieldElement> out;
    FieldElement xm1 = x - FieldElement(1L);
    for (int k = 0; k <= max_n; ++k) {
        FieldElement s;
        for (int j = 0; j <= k; ++j)
            s += xm1.pow(k - j) * FieldElement(Rational(factorial(j) * t[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]));
        out.push_back(s);
    }
    return out;
}

std::vector<Integer> catalan_numbers(int max_n) {
    require_nonneg(max_n);
    std::vector<Integer> C(static_cast<std::size_t>(max_n) + 1, 0);
    C[0] = 1;
    for (int n = 1; n <= max_n; ++n)
        for (int i = 0; i < n; ++i) C[static_cast<std::size_t>(n)] += C[static_cast<std::size_t>(i)] * C[static_cast<std::size_t>(n - 1 - i)];
    return C;
}

std::vector<FieldElement> hermite_polynomials(const FieldElement& x, int max_n, bool imaginary) {
    require_nonneg(max_n);
    std::vector<FieldElement> H{FieldElement(1L)};
    if (max_n >= 1) H.push_back(FieldElement(2L) * x);
    const long sign = imaginary ? 1 : -1;
    for (int k = 1; k < max_n; ++k)
        H.push_back(FieldElement(2L) * x * H[static_cast<std::size_t>(k)] + FieldElement(sign * 2L * k) * H[static_cast<std::size_t>(k - 1)]);
    return H;
}

namespace {

std::vector<FieldElement> three_term(const FieldElement& a0, const FieldElement& a1, const FieldElement& alpha, const FieldElement& beta, int max_n) {
    require_nonneg(max_n);
    std::vector<FieldElement> v{a0};
    if (max_n >= 1) v.push_back(a1);
    for (int n = 1; n < max_n; ++n) v.push_back(alpha * v[static_cast<std::size_t>(n)] - beta * v[static_cast<std::size_t>(n - 1)]);
    return v;
}

}  // namespace

std::vector<FieldElement> chebyshev_T(const FieldElement& x, int max_n) {
    return three_term(FieldElement(1L), x, FieldElement(2L) * x, FieldElement(1L), max_n);
}

std::vector<FieldElement> chebyshev_U(const FieldElement& x, int max_n) {
    return three_term(FieldElement(1L), FieldElement(2L) * x, FieldElement(2L) * x, FieldElement(1L), max_n);
}

std::vector<FieldElement> lucas_h(const FieldElement& alpha, const FieldElement& beta, int max_n) {
    return three_term(FieldElement(1L), alpha, alpha, beta, max_n);
}

std::vector<FieldElement> lucas_p(const FieldElement& alpha, const FieldElement& beta, int max_n) {
    return three_term(FieldElement(2L), alpha, alpha, beta, max_n);
}

std::vector<Integer> alternating_permutations(int max_n) {
    require_nonneg(max_n);
    // Seidel-Entringer boustrophedon triangle; the last entry of row n is U_n.
    std::vector<Integer> out{1};
    std::vector<Integer> row{1};
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Integer> next(static_cast<std::size_t>(n) + 1, 0);
        for (int k = 1; k <= n; ++k) next[static_cast<std::size_t>(k)] = next[static_cast<std::size_t>(k - 1)] + row[static_cast<std::size_t>(n - k)];
        out.push_back(next[static_cast<std::size_t>(n)]);
        row = std::move(next);
    }
    return out;
}

Rational harmonic_number(long n, long r) {
    Rational s = 0;
    for (long j = 1; j <= n; ++j) s += power(Rational(j), -r);
    return s;
}

FieldElement q_pochhammer(const FieldElement& a, const FieldElement& q, int n) {
    FieldElement prod(1L), qj(1L);
    for (int j = 0; j < n; ++j) {
        prod *= FieldElement(1L) - a * qj;
        qj *= q;
    }
    return prod;
}

FieldElement q_binomial(const FieldElement& q, int n, int k) {
    if (k < 0 || n < 0 || k > n) return FieldElement();
    std::vector<FieldElement> row{FieldElement(1L)};
    for (int m = 1; m <= n; ++m) {
        std::vector<FieldElement> next(static_cast<std::size_t>(m) + 1);
        for (int j = 0; j <= m; ++j) {
            FieldElement v;
            if (j >= 1) v += row[static_cast<std::size_t>(j - 1)];
            if (j < m) v += q.pow(j) * row[static_cast<std::size_t>(j)];
            next[static_cast<std::size_t>(j)] = v;
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

}  // namespace symtriple::catalog
