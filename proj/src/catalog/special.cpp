#include <algorithm>

#include "symtriple/catalog.hpp"
#include "symtriple/demoivre.hpp"

namespace symtriple::catalog {

// ---- harmonic multiset numbers ----

HarmonicMultisetTable::HarmonicMultisetTable(long n_lo, long n_hi, long k_lo, long k_hi)
    : n_lo_(n_lo), n_hi_(n_hi), k_lo_(k_lo), k_hi_(k_hi) {
    if (n_lo > n_hi || k_lo > k_hi) throw Error(ErrorKind::BadParams, "empty harmonic multiset window");
    const long top = std::max(n_hi, 0L), bottom = std::min(n_lo, -1L);
    // Row n holds columns c_lo(n)..c_hi; rows below -1 need one extra column on the left per step.
    const long c_hi = std::max(k_hi, 1L);
    auto c_lo = [&](long n) { return std::min(k_lo, -1L) - (n < 0 ? n - bottom : 0); };
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(top - bottom + 1));
    auto row = [&](long n) -> std::vector<Rational>& { return rows[static_cast<std::size_t>(n - bottom)]; };
    auto cell = [&](long n, long k) -> Rational& { return row(n)[static_cast<std::size_t>(k - c_lo(n))]; };
    for (long n = bottom; n <= top; ++n) row(n).assign(static_cast<std::size_t>(c_hi - c_lo(n) + 1), Rational(0));

    // Seed row -1 and the all-zero row 0.
    for (long k = c_lo(-1); k <= c_hi; ++k) cell(-1, k) = k == 1 ? 1 : 0;
    // Upward: S(n, -1) = delta_{n,1}; S(n, k) = S(n-1, k) + S(n, k-1)/n for k >= 0;
    // S(n, k-1) = n (S(n, k) - S(n-1, k)) for k <= -1.
    for (long n = 1; n <= top; ++n) {
        cell(n, -1) = n == 1 ? 1 : 0;
        for (long k = 0; k <= c_hi; ++k) cell(n, k) = cell(n - 1, k) + cell(n, k - 1) / Rational(n);
        for (long k = -1; k - 1 >= c_lo(n); --k) cell(n, k - 1) = Rational(n) * (cell(n, k) - cell(n - 1, k));
    }
    // Downward: S(n-1, k) = S(n, k) - S(n, k-1)/n for n <= -1.
    for (long n = -1; n - 1 >= bottom; --n)
        for (long k = c_lo(n - 1); k <= c_hi; ++k) cell(n - 1, k) = cell(n, k) - cell(n, k - 1) / Rational(n);

    for (long n = n_lo; n <= n_hi; ++n) {
        std::vector<Rational> r;
        for (long k = k_lo; k <= k_hi; ++k) r.push_back(cell(n, k));
        rows_.push_back(std::move(r));
    }
}

const Rational& HarmonicMultisetTable::at(long n, long k) const {
    if (n < n_lo_ || n > n_hi_ || k < k_lo_ || k > k_hi_) throw Error(ErrorKind::IndexOutOfRange, "cell outside the harmonic multiset window");
    return rows_[static_cast<std::size_t>(n - n_lo_)][static_cast<std::size_t>(k - k_lo_)];
}

Rational stirc(long n, long k) { return HarmonicMultisetTable(n, n, k, k).at(n, k); }

Rational stirc_closed(long n, long k) {
    if (n < 0) throw Error(ErrorKind::BadParams, "the binomial sum needs n >= 0");
    Rational s = 0;
    for (long j = 1; j <= n; ++j) s += Rational(j % 2 ? 1 : -1) * Rational(binomial(n, j)) * power(Rational(j), -k);
    return s;
}

// ---- Norlund polynomials ----

UniPoly norlund(int n, const std::string& symbol) {
    if (n < 0) throw Error(ErrorKind::BadParams, "Norlund index must be >= 0");
    std::vector<FieldElement> a;
    for (int j = 1; j <= std::max(n, 1); ++j) a.push_back(FieldElement(Rational(1) / Rational(factorial(j + 1))));
    DmTable A{DmInput(a), n};
    FieldElement z = FieldElement::symbol(symbol);
    FieldElement s;
    for (int k = 0; k <= n; ++k) s += binom_general(-z, k) * A(n, k);
    s *= FieldElement(Rational(factorial(n)));
    if (s.is_rational()) return UniPoly::constant(symbol, s.rational());
    return s.numerator();
}

// ---- Bell partition polynomials ----

namespace {

void require_factors(const std::vector<BellFactor>& factors) {
    if (factors.empty()) throw Error(ErrorKind::BadParams, "Bell products need at least one factor");
}

}  // namespace

FieldElement bell_small_psi(const std::vector<BellFactor>& factors, long m) {
    require_factors(factors);
    if (m < 1) throw Error(ErrorKind::BadParams, "psi(m) needs m >= 1");
    FieldElement total;
    for (const auto& f : factors)
        for (long d = 1; d <= m; ++d)
            if (m % d == 0 && f.set.contains(d)) total -= f.a * FieldElement(d) * f.z.pow(m / d);
    return total;
}

FieldElement bell_psi(const std::vector<BellFactor>& factors, int n) {
    require_factors(factors);
    if (n < 0) throw Error(ErrorKind::BadParams, "Psi(n) needs n >= 0");
    if (n == 0) return FieldElement(1L);
    std::vector<FieldElement> a;
    for (long m = 1; m <= n; ++m) a.push_back(bell_small_psi(factors, m) / FieldElement(m));
    DmTable A{DmInput(a), n};
    FieldElement s;
    for (int k = 0; k <= n; ++k) s += A(n, k) / FieldElement(Rational(factorial(k)));
    return s;
}

FieldElement bell_product_coeff(const std::vector<BellFactor>& factors, int n) {
    require_factors(factors);
    if (n < 0) throw Error(ErrorKind::BadParams, "coefficient index must be >= 0");
    Series prod = Series::constant(FieldElement(1L), n);
    for (const auto& f : factors)
        for (long c = 1; c <= n; ++c) {
            if (!f.set.contains(c)) continue;
            Series base = Series::from_function(n, [&](int i) { return i == 0 ? FieldElement(1L) : i == c ? -f.z : FieldElement(); });
            prod *= pow_general(base, f.a);
        }
    return prod[n];
}

// ---- general series ----

namespace {

void require_rho(const Series& rho, int order) {
    if (!rho[0].is_one()) throw Error(ErrorKind::BadConstantTerm, "rho needs constant term 1");
    if (rho.order() < order) throw Error(ErrorKind::OrderMismatch, "rho is known to a lower order than requested");
}

DmTable rho_table(const Series& rho, int order) {
    std::vector<FieldElement> a;
    for (int j = 1; j <= std::max(order, 1); ++j) a.push_back(rho[j]);
    return DmTable(DmInput(a), order);
}

// sum_{k=1}^n (1/k) C(b-1, k-1) A_{n,k}(rho) = D_n(b)/b
FieldElement d_over(const DmTable& A, int n, const FieldElement& b) {
    FieldElement s;
    for (int k = 1; k <= n; ++k) s += binom_general(b - FieldElement(1L), k - 1) * A(n, k) / FieldElement(k);
    return s;
}

}  // namespace

FieldElement general_D(const Series& rho, int n, const FieldElement& b) {
    require_rho(rho, n);
    if (n == 0) return FieldElement(1L);
    DmTable A = rho_table(rho, n);
    FieldElement s;
    for (int k = 1; k <= n; ++k) s += binom_general(b, k) * A(n, k);
    return s;
}

FieldElement general_D_over(const Series& rho, int n, const FieldElement& b) {
    if (n < 1) throw Error(ErrorKind::BadParams, "D_n(b)/b needs n >= 1");
    require_rho(rho, n);
    return d_over(rho_table(rho, n), n, b);
}

Series q_pow(const GeneralSeriesSpec& spec, const FieldElement& beta) {
    if (spec.order < 0) throw Error(ErrorKind::BadParams, "negative order");
    require_rho(spec.rho, spec.order);
    DmTable A = rho_table(spec.rho, spec.order);
    return Series::from_function(spec.order, [&](int n) {
        if (n == 0) return FieldElement(1L);
        return beta * d_over(A, n, spec.alpha * FieldElement(n) + beta);
    });
}

Series general_series(const GeneralSeriesSpec& spec) { return q_pow(spec, FieldElement(1L)); }

}  // namespace symtriple::catalog
