#include "symtriple/demoivre.hpp"

#include <functional>

namespace symtriple {

namespace {

void require_coeffs(const DmInput& a, int m) {
    if (a.size() < m)
        throw Error(ErrorKind::InsufficientCoefficients,
                    "need a_1..a_" + std::to_string(m) + ", have " + std::to_string(a.size()));
}

// Calls visit(j) for every j = (j_1..j_m) with sum j_i = k and sum i j_i = n, in lexicographic order.
void for_each_composition(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
    const int m = n - k + 1;
    std::vector<int> j(static_cast<std::size_t>(m), 0);
    std::function<void(int, int, int)> rec = [&](int i, int parts, int weight) {
        if (i == m) {
            if (parts == k && weight == n) visit(j);
            return;
        }
        const int idx = i + 1;
        for (int c = 0; parts + c <= k && weight + c * idx <= n; ++c) {
            j[static_cast<std::size_t>(i)] = c;
            rec(i + 1, parts + c, weight + c * idx);
        }
        j[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, 0, 0);
}

Integer multinomial(int k, const std::vector<int>& j) {
    Integer r = factorial(k);
    for (int c : j) r /= factorial(c);
    return r;
}

DmInput zero_padded(const DmInput& a, int m) {
    std::vector<FieldElement> c = a.coeffs();
    if (static_cast<int>(c.size()) < m) c.resize(static_cast<std::size_t>(m));
    return DmInput(std::move(c));
}

}  // namespace

const FieldElement& DmInput::at(int j) const {
    if (j < 1 || j > size())
        throw Error(ErrorKind::InsufficientCoefficients, "a_" + std::to_string(j) + " not supplied");
    return coeffs_[static_cast<std::size_t>(j - 1)];
}

DmInput DmInput::tail() const {
    if (coeffs_.empty()) return DmInput();
    return DmInput(std::vector<FieldElement>(coeffs_.begin() + 1, coeffs_.end()));
}

FieldElement dm(int n, int k, const DmInput& a) {
    if (k < 0) throw Error(ErrorKind::BadParams, "De Moivre index k must be nonnegative");
    if (k == 0) return FieldElement(n == 0 ? 1L : 0L);
    if (n < k) return FieldElement();
    const int m = n - k;
    require_coeffs(a, m + 1);
    // (sum a_j x^j)^k = x^k (a_1 + a_2 x + ...)^k
    Series s = Series::from_function(m, [&](int i) { return a.at(i + 1); });
    return pow_int(s, k)[m];
}

FieldElement dm_partition_sum(int n, int k, const DmInput& a) {
    if (k < 0) throw Error(ErrorKind::BadParams, "De Moivre index k must be nonnegative");
    if (k == 0) return FieldElement(n == 0 ? 1L : 0L);
    if (n < k) return FieldElement();
    require_coeffs(a, n - k + 1);
    FieldElement total;
    for_each_composition(n, k, [&](const std::vector<int>& j) {
        FieldElement term(Rational(multinomial(k, j)));
        for (std::size_t i = 0; i < j.size(); ++i)
            if (j[i] > 0) term *= a.at(static_cast<int>(i) + 1).pow(j[i]);
        total += term;
    });
    return total;
}

DmTable::DmTable(const DmInput& a, int max_n) : max_n_(max_n) {
    if (max_n < 0) throw Error(ErrorKind::BadParams, "table size must be nonnegative");
    cols_.resize(static_cast<std::size_t>(max_n) + 1);
    cols_[0] = {FieldElement(1L)};
    if (max_n == 0) return;
    require_coeffs(a, max_n);
    Series s = Series::from_function(max_n - 1, [&](int i) { return a.at(i + 1); });
    Series power = s;
    for (int k = 1; k <= max_n; ++k) {
        // power = s^k truncated to order max_n - k
        cols_[static_cast<std::size_t>(k)] = power.coeffs();
        if (k < max_n) power = power.truncated(max_n - k - 1) * s.truncated(max_n - k - 1);
    }
}

FieldElement DmTable::operator()(int n, int k) const {
    if (n > max_n_) throw Error(ErrorKind::IndexOutOfRange, "De Moivre table holds n <= " + std::to_string(max_n_));
    if (k < 0 || n < k) return FieldElement();
    if (k == 0) return FieldElement(n == 0 ? 1L : 0L);
    return cols_[static_cast<std::size_t>(k)][static_cast<std::size_t>(n - k)];
}

std::vector<DmMonomial> dm_monomials(int n, int k) {
    std::vector<DmMonomial> out;
    if (k < 0 || n < k) return out;
    if (k == 0) {
        if (n == 0) out.push_back({{}, Integer(1)});
        return out;
    }
    for_each_composition(n, k, [&](const std::vector<int>& j) { out.push_back({j, multinomial(k, j)}); });
    return out;
}

Integer dm_coefficient_gcd(int n, int k) {
    Integer g = 0;
    for (const auto& mono : dm_monomials(n, k)) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mono.coefficient.get_mpz_t());
    return g;
}

FieldElement dm_shift(DmShift direction, int n, int k, const DmInput& a) {
    if (k < 0) throw Error(ErrorKind::BadParams, "De Moivre index k must be nonnegative");
    if (k == 0) return FieldElement(n == 0 ? 1L : 0L);
    if (n < k) return FieldElement();
    const FieldElement& a1 = a.at(1);
    FieldElement total;
    if (direction == DmShift::remove_first) {
        // The result only involves a_1..a_{n-k+2}; higher entries cancel, so zero padding is exact.
        require_coeffs(a, n - k + 2);
        DmInput padded = zero_padded(a, n + k);
        DmTable table(padded, n + k);
        for (int j = 0; j <= k; ++j)
            total += FieldElement(Rational(binomial(k, j))) * (-a1).pow(k - j) * table(n + j, j);
        return total;
    }
    require_coeffs(a, n - k + 1);
    DmInput rest = a.tail();
    for (int j = 0; j <= k; ++j)
        total += FieldElement(Rational(binomial(k, j))) * a1.pow(k - j) * dm(n - k, j, rest);
    return total;
}

std::vector<std::vector<FieldElement>> dm_matrix(DmMatrix form, int n, const FieldElement& t, const DmInput& a) {
    require_coeffs(a, n);
    std::vector<std::vector<FieldElement>> m(static_cast<std::size_t>(n), std::vector<FieldElement>(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i) {
        auto& row = m[static_cast<std::size_t>(i - 1)];
        for (int j = 1; j <= i; ++j) row[static_cast<std::size_t>(j - 1)] = a.at(i - j + 1) * t;
        if (form == DmMatrix::O) row[0] *= FieldElement(static_cast<long>(i));
        if (i < n) row[static_cast<std::size_t>(i)] = FieldElement(form == DmMatrix::N ? static_cast<long>(i) : 1L);
    }
    return m;
}

FieldElement bareiss_determinant(std::vector<std::vector<FieldElement>> m) {
    const std::size_t n = m.size();
    if (n == 0) return FieldElement(1L);
    bool negate = false;
    FieldElement prev(1L);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return FieldElement();
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = FieldElement();
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

FieldElement dm_determinant(DmMatrix form, int n, const FieldElement& t, const DmInput& a) {
    return bareiss_determinant(dm_matrix(form, n, t, a));
}

Rational stirling_eval(StirlingKind kind, int n, int k) {
    if (n < 0 || k < 0) throw Error(ErrorKind::BadParams, "Stirling indices must be nonnegative");
    if (n < k) return 0;
    std::vector<FieldElement> c;
    for (int j = 1; j <= n - k + 1; ++j)
        c.emplace_back(kind == StirlingKind::subset ? Rational(1) / Rational(factorial(j)) : make_rational(1, j));
    Rational scale = Rational(factorial(n)) / Rational(factorial(k));
    return scale * dm(n, k, DmInput(std::move(c))).rational();
}

}  // namespace symtriple
