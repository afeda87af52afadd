#pragma once

#include <vector>

#include "symtriple/exact.hpp"
#include "symtriple/series.hpp"

namespace symtriple {

// Arguments a_1, a_2, ..., a_m of a De Moivre polynomial. Reading past a_m is an error.
class DmInput {
public:
    DmInput() = default;
    explicit DmInput(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {}

    int size() const { return static_cast<int>(coeffs_.size()); }
    // a_j for j >= 1.
    const FieldElement& at(int j) const;
    // a_2, a_3, ...
    DmInput tail() const;
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

private:
    std::vector<FieldElement> coeffs_;
};

// A_{n,k}(a) = [x^n] (a_1 x + a_2 x^2 + ...)^k by series powering.
FieldElement dm(int n, int k, const DmInput& a);

// Same value from the explicit sum over (j_1, ..., j_m) with sum j_i = k and sum i j_i = n.
FieldElement dm_partition_sum(int n, int k, const DmInput& a);

// All A_{n,k} for 0 <= k <= n <= max_n from one input, built column by column.
class DmTable {
public:
    DmTable(const DmInput& a, int max_n);
    int max_n() const { return max_n_; }
    // Zero outside 0 <= k <= n; throws IndexOutOfRange above max_n.
    FieldElement operator()(int n, int k) const;

private:
    int max_n_;
    // cols_[k][m] = A_{m+k,k}
    std::vector<std::vector<FieldElement>> cols_;
};

// Integer coefficients of A_{n,k} as a polynomial in a_1, ..., a_{n-k+1}.
struct DmMonomial {
    std::vector<int> exponents;  // exponents[i] is the power of a_{i+1}
    Integer coefficient;
};
std::vector<DmMonomial> dm_monomials(int n, int k);
Integer dm_coefficient_gcd(int n, int k);

enum class DmShift { remove_first, constant_prepend };
// remove_first: A_{n,k}(a_2, a_3, ...) from values A_{n+j,j}(a_1, a_2, ...).
// constant_prepend: A_{n,k}(a_1, a_2, ...) from values A_{n-k,j}(a_2, a_3, ...).
FieldElement dm_shift(DmShift direction, int n, int k, const DmInput& a);

enum class DmMatrix { M, N, O };
// n x n lower Hessenberg matrix with entries a_{i-j+1} t on and below the diagonal.
std::vector<std::vector<FieldElement>> dm_matrix(DmMatrix form, int n, const FieldElement& t, const DmInput& a);
FieldElement dm_determinant(DmMatrix form, int n, const FieldElement& t, const DmInput& a);
// Fraction-free elimination with row swaps on an arbitrary square matrix.
FieldElement bareiss_determinant(std::vector<std::vector<FieldElement>> m);

enum class StirlingKind { subset, cycle };
Rational stirling_eval(StirlingKind kind, int n, int k);

}  // namespace symtriple
