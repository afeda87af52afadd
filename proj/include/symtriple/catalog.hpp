#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symtriple/triple.hpp"

namespace symtriple::catalog {

// Decidable subsets of the positive integers.
class IntSet {
public:
    enum class Kind { all, multiples, non_multiples, odd, residue, non_residue, finite };

    static IntSet all() { return IntSet(Kind::all); }
    static IntSet multiples(long m);
    static IntSet non_multiples(long m);
    static IntSet odd() { return IntSet(Kind::odd); }
    // j = r mod m, or j != r mod m.
    static IntSet residue(long r, long m);
    static IntSet non_residue(long r, long m);
    static IntSet finite(std::vector<long> members);
    // "all", "odd", "multiples:5", "non_multiples:2", "residue:1:4", "non_residue:2:4", "finite:1,2,5".
    static IntSet parse(const std::string& text);

    bool contains(long j) const;
    Kind kind() const { return kind_; }
    std::string to_string() const;

private:
    explicit IntSet(Kind k) : kind_(k) {}
    Kind kind_;
    long m_ = 1;
    long r_ = 0;
    std::vector<long> members_;
};

// ---- divisor sums and product expansions (integer oracles) ----

// sum of j in S with j | m
Integer sigma_S(const IntSet& S, long m);
Integer sigma(long m);
// Sum of the divisors of m that are not multiples of r.
Integer omega(long r, long m);
// [q^n] prod_{j in S} (1 - q^j)^{-r} for 0 <= n <= max_n; any integer r.
std::vector<Integer> partition_counts(const IntSet& S, long r, int max_n);
// Coefficient of q^m in prod (1 - q^j), nonzero only at generalized pentagonal numbers.
Integer pentagonal_c(long m);
// Coefficient of q^m in prod (1 - q^j)^3.
Integer jacobi_d(long m);
// Ordered representations of n as a sum of r squares (signs counted), r >= 0.
std::vector<Integer> squares_count(long r, int max_n);
// Ordered representations of n as a sum of r triangular numbers, r >= 0.
std::vector<Integer> triangular_count(long r, int max_n);
// [q^n] prod ((1 + q^j)/(1 - q^j))^r, any integer r.
std::vector<Integer> overpartitions(long r, int max_n);
// [q^n] (q;q)^6 / (q^5;q^5)^5 by the three-factor convolution.
std::vector<Integer> mod5_f(int max_n);

// ---- classical numbers and polynomials ----

Integer stirling_cycle(long n, long k);
Integer stirling_subset(long n, long k);
// B_0..B_max with B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(int max_n);
std::vector<FieldElement> bernoulli_polynomials(const FieldElement& x, int max_n);
// Integrals of the falling and rising factorials over [0, 1].
std::vector<Rational> cauchy_minus(int max_n);
std::vector<Rational> cauchy_plus(int max_n);
// A_0(x)..A_max(x) by the Frobenius sum.
std::vector<FieldElement> eulerian_polynomials(const FieldElement& x, int max_n);
std::vector<Integer> catalan_numbers(int max_n);
// Physicists' Hermite polynomials; the imaginary variant is H_k(ix)/i^k.
std::vector<FieldElement> hermite_polynomials(const FieldElement& x, int max_n, bool imaginary = false);
std::vector<FieldElement> chebyshev_T(const FieldElement& x, int max_n);
std::vector<FieldElement> chebyshev_U(const FieldElement& x, int max_n);
// l_{n+1} = alpha l_n - beta l_{n-1} with (h_0, h_1) = (1, alpha) and (p_0, p_1) = (2, alpha).
std::vector<FieldElement> lucas_h(const FieldElement& alpha, const FieldElement& beta, int max_n);
std::vector<FieldElement> lucas_p(const FieldElement& alpha, const FieldElement& beta, int max_n);
// U_0..U_max: alternating permutations (secant numbers at even, tangent numbers at odd index).
std::vector<Integer> alternating_permutations(int max_n);
// H_n^{(r)} = sum_{j=1}^n j^{-r}
Rational harmonic_number(long n, long r = 1);
// (a; q)_n
FieldElement q_pochhammer(const FieldElement& a, const FieldElement& q, int n);
// Gaussian binomial [n choose k]_q as a polynomial in q, by the q-Pascal rule.
FieldElement q_binomial(const FieldElement& q, int n, int k);

// ---- harmonic multiset numbers on Z^2 ----

// stirc(n, k) on a rectangle, filled by sweeping outward from the seed row n = -1 and column k = -1.
class HarmonicMultisetTable {
public:
    HarmonicMultisetTable(long n_lo, long n_hi, long k_lo, long k_hi);
    const Rational& at(long n, long k) const;
    long n_lo() const { return n_lo_; }
    long n_hi() const { return n_hi_; }
    long k_lo() const { return k_lo_; }
    long k_hi() const { return k_hi_; }

private:
    long n_lo_, n_hi_, k_lo_, k_hi_;
    std::vector<std::vector<Rational>> rows_;
};

Rational stirc(long n, long k);
// sum_{j=1}^n (-1)^{j-1} C(n, j) j^{-k}, for n >= 0 and any k.
Rational stirc_closed(long n, long k);

// ---- Norlund polynomials, Bell partition polynomials, general series ----

// B_n^{(z)} as a polynomial in z, from B_n^{(z)}/n! = sum_k C(-z, k) A_{n,k}(1/2!, 1/3!, ...).
UniPoly norlund(int n, const std::string& symbol = "z");

struct BellFactor {
    IntSet set;
    FieldElement a;
    FieldElement z;
};
// psi(m) = -sum_j a_j sum_{d | m, d in C_j} d z_j^{m/d}
FieldElement bell_small_psi(const std::vector<BellFactor>& factors, long m);
// Psi(n) = sum_k A_{n,k}(psi(1)/1, psi(2)/2, ...)/k!
FieldElement bell_psi(const std::vector<BellFactor>& factors, int n);
// [q^n] prod_j prod_{c in C_j} (1 - z_j q^c)^{a_j} by direct series expansion.
FieldElement bell_product_coeff(const std::vector<BellFactor>& factors, int n);

struct GeneralSeriesSpec {
    Series rho;
    FieldElement alpha;
    int order;
};
// Q_alpha = 1 + sum D_n(alpha n + 1)/(alpha n + 1) t^n with D_n(b) = [t^n] rho^b.
Series general_series(const GeneralSeriesSpec& spec);
// Q_alpha^beta = 1 + sum beta/(alpha n + beta) D_n(alpha n + beta) t^n, written so that
// a vanishing alpha n + beta needs no division.
Series q_pow(const GeneralSeriesSpec& spec, const FieldElement& beta);
// D_n(b) = [t^n] rho^b for symbolic or numeric b.
FieldElement general_D(const Series& rho, int n, const FieldElement& b);
// D_n(b)/b for n >= 1, defined also at b = 0.
FieldElement general_D_over(const Series& rho, int n, const FieldElement& b);

// ---- triple registry ----

struct TripleSpec {
    std::string name;
    std::map<std::string, FieldElement> params;
    std::map<std::string, IntSet> sets;
    int order = 25;
};

enum class ParamKind { field, integer, set };

struct ParamInfo {
    std::string name;
    ParamKind kind;
    std::string default_value;
};

struct TripleEntry {
    std::string name;
    std::string description;
    std::vector<ParamInfo> params;
};

const std::vector<TripleEntry>& registry();
const TripleEntry& lookup(const std::string& name);
// Throws UnknownTriple or BadParams. Missing parameters take their defaults.
SymTriple make_triple(const TripleSpec& spec);
// Closed forms for indices 1..order of one family, when the family has one.
std::optional<std::vector<FieldElement>> predicted(const TripleSpec& spec, Family f);
// spec with defaults filled in; throws like make_triple.
TripleSpec resolved(const TripleSpec& spec);

// ---- named sequences ----

using SeqParams = std::map<std::string, std::string>;

struct SequenceEntry {
    std::string name;
    int first_index;
    std::string description;
};

const std::vector<SequenceEntry>& sequences();
// Terms first_index .. first_index + count - 1 from the independent oracle.
std::vector<FieldElement> seq(const std::string& name, const SeqParams& params, int count);
// The same terms read off a registry triple.
std::vector<FieldElement> seq_from_triple(const std::string& name, const SeqParams& params, int count);

}  // namespace symtriple::catalog
