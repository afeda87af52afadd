#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "symtriple/catalog.hpp"
#include "symtriple/demoivre.hpp"
#include "symtriple/sampling.hpp"
#include "symtriple/triple.hpp"
#include "symtriple/verify.hpp"

namespace symtriple::verify {

// Counts checks of one suite and keeps the first failure.
class Recorder {
public:
    Recorder(std::string suite, const RunConfig& config);

    const RunConfig& config() const { return config_; }
    // Independent deterministic stream per (seed, suite, stream).
    Sampler sampler(std::uint64_t stream) const;

    bool check(const std::string& identity, long index, const FieldElement& lhs, const FieldElement& rhs);
    bool check(const std::string& identity, long index, const Series& lhs, const Series& rhs);
    bool check_true(const std::string& identity, long index, bool ok, const std::string& lhs = "false", const std::string& rhs = "true");
    bool check_near(const std::string& identity, long index, double lhs, double rhs, double tolerance);
    void fail(const std::string& identity, long index, const std::string& lhs, const std::string& rhs);
    void note(std::string line) { notes_.push_back(std::move(line)); }

    IdentityReport report() const;

private:
    std::string suite_;
    RunConfig config_;
    long cases_ = 0;
    std::optional<IdentityFailure> first_;
    std::vector<std::string> notes_;
};

// "name [k=3]"
std::string at(const std::string& identity, const std::string& key, long value);
std::string at(const std::string& identity, const std::string& key, const FieldElement& value);

using SuiteFn = std::function<void(Recorder&)>;

void suite_exact(Recorder& r);
void suite_series(Recorder& r);
void suite_lagrange(Recorder& r);
void suite_demoivre(Recorder& r);
void suite_determinants(Recorder& r);
void suite_special_values(Recorder& r);
void suite_triple(Recorder& r);
void suite_transitions(Recorder& r);
void suite_group_laws(Recorder& r);
void suite_catalog(Recorder& r);
void suite_pentagonal(Recorder& r);
void suite_partition_polynomials(Recorder& r);
void suite_ramanujan(Recorder& r);
void suite_jacobi(Recorder& r);
void suite_squares(Recorder& r);
void suite_norlund(Recorder& r);
void suite_harmonic_multiset(Recorder& r);
void suite_q_identities(Recorder& r);
void suite_general_series(Recorder& r);
void suite_numeric(Recorder& r);

// ---- brute-force oracles shared by the suites ----
namespace oracle {

long divisor_sum(long m);
// p(0..n) by the coin-change recursion over part sizes.
std::vector<Integer> partitions(int n);
// Coefficient of q^m in prod (1 - q^j), by searching r with m = r(3r - 1)/2.
long pentagonal(long m);
// [q^0..q^n] prod_{j=1}^n (1 - q^j)^a (1 + q^j)^b by repeated multiplication.
std::vector<Integer> product(long n, long a, long b);
// Ordered r-tuples of integers with sum of squares n; r-tuples of triangular numbers with sum n.
Integer lattice_squares(long r, long n);
Integer lattice_triangular(long r, long n);
Integer stirling_subset(long n, long k);
Integer stirling_cycle(long n, long k);
// B_0..B_n from sum_{j<=n} C(n+1, j) B_j = 0.
std::vector<Rational> bernoulli(int n);
Rational harmonic(long n, long r = 1);
// B_0^{(z)}..B_n^{(z)} for integer z, by the recursion in z starting from B_n^{(1)} = B_n.
std::vector<Rational> norlund(long z, int n);
FieldElement inv_factorial(long n);
// Series with coefficients f(0..order).
Series series(int order, const std::function<FieldElement(int)>& f);
// Random rational coefficients, constant term c0.
Series random_series(Sampler& s, int order, const FieldElement& c0);
// A triple with random rational h_1..h_order.
SymTriple random_triple(Sampler& s, int order);

}  // namespace oracle

}  // namespace symtriple::verify
