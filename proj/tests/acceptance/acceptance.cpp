// One line per acceptance criterion. Exit status is the number of failed criteria.
#include <cstdio>
#include <string>
#include <vector>

#include "symtriple/verify.hpp"

namespace {

struct Criterion {
    int id;
    const char* suite;
    const char* summary;
};

const std::vector<Criterion> kCriteria{
    {1, "pentagonal", "Euler product triple to order 60: pentagonal signs, partition DP, divisor sums"},
    {2, "partition_polynomials", "c(n) from divisor sums and the p -> e transition, n <= 40"},
    {3, "ramanujan", "Bell partition polynomial gives p(5n + 4)/5, 5 | p(5n + 4), n <= 30"},
    {4, "jacobi", "cube of the Euler product equals d(m), m <= 60"},
    {5, "squares", "N_2(n) to 100, binomial inversions n <= 15, r <= 3, overpartition link n <= 20"},
    {6, "transitions", "six transitions on every registry triple at order 25"},
    {7, "group_laws", "group, flip and star laws and the closure table, 10 triples at order 20"},
    {8, "lagrange", "both Lagrange inversion forms against reversion, n <= 10, 20 series"},
    {9, "norlund", "Norlund table n <= 4, recursion n <= 12, special orders"},
    {10, "harmonic_multiset", "harmonic multiset recursion, closed form, Stirling embeddings"},
    {11, "special_values", "De Moivre special-value sheet on m, k <= 10"},
    {12, "determinants", "determinant forms against De Moivre sums, n <= 8"},
    {13, "q_identities", "q-binomial triple and De Moivre q-identities"},
    {14, "numeric", "zeta(3) and zeta(2) sums to 10^5 terms within 1e-4 with tail bounds"},
};

}  // namespace

int main() {
    int failed = 0;
    for (const auto& c : kCriteria) {
        symtriple::verify::RunConfig config;
        config.order = 25;
        config.seed = 0;
        config.suites = {c.suite};
        const auto report = symtriple::verify::run_suite(config).front();
        const bool ok = report.passed();
        failed += !ok;
        std::printf("%s criterion %2d [%s] %s (%ld cases, %ld ms)\n", ok ? "PASS" : "FAIL", c.id, c.suite, c.summary, report.cases_run,
                    report.elapsed_ms);
        if (!ok) {
            const auto& f = *report.first_failure;
            std::printf("     first failure: %s at %ld: %s != %s\n", f.identity.c_str(), f.index, f.lhs.c_str(), f.rhs.c_str());
        }
        for (const auto& note : report.notes) std::printf("     %s\n", note.c_str());
    }
    std::printf("%zu criteria, %d failed\n", kCriteria.size(), failed);
    return failed;
}
