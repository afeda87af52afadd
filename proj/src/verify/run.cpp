#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "suite.hpp"

namespace symtriple::verify {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
    return h;
}

struct Suite {
    SuiteInfo info;
    SuiteFn run;
};

const std::vector<Suite>& table() {
    static const std::vector<Suite> all = [] {
        std::vector<Suite> v{
            {{"catalog", "registry closed forms, central binomial sums, triangular identity"}, suite_catalog},
            {{"demoivre", "homogeneity, vanishing, shift laws, composition sums"}, suite_demoivre},
            {{"determinants", "determinant forms of alternating De Moivre sums, n <= 8"}, suite_determinants},
            {{"exact", "canonical form, distributivity, gcd contract"}, suite_exact},
            {{"general_series", "general series laws, closure table, triple coefficients, Abel identity"}, suite_general_series},
            {{"group_laws", "triple group and star laws at order 20"}, suite_group_laws},
            {{"harmonic_multiset", "harmonic multiset recursion, closed form, Stirling embeddings"}, suite_harmonic_multiset},
            {{"jacobi", "cube of the Euler product, m <= 60"}, suite_jacobi},
            {{"lagrange", "both Lagrange inversion forms against reversion, n <= 10"}, suite_lagrange},
            {{"norlund", "Norlund table, recursion and special values"}, suite_norlund},
            {{"numeric", "harmonic zeta sums in floating point with tail bounds"}, suite_numeric},
            {{"partition_polynomials", "c(n) from divisor sums, partition recurrences, n <= 40"}, suite_partition_polynomials},
            {{"pentagonal", "Euler product triple to order 60"}, suite_pentagonal},
            {{"q_identities", "q-binomial triple and its De Moivre identities"}, suite_q_identities},
            {{"ramanujan", "p(5n + 4) from the Bell product formula, n <= 30"}, suite_ramanujan},
            {{"series", "ring laws, exp and log, powers, reversion, star"}, suite_series},
            {{"special_values", "De Moivre special-value sheet on m, k <= 10"}, suite_special_values},
            {{"squares", "sums of squares, overpartitions and their inversions"}, suite_squares},
            {{"transitions", "six transition formulas on every registry triple"}, suite_transitions},
            {{"triple", "triple identities, Newton, transition round trips, multisection"}, suite_triple},
        };
        std::sort(v.begin(), v.end(), [](const Suite& a, const Suite& b) { return a.info.name < b.info.name; });
        return v;
    }();
    return all;
}

}  // namespace

Recorder::Recorder(std::string suite, const RunConfig& config) : suite_(std::move(suite)), config_(config) {}

Sampler Recorder::sampler(std::uint64_t stream) const {
    return Sampler(splitmix(splitmix(config_.seed) ^ fnv1a(suite_) ^ splitmix(stream + 1)));
}

bool Recorder::check(const std::string& identity, long index, const FieldElement& lhs, const FieldElement& rhs) {
    ++cases_;
    if (lhs == rhs) return true;
    if (!first_) first_ = IdentityFailure{identity, index, lhs.to_string(), rhs.to_string()};
    return false;
}

bool Recorder::check(const std::string& identity, long index, const Series& lhs, const Series& rhs) {
    ++cases_;
    if (lhs == rhs) return true;
    if (!first_) first_ = IdentityFailure{identity, index, lhs.to_string(), rhs.to_string()};
    return false;
}

bool Recorder::check_true(const std::string& identity, long index, bool ok, const std::string& lhs, const std::string& rhs) {
    ++cases_;
    if (!ok && !first_) first_ = IdentityFailure{identity, index, lhs, rhs};
    return ok;
}

bool Recorder::check_near(const std::string& identity, long index, double lhs, double rhs, double tolerance) {
    ++cases_;
    bool ok = std::abs(lhs - rhs) <= tolerance;
    if (!ok && !first_) {
        std::ostringstream l, r;
        l.precision(17);
        r.precision(17);
        l << lhs;
        r << rhs << " +- " << tolerance;
        first_ = IdentityFailure{identity, index, l.str(), r.str()};
    }
    return ok;
}

void Recorder::fail(const std::string& identity, long index, const std::string& lhs, const std::string& rhs) {
    ++cases_;
    if (!first_) first_ = IdentityFailure{identity, index, lhs, rhs};
}

IdentityReport Recorder::report() const { return IdentityReport{suite_, cases_, first_, 0, notes_}; }

std::string at(const std::string& identity, const std::string& key, long value) {
    return identity + " [" + key + "=" + std::to_string(value) + "]";
}

std::string at(const std::string& identity, const std::string& key, const FieldElement& value) {
    return identity + " [" + key + "=" + value.to_string() + "]";
}

const std::vector<SuiteInfo>& suites() {
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> v;
        for (const auto& s : table()) v.push_back(s.info);
        return v;
    }();
    return infos;
}

std::vector<IdentityReport> run_suite(const RunConfig& config) {
    if (config.order < 1) throw Error(ErrorKind::BadParams, "order must be >= 1");
    if (config.trials < 1) throw Error(ErrorKind::BadParams, "trials must be >= 1");
    std::vector<const Suite*> chosen;
    bool all = std::find(config.suites.begin(), config.suites.end(), "all") != config.suites.end();
    if (config.suites.empty()) throw Error(ErrorKind::UnknownSuite, "no suite named");
    for (const auto& name : config.suites) {
        if (name == "all") continue;
        auto it = std::find_if(table().begin(), table().end(), [&](const Suite& s) { return s.info.name == name; });
        if (it == table().end()) throw Error(ErrorKind::UnknownSuite, "no suite named '" + name + "'");
        if (std::find(chosen.begin(), chosen.end(), &*it) == chosen.end()) chosen.push_back(&*it);
    }
    if (all) {
        chosen.clear();
        for (const auto& s : table()) chosen.push_back(&s);
    }
    std::sort(chosen.begin(), chosen.end(), [](const Suite* a, const Suite* b) { return a->info.name < b->info.name; });

    std::vector<IdentityReport> out;
    for (const Suite* s : chosen) {
        Recorder rec(s->info.name, config);
        auto start = std::chrono::steady_clock::now();
        try {
            s->run(rec);
        } catch (const std::exception& e) {
            rec.fail("uncaught exception", 0, e.what(), "no exception");
        }
        IdentityReport report = rec.report();
        if (config.timing)
            report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(report));
    }
    return out;
}

std::string report_json(const std::vector<IdentityReport>& reports, int indent) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["suite"] = r.suite;
        j["status"] = r.passed() ? "pass" : "fail";
        j["cases_run"] = r.cases_run;
        if (r.first_failure) {
            const auto& f = *r.first_failure;
            j["first_failure"] = {{"identity", f.identity}, {"index", f.index}, {"lhs", f.lhs}, {"rhs", f.rhs}};
        }
        j["elapsed_ms"] = r.elapsed_ms;
        if (!r.notes.empty()) j["notes"] = r.notes;
        list.push_back(std::move(j));
    }
    return list.dump(indent);
}

}  // namespace symtriple::verify
