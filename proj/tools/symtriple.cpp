#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symtriple/catalog.hpp"
#include "symtriple/demoivre.hpp"
#include "symtriple/verify.hpp"

using namespace symtriple;

namespace {

constexpr int kUsage = 2;
constexpr int kFailure = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

std::pair<std::string, std::string> key_value(const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got '" + text + "'");
    return {text.substr(0, eq), text.substr(eq + 1)};
}

std::pair<long, long> range(const std::string& text, const std::string& flag) {
    auto parts = split(text, ':');
    if (parts.size() != 2) throw UsageError(flag + " expects a:b, got '" + text + "'");
    try {
        std::size_t used_a = 0, used_b = 0;
        long a = std::stol(parts[0], &used_a), b = std::stol(parts[1], &used_b);
        if (used_a != parts[0].size() || used_b != parts[1].size()) throw std::invalid_argument("trailing");
        if (a > b) throw UsageError(flag + " is empty: " + text);
        return {a, b};
    } catch (const std::logic_error&) {
        throw UsageError(flag + " expects integers a:b, got '" + text + "'");
    }
}

void print_terms(const std::vector<FieldElement>& terms, int first, const std::string& format, const std::string& name) {
    if (format == "plain") {
        for (std::size_t i = 0; i < terms.size(); ++i) std::cout << (i ? " " : "") << terms[i].to_string();
        std::cout << "\n";
    } else if (format == "csv") {
        std::cout << "n,value\n";
        for (std::size_t i = 0; i < terms.size(); ++i) std::cout << first + static_cast<long>(i) << "," << terms[i].to_string() << "\n";
    } else {
        nlohmann::ordered_json j;
        j["name"] = name;
        j["first_index"] = first;
        j["terms"] = nlohmann::ordered_json::array();
        for (const auto& t : terms) j["terms"].push_back(t.to_string());
        std::cout << j.dump(2) << "\n";
    }
}

int run_seq(const std::string& name, const std::vector<std::string>& params, int count, const std::string& format) {
    catalog::SeqParams p;
    for (const auto& kv : params) p.insert(key_value(kv));
    const auto& all = catalog::sequences();
    auto it = std::find_if(all.begin(), all.end(), [&](const catalog::SequenceEntry& e) { return e.name == name; });
    int first = it == all.end() ? 0 : it->first_index;
    print_terms(catalog::seq(name, p, count), first, format, name);
    return 0;
}

int run_expand(const std::string& name, const std::vector<std::string>& params, int order, const std::string& series) {
    const catalog::TripleEntry& entry = catalog::lookup(name);
    catalog::TripleSpec spec{name, {}, {}, order};
    for (const auto& kv : params) {
        auto [key, value] = key_value(kv);
        auto info = std::find_if(entry.params.begin(), entry.params.end(), [&](const catalog::ParamInfo& i) { return i.name == key; });
        if (info != entry.params.end() && info->kind == catalog::ParamKind::set)
            spec.sets.insert_or_assign(key, catalog::IntSet::parse(value));
        else
            spec.params.insert_or_assign(key, FieldElement::parse(value));
    }
    SymTriple t = catalog::make_triple(spec);
    std::vector<std::string> out;
    for (int k = series == "p" ? 1 : 0; k <= order; ++k)
        out.push_back((series == "e" ? t.e(k) : series == "h" ? t.h(k) : t.p(k)).to_string());
    for (std::size_t i = 0; i < out.size(); ++i) std::cout << (i ? ", " : "") << out[i];
    std::cout << "\n";
    return 0;
}

int run_dm(int n, int k, const std::string& coeffs) {
    std::vector<FieldElement> a;
    for (const auto& c : split(coeffs, ',')) a.push_back(FieldElement::parse(c));
    std::cout << dm(n, k, DmInput(std::move(a))).to_string() << "\n";
    return 0;
}

int run_table(const std::string& which, const std::string& n_range, const std::string& k_range, const std::string& format) {
    if (which != "stirc") throw UsageError("unknown table '" + which + "' (available: stirc)");
    auto [n0, n1] = range(n_range, "--n-range");
    auto [k0, k1] = range(k_range, "--k-range");
    catalog::HarmonicMultisetTable t(n0, n1, k0, k1);
    if (format == "json") {
        nlohmann::ordered_json j;
        j["table"] = which;
        j["n_range"] = {n0, n1};
        j["k_range"] = {k0, k1};
        j["rows"] = nlohmann::ordered_json::array();
        for (long n = n0; n <= n1; ++n) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (long k = k0; k <= k1; ++k) row.push_back(to_string(t.at(n, k)));
            j["rows"].push_back(row);
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    const char sep = format == "csv" ? ',' : ' ';
    std::cout << "n";
    for (long k = k0; k <= k1; ++k) std::cout << sep << k;
    std::cout << "\n";
    for (long n = n0; n <= n1; ++n) {
        std::cout << n;
        for (long k = k0; k <= k1; ++k) std::cout << sep << to_string(t.at(n, k));
        std::cout << "\n";
    }
    return 0;
}

int run_verify(const std::vector<std::string>& names, int order, std::optional<std::uint64_t> seed, int trials, bool no_timing) {
    verify::RunConfig config;
    config.order = order;
    config.trials = trials;
    config.timing = !no_timing;
    config.suites = names;
    if (seed) {
        config.seed = *seed;
    } else if (const char* env = std::getenv("SYMTRIPLE_SEED")) {
        try {
            std::size_t used = 0;
            config.seed = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument("trailing");
        } catch (const std::logic_error&) {
            throw UsageError(std::string("SYMTRIPLE_SEED is not an unsigned integer: '") + env + "'");
        }
    }
    auto reports = verify::run_suite(config);
    std::cout << verify::report_json(reports) << "\n";
    for (const auto& r : reports) {
        if (!r.passed()) {
            const auto& f = *r.first_failure;
            std::cerr << r.suite << ": FAIL " << f.identity << " at " << f.index << "\n";
        }
    }
    bool ok = std::all_of(reports.begin(), reports.end(), [](const verify::IdentityReport& r) { return r.passed(); });
    return ok ? 0 : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric triples, De Moivre polynomials and their identities"};
    app.require_subcommand(1, 1);
    const std::vector<std::string> formats{"plain", "json", "csv"};

    std::string seq_name, seq_format = "plain";
    std::vector<std::string> seq_params;
    int seq_count = 10;
    bool seq_list = false;
    auto* seq = app.add_subcommand("seq", "print terms of a named sequence");
    seq->add_option("name", seq_name, "sequence name");
    seq->add_option("--param", seq_params, "parameter key=value (repeatable)");
    seq->add_option("--count", seq_count, "number of terms")->check(CLI::NonNegativeNumber);
    seq->add_option("--format", seq_format, "plain, json or csv")->check(CLI::IsMember(formats));
    seq->add_flag("--list", seq_list, "list the available sequences");

    std::string expand_name, expand_series = "h";
    std::vector<std::string> expand_params;
    int expand_order = 10;
    bool expand_list = false;
    auto* expand = app.add_subcommand("expand", "print coefficients of one series of a registry triple");
    expand->add_option("triple", expand_name, "triple name");
    expand->add_option("--order", expand_order, "truncation order")->check(CLI::PositiveNumber);
    expand->add_option("--series", expand_series, "e, h or p")->check(CLI::IsMember({"e", "h", "p"}));
    expand->add_option("--param", expand_params, "parameter key=value (repeatable)");
    expand->add_flag("--list", expand_list, "list the registry triples");

    int dm_n = 0, dm_k = 0;
    std::string dm_coeffs;
    auto* dmc = app.add_subcommand("dm", "evaluate the De Moivre polynomial A_{n,k}");
    dmc->add_option("--n", dm_n, "n")->required()->check(CLI::NonNegativeNumber);
    dmc->add_option("--k", dm_k, "k")->required()->check(CLI::NonNegativeNumber);
    dmc->add_option("--coeffs", dm_coeffs, "a1,a2,...")->required();

    std::string table_name, n_range, k_range, table_format = "plain";
    auto* table = app.add_subcommand("table", "print a rectangle of the harmonic multiset numbers");
    table->add_option("name", table_name, "table name (stirc)")->required();
    table->add_option("--n-range", n_range, "a:b")->required();
    table->add_option("--k-range", k_range, "c:d")->required();
    table->add_option("--format", table_format, "plain, json or csv")->check(CLI::IsMember(formats));

    std::vector<std::string> suites;
    int order = 25, trials = 64;
    std::optional<std::uint64_t> seed;
    bool no_timing = false, verify_list = false;
    auto* ver = app.add_subcommand("verify", "run identity suites and print a JSON report");
    ver->add_option("suites", suites, "suite names or all");
    ver->add_option("--order", order, "series order for order-dependent suites");
    ver->add_option("--seed", seed, "sampling seed (default 0, or SYMTRIPLE_SEED)");
    ver->add_option("--trials", trials, "sample count for sampled properties");
    ver->add_flag("--no-timing", no_timing, "report elapsed_ms as 0");
    ver->add_flag("--list", verify_list, "list the available suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e, std::cerr, std::cerr);
        return kUsage;
    }

    try {
        if (*seq) {
            if (seq_list) {
                for (const auto& s : catalog::sequences()) std::cout << s.name << "  " << s.description << "\n";
                return 0;
            }
            if (seq_name.empty()) throw UsageError("seq needs a sequence name");
            return run_seq(seq_name, seq_params, seq_count, seq_format);
        }
        if (*expand) {
            if (expand_list) {
                for (const auto& t : catalog::registry()) std::cout << t.name << "  " << t.description << "\n";
                return 0;
            }
            if (expand_name.empty()) throw UsageError("expand needs a triple name");
            return run_expand(expand_name, expand_params, expand_order, expand_series);
        }
        if (*dmc) return run_dm(dm_n, dm_k, dm_coeffs);
        if (*table) return run_table(table_name, n_range, k_range, table_format);
        if (verify_list) {
            for (const auto& s : verify::suites()) std::cout << s.name << "  " << s.description << "\n";
            return 0;
        }
        if (suites.empty()) throw UsageError("verify needs suite names or all");
        return run_verify(suites, order, seed, trials, no_timing);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
