#include "ccseries/cli.hpp"

#include "ccseries/class_algebra.hpp"
#include "ccseries/double_coset.hpp"
#include "ccseries/verify.hpp"
#include "ccseries/zonal_nearhook.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <omp.h>
#include <optional>
#include <ostream>

namespace ccseries::cli {

namespace {

struct OutputRecord {
    int n;
    std::string kind;
    Partition lambda;
    std::optional<Partition> mu;
    Rational value;
};

const std::map<std::string, std::string> kKindNames = {
    {"class", "class-top"}, {"doublecoset", "doublecoset-top"}, {"pi", "pi"},
    {"zonalQ", "zonal-Q"},  {"zonalP", "zonal-P"},
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

nlohmann::ordered_json record_json(const OutputRecord& r)
{
    nlohmann::ordered_json j;
    j["lambda"] = r.lambda.to_string();
    if (r.mu)
        j["mu"] = r.mu->to_string();
    j["value"] = to_string(r.value);
    return j;
}

void write_csv(std::ostream& out, const std::vector<OutputRecord>& records)
{
    out << "lambda,mu,value\n";
    for (const auto& r : records)
        out << r.lambda.to_string() << ',' << (r.mu ? r.mu->to_string() : std::string()) << ','
            << to_string(r.value) << '\n';
}

void write_table_json(std::ostream& out, int n, const std::string& kind, const std::vector<OutputRecord>& records)
{
    nlohmann::ordered_json j;
    j["n"] = n;
    j["kind"] = kind;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& r : records)
        j["entries"].push_back(record_json(r));
    out << j.dump(2) << '\n';
}

NearHook near_hook_arg(const Partition& lambda)
{
    if (!is_near_hook(lambda))
        throw UsageError("lambda " + lambda.to_string() + " is not a near hook (a,b,1^c)");
    return NearHook::from_partition(lambda);
}

std::vector<OutputRecord> build_table(const std::string& kind, int n)
{
    const std::string name = kKindNames.at(kind);
    auto parts = enumerate_partitions(n);
    std::vector<OutputRecord> out;
    if (kind == "class" || kind == "doublecoset") {
        SeriesCoefficientTable t = kind == "class" ? class_top_series(n) : main_series_table(n);
        for (const auto& l : parts)
            for (const auto& m : parts)
                out.push_back({n, name, l, m, t.at(l, m)});
    } else if (kind == "pi") {
        MonomialExpansion pi = pi_series(n);
        for (const auto& l : parts)
            out.push_back({n, name, l, std::nullopt, pi.coefficient(l)});
    } else {
        for (const NearHook& h : near_hooks(n)) {
            MonomialExpansion e = kind == "zonalQ" ? q_near_hook(h) : p_near_hook(h);
            for (const auto& m : parts)
                out.push_back({n, name, h.partition(), m, e.coefficient(m)});
        }
    }
    return out;
}

OutputRecord build_coeff(const std::string& kind, int n, const Partition& lambda, const std::optional<Partition>& mu)
{
    const std::string name = kKindNames.at(kind);
    if (lambda.weight() != n)
        throw UsageError("lambda " + lambda.to_string() + " is not a partition of " + std::to_string(n));
    if (kind == "pi") {
        if (mu)
            throw UsageError("--mu is not used by kind pi");
        return {n, name, lambda, std::nullopt, pi_series(n).coefficient(lambda)};
    }
    if (!mu)
        throw UsageError("kind " + kind + " needs --mu");
    if (mu->weight() != n)
        throw UsageError("mu " + mu->to_string() + " is not a partition of " + std::to_string(n));
    Rational v;
    if (kind == "class")
        v = class_top_series(n).at(lambda, *mu);
    else if (kind == "doublecoset")
        v = main_series_coefficient(lambda, *mu);
    else if (kind == "zonalQ")
        v = q_near_hook(near_hook_arg(lambda)).coefficient(*mu);
    else
        v = p_near_hook(near_hook_arg(lambda)).coefficient(*mu);
    return {n, name, lambda, *mu, v};
}

void check_table_n(int n)
{
    if (n > kMaxTableN)
        throw CapExceeded("n = " + std::to_string(n) + " exceeds the table limit " + std::to_string(kMaxTableN));
}

int env_int(const char* name, int fallback, int limit)
{
    const char* v = std::getenv(name);
    if (!v || !*v)
        return fallback;
    try {
        std::size_t used = 0;
        int x = std::stoi(v, &used);
        if (used != std::string(v).size() || x < 1 || x > limit)
            throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw UsageError(std::string("environment variable ") + name + " must be an integer in [1, " +
                         std::to_string(limit) + "]");
    }
}

void print_report(std::ostream& out, const VerifyReport& report)
{
    for (const auto& l : report.lines) {
        out << (l.passed ? "PASS " : "FAIL ") << l.suite << ": " << l.name;
        if (!l.passed)
            out << " -- " << l.detail;
        out << '\n';
    }
}

}  // namespace

static int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Connection coefficients of the class and double-coset algebras"};
    app.require_subcommand(1);

    int threads = 0;
    int cap_class = env_int("CCSERIES_ORACLE_CAP_CLASS", OracleCaps{}.class_cap, OracleCaps::class_hard_limit);
    int cap_coset = env_int("CCSERIES_ORACLE_CAP_COSET", OracleCaps{}.coset_cap, OracleCaps::coset_hard_limit);
    app.add_option("--threads", threads, "Upper bound on worker threads")->check(CLI::NonNegativeNumber);
    app.add_option("--oracle-cap-class", cap_class, "Largest n for the S_n brute force")
        ->check(CLI::Range(1, OracleCaps::class_hard_limit));
    app.add_option("--oracle-cap-coset", cap_coset, "Largest n for the S_2n brute force")
        ->check(CLI::Range(1, OracleCaps::coset_hard_limit));

    std::vector<std::string> kinds;
    for (const auto& [k, v] : kKindNames)
        kinds.push_back(k);

    std::string kind, format = "json", lambda_text, mu_text, suite;
    int n = 0;

    auto* table = app.add_subcommand("table", "Emit a full coefficient table");
    table->add_option("--kind", kind)->required()->check(CLI::IsMember(kinds));
    table->add_option("-n", n)->required()->check(CLI::PositiveNumber);
    table->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* coeff = app.add_subcommand("coeff", "Emit a single coefficient");
    coeff->add_option("--kind", kind)->required()->check(CLI::IsMember(kinds));
    coeff->add_option("-n", n)->required()->check(CLI::PositiveNumber);
    coeff->add_option("--lambda", lambda_text)->required();
    auto* mu_opt = coeff->add_option("--mu", mu_text);
    coeff->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* verify = app.add_subcommand("verify", "Run a verification battery");
    verify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"class-oracle", "coset-oracle", "zonal-oracle", "closed-forms", "all"}));
    verify->add_option("-n", n)->required()->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    if (threads > 0)
        omp_set_num_threads(threads);
    const OracleCaps caps{cap_class, cap_coset};

    try {
        if (*table) {
            check_table_n(n);
            auto records = build_table(kind, n);
            if (format == "csv")
                write_csv(out, records);
            else
                write_table_json(out, n, kKindNames.at(kind), records);
            return kSuccess;
        }
        if (*coeff) {
            check_table_n(n);
            Partition lambda, mu;
            try {
                lambda = Partition::parse(lambda_text);
                if (*mu_opt)
                    mu = Partition::parse(mu_text);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            OutputRecord r = build_coeff(kind, n, lambda, *mu_opt ? std::optional(mu) : std::nullopt);
            if (format == "csv") {
                write_csv(out, {r});
            } else {
                nlohmann::ordered_json j;
                j["n"] = r.n;
                j["kind"] = r.kind;
                const nlohmann::ordered_json fields = record_json(r);
                for (const auto& [k, v] : fields.items())
                    j[k] = v;
                out << j.dump(2) << '\n';
            }
            return kSuccess;
        }

        // verify
        VerifyReport report;
        auto append = [&](const VerifyReport& r) {
            report.lines.insert(report.lines.end(), r.lines.begin(), r.lines.end());
        };
        if (suite == "all") {
            const int nc = std::min(n, caps.class_cap), nk = std::min(n, caps.coset_cap);
            const int nz = std::min(n, OracleCaps::coset_hard_limit);
            if (nc < n || nk < n || nz < n)
                out << "note: oracle suites clamped to n = " << nc << " (class), " << nk << " (coset), " << nz
                    << " (zonal)\n";
            append(verify_class_oracle(nc, caps));
            append(verify_coset_oracle(nk, caps));
            append(verify_zonal_oracle(nz));
            append(verify_closed_forms(n));
        } else if (suite == "class-oracle") {
            append(verify_class_oracle(n, caps));
        } else if (suite == "coset-oracle") {
            append(verify_coset_oracle(n, caps));
        } else if (suite == "zonal-oracle") {
            append(verify_zonal_oracle(n));
        } else {
            append(verify_closed_forms(n));
        }
        print_report(out, report);
        std::size_t failed = static_cast<std::size_t>(
            std::ranges::count_if(report.lines, [](const CheckLine& l) { return !l.passed; }));
        out << (failed ? "FAILED " : "OK ") << report.lines.size() - failed << "/" << report.lines.size()
            << " checks passed\n";
        return failed ? kVerificationFailed : kSuccess;
    } catch (const CapExceeded& e) {
        err << "refused: " << e.what() << '\n';
        return kOverCap;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    try {
        return run_impl(args, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace ccseries::cli
