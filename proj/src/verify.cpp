#include "ccseries/verify.hpp"

#include "ccseries/characters.hpp"
#include "ccseries/class_algebra.hpp"
#include "ccseries/double_coset.hpp"
#include "ccseries/zonal_nearhook.hpp"

#include <functional>
#include <optional>
#include <sstream>

namespace ccseries {

namespace {

struct Check {
    VerifyReport& report;
    std::string suite;

    // `body` returns an empty optional on success, else the counterexample.
    void operator()(const std::string& name, const std::function<std::optional<std::string>()>& body)
    {
        CheckLine line{suite, name, true, {}};
        try {
            if (auto bad = body()) {
                line.passed = false;
                line.detail = *bad;
            }
        } catch (const CapExceeded&) {
            throw;
        } catch (const std::exception& e) {
            line.passed = false;
            line.detail = std::string("exception: ") + e.what();
        }
        report.lines.push_back(std::move(line));
    }
};

std::string cell(const Partition& l, const Partition& m)
{
    return "lambda=" + l.to_string() + " mu=" + m.to_string();
}

std::string mismatch(const std::string& where, const std::string& expected, const std::string& actual)
{
    return where + ": expected " + expected + ", got " + actual;
}

std::optional<std::string> compare_tables(const SeriesCoefficientTable& want, const SeriesCoefficientTable& got)
{
    for (const Partition& l : enumerate_partitions(want.n))
        for (const Partition& m : enumerate_partitions(want.n))
            if (want.at(l, m) != got.at(l, m))
                return mismatch(cell(l, m), want.at(l, m).get_str(), got.at(l, m).get_str());
    return std::nullopt;
}

struct PiRow {
    const char* label;
    int min_n;
    std::function<Partition(int)> shape;
    std::function<Rational(int)> value;
};

std::vector<PiRow> pi_rows()
{
    auto df = [](long k) { return Rational(double_factorial(k)); };
    auto tail = [](int head, std::vector<int> rest) {
        std::vector<int> p{head};
        p.insert(p.end(), rest.begin(), rest.end());
        return Partition(std::move(p));
    };
    return {
        {"(n)", 1, [](int n) { return Partition::row(n); }, [=](int n) -> Rational { return df(2 * n - 2); }},
        {"(n-1,1)", 2, [=](int n) { return tail(n - 1, {1}); }, [=](int n) -> Rational { return n * df(2 * n - 4); }},
        {"(n-2,1,1)", 3, [=](int n) { return tail(n - 2, {1, 1}); },
         [=](int n) -> Rational { return Rational(n * (n - 1)) * df(2 * n - 6); }},
        {"(n-3,1,1,1)", 4, [=](int n) { return tail(n - 3, {1, 1, 1}); },
         [=](int n) -> Rational { return Rational(n * (n - 1) * (n - 2)) * df(2 * n - 8); }},
        {"(1^n)", 1, [](int n) { return Partition::column(n); }, [](int n) -> Rational { return Rational(factorial(n)); }},
        {"(n-2,2)", 4, [=](int n) { return tail(n - 2, {2}); },
         [=](int n) -> Rational { return ratio(n * (3 * n - 5), 2) * df(2 * n - 6); }},
        {"(n-3,3)", 6, [=](int n) { return tail(n - 3, {3}); },
         [=](int n) -> Rational { return ratio(n * (5 * n * n - 21 * n + 20), 2) * df(2 * n - 8); }},
        {"(n-4,4)", 8, [=](int n) { return tail(n - 4, {4}); },
         [=](int n) -> Rational { return ratio(n * (35 * n * n * n - 270 * n * n + 649 * n - 486), 8) * df(2 * n - 10); }},
    };
}

}  // namespace

bool VerifyReport::ok() const
{
    for (const auto& l : lines)
        if (!l.passed)
            return false;
    return true;
}

VerifyReport verify_class_oracle(int n, const OracleCaps& caps)
{
    if (n > caps.class_cap)
        throw CapExceeded("class-oracle: n = " + std::to_string(n) + " exceeds cap " + std::to_string(caps.class_cap));
    VerifyReport report;
    Check check{report, "class-oracle"};
    for (int m = 1; m <= n; ++m) {
        const std::string tag = " (n=" + std::to_string(m) + ")";
        auto parts = enumerate_partitions(m);
        auto brute = class_convolution_table(m, caps);
        check("connection_c == class_convolution" + tag, [&]() -> std::optional<std::string> {
            CharacterTable chars;
            for (std::size_t v = 0; v < parts.size(); ++v)
                for (std::size_t l = 0; l < parts.size(); ++l)
                    for (std::size_t u = 0; u < parts.size(); ++u) {
                        BigInt c = connection_c(parts[l], parts[u], parts[v], chars);
                        BigInt b(static_cast<unsigned long>(brute[v][l][u]));
                        if (c != b)
                            return mismatch(cell(parts[l], parts[u]) + " nu=" + parts[v].to_string(), b.get_str(),
                                            c.get_str());
                    }
            return std::nullopt;
        });
        check("connection_c_top == connection_c(., ., (n))" + tag, [&]() -> std::optional<std::string> {
            auto top = connection_c_top_table(m);
            CharacterTable chars;
            for (std::size_t l = 0; l < parts.size(); ++l)
                for (std::size_t u = 0; u < parts.size(); ++u) {
                    BigInt c = connection_c(parts[l], parts[u], Partition::row(m), chars);
                    if (c != top[l][u])
                        return mismatch(cell(parts[l], parts[u]), c.get_str(), top[l][u].get_str());
                }
            return std::nullopt;
        });
        check("sum_mu c^n_{lambda mu} == |C_lambda|" + tag, [&]() -> std::optional<std::string> {
            auto top = connection_c_top_table(m);
            for (std::size_t l = 0; l < parts.size(); ++l) {
                BigInt s = 0;
                for (const auto& v : top[l])
                    s += v;
                if (s != class_size(parts[l]))
                    return mismatch("lambda=" + parts[l].to_string(), class_size(parts[l]).get_str(), s.get_str());
            }
            return std::nullopt;
        });
    }
    return report;
}

VerifyReport verify_coset_oracle(int n, const OracleCaps& caps)
{
    if (n > caps.coset_cap)
        throw CapExceeded("coset-oracle: n = " + std::to_string(n) + " exceeds cap " + std::to_string(caps.coset_cap));
    VerifyReport report;
    Check check{report, "coset-oracle"};
    for (int m = 1; m <= n; ++m) {
        const std::string tag = " (n=" + std::to_string(m) + ")";
        auto parts = enumerate_partitions(m);
        auto brute = double_coset_convolution_table(m, caps);
        const SphericalTable sph(m);
        check("connection_b == double_coset_convolution" + tag, [&]() -> std::optional<std::string> {
            for (std::size_t v = 0; v < parts.size(); ++v)
                for (std::size_t l = 0; l < parts.size(); ++l)
                    for (std::size_t u = 0; u < parts.size(); ++u) {
                        BigInt c = connection_b(parts[l], parts[u], parts[v], sph);
                        BigInt b(static_cast<unsigned long>(brute[v][l][u]));
                        if (c != b)
                            return mismatch(cell(parts[l], parts[u]) + " nu=" + parts[v].to_string(), b.get_str(),
                                            c.get_str());
                    }
            return std::nullopt;
        });
        check("near-hook series == brute-force series" + tag, [&]() -> std::optional<std::string> {
            std::vector<std::vector<BigInt>> top(parts.size(), std::vector<BigInt>(parts.size()));
            for (std::size_t l = 0; l < parts.size(); ++l)
                for (std::size_t u = 0; u < parts.size(); ++u)
                    top[l][u] = BigInt(static_cast<unsigned long>(brute[0][l][u]));
            return compare_tables(series_from_b(m, top), main_series_table(m));
        });
        check("sum_mu b^nu_{lambda mu} == |K_lambda|" + tag, [&]() -> std::optional<std::string> {
            for (std::size_t v = 0; v < parts.size(); ++v)
                for (std::size_t l = 0; l < parts.size(); ++l) {
                    BigInt s = 0;
                    for (std::size_t u = 0; u < parts.size(); ++u)
                        s += static_cast<unsigned long>(brute[v][l][u]);
                    if (s != coset_size(parts[l]))
                        return mismatch("lambda=" + parts[l].to_string() + " nu=" + parts[v].to_string(),
                                        coset_size(parts[l]).get_str(), s.get_str());
                }
            return std::nullopt;
        });
    }
    return report;
}

VerifyReport verify_zonal_oracle(int n)
{
    if (n > OracleCaps::coset_hard_limit)
        throw CapExceeded("zonal-oracle: n = " + std::to_string(n) + " exceeds the histogram limit "
                          + std::to_string(OracleCaps::coset_hard_limit));
    VerifyReport report;
    Check check{report, "zonal-oracle"};
    for (int m = 1; m <= n; ++m) {
        const CosetHistogram hist = coset_histogram(m);
        for (const NearHook& h : near_hooks(m)) {
            check("zonal_Z == zonal_oracle for " + h.partition().to_string(), [&]() -> std::optional<std::string> {
                MonomialExpansion want = zonal_oracle(h.partition(), hist);
                MonomialExpansion got = zonal_Z(h);
                if (!(want == got)) {
                    std::ostringstream os;
                    os << "oracle " << want << " vs near-hook " << got;
                    return os.str();
                }
                return std::nullopt;
            });
        }
    }
    return report;
}

VerifyReport verify_closed_forms(int n)
{
    VerifyReport report;
    Check check{report, "closed-forms"};
    for (int m = 1; m <= n; ++m) {
        const std::string tag = " (n=" + std::to_string(m) + ")";
        check("class series == (n-l)!(n-m)!/(n+1-l-m)!" + tag, [&]() -> std::optional<std::string> {
            auto v = verify_mv09(m);
            if (v.ok)
                return std::nullopt;
            return mismatch(cell(v.first_mismatch->lambda, v.first_mismatch->mu), v.first_mismatch->expected.get_str(),
                            v.first_mismatch->actual.get_str());
        });
        check("single class series == 1/(n+1-l)" + tag, [&]() -> std::optional<std::string> {
            auto v = verify_fv10(m);
            if (v.ok)
                return std::nullopt;
            return mismatch("lambda=" + v.first_mismatch->lambda.to_string(), v.first_mismatch->expected.get_str(),
                            v.first_mismatch->actual.get_str());
        });

        const SeriesCoefficientTable table = main_series_table(m);
        const Partition top = Partition::row(m);
        check("[m_lambda m_n] == C(n,lambda)(2 lambda-1)!!" + tag, [&]() -> std::optional<std::string> {
            for (const Partition& l : enumerate_partitions(m)) {
                BigInt want = multinomial(l);
                for (int part : l.parts())
                    want *= double_factorial(2 * part - 1);
                if (table.at(l, top) != Rational(want))
                    return mismatch(cell(l, top), want.get_str(), table.at(l, top).get_str());
                if (table.at(top, l) != Rational(want))
                    return mismatch(cell(top, l), want.get_str(), table.at(top, l).get_str());
            }
            return std::nullopt;
        });
        check("[m_(n-p,1^p) m_(n-p,1^p)] closed form, p = 0..n-1" + tag, [&]() -> std::optional<std::string> {
            for (int p = 0; p < m; ++p) {
                const Partition l = Partition::hook(m, p);
                Rational want(closed_form_npone(m, p));
                if (table.at(l, l) != want)
                    return mismatch(cell(l, l), want.get_str(), table.at(l, l).get_str());
            }
            return std::nullopt;
        });
        check("series coefficients are non-negative integers and symmetric" + tag, [&]() -> std::optional<std::string> {
            for (const Partition& l : enumerate_partitions(m))
                for (const Partition& u : enumerate_partitions(m)) {
                    Rational v = table.at(l, u);
                    if (!is_integer(v) || v < 0)
                        return cell(l, u) + ": " + v.get_str();
                    if (v != table.at(u, l))
                        return cell(l, u) + ": not symmetric";
                }
            return std::nullopt;
        });
        check("Pi_n coefficient table" + tag, [&]() -> std::optional<std::string> {
            MonomialExpansion pi = pi_series(m);
            for (const PiRow& row : pi_rows()) {
                if (m < row.min_n)
                    continue;
                Partition l = row.shape(m);
                if (pi.coefficient(l) != row.value(m))
                    return mismatch(std::string(row.label) + " = " + l.to_string(), row.value(m).get_str(),
                                    pi.coefficient(l).get_str());
            }
            return std::nullopt;
        });
    }
    return report;
}

}  // namespace ccseries
