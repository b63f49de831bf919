// Acceptance battery: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include "ccseries/characters.hpp"
#include "ccseries/class_algebra.hpp"
#include "ccseries/double_coset.hpp"
#include "ccseries/oracle.hpp"
#include "ccseries/zonal_nearhook.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

using namespace ccseries;

namespace {

using Failure = std::optional<std::string>;

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<Failure()> body;
};

std::string cell(const Partition& l, const Partition& m)
{
    return "(" + l.to_string() + ", " + m.to_string() + ")";
}

template <class A, class B>
Failure expect_eq(const std::string& where, const A& expected, const B& actual)
{
    if (expected == actual)
        return std::nullopt;
    std::ostringstream os;
    os << where << ": expected " << expected << ", got " << actual;
    return os.str();
}

BigInt ff(long n)
{
    return n < 0 ? BigInt(0) : factorial(n);
}

Failure class_oracle_equivalence()
{
    for (int n = 1; n <= 6; ++n) {
        CharacterTable t;
        auto ps = enumerate_partitions(n);
        auto brute = class_convolution_table(n);
        for (std::size_t k = 0; k < ps.size(); ++k)
            for (std::size_t i = 0; i < ps.size(); ++i)
                for (std::size_t j = 0; j < ps.size(); ++j)
                    if (auto f = expect_eq("c at " + cell(ps[i], ps[j]) + " nu=" + ps[k].to_string(),
                                           BigInt(brute[k][i][j]), connection_c(ps[i], ps[j], ps[k], t)))
                        return f;
    }
    return std::nullopt;
}

Failure class_top_closed_form()
{
    for (int n = 1; n <= 7; ++n) {
        auto s = class_top_series(n);
        for (const auto& l : enumerate_partitions(n))
            for (const auto& m : enumerate_partitions(n)) {
                long top = n + 1 - l.length() - m.length();
                Rational expected = top < 0 ? Rational(0) : ratio(ff(n - l.length()) * ff(n - m.length()), ff(top));
                if (auto f = expect_eq("n=" + std::to_string(n) + " " + cell(l, m), expected, s.at(l, m)))
                    return f;
            }
    }
    return std::nullopt;
}

Failure class_single_closed_form()
{
    for (int n = 1; n <= 7; ++n) {
        auto s = class_top_single_series(n);
        for (const auto& l : enumerate_partitions(n))
            if (auto f = expect_eq("n=" + std::to_string(n) + " " + l.to_string(), ratio(1, n + 1 - l.length()),
                                   s.coefficient(l)))
                return f;
    }
    return std::nullopt;
}

Failure coset_oracle_equivalence(int max_n)
{
    const OracleCaps caps{OracleCaps{}.class_cap, OracleCaps::coset_hard_limit};
    for (int n = 1; n <= max_n; ++n) {
        auto ps = enumerate_partitions(n);
        auto brute = double_coset_convolution_table(n, caps);
        SphericalTable t(n);
        for (std::size_t k = 0; k < ps.size(); ++k)
            for (std::size_t i = 0; i < ps.size(); ++i)
                for (std::size_t j = 0; j < ps.size(); ++j)
                    if (auto f = expect_eq("b at " + cell(ps[i], ps[j]) + " nu=" + ps[k].to_string(),
                                           BigInt(brute[k][i][j]), connection_b(ps[i], ps[j], ps[k], t)))
                        return f;
        // Change of basis of the brute-force top slice into m(x)m(y).
        auto pm = powersum_monomial_matrix(n);
        const BigInt bn = hyperoctahedral_order(n);
        auto table = main_series_table(n);
        for (std::size_t a = 0; a < ps.size(); ++a)
            for (std::size_t b = 0; b < ps.size(); ++b) {
                BigInt s = 0;
                for (std::size_t i = 0; i < ps.size(); ++i)
                    for (std::size_t j = 0; j < ps.size(); ++j)
                        s += BigInt(brute[0][i][j]) * pm[i][a] * pm[j][b];
                if (auto f = expect_eq("series n=" + std::to_string(n) + " " + cell(ps[a], ps[b]), ratio(s, bn),
                                       table.at(ps[a], ps[b])))
                    return f;
            }
    }
    return std::nullopt;
}

Failure zonal_correctness()
{
    for (int n = 1; n <= 5; ++n) {
        auto hist = coset_histogram(n);
        for (const auto& h : near_hooks(n))
            if (auto f = expect_eq("Z " + h.partition().to_string(), zonal_oracle(h.partition(), hist), zonal_Z(h)))
                return f;
    }
    for (int n = 1; n <= 8; ++n)
        for (const auto& h : near_hooks(n)) {
            auto [c, cp, hh] = c_products(h.partition());
            MonomialExpansion z = zonal_Z(h);
            if (auto f = expect_eq("c P " + h.partition().to_string(), z, Rational(c) * p_near_hook(h)))
                return f;
            if (auto f = expect_eq("c' Q " + h.partition().to_string(), z, Rational(cp) * q_near_hook(h)))
                return f;
        }
    return std::nullopt;
}

Failure closed_form_spots()
{
    for (int n = 1; n <= 10; ++n) {
        const Partition row = Partition::row(n);
        auto tag = "n=" + std::to_string(n) + " ";
        if (auto f = expect_eq(tag + "[m_n m_n]", Rational(double_factorial(2 * n - 1)), main_series_coefficient(row, row)))
            return f;
        for (const auto& l : enumerate_partitions(n)) {
            BigInt e = factorial(n);
            for (int p : l.parts())
                e = e / factorial(p) * double_factorial(2 * p - 1);
            if (auto f = expect_eq(tag + "[m_" + l.to_string() + " m_n]", Rational(e), main_series_coefficient(l, row)))
                return f;
        }
        for (int p = 0; p <= 2 && p < n; ++p) {
            Partition l = Partition::hook(n, p);
            Rational e = 0;
            if (2 * p <= n - 1) {
                Rational r = ratio(ff(n - p - 1), ff(n - 2 * p));
                e = Rational(n * (n - 2 * p)) * r * r * Rational(double_factorial(2 * n - 4 * p - 1));
            }
            // Factor patterns for p = 1 and p = 2.
            if (p == 1 && n >= 2)
                if (auto f = expect_eq(tag + "p=1 form", e, Rational(BigInt(n) * (n - 2) * double_factorial(2 * n - 5))))
                    return f;
            if (p == 2 && n >= 4)
                if (auto f = expect_eq(tag + "p=2 form", e,
                                       Rational(BigInt(n) * (n - 4) * (n - 3) * (n - 3) *
                                                (n >= 5 ? double_factorial(2 * n - 9) : BigInt(0)))))
                    return f;
            if (auto f = expect_eq(tag + "diagonal " + l.to_string(), e, main_series_coefficient(l, l)))
                return f;
        }
    }
    return std::nullopt;
}

Failure pi_table()
{
    for (int n = 1; n <= 9; ++n) {
        auto pi = pi_series(n);
        auto tag = "n=" + std::to_string(n) + " ";
        auto df = [](long k) { return Rational(double_factorial(k)); };
        std::vector<std::pair<Partition, Rational>> rows{
            {Partition::row(n), df(2 * n - 2)},
            {Partition::column(n), Rational(factorial(n))},
        };
        if (n >= 2)
            rows.push_back({Partition::from_unsorted({n - 1, 1}), Rational(n) * df(2 * n - 4)});
        if (n >= 3)
            rows.push_back({Partition::from_unsorted({n - 2, 1, 1}), Rational(n * (n - 1)) * df(2 * n - 6)});
        if (n >= 4) {
            rows.push_back({Partition::from_unsorted({n - 3, 1, 1, 1}), Rational(n * (n - 1) * (n - 2)) * df(2 * n - 8)});
            rows.push_back({Partition::from_unsorted({n - 2, 2}), ratio(n * (3 * n - 5), 2) * df(2 * n - 6)});
        }
        for (const auto& [l, v] : rows)
            if (auto f = expect_eq(tag + l.to_string(), v, pi.coefficient(l)))
                return f;
    }
    return std::nullopt;
}

Failure integrality()
{
    for (int n = 1; n <= 8; ++n)
        for (const auto& [key, v] : main_series_table(n).entries)
            if (!is_integer(v) || v < 0)
                return "series coefficient " + cell(key.first, key.second) + " = " + to_string(v);
    // connection_c throws on a non-integral character sum.
    for (int n = 1; n <= 8; ++n) {
        CharacterTable t;
        auto ps = enumerate_partitions(n);
        for (const auto& l : ps)
            for (const auto& m : ps)
                for (const auto& v : ps)
                    if (connection_c(l, m, v, t) < 0)
                        return "negative c at " + cell(l, m);
    }
    for (int n = 1; n <= 5; ++n) {
        SphericalTable t(n);
        auto ps = enumerate_partitions(n);
        for (const auto& l : ps)
            for (const auto& m : ps)
                for (const auto& v : ps)
                    if (connection_b(l, m, v, t) < 0)
                        return "negative b at " + cell(l, m);
    }
    return std::nullopt;
}

Failure row_sums()
{
    for (int n = 1; n <= 7; ++n) {
        auto ps = enumerate_partitions(n);
        auto brute = class_convolution_table(n);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            BigInt s = 0, s_formula = 0;
            for (std::size_t j = 0; j < ps.size(); ++j) {
                s += brute[0][i][j];
                s_formula += connection_c_top(ps[i], ps[j]);
            }
            if (auto f = expect_eq("c row " + ps[i].to_string(), factorial(n) / z_of(ps[i]), s))
                return f;
            if (auto f = expect_eq("c row (formula) " + ps[i].to_string(), factorial(n) / z_of(ps[i]), s_formula))
                return f;
        }
    }
    for (int n = 1; n <= 5; ++n) {
        auto ps = enumerate_partitions(n);
        SphericalTable t(n);
        auto brute = n <= 4 ? double_coset_convolution_table(n) : ConvolutionTensor{};
        for (std::size_t k = 0; k < ps.size(); ++k)
            for (std::size_t i = 0; i < ps.size(); ++i) {
                BigInt s = 0, s_brute = 0;
                for (std::size_t j = 0; j < ps.size(); ++j) {
                    s += connection_b(ps[i], ps[j], ps[k], t);
                    if (n <= 4)
                        s_brute += brute[k][i][j];
                }
                if (auto f = expect_eq("b row " + ps[i].to_string(), coset_size(ps[i]), s))
                    return f;
                if (n <= 4)
                    if (auto f = expect_eq("b row (oracle) " + ps[i].to_string(), coset_size(ps[i]), s_brute))
                        return f;
            }
    }
    return std::nullopt;
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "class algebra: character formula equals brute force, n <= 6", 30, class_oracle_equivalence},
        {2, "class algebra: top series closed form, n <= 7", 10, class_top_closed_form},
        {3, "class algebra: single top series closed form, n <= 7", 5, class_single_closed_form},
        {4, "double cosets: b and series equal brute force, n <= 5", 20 * 60, [] { return coset_oracle_equivalence(5); }},
        {5, "zonal near hooks: oracle for n <= 5, c P = c' Q = Z for n <= 8", 120, zonal_correctness},
        {6, "double cosets: closed form spot values, n <= 10", 30, closed_form_spots},
        {7, "Pi series coefficient table, n <= 9", 60, pi_table},
        {8, "integrality and nonnegativity", 300, integrality},
        {9, "row sum conservation", 300, row_sums},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Failure f;
        try {
            f = c.body();
        } catch (const std::exception& e) {
            f = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!f && secs > c.limit_seconds)
            f = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s";
        failed += f.has_value();
        std::cout << (f ? "FAIL" : "PASS") << " criterion " << c.id << ": " << c.title << " [" << std::fixed
                  << std::setprecision(2) << secs << " s]";
        if (f)
            std::cout << " -- " << *f;
        std::cout << '\n';
    }
    return failed ? 1 : 0;
}
