#include "ccseries/characters.hpp"
#include "ccseries/double_coset.hpp"
#include "ccseries/oracle.hpp"

#include <doctest.h>

using namespace ccseries;

namespace {

BigInt k_top_over_b(int n)
{
    return coset_size(Partition::row(n)) / hyperoctahedral_order(n - 1);
}

}  // namespace

TEST_CASE("phi on the top coset")
{
    for (int n = 1; n <= 7; ++n) {
        CHECK(phi_top_nearhook(NearHook::make(n, 0, 0)) == k_top_over_b(n) * double_factorial(2 * n - 2));
        for (const auto& h : near_hooks(n))
            CHECK(phi_top_nearhook(h) == phi_top(h.partition()));
        for (const auto& l : enumerate_partitions(n))
            if (l.contains({2, 2, 2}))
                CHECK(phi_top(l) == 0);
    }
    CHECK(phi_top_nearhook(NearHook::make(1, 0, 0)) == 2);
}

TEST_CASE("spherical table against histogram")
{
    for (int n = 1; n <= 4; ++n) {
        SphericalTable direct(n);
        SphericalTable hist(coset_histogram(n));
        const BigInt bn = hyperoctahedral_order(n);
        for (const auto& b : enumerate_partitions(n)) {
            CHECK(direct.phi(b, Partition::row(n)) == phi_top(b));
            for (const auto& m : enumerate_partitions(n))
                CHECK(direct.phi(b, m) == hist.phi(b, m));
        }
        // (S_2n, B_n) is a Gelfand pair, so each 2beta contains the trivial
        // representation of B_n exactly once.
        for (const auto& b : enumerate_partitions(n))
            CHECK(direct.phi(b, Partition::column(n)) == bn);
    }
}

TEST_CASE("double coset connection coefficients")
{
    CHECK(connection_b({1}, {1}, {1}) == 2);
    BigInt total = 0;
    for (const auto& l : enumerate_partitions(2))
        for (const auto& m : enumerate_partitions(2))
            total += connection_b(l, m, {2});
    CHECK(total == 24);
    for (int n = 1; n <= 4; ++n) {
        auto ps = enumerate_partitions(n);
        auto brute = double_coset_convolution_table(n);
        SphericalTable t(n);
        for (std::size_t k = 0; k < ps.size(); ++k)
            for (std::size_t i = 0; i < ps.size(); ++i) {
                BigInt row = 0;
                for (std::size_t j = 0; j < ps.size(); ++j) {
                    BigInt b = connection_b(ps[i], ps[j], ps[k], t);
                    CHECK(b == brute[k][i][j]);
                    row += b;
                }
                CHECK(row == coset_size(ps[i]));
            }
    }
}

TEST_CASE("main series closed forms")
{
    for (int n = 1; n <= 8; ++n) {
        CHECK(main_series_coefficient(Partition::row(n), Partition::row(n)) == double_factorial(2 * n - 1));
        for (const auto& l : enumerate_partitions(n)) {
            BigInt expected = multinomial(l);
            for (int part : l.parts())
                expected *= double_factorial(2 * part - 1);
            CHECK(main_series_coefficient(l, Partition::row(n)) == expected);
        }
        if (n >= 2)
            CHECK(main_series_coefficient({n - 1, 1}, {n - 1, 1}) == n * (n - 2) * double_factorial(2 * n - 5));
        if (n >= 4) {
            Partition p2 = Partition::from_unsorted({n - 2, 1, 1});
            CHECK(main_series_coefficient(p2, p2) == n * (n - 4) * (n - 3) * (n - 3) * double_factorial(2 * n - 9));
        }
        for (int p = 0; p < n; ++p) {
            Partition l = Partition::hook(n, p);
            CHECK(main_series_coefficient(l, l) == closed_form_npone(n, p));
        }
    }
    CHECK(closed_form_npone(5, 1) == 225);
    CHECK(closed_form_npone(4, 2) == 0);
}

TEST_CASE("main series symmetry and integrality")
{
    for (int n = 1; n <= 8; ++n) {
        auto t = main_series_table(n);
        for (const auto& [key, v] : t.entries) {
            CHECK(is_integer(v));
            CHECK(v >= 0);
            CHECK(v == t.at(key.second, key.first));
        }
    }
}

TEST_CASE("main series agrees with brute force and with the zonal expansion")
{
    for (int n = 1; n <= 4; ++n) {
        auto ps = enumerate_partitions(n);
        auto brute = double_coset_convolution_table(n);
        std::vector<std::vector<BigInt>> top(ps.size(), std::vector<BigInt>(ps.size()));
        std::vector<BigInt> top_single(ps.size());
        for (std::size_t i = 0; i < ps.size(); ++i) {
            for (std::size_t j = 0; j < ps.size(); ++j)
                top[i][j] = brute[0][i][j];
            top_single[i] = brute[0][i][0];
        }
        auto table = main_series_table(n);
        CHECK(table.entries == series_from_b(n, top).entries);
        CHECK(table.entries == series_via_zonal(n).entries);
        CHECK(pi_series(n) == pi_series_from_b(n, top_single));
        CHECK(pi_series(n) == pi_series_via_zonal(n));
    }
}

TEST_CASE("main series is thread-count independent")
{
    for (int n = 1; n <= 7; ++n)
        CHECK(main_series_table(n, 1).entries == main_series_table(n, 4).entries);
}

TEST_CASE("pi series table")
{
    for (int n = 1; n <= 9; ++n) {
        auto pi = pi_series(n);
        CHECK(pi.coefficient(Partition::row(n)) == double_factorial(2 * n - 2));
        CHECK(pi.coefficient(Partition::column(n)) == factorial(n));
        if (n >= 2)
            CHECK(pi.coefficient({n - 1, 1}) == n * double_factorial(2 * n - 4));
        if (n >= 4)
            CHECK(pi.coefficient({n - 2, 2}) == ratio(n * (3 * n - 5), 2) * double_factorial(2 * n - 6));
    }
    CHECK(pi_series(4).coefficient({4}) == 48);
    CHECK(r_prime_n(3, 0, 3) == double_factorial(4));
}
