#include "ccseries/oracle.hpp"
#include "ccseries/zonal_nearhook.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace ccseries;

TEST_CASE("generalized binomials")
{
    CHECK(gen_bin(1, 1) == 1);
    CHECK(gen_bin(2, 1) == Rational(2, 3));
    CHECK(var_gen_bin(1, 1) == Rational(1, 3));
    for (int x = 0; x <= 6; ++x)
        CHECK(gen_bin(x, 0) == 1);
    CHECK(gen_bin(3, 2) == Rational(3, 5));
    CHECK(var_gen_bin(3, 2) == Rational(9, 35));
    for (int x = 0; x <= 6; ++x)
        CHECK(var_gen_bin(x, 0) == 1);
    for (int x = 0; x <= 6; ++x)
        for (int y = 0; y <= x; ++y)
            CHECK(gen_bin(x, y) == ratio(binomial(x, y) * binomial(x, y), binomial(2 * x, 2 * y)));
    // Multinomial form for a partition.
    CHECK(gen_bin(Partition{2, 1}) == gen_bin(3, 2) * gen_bin(1, 1));
}

TEST_CASE("r_n")
{
    for (int n = 1; n <= 8; ++n)
        CHECK(r_n(n, 0, n) == double_factorial(2 * n - 1));
    CHECK(r_n(3, 0, 3) == 15);
}

TEST_CASE("skew factors")
{
    for (int n = 0; n <= 5; ++n)
        for (const auto& l : enumerate_partitions(n)) {
            CHECK(skew_phi(l, l) == 1);
            CHECK(skew_psi(l, l) == 1);
        }
    CHECK_THROWS(skew_phi({2, 2}, {1}));
    CHECK_THROWS(skew_psi({2}, {3}));
}

TEST_CASE("filling enumeration")
{
    NearHook shape = NearHook::make(6, 3, 2);
    Partition type{3, 2, 2, 2, 2};
    auto fs = enumerate_fillings(shape, type);
    std::vector<FillingRow> expected{{2, 0, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 0}, {2, 0, 0}};
    bool found = false;
    for (const auto& f : fs)
        found = found || f.rows() == expected;
    CHECK(found);
    NearHookFilling f(shape, type, expected);
    CHECK(f.shape_after(0) == Partition{6, 3, 1, 1});
    CHECK(f.shape_after(1) == Partition{4, 3, 1});
    CHECK(f.shape_after(2) == Partition{3, 2, 1});
    CHECK(f.shape_after(3) == Partition{3, 1});
    CHECK(f.shape_after(4) == Partition{2});
    CHECK(f.shape_after(5) == Partition());

    for (int n = 1; n <= 7; ++n)
        CHECK(enumerate_fillings(NearHook::make(n, 0, 0), Partition::row(n)).size() == 1);

    for (int n = 1; n <= 7; ++n)
        for (const auto& h : near_hooks(n))
            for (const auto& mu : enumerate_partitions(n))
                CHECK(static_cast<long>(enumerate_fillings(h, mu).size()) ==
                      oracles::count_ssyt(h.partition(), mu.parts()));
    CHECK_THROWS(enumerate_fillings(NearHook::make(2, 0, 0), Partition{2, 1}));
    CHECK_THROWS(NearHookFilling(NearHook::make(2, 0, 0), Partition{1, 1}, {{2, 0, 0}, {0, 0, 0}}));
}

TEST_CASE("filling steps reproduce the skew factor")
{
    for (int n = 1; n <= 7; ++n)
        for (const auto& h : near_hooks(n))
            for (const auto& mu : enumerate_partitions(n))
                for (const auto& f : enumerate_fillings(h, mu)) {
                    Rational total = 1;
                    for (int i = 1; i <= f.steps(); ++i) {
                        Rational step = skew_phi(f.shape_after(i - 1), f.shape_after(i));
                        CHECK(f.step_factor(i) == step);
                        total *= step;
                    }
                    CHECK(total == f.phi_product());
                    CHECK(q_prefactor(h) * f.weight() == f.phi_product());
                }
}

TEST_CASE("one row zonal polynomials")
{
    for (int n = 1; n <= 7; ++n) {
        auto p = p_near_hook(NearHook::make(n, 0, 0));
        auto q = q_near_hook(NearHook::make(n, 0, 0));
        for (const auto& l : enumerate_partitions(n)) {
            CHECK(p.coefficient(l) == gen_bin(l));
            CHECK(q.coefficient(l) == ratio(binomial(2 * n, n), pow_int(4, static_cast<unsigned long>(n))) * gen_bin(l));
        }
    }
    auto q1 = q_near_hook(NearHook::make(1, 0, 0));
    CHECK(q1.coefficient({1}) == Rational(1, 2));
    auto z2 = zonal_Z(NearHook::make(2, 0, 0));
    CHECK(z2.coefficient({2}) == 3);
    CHECK(z2.coefficient({1, 1}) == 2);
    CHECK(zonal_Z(NearHook::make(1, 0, 0)).coefficient({1}) == 1);
}

TEST_CASE("near hook expansions")
{
    for (int n = 1; n <= 8; ++n)
        for (const auto& h : near_hooks(n)) {
            auto p = p_near_hook(h);
            auto q = q_near_hook(h);
            auto [c, cp, hh] = c_products(h.partition());
            CHECK(Rational(cp) * q == Rational(c) * p);
            CHECK(p.coefficient(h.partition()) == 1);
            for (const auto& [l, v] : p.terms())
                CHECK(v > 0);
            if (n <= 6) {
                CHECK(q == q_by_tableaux(h));
                CHECK(p == p_by_tableaux(h));
            }
        }
}

TEST_CASE("near hook zonal polynomials agree with the spherical function oracle")
{
    for (int n = 1; n <= 5; ++n) {
        CosetHistogram hist = coset_histogram(n);
        for (const auto& h : near_hooks(n))
            CHECK(zonal_Z(h) == zonal_oracle(h.partition(), hist));
    }
}
