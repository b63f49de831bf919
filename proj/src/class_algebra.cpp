#include "ccseries/class_algebra.hpp"

#include <omp.h>

namespace ccseries {

namespace {

void check_same_weight(const Partition& a, const Partition& b)
{
    if (a.weight() != b.weight())
        throw std::invalid_argument("weight mismatch: " + a.to_string() + " vs " + b.to_string());
}

// Hook characters chi^{(n-a,1^a)}_lambda, [a][lambda index].
std::vector<std::vector<BigInt>> hook_characters(const std::vector<Partition>& parts, int n)
{
    CharacterTable table;
    std::vector<std::vector<BigInt>> chi(static_cast<std::size_t>(n), std::vector<BigInt>(parts.size()));
    for (int a = 0; a < n; ++a)
        for (std::size_t i = 0; i < parts.size(); ++i)
            chi[static_cast<std::size_t>(a)][i] = table.character(Partition::hook(n, a), parts[i]);
    return chi;
}

BigInt top_from_hooks(int n, const BigInt& zl, const BigInt& zm,
                      const std::vector<std::vector<BigInt>>& chi, std::size_t li, std::size_t mi)
{
    BigInt sum = 0;
    for (int a = 0; a < n; ++a) {
        BigInt term = factorial(n - 1 - a) * factorial(a)
                      * chi[static_cast<std::size_t>(a)][li] * chi[static_cast<std::size_t>(a)][mi];
        if (a % 2)
            sum -= term;
        else
            sum += term;
    }
    Rational v(sum * n, zl * zm);
    v.canonicalize();
    BigInt r = require_integer(v, "c^(n)_{lambda mu}");
    if (r < 0)
        throw InternalError("negative connection coefficient");
    return r;
}

void set_threads(int threads)
{
    if (threads > 0)
        omp_set_num_threads(threads);
}

}  // namespace

BigInt connection_c(const Partition& lambda, const Partition& mu, const Partition& nu, CharacterTable& table)
{
    check_same_weight(lambda, mu);
    check_same_weight(lambda, nu);
    const int n = lambda.weight();
    Rational sum = 0;
    for (const Partition& alpha : enumerate_partitions(n)) {
        Rational term(table.character(alpha, lambda) * table.character(alpha, mu) * table.character(alpha, nu),
                      table.dimension(alpha));
        term.canonicalize();
        sum += term;
    }
    Rational v = sum * ratio(factorial(n), z_of(lambda) * z_of(mu));
    BigInt r = require_integer(v, "c^nu_{lambda mu} for (" + lambda.to_string() + "," + mu.to_string()
                                      + "," + nu.to_string() + ")");
    if (r < 0)
        throw InternalError("negative connection coefficient");
    return r;
}

BigInt connection_c(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    CharacterTable table;
    return connection_c(lambda, mu, nu, table);
}

BigInt connection_c_top(const Partition& lambda, const Partition& mu, CharacterTable& table)
{
    check_same_weight(lambda, mu);
    const int n = lambda.weight();
    std::vector<std::vector<BigInt>> chi(static_cast<std::size_t>(n), std::vector<BigInt>(2));
    for (int a = 0; a < n; ++a) {
        chi[static_cast<std::size_t>(a)][0] = table.character(Partition::hook(n, a), lambda);
        chi[static_cast<std::size_t>(a)][1] = table.character(Partition::hook(n, a), mu);
    }
    return top_from_hooks(n, z_of(lambda), z_of(mu), chi, 0, 1);
}

BigInt connection_c_top(const Partition& lambda, const Partition& mu)
{
    CharacterTable table;
    return connection_c_top(lambda, mu, table);
}

BigInt mv09_coefficient(const Partition& lambda, const Partition& mu)
{
    check_same_weight(lambda, mu);
    const int n = lambda.weight();
    const int d = n + 1 - lambda.length() - mu.length();
    if (d < 0)
        return 0;
    return factorial(n - lambda.length()) * factorial(n - mu.length()) / factorial(d);
}

Rational fv10_coefficient(const Partition& lambda)
{
    const int n = lambda.weight();
    Rational r(factorial(n), BigInt(n + 1 - lambda.length()));
    r.canonicalize();
    return r;
}

std::vector<std::vector<BigInt>> connection_c_top_table(int n, int threads)
{
    auto parts = enumerate_partitions(n);
    auto chi = hook_characters(parts, n);
    std::vector<BigInt> z(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        z[i] = z_of(parts[i]);

    const long np = static_cast<long>(parts.size());
    std::vector<std::vector<BigInt>> table(parts.size(), std::vector<BigInt>(parts.size()));
    set_threads(threads);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < np; ++i)
        for (long j = 0; j < np; ++j) {
            auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
            table[ui][uj] = top_from_hooks(n, z[ui], z[uj], chi, ui, uj);
        }
    return table;
}

SeriesCoefficientTable class_top_series(int n, int threads)
{
    if (n < 1)
        throw std::invalid_argument("class_top_series: n must be positive");
    auto parts = enumerate_partitions(n);
    auto c = connection_c_top_table(n, threads);
    const std::size_t np = parts.size();
    std::vector<std::vector<Rational>> scaled(np, std::vector<Rational>(np));
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = 0; j < np; ++j) {
            scaled[i][j] = ratio(c[i][j], BigInt(n));
            scaled[i][j].canonicalize();
        }
    auto out = powersum_pairs_to_monomial(n, scaled);

    SeriesCoefficientTable table{n, "1/n", {}};
    for (std::size_t l = 0; l < np; ++l)
        for (std::size_t j = 0; j < np; ++j)
            if (out[l][j] != 0)
                table.entries.emplace(std::pair{parts[l], parts[j]}, out[l][j]);
    return table;
}

MonomialExpansion class_top_single_series(int n)
{
    if (n < 1)
        throw std::invalid_argument("class_top_single_series: n must be positive");
    auto parts = enumerate_partitions(n);
    CharacterTable table;
    const Partition top = Partition::row(n);
    MonomialExpansion e(n);
    for (const Partition& lambda : parts) {
        Rational w(connection_c_top(lambda, top, table), factorial(n));
        w.canonicalize();
        e += w * powersum_to_monomial(lambda);
    }
    return e;
}

VerifyOutcome verify_mv09(int n, int threads)
{
    VerifyOutcome out;
    auto series = class_top_series(n, threads);
    for (const Partition& lambda : enumerate_partitions(n))
        for (const Partition& mu : enumerate_partitions(n)) {
            ++out.cells_checked;
            Rational expected(mv09_coefficient(lambda, mu));
            Rational actual = series.at(lambda, mu);
            if (expected != actual && out.ok) {
                out.ok = false;
                out.first_mismatch = Mismatch{lambda, mu, expected, actual};
            }
        }
    return out;
}

VerifyOutcome verify_fv10(int n)
{
    VerifyOutcome out;
    auto series = class_top_single_series(n);
    const Rational nf(factorial(n));
    for (const Partition& lambda : enumerate_partitions(n)) {
        ++out.cells_checked;
        Rational expected = fv10_coefficient(lambda) / nf;
        Rational actual = series.coefficient(lambda);
        if (expected != actual && out.ok) {
            out.ok = false;
            out.first_mismatch = Mismatch{lambda, Partition::row(n), expected, actual};
        }
    }
    return out;
}

}  // namespace ccseries
