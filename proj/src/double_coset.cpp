#include "ccseries/double_coset.hpp"

#include "ccseries/characters.hpp"

#include <omp.h>

namespace ccseries {

namespace {

void set_threads(int threads)
{
    if (threads > 0)
        omp_set_num_threads(threads);
}

// Filling-weight sums for every near hook of n, aligned with near_hooks(n).
std::vector<MonomialExpansion> all_filling_sums(int n, const std::vector<NearHook>& hooks)
{
    std::vector<MonomialExpansion> sums(hooks.size(), MonomialExpansion(n));
#pragma omp parallel for schedule(dynamic)
    for (long h = 0; h < static_cast<long>(hooks.size()); ++h)
        sums[static_cast<std::size_t>(h)] = filling_weight_sums(hooks[static_cast<std::size_t>(h)]);
    return sums;
}

Rational filling_sum(const NearHook& shape, const Partition& type)
{
    Rational s = 0;
    for (const auto& f : enumerate_fillings(shape, type))
        s += f.weight();
    return s;
}

SeriesCoefficientTable to_table(int n, std::string normalization, const std::vector<std::vector<Rational>>& cells)
{
    auto parts = enumerate_partitions(n);
    SeriesCoefficientTable t{n, std::move(normalization), {}};
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j)
            if (cells[i][j] != 0)
                t.entries.emplace(std::pair{parts[i], parts[j]}, cells[i][j]);
    return t;
}

}  // namespace

BigInt top_box_product(const Partition& lambda)
{
    BigInt prod = 1;
    for (int r = 1; r <= lambda.length(); ++r)
        for (int c = 1; c <= lambda.part(r); ++c) {
            if (r == 1 && c == 1)
                continue;
            auto s = box_stats(lambda, r, c);
            prod *= 2 * s.coarm - s.coleg;
        }
    return prod;
}

BigInt phi_top(const Partition& lambda)
{
    const int n = lambda.weight();
    if (n < 1)
        throw std::invalid_argument("phi_top: empty partition");
    return coset_size(Partition::row(n)) / hyperoctahedral_order(n - 1) * top_box_product(lambda);
}

BigInt phi_top_nearhook(const NearHook& shape)
{
    const int n = shape.weight();
    BigInt closed;
    if (shape.b > 0) {
        closed = factorial(shape.c + 1) * double_factorial(2 * shape.a - 2) * double_factorial(2 * shape.b - 3);
        if ((shape.c + 1) % 2)
            closed = -closed;
    } else {
        closed = double_factorial(2 * shape.a - 2);
    }
    closed *= coset_size(Partition::row(n)) / hyperoctahedral_order(n - 1);
    if (closed != phi_top(shape.partition()))
        throw InternalError("phi_top closed form disagrees with the box product for "
                            + shape.partition().to_string());
    return closed;
}

SphericalTable::SphericalTable(int n)
    : SphericalTable(coset_histogram(n))
{
}

SphericalTable::SphericalTable(const CosetHistogram& hist)
    : n_(hist.n)
    , parts_(enumerate_partitions(hist.n))
{
    CharacterTable chars;
    phi_.assign(parts_.size(), std::vector<BigInt>(parts_.size(), 0));
    for (std::size_t b = 0; b < parts_.size(); ++b) {
        const Partition doubled = double_parts(parts_[b]);
        for (std::size_t m = 0; m < parts_.size(); ++m)
            for (const auto& [key, count] : hist.counts)
                if (key.first == parts_[m])
                    phi_[b][m] += count * chars.character(doubled, key.second);
    }
}

BigInt SphericalTable::phi(const Partition& beta, const Partition& mu) const
{
    if (beta.weight() != n_ || mu.weight() != n_)
        throw std::invalid_argument("phi: partitions must have weight " + std::to_string(n_));
    return phi_[partition_index(beta)][partition_index(mu)];
}

BigInt phi(const Partition& beta, const Partition& mu)
{
    if (beta.weight() != mu.weight())
        throw std::invalid_argument("phi: weight mismatch");
    return SphericalTable(beta.weight()).phi(beta, mu);
}

BigInt connection_b(const Partition& lambda, const Partition& mu, const Partition& nu, const SphericalTable& table)
{
    const int n = table.n();
    if (lambda.weight() != n || mu.weight() != n || nu.weight() != n)
        throw std::invalid_argument("connection_b: weight mismatch");
    const std::size_t l = partition_index(lambda), m = partition_index(mu), v = partition_index(nu);
    Rational sum = 0;
    for (std::size_t b = 0; b < table.partitions().size(); ++b) {
        auto h = std::get<2>(c_products(table.partitions()[b]));
        sum += ratio(table.phi(b, l) * table.phi(b, m) * table.phi(b, v), h);
    }
    sum /= Rational(coset_size(nu));
    BigInt r = require_integer(sum, "b^nu_{lambda mu} for (" + lambda.to_string() + "," + mu.to_string() + ","
                                        + nu.to_string() + ")");
    if (r < 0)
        throw InternalError("negative double-coset connection coefficient");
    return r;
}

BigInt connection_b(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    return connection_b(lambda, mu, nu, SphericalTable(lambda.weight()));
}

std::vector<std::vector<std::vector<BigInt>>> connection_b_table(const SphericalTable& table)
{
    const auto& parts = table.partitions();
    const std::size_t np = parts.size();
    std::vector<std::vector<std::vector<BigInt>>> out(np, std::vector<std::vector<BigInt>>(np, std::vector<BigInt>(np)));
    for (std::size_t v = 0; v < np; ++v)
        for (std::size_t l = 0; l < np; ++l)
            for (std::size_t m = 0; m < np; ++m)
                out[v][l][m] = connection_b(parts[l], parts[m], parts[v], table);
    return out;
}

Rational main_series_coefficient(const Partition& lambda, const Partition& mu)
{
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("main_series_coefficient: weight mismatch");
    const int n = lambda.weight();
    Rational total = 0;
    for (const NearHook& h : near_hooks(n)) {
        Rational sl = filling_sum(h, lambda);
        if (sl == 0)
            continue;
        Rational sm = filling_sum(h, mu);
        if (sm == 0)
            continue;
        total += r_n(h.a, h.b, n) * sl * sm;
    }
    return total;
}

SeriesCoefficientTable main_series_table(int n, int threads)
{
    if (n < 1)
        throw std::invalid_argument("main_series_table: n must be positive");
    set_threads(threads);
    auto parts = enumerate_partitions(n);
    auto hooks = near_hooks(n);
    auto sums = all_filling_sums(n, hooks);
    std::vector<Rational> r(hooks.size());
    for (std::size_t h = 0; h < hooks.size(); ++h)
        r[h] = r_n(hooks[h].a, hooks[h].b, n);

    const std::size_t np = parts.size();
    std::vector<std::vector<Rational>> cells(np, std::vector<Rational>(np));
#pragma omp parallel for schedule(dynamic)
    for (long li = 0; li < static_cast<long>(np); ++li) {
        auto l = static_cast<std::size_t>(li);
        for (std::size_t m = 0; m < np; ++m) {
            Rational s = 0;
            for (std::size_t h = 0; h < hooks.size(); ++h)
                s += r[h] * sums[h].coefficient(parts[l]) * sums[h].coefficient(parts[m]);
            cells[l][m] = s;
        }
    }
    return to_table(n, "1/(2^n n!)", cells);
}

SeriesCoefficientTable series_from_b(int n, const std::vector<std::vector<BigInt>>& b_top)
{
    const BigInt bn = hyperoctahedral_order(n);
    std::vector<std::vector<Rational>> scaled(b_top.size(), std::vector<Rational>(b_top.size()));
    for (std::size_t i = 0; i < b_top.size(); ++i)
        for (std::size_t j = 0; j < b_top.size(); ++j)
            scaled[i][j] = ratio(b_top[i][j], bn);
    return to_table(n, "1/(2^n n!)", powersum_pairs_to_monomial(n, scaled));
}

SeriesCoefficientTable series_via_zonal(int n)
{
    auto parts = enumerate_partitions(n);
    const Rational scale = ratio(hyperoctahedral_order(n), coset_size(Partition::row(n)));
    std::vector<std::vector<Rational>> cells(parts.size(), std::vector<Rational>(parts.size()));
    for (const NearHook& h : near_hooks(n)) {
        const Rational w = scale * Rational(phi_top_nearhook(h));
        const MonomialExpansion p = p_near_hook(h), q = q_near_hook(h);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            Rational pi = p.coefficient(parts[i]);
            if (pi == 0)
                continue;
            for (std::size_t j = 0; j < parts.size(); ++j)
                cells[i][j] += w * pi * q.coefficient(parts[j]);
        }
    }
    return to_table(n, "1/(2^n n!)", cells);
}

BigInt closed_form_npone(int n, int p)
{
    if (n < 1 || p < 0)
        throw std::invalid_argument("closed_form_npone: need n >= 1, p >= 0");
    if (2 * p > n - 1)
        return 0;
    // (n-p-1)!/(n-2p)! is 1/n at p = 0
    Rational f = ratio(factorial(n - p - 1), factorial(n - 2 * p));
    Rational v = Rational(BigInt(n) * (n - 2 * p)) * f * f * Rational(double_factorial(2 * n - 4 * p - 1));
    return require_integer(v, "closed_form_npone");
}

Rational r_prime_n(long x, long y, long n)
{
    if (n >= 1 && x == n && y == 0)
        return Rational(double_factorial(2 * n - 2));
    if (n < 1 || y < 1 || x < y || x + y > n)
        throw std::invalid_argument("r_prime_n: (" + std::to_string(x) + "," + std::to_string(y)
                                    + ") is not a near hook of " + std::to_string(n) + " with y >= 1");
    BigInt num = BigInt(2 * n) * factorial(n + 1 - x - y) * double_factorial(2 * x - 2) * double_factorial(2 * y - 3);
    return ratio(num, BigInt(n + x - y) * (n + y - x - 1));
}

MonomialExpansion pi_series(int n)
{
    if (n < 1)
        throw std::invalid_argument("pi_series: n must be positive");
    auto hooks = near_hooks(n);
    auto sums = all_filling_sums(n, hooks);
    MonomialExpansion out(n);
    for (std::size_t h = 0; h < hooks.size(); ++h)
        out += r_prime_n(hooks[h].a, hooks[h].b, n) * sums[h];
    return out;
}

MonomialExpansion pi_series_via_zonal(int n)
{
    const BigInt kn = coset_size(Partition::row(n));
    MonomialExpansion out(n);
    for (const NearHook& h : near_hooks(n)) {
        const BigInt ph = phi_top_nearhook(h);
        const BigInt cp = std::get<1>(c_products(h.partition()));
        out += ratio(ph * ph, kn * cp) * p_near_hook(h);
    }
    return out;
}

MonomialExpansion pi_series_from_b(int n, const std::vector<BigInt>& b_lambda_top)
{
    auto parts = enumerate_partitions(n);
    if (b_lambda_top.size() != parts.size())
        throw std::invalid_argument("pi_series_from_b: need one value per partition of n");
    const BigInt bn = hyperoctahedral_order(n);
    MonomialExpansion out(n);
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (b_lambda_top[i] != 0)
            out += ratio(b_lambda_top[i], bn) * powersum_to_monomial(parts[i]);
    return out;
}

}  // namespace ccseries
