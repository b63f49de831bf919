#include "ccseries/characters.hpp"

#include <algorithm>
#include <functional>

namespace ccseries {

namespace {

// Removes every rim hook of length r from lambda; calls emit(shape, sign).
template <typename Emit>
void for_each_rim_hook(const std::vector<int>& lambda, int r, Emit&& emit)
{
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.size());
    for (int i = 0; i < len; ++i)
        beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

    for (int i = 0; i < len; ++i) {
        int from = beta[static_cast<std::size_t>(i)];
        int to = from - r;
        if (to < 0 || std::ranges::find(beta, to) != beta.end())
            continue;
        int between = 0;
        for (int b : beta)
            if (b > to && b < from)
                ++between;
        std::vector<int> moved = beta;
        moved[static_cast<std::size_t>(i)] = to;
        std::ranges::sort(moved, std::greater<>());
        std::vector<int> shape;
        for (int k = 0; k < len; ++k) {
            int part = moved[static_cast<std::size_t>(k)] - (len - 1 - k);
            if (part > 0)
                shape.push_back(part);
        }
        emit(shape, between % 2 == 0 ? 1 : -1);
    }
}

}  // namespace

BigInt CharacterTable::character(const Partition& lambda, const Partition& mu)
{
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("character: weight mismatch between " + lambda.to_string()
                                    + " and " + mu.to_string());
    return mn(lambda.parts(), mu.parts(), 0);
}

BigInt CharacterTable::dimension(const Partition& lambda)
{
    return character(lambda, Partition::column(lambda.weight()));
}

BigInt CharacterTable::mn(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t from)
{
    if (from == mu.size())
        return lambda.empty() ? 1 : 0;
    Key key{lambda, std::vector<int>(mu.begin() + static_cast<std::ptrdiff_t>(from), mu.end())};
    if (auto it = cache_.find(key); it != cache_.end())
        return it->second;

    BigInt total = 0;
    for_each_rim_hook(lambda, mu[from], [&](const std::vector<int>& shape, int sign) {
        BigInt v = mn(shape, mu, from + 1);
        if (sign > 0)
            total += v;
        else
            total -= v;
    });
    cache_.emplace(std::move(key), total);
    return total;
}

BigInt character(const Partition& lambda, const Partition& mu)
{
    CharacterTable t;
    return t.character(lambda, mu);
}

BigInt kostka_hook(int a, const Partition& lambda)
{
    if (a < 0 || a > lambda.weight() - 1)
        throw std::invalid_argument("kostka_hook: a out of range");
    return binomial(lambda.length() - 1, a);
}

BigInt powersum_monomial_coefficient(const Partition& mu, const Partition& lambda)
{
    if (mu.weight() != lambda.weight())
        return 0;
    // memoised on the vector of remaining capacities; the step index is implied
    // by the remaining total
    std::map<std::vector<int>, BigInt> memo;
    const auto& parts = mu.parts();
    std::function<BigInt(std::size_t, std::vector<int>&)> go = [&](std::size_t j, std::vector<int>& cap) -> BigInt {
        if (j == parts.size())
            return 1;
        if (auto it = memo.find(cap); it != memo.end())
            return it->second;
        BigInt total = 0;
        for (auto& slot : cap) {
            if (slot >= parts[j]) {
                slot -= parts[j];
                total += go(j + 1, cap);
                slot += parts[j];
            }
        }
        memo.emplace(cap, total);
        return total;
    };
    std::vector<int> cap = lambda.parts();
    return go(0, cap);
}

MonomialExpansion powersum_to_monomial(const Partition& mu)
{
    MonomialExpansion e(mu.weight());
    for (const Partition& lambda : enumerate_partitions(mu.weight()))
        e.add(lambda, Rational(powersum_monomial_coefficient(mu, lambda)));
    return e;
}

std::vector<std::vector<BigInt>> powersum_monomial_matrix(int n)
{
    auto parts = enumerate_partitions(n);
    std::vector<std::vector<BigInt>> m(parts.size(), std::vector<BigInt>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j)
            m[i][j] = powersum_monomial_coefficient(parts[i], parts[j]);
    return m;
}

std::vector<std::vector<Rational>> powersum_pairs_to_monomial(int n, const std::vector<std::vector<Rational>>& c)
{
    auto m = powersum_monomial_matrix(n);
    const std::size_t np = m.size();
    if (c.size() != np)
        throw std::invalid_argument("powersum_pairs_to_monomial: table size does not match p(n)");
    // t = C M, then A = M^T t
    std::vector<std::vector<Rational>> t(np, std::vector<Rational>(np));
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t k = 0; k < np; ++k)
            if (c[i][k] != 0)
                for (std::size_t j = 0; j < np; ++j)
                    t[i][j] += c[i][k] * m[k][j];
    std::vector<std::vector<Rational>> a(np, std::vector<Rational>(np));
    for (std::size_t k = 0; k < np; ++k)
        for (std::size_t i = 0; i < np; ++i)
            if (m[i][k] != 0)
                for (std::size_t j = 0; j < np; ++j)
                    a[k][j] += m[i][k] * t[i][j];
    return a;
}

MonomialExpansion schur_hook_to_monomial(int a, int n)
{
    if (n < 1 || a < 0 || a > n - 1)
        throw std::invalid_argument("schur_hook_to_monomial: need 0 <= a <= n-1");
    MonomialExpansion e(n);
    for (const Partition& lambda : enumerate_partitions(n))
        e.add(lambda, Rational(kostka_hook(a, lambda)));
    return e;
}

MonomialExpansion schur_via_characters(const Partition& lambda, CharacterTable& table)
{
    MonomialExpansion e(lambda.weight());
    for (const Partition& mu : enumerate_partitions(lambda.weight())) {
        Rational w(table.character(lambda, mu), z_of(mu));
        w.canonicalize();
        e += w * powersum_to_monomial(mu);
    }
    return e;
}

}  // namespace ccseries
