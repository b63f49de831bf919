// Small independent reference implementations used only by the tests.
#ifndef CCSERIES_TESTS_ORACLES_HPP_
#define CCSERIES_TESTS_ORACLES_HPP_

#include "ccseries/monomial.hpp"
#include "ccseries/partition.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace oracles {

// p(n) by Euler's pentagonal number recurrence.
inline long partition_count(int n)
{
    std::vector<long> p(static_cast<std::size_t>(n + 1), 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long s = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m)
                break;
            long sign = k % 2 ? 1 : -1;
            s += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m)
                s += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = s;
    }
    return p[static_cast<std::size_t>(n)];
}

// Number of semistandard tableaux of shape `shape` and content `type`,
// filling cells in row-major order.
inline long count_ssyt(const ccseries::Partition& shape, const std::vector<int>& type)
{
    const int rows = shape.length();
    std::vector<std::vector<int>> t(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r)
        t[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(shape.part(r + 1)), 0);
    std::vector<int> left = type;
    long count = 0;
    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            ++count;
            return;
        }
        if (c == shape.part(r + 1)) {
            self(self, r + 1, 0);
            return;
        }
        for (int v = 1; v <= static_cast<int>(left.size()); ++v) {
            if (!left[static_cast<std::size_t>(v - 1)])
                continue;
            if (c > 0 && t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] > v)
                continue;
            if (r > 0 && t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] >= v)
                continue;
            t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            --left[static_cast<std::size_t>(v - 1)];
            self(self, r, c + 1);
            ++left[static_cast<std::size_t>(v - 1)];
        }
    };
    rec(rec, 0, 0);
    return count;
}

// Expands the power sum p_mu in n variables as a polynomial and reads off the
// coefficient of each monomial x^lambda.
inline ccseries::MonomialExpansion powersum_by_polynomial(const ccseries::Partition& mu)
{
    const int n = mu.weight();
    using Mono = std::vector<int>;
    std::map<Mono, long> poly{{Mono(static_cast<std::size_t>(n), 0), 1}};
    for (int part : mu.parts()) {
        std::map<Mono, long> next;
        for (const auto& [m, c] : poly)
            for (int v = 0; v < n; ++v) {
                Mono e = m;
                e[static_cast<std::size_t>(v)] += part;
                next[e] += c;
            }
        poly = std::move(next);
    }
    ccseries::MonomialExpansion out(n);
    for (const auto& [m, c] : poly) {
        if (!std::is_sorted(m.rbegin(), m.rend()))
            continue;
        std::vector<int> parts;
        for (int x : m)
            if (x)
                parts.push_back(x);
        out.add(ccseries::Partition(parts), c);
    }
    return out;
}

}  // namespace oracles

#endif  // CCSERIES_TESTS_ORACLES_HPP_
