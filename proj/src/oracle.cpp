#include "ccseries/oracle.hpp"

#include "ccseries/characters.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <omp.h>

namespace ccseries {

namespace {

constexpr int kMaxPoints = 12;
using Perm = std::array<std::uint8_t, kMaxPoints>;

// Cycle type packed as multiplicities, four bits per cycle length.
using TypeKey = std::uint64_t;

TypeKey key_of(const Partition& p)
{
    TypeKey k = 0;
    for (int part : p.parts())
        k += TypeKey{1} << (4 * (part - 1));
    return k;
}

TypeKey cycle_key(const std::uint8_t* p, int m)
{
    unsigned seen = 0;
    TypeKey key = 0;
    for (int i = 0; i < m; ++i) {
        if ((seen >> i) & 1u)
            continue;
        int len = 0;
        for (int j = i; !((seen >> j) & 1u); j = p[j]) {
            seen |= 1u << j;
            ++len;
        }
        key += TypeKey{1} << (4 * (len - 1));
    }
    return key;
}

constexpr TypeKey kOddNibbles = 0x1111111111111111ull;

// Coset type key of omega given omega and its inverse, both on 2n points.
TypeKey coset_key(const std::uint8_t* omega, const std::uint8_t* omega_inv, int m)
{
    std::array<std::uint8_t, kMaxPoints> g{};
    for (int x = 0; x < m; ++x)
        g[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(omega[omega_inv[x] ^ 1] ^ 1);
    TypeKey k = cycle_key(g.data(), m);
    if (k & kOddNibbles)
        throw InternalError("f* w f* w^-1 has an unpaired cycle type");
    return k >> 1;
}

void invert(const std::uint8_t* p, std::uint8_t* inv, int m)
{
    for (int i = 0; i < m; ++i)
        inv[p[i]] = static_cast<std::uint8_t>(i);
}

// Sorted keys of all partitions of n, aligned with enumerate_partitions(n).
struct KeyIndex {
    std::vector<std::pair<TypeKey, std::size_t>> sorted;

    explicit KeyIndex(int n)
    {
        auto parts = enumerate_partitions(n);
        for (std::size_t i = 0; i < parts.size(); ++i)
            sorted.emplace_back(key_of(parts[i]), i);
        std::ranges::sort(sorted);
    }
    std::size_t operator()(TypeKey k) const
    {
        auto it = std::ranges::lower_bound(sorted, std::pair{k, std::size_t{0}});
        if (it == sorted.end() || it->first != k)
            throw InternalError("unknown cycle type key");
        return it->second;
    }
    std::size_t size() const { return sorted.size(); }
};

Perm to_array(const Permutation& p)
{
    Perm a{};
    for (int i = 0; i < p.size(); ++i)
        a[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(p(i));
    return a;
}

Permutation from_array(const Perm& a, int m)
{
    return Permutation(std::vector<int>(a.begin(), a.begin() + m));
}

void check_class_cap(int n, const OracleCaps& caps)
{
    if (caps.class_cap > OracleCaps::class_hard_limit)
        throw std::invalid_argument("class oracle cap above hard limit "
                                    + std::to_string(OracleCaps::class_hard_limit));
    if (n > caps.class_cap)
        throw CapExceeded("class oracle refuses n = " + std::to_string(n) + " (cap "
                          + std::to_string(caps.class_cap) + ")");
}

void check_coset_cap(int n, const OracleCaps& caps)
{
    if (caps.coset_cap > OracleCaps::coset_hard_limit)
        throw std::invalid_argument("coset oracle cap above hard limit "
                                    + std::to_string(OracleCaps::coset_hard_limit));
    if (n > caps.coset_cap)
        throw CapExceeded("coset oracle refuses n = " + std::to_string(n) + " (cap "
                          + std::to_string(caps.coset_cap) + ")");
}

// Visits all of S_m; `shard` restricts to permutations with p[0] == shard
// (shard < 0 visits everything). Enumeration within a shard is lexicographic.
template <typename Visit>
void enumerate_group(int m, int shard, Visit&& visit)
{
    Perm p{};
    if (shard < 0) {
        std::iota(p.begin(), p.begin() + m, std::uint8_t{0});
        do
            visit(p.data());
        while (std::next_permutation(p.begin(), p.begin() + m));
        return;
    }
    p[0] = static_cast<std::uint8_t>(shard);
    for (int i = 1, v = 0; i < m; ++v)
        if (v != shard)
            p[static_cast<std::size_t>(i++)] = static_cast<std::uint8_t>(v);
    do
        visit(p.data());
    while (std::next_permutation(p.begin() + 1, p.begin() + m));
}

// Runs `kernel(shard, local)` for every shard, serially (shard = -1) or one
// shard per first image in parallel, and sums the local accumulators in
// shard order.
template <typename Kernel>
std::vector<std::uint64_t> run_sharded(int m, std::size_t width, bool parallel, Kernel&& kernel)
{
    if (!parallel) {
        std::vector<std::uint64_t> acc(width, 0);
        kernel(-1, acc);
        return acc;
    }
    std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(m),
                                                    std::vector<std::uint64_t>(width, 0));
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < m; ++s)
        kernel(s, partial[static_cast<std::size_t>(s)]);
    std::vector<std::uint64_t> acc(width, 0);
    for (const auto& part : partial)
        for (std::size_t i = 0; i < width; ++i)
            acc[i] += part[i];
    return acc;
}

ConvolutionTensor unflatten(const std::vector<std::uint64_t>& flat, std::size_t np)
{
    ConvolutionTensor t(np, std::vector<std::vector<std::uint64_t>>(np, std::vector<std::uint64_t>(np)));
    for (std::size_t v = 0; v < np; ++v)
        for (std::size_t l = 0; l < np; ++l)
            for (std::size_t u = 0; u < np; ++u)
                t[v][l][u] = flat[(v * np + l) * np + u];
    return t;
}

ConvolutionTensor class_table_impl(int n, const OracleCaps& caps, bool parallel)
{
    check_class_cap(n, caps);
    auto parts = enumerate_partitions(n);
    const std::size_t np = parts.size();
    const KeyIndex index(n);
    std::vector<Perm> gammas;
    for (const Partition& nu : parts)
        gammas.push_back(to_array(class_representative(nu)));

    auto flat = run_sharded(n, np * np * np, parallel, [&](int shard, std::vector<std::uint64_t>& acc) {
        Perm inv{}, beta{};
        enumerate_group(n, shard, [&](const std::uint8_t* alpha) {
            invert(alpha, inv.data(), n);
            const std::size_t l = index(cycle_key(alpha, n));
            for (std::size_t v = 0; v < np; ++v) {
                const Perm& g = gammas[v];
                for (int x = 0; x < n; ++x)
                    beta[static_cast<std::size_t>(x)] = inv[g[static_cast<std::size_t>(x)]];
                ++acc[(v * np + l) * np + index(cycle_key(beta.data(), n))];
            }
        });
    });
    return unflatten(flat, np);
}

ConvolutionTensor coset_table_impl(int n, const OracleCaps& caps, bool parallel)
{
    check_coset_cap(n, caps);
    const int m = 2 * n;
    auto parts = enumerate_partitions(n);
    const std::size_t np = parts.size();
    const KeyIndex index(n);
    std::vector<Perm> omegas;
    for (const Partition& nu : parts)
        omegas.push_back(to_array(coset_representatives(nu, 1).front()));

    auto flat = run_sharded(m, np * np * np, parallel, [&](int shard, std::vector<std::uint64_t>& acc) {
        Perm inv{}, tau{}, tau_inv{};
        enumerate_group(m, shard, [&](const std::uint8_t* sigma) {
            invert(sigma, inv.data(), m);
            const std::size_t l = index(coset_key(sigma, inv.data(), m));
            for (std::size_t v = 0; v < np; ++v) {
                const Perm& w = omegas[v];
                for (int x = 0; x < m; ++x)
                    tau[static_cast<std::size_t>(x)] = inv[w[static_cast<std::size_t>(x)]];
                invert(tau.data(), tau_inv.data(), m);
                ++acc[(v * np + l) * np + index(coset_key(tau.data(), tau_inv.data(), m))];
            }
        });
    });
    return unflatten(flat, np);
}

CosetHistogram histogram_impl(int n, bool parallel)
{
    if (n < 1 || n > OracleCaps::coset_hard_limit)
        throw CapExceeded("coset histogram needs 1 <= n <= " + std::to_string(OracleCaps::coset_hard_limit));
    const int m = 2 * n;
    const KeyIndex coset_index(n), cycle_index(m);
    const std::size_t nc = cycle_index.size();

    auto flat = run_sharded(m, coset_index.size() * nc, parallel, [&](int shard, std::vector<std::uint64_t>& acc) {
        Perm inv{};
        enumerate_group(m, shard, [&](const std::uint8_t* w) {
            invert(w, inv.data(), m);
            ++acc[coset_index(coset_key(w, inv.data(), m)) * nc + cycle_index(cycle_key(w, m))];
        });
    });

    CosetHistogram h;
    h.n = n;
    auto cosets = enumerate_partitions(n);
    auto cycles = enumerate_partitions(m);
    for (std::size_t i = 0; i < cosets.size(); ++i)
        for (std::size_t j = 0; j < nc; ++j)
            if (std::uint64_t c = flat[i * nc + j])
                h.counts.emplace(std::pair{cosets[i], cycles[j]}, BigInt(static_cast<unsigned long>(c)));
    return h;
}

}  // namespace

Permutation::Permutation(std::vector<int> images)
    : images_(std::move(images))
{
    std::vector<bool> hit(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= size() || hit[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not a permutation");
        hit[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int m)
{
    std::vector<int> id(static_cast<std::size_t>(m));
    std::iota(id.begin(), id.end(), 0);
    return Permutation(std::move(id));
}

Permutation Permutation::from_one_based(const std::vector<int>& images)
{
    std::vector<int> z(images);
    for (int& v : z)
        --v;
    return Permutation(std::move(z));
}

Permutation Permutation::from_cycles(int m, const std::vector<std::vector<int>>& cycles)
{
    std::vector<int> img(static_cast<std::size_t>(m));
    std::iota(img.begin(), img.end(), 0);
    for (const auto& cyc : cycles)
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i] - 1, to = cyc[(i + 1) % cyc.size()] - 1;
            if (from < 0 || from >= m || to < 0 || to >= m)
                throw std::invalid_argument("cycle point out of range");
            img[static_cast<std::size_t>(from)] = to;
        }
    return Permutation(std::move(img));
}

Permutation Permutation::fixed_matching(int n)
{
    std::vector<int> img(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i)
        img[static_cast<std::size_t>(i)] = i ^ 1;
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(images_.size());
    for (int i = 0; i < size(); ++i)
        inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("composing permutations of different degree");
    std::vector<int> img(a.images_.size());
    for (int i = 0; i < a.size(); ++i)
        img[static_cast<std::size_t>(i)] = a(b(i));
    return Permutation(std::move(img));
}

Partition cycle_type(const Permutation& sigma)
{
    std::vector<int> lens;
    std::vector<bool> seen(static_cast<std::size_t>(sigma.size()), false);
    for (int i = 0; i < sigma.size(); ++i) {
        if (seen[static_cast<std::size_t>(i)])
            continue;
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = sigma(j)) {
            seen[static_cast<std::size_t>(j)] = true;
            ++len;
        }
        lens.push_back(len);
    }
    return Partition::from_unsorted(std::move(lens));
}

Partition coset_type(const Permutation& omega)
{
    if (omega.size() % 2)
        throw std::invalid_argument("coset_type needs a permutation of 2n points");
    const Permutation f = Permutation::fixed_matching(omega.size() / 2);
    Partition paired = cycle_type(f * omega * f * omega.inverse());
    std::vector<int> half;
    const auto& p = paired.parts();
    for (std::size_t i = 0; i < p.size(); i += 2) {
        if (i + 1 >= p.size() || p[i] != p[i + 1])
            throw InternalError("f* w f* w^-1 has unpaired cycle type " + paired.to_string());
        half.push_back(p[i]);
    }
    return Partition(std::move(half));
}

Permutation class_representative(const Partition& nu)
{
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int len : nu.parts()) {
        std::vector<int> cyc;
        for (int k = 0; k < len; ++k)
            cyc.push_back(next++);
        cycles.push_back(std::move(cyc));
    }
    return Permutation::from_cycles(nu.weight(), cycles);
}

std::vector<Permutation> coset_representatives(const Partition& nu, int count)
{
    const int n = nu.weight();
    if (n < 1 || n > OracleCaps::coset_hard_limit)
        throw CapExceeded("coset representatives need 1 <= n <= " + std::to_string(OracleCaps::coset_hard_limit));
    const int m = 2 * n;
    const TypeKey want = key_of(nu);
    std::vector<Permutation> out;
    Perm p{}, inv{};
    std::iota(p.begin(), p.begin() + m, std::uint8_t{0});
    do {
        invert(p.data(), inv.data(), m);
        if (coset_key(p.data(), inv.data(), m) == want) {
            out.push_back(from_array(p, m));
            if (static_cast<int>(out.size()) == count)
                break;
        }
    } while (std::next_permutation(p.begin(), p.begin() + m));
    return out;
}

Permutation random_hyperoctahedral(int n, std::mt19937_64& rng)
{
    Permutation b = Permutation::identity(2 * n);
    if (n == 0)
        return b;
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::bernoulli_distribution kind(0.5);
    for (int step = 0; step < 4 * n + 4; ++step) {
        std::vector<int> g(static_cast<std::size_t>(2 * n));
        std::iota(g.begin(), g.end(), 0);
        int i = pick(rng);
        if (kind(rng)) {
            std::swap(g[static_cast<std::size_t>(2 * i)], g[static_cast<std::size_t>(2 * i + 1)]);
        } else {
            int j = pick(rng);
            std::swap(g[static_cast<std::size_t>(2 * i)], g[static_cast<std::size_t>(2 * j)]);
            std::swap(g[static_cast<std::size_t>(2 * i + 1)], g[static_cast<std::size_t>(2 * j + 1)]);
        }
        b = Permutation(std::move(g)) * b;
    }
    return b;
}

BigInt class_convolution(const Partition& lambda, const Partition& mu, const Permutation& gamma,
                         const OracleCaps& caps)
{
    const int n = gamma.size();
    if (lambda.weight() != n || mu.weight() != n)
        throw std::invalid_argument("class_convolution: weight mismatch");
    check_class_cap(n, caps);
    const TypeKey kl = key_of(lambda), km = key_of(mu);
    const Perm g = to_array(gamma);
    std::uint64_t count = 0;
    Perm inv{}, beta{};
    enumerate_group(n, -1, [&](const std::uint8_t* alpha) {
        if (cycle_key(alpha, n) != kl)
            return;
        invert(alpha, inv.data(), n);
        for (int x = 0; x < n; ++x)
            beta[static_cast<std::size_t>(x)] = inv[g[static_cast<std::size_t>(x)]];
        if (cycle_key(beta.data(), n) == km)
            ++count;
    });
    return BigInt(static_cast<unsigned long>(count));
}

BigInt class_convolution(const Partition& lambda, const Partition& mu, const Partition& nu,
                         const OracleCaps& caps)
{
    check_class_cap(nu.weight(), caps);
    return class_convolution(lambda, mu, class_representative(nu), caps);
}

BigInt double_coset_convolution(const Partition& lambda, const Partition& mu, const Permutation& omega,
                                const OracleCaps& caps)
{
    const int m = omega.size();
    const int n = m / 2;
    if (m % 2 || lambda.weight() != n || mu.weight() != n)
        throw std::invalid_argument("double_coset_convolution: weight mismatch");
    check_coset_cap(n, caps);
    const TypeKey kl = key_of(lambda), km = key_of(mu);
    const Perm w = to_array(omega);
    std::uint64_t count = 0;
    Perm inv{}, tau{}, tau_inv{};
    enumerate_group(m, -1, [&](const std::uint8_t* sigma) {
        invert(sigma, inv.data(), m);
        if (coset_key(sigma, inv.data(), m) != kl)
            return;
        for (int x = 0; x < m; ++x)
            tau[static_cast<std::size_t>(x)] = inv[w[static_cast<std::size_t>(x)]];
        invert(tau.data(), tau_inv.data(), m);
        if (coset_key(tau.data(), tau_inv.data(), m) == km)
            ++count;
    });
    return BigInt(static_cast<unsigned long>(count));
}

BigInt double_coset_convolution(const Partition& lambda, const Partition& mu, const Partition& nu,
                                const OracleCaps& caps)
{
    check_coset_cap(nu.weight(), caps);
    return double_coset_convolution(lambda, mu, coset_representatives(nu, 1).front(), caps);
}

ConvolutionTensor class_convolution_table(int n, const OracleCaps& caps)
{
    return class_table_impl(n, caps, true);
}

ConvolutionTensor class_convolution_table_serial(int n, const OracleCaps& caps)
{
    return class_table_impl(n, caps, false);
}

ConvolutionTensor double_coset_convolution_table(int n, const OracleCaps& caps)
{
    return coset_table_impl(n, caps, true);
}

ConvolutionTensor double_coset_convolution_table_serial(int n, const OracleCaps& caps)
{
    return coset_table_impl(n, caps, false);
}

BigInt CosetHistogram::count(const Partition& coset, const Partition& cycle) const
{
    auto it = counts.find({coset, cycle});
    return it == counts.end() ? BigInt(0) : it->second;
}

BigInt CosetHistogram::total() const
{
    BigInt t = 0;
    for (const auto& [key, c] : counts)
        t += c;
    return t;
}

CosetHistogram coset_histogram(int n)
{
    return histogram_impl(n, true);
}

CosetHistogram coset_histogram_serial(int n)
{
    return histogram_impl(n, false);
}

MonomialExpansion zonal_oracle(const Partition& beta)
{
    return zonal_oracle(beta, coset_histogram(beta.weight()));
}

MonomialExpansion zonal_oracle(const Partition& beta, const CosetHistogram& hist)
{
    const int n = beta.weight();
    if (hist.n != n)
        throw std::invalid_argument("zonal_oracle: histogram is for a different n");
    CharacterTable table;
    const Partition doubled = double_parts(beta);
    const BigInt bn = hyperoctahedral_order(n);
    MonomialExpansion z(n);
    for (const Partition& lambda : enumerate_partitions(n)) {
        BigInt phi = 0;
        for (const auto& [key, count] : hist.counts)
            if (key.first == lambda)
                phi += count * table.character(doubled, key.second);
        Rational w(phi, bn);
        w.canonicalize();
        z += w * powersum_to_monomial(lambda);
    }
    return z;
}

}  // namespace ccseries
