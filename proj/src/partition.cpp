#include "ccseries/partition.hpp"

#include <algorithm>
#include <sstream>

namespace ccseries {

Partition::Partition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts))
{
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    std::erase(parts, 0);
    std::ranges::sort(parts, std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text)
{
    std::vector<int> parts;
    if (text.empty())
        return Partition();
    std::size_t pos = 0;
    while (true) {
        std::size_t dot = text.find('.', pos);
        std::string tok = text.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
        if (tok.empty() || !std::ranges::all_of(tok, [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw std::invalid_argument("malformed partition '" + text + "'");
        if (tok.size() > 6)
            throw std::invalid_argument("partition part too large in '" + text + "'");
        parts.push_back(std::stoi(tok));
        if (dot == std::string::npos)
            break;
        pos = dot + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("malformed partition '" + text + "': " + e.what());
    }
}

Partition Partition::hook(int n, int a)
{
    if (n < 1 || a < 0 || a > n - 1)
        throw std::invalid_argument("hook (n-a,1^a) needs 0 <= a <= n-1");
    std::vector<int> parts{n - a};
    parts.insert(parts.end(), static_cast<std::size_t>(a), 1);
    return Partition(std::move(parts));
}

Partition Partition::row(int n)
{
    return n == 0 ? Partition() : Partition({n});
}

Partition Partition::column(int n)
{
    return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

int Partition::multiplicity(int i) const noexcept
{
    return static_cast<int>(std::ranges::count(parts_, i));
}

Partition Partition::conjugate() const
{
    std::vector<int> conj;
    if (!parts_.empty()) {
        conj.resize(static_cast<std::size_t>(parts_.front()), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j)
                ++conj[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& other) const noexcept
{
    if (other.length() > length())
        return false;
    for (int i = 1; i <= other.length(); ++i)
        if (other.part(i) > part(i))
            return false;
    return true;
}

std::string Partition::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += '.';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept
{
    // larger partitions (lexicographically) come first
    return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(),
                                                  a.parts_.begin(), a.parts_.end());
}

std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    os << '(';
    for (std::size_t i = 0; i < p.parts().size(); ++i)
        os << (i ? "," : "") << p.parts()[i];
    return os << ')';
}

BoxStats box_stats(const Partition& lambda, int row, int col)
{
    if (row < 1 || row > lambda.length() || col < 1 || col > lambda.part(row))
        throw std::invalid_argument("box outside the diagram");
    int leg = 0;
    for (int r = row + 1; r <= lambda.length() && lambda.part(r) >= col; ++r)
        ++leg;
    return BoxStats{lambda.part(row) - col, leg, col - 1, row - 1};
}

NearHook NearHook::make(int a, int b, int c)
{
    if (a < 1 || b < 0 || c < 0 || b > a)
        throw std::invalid_argument("near hook needs a >= b >= 0, a >= 1, c >= 0");
    if (b == 0 && c > 0)
        throw std::invalid_argument("near hook (a,0,1^c) with c > 0 is written (a,1,1^(c-1))");
    return NearHook{a, b, c};
}

NearHook NearHook::from_partition(const Partition& lambda)
{
    if (!is_near_hook(lambda))
        throw std::invalid_argument("not a near hook: " + lambda.to_string());
    return make(lambda.part(1), lambda.part(2), std::max(0, lambda.length() - 2));
}

Partition NearHook::partition() const
{
    std::vector<int> parts{a};
    if (b > 0)
        parts.push_back(b);
    parts.insert(parts.end(), static_cast<std::size_t>(c), 1);
    return Partition(std::move(parts));
}

bool is_near_hook(const Partition& lambda)
{
    return !lambda.empty() && lambda.part(3) <= 1;
}

std::vector<NearHook> near_hooks(int n)
{
    std::vector<NearHook> out;
    for (const Partition& p : enumerate_partitions(n))
        if (is_near_hook(p))
            out.push_back(NearHook::from_partition(p));
    return out;
}

std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0)
        throw std::invalid_argument("enumerate_partitions: negative n");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // successor in reverse-lexicographic order
    std::vector<int> cur{n};
    while (true) {
        out.emplace_back(cur);
        int rem = 0;
        while (!cur.empty() && cur.back() == 1) {
            ++rem;
            cur.pop_back();
        }
        if (cur.empty())
            break;
        int k = --cur.back();
        ++rem;
        while (rem > k) {
            cur.push_back(k);
            rem -= k;
        }
        if (rem > 0)
            cur.push_back(rem);
    }
    return out;
}

std::size_t partition_index(const Partition& lambda)
{
    auto all = enumerate_partitions(lambda.weight());
    auto it = std::ranges::lower_bound(all, lambda);
    return static_cast<std::size_t>(it - all.begin());
}

BigInt z_of(const Partition& lambda)
{
    BigInt z = 1;
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i])
            ++j;
        long m = static_cast<long>(j - i);
        z *= pow_int(p[i], static_cast<unsigned long>(m)) * factorial(m);
        i = j;
    }
    return z;
}

BigInt aut_of(const Partition& lambda)
{
    BigInt r = 1;
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i])
            ++j;
        r *= factorial(static_cast<long>(j - i));
        i = j;
    }
    return r;
}

BigInt class_size(const Partition& lambda)
{
    return factorial(lambda.weight()) / z_of(lambda);
}

BigInt hyperoctahedral_order(int n)
{
    return pow_int(2, static_cast<unsigned long>(n)) * factorial(n);
}

BigInt coset_size(const Partition& lambda)
{
    BigInt b = hyperoctahedral_order(lambda.weight());
    BigInt den = pow_int(2, static_cast<unsigned long>(lambda.length())) * z_of(lambda);
    return b * b / den;
}

BigInt hook_product(const Partition& lambda)
{
    BigInt h = 1;
    for (int r = 1; r <= lambda.length(); ++r)
        for (int c = 1; c <= lambda.part(r); ++c) {
            auto s = box_stats(lambda, r, c);
            h *= s.arm + s.leg + 1;
        }
    return h;
}

std::tuple<BigInt, BigInt, BigInt> c_products(const Partition& lambda)
{
    BigInt c = 1, cp = 1;
    for (int r = 1; r <= lambda.length(); ++r)
        for (int col = 1; col <= lambda.part(r); ++col) {
            auto s = box_stats(lambda, r, col);
            c *= 2 * s.arm + s.leg + 1;
            cp *= 2 * (1 + s.arm) + s.leg;
        }
    BigInt h = c * cp;
    if (h != hook_product(double_parts(lambda)))
        throw InternalError("H_2lambda != c c' for " + lambda.to_string());
    return {c, cp, h};
}

Partition double_parts(const Partition& lambda)
{
    std::vector<int> parts = lambda.parts();
    for (int& p : parts)
        p *= 2;
    return Partition(std::move(parts));
}

BigInt multinomial(const Partition& lambda)
{
    BigInt r = factorial(lambda.weight());
    for (int p : lambda.parts())
        r /= factorial(p);
    return r;
}

bool is_horizontal_strip(const Partition& lambda, const Partition& mu)
{
    if (!lambda.contains(mu))
        return false;
    // interlacing lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...
    for (int i = 1; i <= lambda.length(); ++i)
        if (mu.part(i) < lambda.part(i + 1))
            return false;
    return true;
}

}  // namespace ccseries
