#include "ccseries/zonal_nearhook.hpp"

#include <functional>
#include <stdexcept>

namespace ccseries {

namespace {

// q * pi^(half_pi / 2); Pochhammer symbols at theta = 1/2 are rational
// multiples of sqrt(pi)^(+-1), and the skew factors pair them so that the
// powers cancel.
struct PiRational {
    Rational q = 1;
    int half_pi = 0;

    PiRational& operator*=(const PiRational& o)
    {
        q *= o.q;
        half_pi += o.half_pi;
        return *this;
    }
    PiRational& operator/=(const PiRational& o)
    {
        q /= o.q;
        half_pi -= o.half_pi;
        return *this;
    }
};

// (x)_{-1/2} = Gamma(x - 1/2) / Gamma(x) with x = twice_x / 2 >= 1.
PiRational pochhammer_minus_half(long twice_x)
{
    if (twice_x < 2)
        throw std::invalid_argument("Pochhammer argument below 1");
    if (twice_x % 2 == 0) {
        long m = twice_x / 2;
        Rational r(binomial(2 * m - 2, m - 1), pow_int(4, static_cast<unsigned long>(m - 1)));
        r.canonicalize();
        return {r, 1};
    }
    long m = (twice_x - 1) / 2;
    Rational r(factorial(m - 1) * pow_int(4, static_cast<unsigned long>(m)) * factorial(m), factorial(2 * m));
    r.canonicalize();
    return {r, -1};
}

// (r + theta s + 1)_{theta - 1} at theta = 1/2.
PiRational jack_factor(long r, long s)
{
    return pochhammer_minus_half(2 * r + s + 2);
}

Rational finish(const PiRational& v, const char* what)
{
    if (v.half_pi != 0)
        throw InternalError(std::string(what) + ": sqrt(pi) factors did not cancel");
    return v.q;
}

void require_strip(const Partition& lambda, const Partition& mu)
{
    if (!is_horizontal_strip(lambda, mu))
        throw std::invalid_argument(lambda.to_string() + "/" + mu.to_string() + " is not a horizontal strip");
}

bool valid_remainder(int a, int b, int c)
{
    if (a < 0 || b < 0 || c < 0 || b > a)
        return false;
    return !(b == 0 && c > 0);
}

Partition remainder_shape(int a, int b, int c)
{
    std::vector<int> parts;
    if (a > 0)
        parts.push_back(a);
    if (b > 0)
        parts.push_back(b);
    parts.insert(parts.end(), static_cast<std::size_t>(c), 1);
    return Partition(std::move(parts));
}

void check_inequalities(const NearHookFilling& f)
{
    const auto& rows = f.rows();
    const auto& mu = f.type().parts();
    const int p = f.steps();
    const NearHook& s = f.shape();
    auto fail = [&](const std::string& why) {
        throw InternalError("filling of " + s.partition().to_string() + " type " + f.type().to_string()
                            + " violates " + why);
    };
    // per-step list
    for (int i = 1; i <= p; ++i) {
        const FillingRow& r = rows[static_cast<std::size_t>(i - 1)];
        auto prev = f.remainder(i - 1);
        auto cur = f.remainder(i);
        if (r.a + r.b + r.c != mu[static_cast<std::size_t>(i - 1)])
            fail("a_i + b_i + c_i = mu_i");
        if (r.c != 0 && r.c != 1)
            fail("c_i in {0,1}");
        if (r.a > prev[0] - prev[1])
            fail("a_i <= abar_{i-1} - bbar_{i-1}");
        if (cur[2] > 0 && r.b > prev[1] - 1)
            fail("b_i <= bbar_{i-1} - 1 when cbar_i > 0");
    }
    if (rows.back().b != 0 || rows.back().c != 0)
        fail("b_p = c_p = 0");
    if (p >= 2 && rows[static_cast<std::size_t>(p - 2)].c != 0)
        fail("c_{p-1} = 0");

    // the set description used by the double-coset series
    int sum_a = 0, sum_b = 0, sum_c = 0;
    for (int i = 1; i <= p; ++i) {
        const FillingRow& r = rows[static_cast<std::size_t>(i - 1)];
        const int rho = mu[static_cast<std::size_t>(i - 1)];
        if (i < p - 1) {
            if (r.a + r.b != rho && r.a + r.b != rho - 1)
                fail("a_i + b_i in {rho_i, rho_i - 1}");
        } else if (r.a + r.b != rho) {
            fail("a_i + b_i = rho_i for the last two rows");
        }
        if (sum_c < s.c && sum_b + r.b >= s.b)
            fail("sum_{i<=j} b_i < b while sum_{i<j} c_i < c");
        sum_a += r.a;
        sum_b += r.b;
        sum_c += r.c;
    }
    if (sum_a != s.a || sum_b != s.b || sum_c != s.c)
        fail("row totals");
}

}  // namespace

Rational gen_bin(long x, long y)
{
    if (y < 0 || x < y)
        return 0;
    BigInt c = binomial(x, y);
    Rational r(c * c, binomial(2 * x, 2 * y));
    r.canonicalize();
    return r;
}

Rational var_gen_bin(long x, long y)
{
    if (y < 0 || x < y)
        return 0;
    BigInt c = binomial(x, y);
    Rational r(c * c, binomial(2 * x + 1, 2 * y));
    r.canonicalize();
    return r;
}

Rational gen_bin(const Partition& lambda)
{
    const int n = lambda.weight();
    BigInt num = multinomial(lambda);
    for (int part : lambda.parts())
        num *= double_factorial(2 * part - 1);
    Rational r(num, double_factorial(2 * n - 1));
    r.canonicalize();
    return r;
}

Rational rfunc(long x, long y, long z, long t, long w)
{
    const long den[4] = {2 * x + w - 1, 2 * y + w + 1, 2 * z + w - 2, 2 * t + w};
    static const char* names[4] = {"2x+w-1", "2y+w+1", "2z+w-2", "2t+w"};
    for (int k = 0; k < 4; ++k)
        if (den[k] == 0)
            throw std::domain_error(std::string("rfunc: denominator factor ") + names[k] + " vanishes at ("
                                    + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z)
                                    + "," + std::to_string(t) + "," + std::to_string(w) + ")");
    BigInt num = BigInt(2 * x + w) * (2 * y + w) * (2 * z + w - 1) * (2 * t + w - 1);
    Rational r(num, BigInt(den[0]) * den[1] * den[2] * den[3]);
    r.canonicalize();
    return r;
}

Rational r_n(long x, long y, long n)
{
    if (n >= 1 && x == n && y == 0)
        return Rational(double_factorial(2 * n - 1));
    if (n < 1 || y < 1 || x < y || x + y > n)
        throw std::invalid_argument("r_n: (" + std::to_string(x) + "," + std::to_string(y)
                                    + ") is not a near hook of " + std::to_string(n) + " with y >= 1");
    BigInt num = BigInt(2 * n) * (n + x - y + 1) * (n + y - x) * factorial(n - x - y)
                 * double_factorial(2 * x - 1) * double_factorial(2 * y - 2);
    BigInt den = BigInt(n + x - y) * (n + y - x - 1) * (2 * (x - y) + 1);
    if ((n + 1 - x - y) % 2)
        den = -den;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational skew_psi(const Partition& lambda, const Partition& mu)
{
    require_strip(lambda, mu);
    PiRational v;
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = i; j <= mu.length(); ++j) {
            const long s = j - i;
            v *= jack_factor(lambda.part(i) - mu.part(j), s);
            v *= jack_factor(mu.part(i) - lambda.part(j + 1), s);
            v /= jack_factor(mu.part(i) - mu.part(j), s);
            v /= jack_factor(lambda.part(i) - lambda.part(j + 1), s);
        }
    return finish(v, "skew_psi");
}

Rational skew_phi(const Partition& lambda, const Partition& mu)
{
    require_strip(lambda, mu);
    PiRational v;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = i; j <= lambda.length(); ++j) {
            const long s = j - i;
            v *= jack_factor(lambda.part(i) - mu.part(j), s);
            v *= jack_factor(mu.part(i) - lambda.part(j + 1), s);
            v /= jack_factor(lambda.part(i) - lambda.part(j), s);
            v /= jack_factor(mu.part(i) - mu.part(j + 1), s);
        }
    return finish(v, "skew_phi");
}

NearHookFilling::NearHookFilling(NearHook shape, Partition type, std::vector<FillingRow> rows)
    : shape_(shape)
    , type_(std::move(type))
    , rows_(std::move(rows))
{
    if (static_cast<int>(rows_.size()) != type_.length())
        throw std::invalid_argument("filling needs one row per part of its type");
    std::array<int, 3> cur{shape_.a, shape_.b, shape_.c};
    remainders_.push_back(cur);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const FillingRow& r = rows_[i];
        if (r.a + r.b + r.c != type_.parts()[i])
            throw std::invalid_argument("filling row " + std::to_string(i + 1) + " does not match the type");
        cur[0] -= r.a;
        cur[1] -= r.b;
        cur[2] -= r.c;
        if (!valid_remainder(cur[0], cur[1], cur[2]))
            throw std::invalid_argument("filling leaves an invalid shape");
        remainders_.push_back(cur);
    }
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (!is_horizontal_strip(shape_after(static_cast<int>(i)), shape_after(static_cast<int>(i) + 1)))
            throw std::invalid_argument("filling step is not a horizontal strip");
    if (cur != std::array<int, 3>{0, 0, 0})
        throw std::invalid_argument("filling does not exhaust the shape");
}

std::array<int, 3> NearHookFilling::remainder(int i) const
{
    return remainders_.at(static_cast<std::size_t>(i));
}

Partition NearHookFilling::shape_after(int i) const
{
    auto r = remainder(i);
    return remainder_shape(r[0], r[1], r[2]);
}

Rational NearHookFilling::weight() const
{
    Rational w = 1;
    for (int i = 1; i <= steps(); ++i) {
        const FillingRow& r = rows_[static_cast<std::size_t>(i - 1)];
        auto prev = remainder(i - 1);
        auto cur = remainder(i);
        w *= gen_bin(prev[0] - prev[1], r.a);
        w *= var_gen_bin(prev[0] - cur[1], r.b);
        if (r.c == 1)
            w *= rfunc(cur[0], prev[0], cur[1], prev[1], prev[2]);
        if (w == 0)
            break;
    }
    return w;
}

Rational NearHookFilling::phi_product() const
{
    Rational v = 1;
    for (int i = 0; i < steps(); ++i)
        v *= skew_phi(shape_after(i), shape_after(i + 1));
    return v;
}

Rational NearHookFilling::psi_product() const
{
    Rational v = 1;
    for (int i = 0; i < steps(); ++i)
        v *= skew_psi(shape_after(i), shape_after(i + 1));
    return v;
}

Rational NearHookFilling::step_factor(int i) const
{
    const FillingRow& r = rows_.at(static_cast<std::size_t>(i - 1));
    auto prev = remainder(i - 1);
    auto cur = remainder(i);
    const long d_prev = prev[0] - prev[1], d_cur = cur[0] - cur[1];
    Rational v = gen_bin(d_prev, r.a) * var_gen_bin(prev[0] - cur[1], r.b);
    const long shift = r.a - r.b;
    if (shift >= 0)
        v /= Rational(pow_int(4, static_cast<unsigned long>(shift)));
    else
        v *= Rational(pow_int(4, static_cast<unsigned long>(-shift)));
    v *= ratio(binomial(2 * d_prev, d_prev), binomial(2 * d_cur, d_cur));
    if (r.c == 1)
        v *= rfunc(cur[0], prev[0], cur[1], prev[1], prev[2]);
    v *= ratio(cur[2] + 1, prev[2] + 1);
    v.canonicalize();
    return v;
}

std::vector<NearHookFilling> enumerate_fillings(const NearHook& shape, const Partition& type)
{
    if (shape.weight() != type.weight())
        throw std::invalid_argument("enumerate_fillings: shape " + shape.partition().to_string()
                                    + " and type " + type.to_string() + " differ in weight");
    std::vector<NearHookFilling> out;
    const auto& mu = type.parts();
    std::vector<FillingRow> rows;

    std::function<void(std::size_t, int, int, int)> go = [&](std::size_t i, int a, int b, int c) {
        if (i == mu.size()) {
            if (a == 0 && b == 0 && c == 0)
                out.emplace_back(shape, type, rows);
            return;
        }
        const Partition before = remainder_shape(a, b, c);
        const int m = mu[i];
        for (int dc = 0; dc <= 1 && dc <= c && dc <= m; ++dc)
            for (int db = 0; db <= b && db + dc <= m; ++db) {
                const int da = m - db - dc;
                if (da > a || !valid_remainder(a - da, b - db, c - dc))
                    continue;
                if (!is_horizontal_strip(before, remainder_shape(a - da, b - db, c - dc)))
                    continue;
                rows.push_back({da, db, dc});
                go(i + 1, a - da, b - db, c - dc);
                rows.pop_back();
            }
    };
    go(0, shape.a, shape.b, shape.c);
    for (const auto& f : out)
        check_inequalities(f);
    return out;
}

MonomialExpansion filling_weight_sums(const NearHook& shape)
{
    MonomialExpansion e(shape.weight());
    for (const Partition& mu : enumerate_partitions(shape.weight())) {
        Rational s = 0;
        for (const auto& f : enumerate_fillings(shape, mu))
            s += f.weight();
        e.add(mu, s);
    }
    return e;
}

Rational q_prefactor(const NearHook& shape)
{
    const long d = shape.a - shape.b;
    Rational r(binomial(2 * d, d), pow_int(4, static_cast<unsigned long>(d)) * (1 + shape.c));
    r.canonicalize();
    return r;
}

Rational p_prefactor(const NearHook& shape)
{
    if (shape.b == 0)
        return 1;
    const long a = shape.a, b = shape.b, c = shape.c;
    Rational r(BigInt(2 * a + c + 1) * (2 * b + c), BigInt(2 * a + c) * (2 * b + c - 1));
    r.canonicalize();
    return r / var_gen_bin(a - 1, b - 1);
}

MonomialExpansion q_near_hook(const NearHook& shape)
{
    return q_prefactor(shape) * filling_weight_sums(shape);
}

MonomialExpansion p_near_hook(const NearHook& shape)
{
    return p_prefactor(shape) * filling_weight_sums(shape);
}

MonomialExpansion q_by_tableaux(const NearHook& shape)
{
    MonomialExpansion e(shape.weight());
    for (const Partition& mu : enumerate_partitions(shape.weight()))
        for (const auto& f : enumerate_fillings(shape, mu))
            e.add(mu, f.phi_product());
    return e;
}

MonomialExpansion p_by_tableaux(const NearHook& shape)
{
    MonomialExpansion e(shape.weight());
    for (const Partition& mu : enumerate_partitions(shape.weight()))
        for (const auto& f : enumerate_fillings(shape, mu))
            e.add(mu, f.psi_product());
    return e;
}

MonomialExpansion zonal_Z(const NearHook& shape)
{
    auto [c, cp, h] = c_products(shape.partition());
    MonomialExpansion from_q = Rational(cp) * q_near_hook(shape);
    MonomialExpansion from_p = Rational(c) * p_near_hook(shape);
    if (!(from_q == from_p))
        throw InternalError("c' Q != c P for near hook " + shape.partition().to_string());
    return from_q;
}

}  // namespace ccseries
