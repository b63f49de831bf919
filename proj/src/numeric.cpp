#include "ccseries/numeric.hpp"

namespace ccseries {

BigInt factorial(long n)
{
    if (n < 0)
        throw std::invalid_argument("factorial of negative number " + std::to_string(n));
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt double_factorial(long k)
{
    if (k < -1)
        throw std::invalid_argument("double factorial undefined for " + std::to_string(k));
    if (k <= 0)
        return 1;
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

BigInt binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational ratio(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

BigInt pow_int(long base, unsigned long exp)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), BigInt(base).get_mpz_t(), exp);
    return r;
}

bool is_integer(const Rational& q)
{
    return q.get_den() == 1;
}

BigInt require_integer(const Rational& q, const std::string& what)
{
    if (!is_integer(q))
        throw InternalError(what + " is not an integer: " + q.get_str());
    return q.get_num();
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

std::string to_string(const BigInt& z)
{
    return z.get_str();
}

Rational parse_rational(const std::string& text)
{
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational number: '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

}  // namespace ccseries
