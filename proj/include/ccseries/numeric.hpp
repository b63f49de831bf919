#ifndef CCSERIES_NUMERIC_HPP_
#define CCSERIES_NUMERIC_HPP_

// Exact integer and rational arithmetic shared by every module.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ccseries {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when a computation that must be integral (or otherwise consistent)
/// is not. Always indicates a bug, never bad user input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

BigInt factorial(long n);

/// k!! with the conventions (-1)!! = 0!! = 1. Arguments below -1 throw.
BigInt double_factorial(long k);

/// Zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

BigInt pow_int(long base, unsigned long exp);

/// num/den in lowest terms.
Rational ratio(const BigInt& num, const BigInt& den);

/// Returns the numerator of `q`, throwing InternalError if `q` is not an
/// integer. `what` names the quantity for the diagnostic.
BigInt require_integer(const Rational& q, const std::string& what);

bool is_integer(const Rational& q);

/// "p/q" or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Inverse of to_string(Rational); throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace ccseries

#endif  // CCSERIES_NUMERIC_HPP_
