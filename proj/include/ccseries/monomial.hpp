#ifndef CCSERIES_MONOMIAL_HPP_
#define CCSERIES_MONOMIAL_HPP_

#include "ccseries/numeric.hpp"
#include "ccseries/partition.hpp"

#include <map>
#include <string>
#include <utility>
#include <ostream>

namespace ccseries {

/// A homogeneous symmetric function of fixed degree in the monomial basis.
/// Zero coefficients are never stored.
class MonomialExpansion {
public:
    explicit MonomialExpansion(int degree = 0) : degree_(degree) {}

    int degree() const noexcept { return degree_; }
    const std::map<Partition, Rational>& terms() const noexcept { return terms_; }

    /// Zero for absent keys.
    Rational coefficient(const Partition& lambda) const;

    /// Throws std::invalid_argument if lambda has the wrong weight.
    void add(const Partition& lambda, const Rational& value);
    void set(const Partition& lambda, const Rational& value);

    MonomialExpansion& operator+=(const MonomialExpansion& other);
    MonomialExpansion& operator*=(const Rational& scalar);
    friend MonomialExpansion operator*(Rational scalar, MonomialExpansion e)
    {
        e *= scalar;
        return e;
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    friend bool operator==(const MonomialExpansion&, const MonomialExpansion&) = default;

private:
    void check_weight(const Partition& lambda) const;

    int degree_;
    std::map<Partition, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const MonomialExpansion& e);

/// Coefficient grid of a series in m_lambda(x) m_mu(y), keyed by partitions of n.
struct SeriesCoefficientTable {
    int n = 0;
    /// Human-readable description of the scalar applied to the raw sum,
    /// e.g. "1/n" or "1/(2^n n!)".
    std::string normalization;
    std::map<std::pair<Partition, Partition>, Rational> entries;

    Rational at(const Partition& lambda, const Partition& mu) const;
};


}  // namespace ccseries

#endif  // CCSERIES_MONOMIAL_HPP_
