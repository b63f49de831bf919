#include "ccseries/monomial.hpp"

namespace ccseries {

Rational MonomialExpansion::coefficient(const Partition& lambda) const
{
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MonomialExpansion::check_weight(const Partition& lambda) const
{
    if (lambda.weight() != degree_)
        throw std::invalid_argument("monomial " + lambda.to_string() + " does not have degree "
                                    + std::to_string(degree_));
}

void MonomialExpansion::add(const Partition& lambda, const Rational& value)
{
    check_weight(lambda);
    if (value == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(lambda, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void MonomialExpansion::set(const Partition& lambda, const Rational& value)
{
    check_weight(lambda);
    if (value == 0)
        terms_.erase(lambda);
    else
        terms_[lambda] = value;
}

MonomialExpansion& MonomialExpansion::operator+=(const MonomialExpansion& other)
{
    if (other.degree_ != degree_ && !other.is_zero())
        throw std::invalid_argument("adding expansions of different degrees");
    for (const auto& [lambda, v] : other.terms_)
        add(lambda, v);
    return *this;
}

MonomialExpansion& MonomialExpansion::operator*=(const Rational& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [lambda, v] : terms_)
        v *= scalar;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const MonomialExpansion& e)
{
    if (e.is_zero())
        return os << "0";
    bool first = true;
    for (const auto& [lambda, v] : e.terms()) {
        os << (first ? "" : " + ") << v.get_str() << "*m" << lambda;
        first = false;
    }
    return os;
}

Rational SeriesCoefficientTable::at(const Partition& lambda, const Partition& mu) const
{
    auto it = entries.find({lambda, mu});
    return it == entries.end() ? Rational(0) : it->second;
}

}  // namespace ccseries
