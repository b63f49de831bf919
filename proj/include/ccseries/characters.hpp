#ifndef CCSERIES_CHARACTERS_HPP_
#define CCSERIES_CHARACTERS_HPP_

// Irreducible characters of S_n, hook Kostka numbers and the power-sum to
// monomial transition.

#include "ccseries/monomial.hpp"
#include "ccseries/numeric.hpp"
#include "ccseries/partition.hpp"

#include <map>
#include <utility>
#include <vector>

namespace ccseries {

/// Memoised Murnaghan-Nakayama evaluation. The cache belongs to the object;
/// share one instance per thread, or fill it first and only read afterwards.
class CharacterTable {
public:
    /// chi^lambda evaluated on cycle type mu. Throws std::invalid_argument
    /// when the weights differ.
    BigInt character(const Partition& lambda, const Partition& mu);

    /// f^lambda = chi^lambda_{1^n}
    BigInt dimension(const Partition& lambda);

    std::size_t cache_size() const noexcept { return cache_.size(); }

private:
    using Key = std::pair<std::vector<int>, std::vector<int>>;
    BigInt mn(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t from);

    std::map<Key, BigInt> cache_;
};

/// One-shot evaluation with a throwaway cache.
BigInt character(const Partition& lambda, const Partition& mu);

/// K_{(n-a,1^a), lambda} = C(l(lambda) - 1, a).
BigInt kostka_hook(int a, const Partition& lambda);

/// [m_lambda] p_mu: the number of ways to distribute the parts of mu into
/// the (labelled) parts of lambda so that each part of lambda is filled exactly.
BigInt powersum_monomial_coefficient(const Partition& mu, const Partition& lambda);

/// p_mu in the monomial basis.
MonomialExpansion powersum_to_monomial(const Partition& mu);

/// Full transition matrix M[i][j] = [m_{lambda_j}] p_{lambda_i} indexed by
/// enumerate_partitions(n).
std::vector<std::vector<BigInt>> powersum_monomial_matrix(int n);

/// Change of basis for a series in two alphabets: given C[i][j], the
/// coefficient of p_{lambda_i}(x) p_{lambda_j}(y), returns A[k][l], the
/// coefficient of m_{lambda_k}(x) m_{lambda_l}(y).
std::vector<std::vector<Rational>> powersum_pairs_to_monomial(int n, const std::vector<std::vector<Rational>>& c);

/// s_{(n-a,1^a)} = sum_lambda K_{(n-a,1^a),lambda} m_lambda.
MonomialExpansion schur_hook_to_monomial(int a, int n);

/// s_lambda = sum_mu chi^lambda_mu p_mu / z_mu, expanded through
/// powersum_to_monomial. Independent of the Kostka route.
MonomialExpansion schur_via_characters(const Partition& lambda, CharacterTable& table);

}  // namespace ccseries

#endif  // CCSERIES_CHARACTERS_HPP_
