#ifndef CCSERIES_DOUBLE_COSET_HPP_
#define CCSERIES_DOUBLE_COSET_HPP_

// Connection coefficients of the double-coset algebra of B_n in S_2n and the
// generating series for the top double coset nu = (n).

#include "ccseries/monomial.hpp"
#include "ccseries/numeric.hpp"
#include "ccseries/oracle.hpp"
#include "ccseries/partition.hpp"
#include "ccseries/zonal_nearhook.hpp"

#include <vector>

namespace ccseries {

/// prod_{s in lambda, s != (1,1)} (2 a'(s) - l'(s)).
BigInt top_box_product(const Partition& lambda);

/// phi^lambda_(n) = |K_(n)| / |B_{n-1}| * top_box_product(lambda); zero unless
/// lambda is a near hook.
BigInt phi_top(const Partition& lambda);

/// Closed form of phi_top on a near hook:
///   |K_(n)|/|B_{n-1}| (-1)^{c+1} (c+1)! (2a-2)!! (2b-3)!!   (b > 0)
///   |K_(n)|/|B_{n-1}| (2a-2)!!                             (b = 0)
/// Throws InternalError if it disagrees with the box product.
BigInt phi_top_nearhook(const NearHook& shape);

/// phi^beta_mu = sum_{w in K_mu} chi^{2 beta}_w for every beta, mu of n,
/// tabulated from the coset histogram (so n <= 5).
class SphericalTable {
public:
    explicit SphericalTable(int n);
    explicit SphericalTable(const CosetHistogram& hist);

    int n() const noexcept { return n_; }
    const std::vector<Partition>& partitions() const noexcept { return parts_; }
    BigInt phi(const Partition& beta, const Partition& mu) const;
    BigInt phi(std::size_t beta, std::size_t mu) const { return phi_[beta][mu]; }

private:
    int n_;
    std::vector<Partition> parts_;
    std::vector<std::vector<BigInt>> phi_;
};

/// One-shot phi^beta_mu (builds a SphericalTable).
BigInt phi(const Partition& beta, const Partition& mu);

/// b^nu_{lambda mu} = |K_nu|^-1 sum_beta phi^beta_lambda phi^beta_mu phi^beta_nu / H_{2 beta}.
/// Throws InternalError if the result is not a non-negative integer.
BigInt connection_b(const Partition& lambda, const Partition& mu, const Partition& nu,
                    const SphericalTable& table);
BigInt connection_b(const Partition& lambda, const Partition& mu, const Partition& nu);

/// b[nu][lambda][mu] over enumerate_partitions(n).
std::vector<std::vector<std::vector<BigInt>>> connection_b_table(const SphericalTable& table);

/// The signed near-hook expansion of [m_lambda(x) m_mu(y)] (1/(2^n n!)) sum b^n p p.
Rational main_series_coefficient(const Partition& lambda, const Partition& mu);

/// Every cell of the same series; cells are computed in parallel.
SeriesCoefficientTable main_series_table(int n, int threads = 0);

/// Basis change of (1/(2^n n!)) sum_{lambda,mu} b_top[lambda][mu] p_lambda(x) p_mu(y),
/// with b_top indexed by enumerate_partitions(n).
SeriesCoefficientTable series_from_b(int n, const std::vector<std::vector<BigInt>>& b_top);

/// (|B_n|/|K_(n)|) sum_{near hooks} phi_top P(x) Q(y), with P and Q from the
/// near-hook expansions.
SeriesCoefficientTable series_via_zonal(int n);

/// n (n-2p) ((n-p-1)!/(n-2p)!)^2 (2n-4p-1)!! when 2p <= n-1, else 0.
BigInt closed_form_npone(int n, int p);

/// Normaliser of the single-alphabet series; r'_n(n,0) = (2n-2)!!.
Rational r_prime_n(long x, long y, long n);

/// Pi_n = (1/|B_n|) sum_lambda b^n_{lambda,(n)} p_lambda through the near-hook expansion.
MonomialExpansion pi_series(int n);
/// Pi_n = |K_(n)|^-1 sum phi_top^2 / c' P.
MonomialExpansion pi_series_via_zonal(int n);
/// Pi_n from b^n_{lambda,(n)} given as a vector over enumerate_partitions(n).
MonomialExpansion pi_series_from_b(int n, const std::vector<BigInt>& b_lambda_top);

}  // namespace ccseries

#endif  // CCSERIES_DOUBLE_COSET_HPP_
