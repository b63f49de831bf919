#ifndef CCSERIES_ZONAL_NEARHOOK_HPP_
#define CCSERIES_ZONAL_NEARHOOK_HPP_

// Monomial expansions of zonal polynomials indexed by near hooks (a, b, 1^c).
//
// A column-strict tableau of shape (a,b,1^c) and type mu (l(mu) = p) is
// stored as the rows (a_i, b_i, c_i), i = 1..p: the number of boxes in the
// first row, second row and the column below them holding the label p-i+1.
// Removing the labels p, p-1, ..., p-i+1 leaves the shape
// (abar_i, bbar_i, 1^cbar_i) with abar_i = a - (a_1 + ... + a_i), etc.

#include "ccseries/monomial.hpp"
#include "ccseries/numeric.hpp"
#include "ccseries/partition.hpp"

#include <array>
#include <map>
#include <vector>

namespace ccseries {

/// C(x,y)^2 / C(2x,2y) for x >= y, zero otherwise.
Rational gen_bin(long x, long y);
/// C(x,y)^2 / C(2x+1,2y) for x >= y, zero otherwise.
Rational var_gen_bin(long x, long y);
/// Multinomial extension: C(n,lambda) (2 lambda - 1)!! / (2n - 1)!!.
Rational gen_bin(const Partition& lambda);

/// R(x,y,z,t,w) = (2x+w)(2y+w)(2z+w-1)(2t+w-1) / ((2x+w-1)(2y+w+1)(2z+w-2)(2t+w)).
/// Throws std::domain_error naming the vanishing denominator factor.
Rational rfunc(long x, long y, long z, long t, long w);

/// Signed normaliser of a near hook (x, y, 1^(n-x-y)) in the double-coset
/// series; r_n(n, 0) = (2n-1)!!. Throws std::invalid_argument unless y >= 1
/// and (x,y,1^(n-x-y)) is a partition, or (x,y) = (n,0).
Rational r_n(long x, long y, long n);

/// Skew factors of the zonal (Jack, alpha = 2) P and Q expansions for a
/// horizontal strip lambda/mu. Throws std::invalid_argument otherwise.
Rational skew_psi(const Partition& lambda, const Partition& mu);
Rational skew_phi(const Partition& lambda, const Partition& mu);

struct FillingRow {
    int a = 0;
    int b = 0;
    int c = 0;
    friend bool operator==(const FillingRow&, const FillingRow&) = default;
};

class NearHookFilling {
public:
    NearHookFilling(NearHook shape, Partition type, std::vector<FillingRow> rows);

    const NearHook& shape() const noexcept { return shape_; }
    const Partition& type() const noexcept { return type_; }
    const std::vector<FillingRow>& rows() const noexcept { return rows_; }
    int steps() const noexcept { return static_cast<int>(rows_.size()); }

    /// (abar_i, bbar_i, cbar_i) for 0 <= i <= p.
    std::array<int, 3> remainder(int i) const;
    /// Shape left after removing the i largest labels.
    Partition shape_after(int i) const;

    /// prod_i gen_bin(abar_{i-1}-bbar_{i-1}, a_i) var_gen_bin(abar_{i-1}-bbar_i, b_i)
    ///        R(abar_i, abar_{i-1}, bbar_i, bbar_{i-1}, cbar_{i-1})^{c_i}
    Rational weight() const;

    /// Product of skew_phi (resp. skew_psi) over the strips of the tableau.
    Rational phi_product() const;
    Rational psi_product() const;

    /// Closed form of skew_phi for the strip removed at step i (1-based).
    Rational step_factor(int i) const;

private:
    NearHook shape_;
    Partition type_;
    std::vector<FillingRow> rows_;
    std::vector<std::array<int, 3>> remainders_;
};

/// All column-strict tableaux of the near-hook shape with the given type,
/// generated from the chain of horizontal strips. Every output is also
/// checked against the inequality descriptions of the same set; a failure
/// throws InternalError. Throws std::invalid_argument on a weight mismatch.
std::vector<NearHookFilling> enumerate_fillings(const NearHook& shape, const Partition& type);

/// sum of NearHookFilling::weight over enumerate_fillings(shape, mu), per mu.
MonomialExpansion filling_weight_sums(const NearHook& shape);

/// Q and P prefactors: C(2a-2b, a-b) / (4^(a-b) (1+c)) and
/// (2a+c+1)(2b+c) / ((2a+c)(2b+c-1) var_gen_bin(a-1,b-1)) (1 when b = 0).
Rational q_prefactor(const NearHook& shape);
Rational p_prefactor(const NearHook& shape);

MonomialExpansion q_near_hook(const NearHook& shape);
MonomialExpansion p_near_hook(const NearHook& shape);

/// Tableau sums of skew_phi / skew_psi; an independent route to Q and P.
MonomialExpansion q_by_tableaux(const NearHook& shape);
MonomialExpansion p_by_tableaux(const NearHook& shape);

/// Z = c' Q = c P; throws InternalError if the two disagree.
MonomialExpansion zonal_Z(const NearHook& shape);

}  // namespace ccseries

#endif  // CCSERIES_ZONAL_NEARHOOK_HPP_
