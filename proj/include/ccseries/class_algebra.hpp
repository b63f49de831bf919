#ifndef CCSERIES_CLASS_ALGEBRA_HPP_
#define CCSERIES_CLASS_ALGEBRA_HPP_

// Connection coefficients of the class algebra of S_n and the generating
// series for the top class nu = (n).

#include "ccseries/characters.hpp"
#include "ccseries/numeric.hpp"
#include "ccseries/partition.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ccseries {

/// c^nu_{lambda mu} = n!/(z_lambda z_mu) sum_alpha chi^alpha_lambda chi^alpha_mu chi^alpha_nu / f^alpha.
/// Throws InternalError if the character sum is not a non-negative integer.
BigInt connection_c(const Partition& lambda, const Partition& mu, const Partition& nu,
                    CharacterTable& table);
BigInt connection_c(const Partition& lambda, const Partition& mu, const Partition& nu);

/// c^{(n)}_{lambda mu} through the hook-only character sum.
BigInt connection_c_top(const Partition& lambda, const Partition& mu, CharacterTable& table);
BigInt connection_c_top(const Partition& lambda, const Partition& mu);

/// (n - l(lambda))! (n - l(mu))! / (n + 1 - l(lambda) - l(mu))!, zero when the
/// denominator argument is negative.
BigInt mv09_coefficient(const Partition& lambda, const Partition& mu);

/// n! / (n + 1 - l(lambda)).
Rational fv10_coefficient(const Partition& lambda);

/// Dense table of c^{(n)}_{lambda mu}, indexed by enumerate_partitions(n).
/// Cells are filled in parallel; `threads` <= 0 keeps the OpenMP default.
std::vector<std::vector<BigInt>> connection_c_top_table(int n, int threads = 0);

/// (1/n) sum c^n_{lambda mu} p_lambda(x) p_mu(y) expanded in m(x) m(y).
SeriesCoefficientTable class_top_series(int n, int threads = 0);

/// (1/n!) sum_lambda c^n_{lambda,(n)} p_lambda expanded in m.
MonomialExpansion class_top_single_series(int n);

struct Mismatch {
    Partition lambda;
    Partition mu;
    Rational expected;
    Rational actual;
};

struct VerifyOutcome {
    bool ok = true;
    std::size_t cells_checked = 0;
    std::optional<Mismatch> first_mismatch;
};

/// Expands the class-algebra series and compares every cell with mv09_coefficient.
VerifyOutcome verify_mv09(int n, int threads = 0);
/// Same for the single-variable series against fv10_coefficient / n!.
VerifyOutcome verify_fv10(int n);

}  // namespace ccseries

#endif  // CCSERIES_CLASS_ALGEBRA_HPP_
