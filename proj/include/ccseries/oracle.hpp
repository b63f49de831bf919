#ifndef CCSERIES_ORACLE_HPP_
#define CCSERIES_ORACLE_HPP_

// Brute-force ground truth over S_n and S_2n. Nothing in here uses characters
// or closed forms except zonal_oracle, which needs characters of S_2n to turn
// the coset histogram into spherical sums.
//
// Every enumeration kernel comes in two flavours: a serial reference that
// walks the whole group with std::next_permutation, and an OpenMP version
// that shards the group by the image of the first point. Both return
// identical results; the parallel one is what the rest of the library calls.

#include "ccseries/monomial.hpp"
#include "ccseries/numeric.hpp"
#include "ccseries/partition.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ccseries {

/// Thrown when an oracle is asked for an n beyond its configured cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest n each oracle accepts. Raising them past the hard limits
/// (10 for S_n, 5 for S_2n) is rejected.
struct OracleCaps {
    int class_cap = 8;
    int coset_cap = 4;

    static constexpr int class_hard_limit = 10;
    static constexpr int coset_hard_limit = 5;
};

/// A bijection of {0, ..., m-1} stored as its image vector; composition is
/// right to left: (a * b)(x) = a(b(x)).
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument if `images` is not a bijection of 0..m-1.
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int m);
    /// Images given on 1..m, as permutations are usually written.
    static Permutation from_one_based(const std::vector<int>& images);
    /// Disjoint cycles on 1-based points, e.g. {{1,2},{3,4,5}}.
    static Permutation from_cycles(int m, const std::vector<std::vector<int>>& cycles);
    /// f* = (1 2)(3 4)...(2n-1 2n)
    static Permutation fixed_matching(int n);

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    Permutation inverse() const;
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

Partition cycle_type(const Permutation& sigma);

/// Coset type of omega in S_2n: the partition lambda such that
/// f* omega f* omega^-1 has cycle type (l1,l1,l2,l2,...). Throws
/// InternalError if the cycle type is not paired.
Partition coset_type(const Permutation& omega);

/// Canonical element of C_nu: cycles of decreasing length on consecutive points.
Permutation class_representative(const Partition& nu);

/// The first `count` elements of K_nu in lexicographic enumeration order of S_2n.
std::vector<Permutation> coset_representatives(const Partition& nu, int count = 1);

/// Random element of B_n built from pair swaps and within-pair swaps.
Permutation random_hyperoctahedral(int n, std::mt19937_64& rng);

/// Number of alpha in C_lambda with alpha^-1 gamma in C_mu, gamma = class_representative(nu).
BigInt class_convolution(const Partition& lambda, const Partition& mu, const Partition& nu,
                         const OracleCaps& caps = {});
/// Same count for an explicit gamma (any element of the class).
BigInt class_convolution(const Partition& lambda, const Partition& mu, const Permutation& gamma,
                         const OracleCaps& caps = {});

/// Number of sigma in K_lambda with sigma^-1 omega in K_mu, omega = first element of K_nu.
BigInt double_coset_convolution(const Partition& lambda, const Partition& mu, const Partition& nu,
                                const OracleCaps& caps = {});
BigInt double_coset_convolution(const Partition& lambda, const Partition& mu, const Permutation& omega,
                                const OracleCaps& caps = {});

/// Full tensor T[nu][lambda][mu] indexed by enumerate_partitions(n).
using ConvolutionTensor = std::vector<std::vector<std::vector<std::uint64_t>>>;

ConvolutionTensor class_convolution_table(int n, const OracleCaps& caps = {});
ConvolutionTensor class_convolution_table_serial(int n, const OracleCaps& caps = {});
ConvolutionTensor double_coset_convolution_table(int n, const OracleCaps& caps = {});
ConvolutionTensor double_coset_convolution_table_serial(int n, const OracleCaps& caps = {});

/// Counts of S_2n by (coset type, cycle type).
struct CosetHistogram {
    int n = 0;
    std::map<std::pair<Partition, Partition>, BigInt> counts;

    BigInt count(const Partition& coset, const Partition& cycle) const;
    BigInt total() const;
};

/// Single pass over S_2n; n <= 5 regardless of caps.
CosetHistogram coset_histogram(int n);
CosetHistogram coset_histogram_serial(int n);

/// Z_beta = |B_n|^-1 sum_lambda phi^beta_lambda p_lambda with phi taken from
/// the histogram and characters of S_2n.
MonomialExpansion zonal_oracle(const Partition& beta);
MonomialExpansion zonal_oracle(const Partition& beta, const CosetHistogram& hist);

}  // namespace ccseries

#endif  // CCSERIES_ORACLE_HPP_
