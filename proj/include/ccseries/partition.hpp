#ifndef CCSERIES_PARTITION_HPP_
#define CCSERIES_PARTITION_HPP_

#include "ccseries/numeric.hpp"

#include <compare>
#include <initializer_list>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

namespace ccseries {

/// An integer partition stored densely as weakly decreasing positive parts.
/// The empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless `parts` is weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    /// Sorts and drops zeros before validating.
    static Partition from_unsorted(std::vector<int> parts);
    /// Parses dot-joined parts such as "3.1.1". The empty string is the empty partition.
    static Partition parse(const std::string& text);
    /// (n-a, 1^a)
    static Partition hook(int n, int a);
    static Partition row(int n);
    static Partition column(int n);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    /// 1-based part, zero beyond the length.
    int part(int i) const noexcept
    {
        return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }
    /// Number of parts equal to i.
    int multiplicity(int i) const noexcept;

    Partition conjugate() const;
    bool contains(const Partition& other) const noexcept;

    /// Dot-joined rendering, inverse of parse().
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Reverse-lexicographic order: (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1).
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Arm, leg, co-arm and co-leg of a box.
struct BoxStats {
    int arm;
    int leg;
    int coarm;
    int coleg;
};

/// Box (row, col), both 1-based, must lie in `lambda`.
BoxStats box_stats(const Partition& lambda, int row, int col);

/// Near hook (a, b, 1^c).
struct NearHook {
    int a = 1;
    int b = 0;
    int c = 0;

    /// Throws std::invalid_argument when (a,b,1^c) is not a partition with
    /// the b = 0 => c = 0 convention.
    static NearHook make(int a, int b, int c);
    /// Throws unless `lambda` has at most two parts larger than one.
    static NearHook from_partition(const Partition& lambda);

    int weight() const noexcept { return a + b + c; }
    Partition partition() const;

    friend bool operator==(const NearHook&, const NearHook&) = default;
};

bool is_near_hook(const Partition& lambda);

/// All near hooks of weight n ordered as their partitions are.
std::vector<NearHook> near_hooks(int n);

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

/// Index of `lambda` inside enumerate_partitions(lambda.weight()).
std::size_t partition_index(const Partition& lambda);

BigInt z_of(const Partition& lambda);
BigInt aut_of(const Partition& lambda);
/// |C_lambda| = n!/z_lambda.
BigInt class_size(const Partition& lambda);
/// |K_lambda| = |B_n|^2 / (2^l(lambda) z_lambda).
BigInt coset_size(const Partition& lambda);
/// |B_n| = 2^n n!
BigInt hyperoctahedral_order(int n);

/// Product of hook lengths.
BigInt hook_product(const Partition& lambda);

/// (c_lambda, c'_lambda, H_{2 lambda}) for the zonal (alpha = 2) normalisations:
///   c  = prod (2 a(s) + l(s) + 1),  c' = prod (2 (a(s) + 1) + l(s)).
/// Throws InternalError if c c' differs from the hook product of 2 lambda.
std::tuple<BigInt, BigInt, BigInt> c_products(const Partition& lambda);

Partition double_parts(const Partition& lambda);

/// Multinomial n!/prod lambda_i!.
BigInt multinomial(const Partition& lambda);

/// True when mu is contained in lambda and lambda/mu has at most one box per column.
bool is_horizontal_strip(const Partition& lambda, const Partition& mu);

}  // namespace ccseries

#endif  // CCSERIES_PARTITION_HPP_
