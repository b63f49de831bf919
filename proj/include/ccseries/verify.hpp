#ifndef CCSERIES_VERIFY_HPP_
#define CCSERIES_VERIFY_HPP_

// Verification batteries behind `ccseries verify`. Each check compares two
// independent routes to the same numbers and records the first disagreement.

#include "ccseries/oracle.hpp"

#include <string>
#include <vector>

namespace ccseries {

struct CheckLine {
    std::string suite;
    std::string name;
    bool passed = true;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckLine> lines;
    bool ok() const;
};

/// connection_c against brute force, and class row sums, for 1 <= m <= n.
/// Throws CapExceeded if n > caps.class_cap.
VerifyReport verify_class_oracle(int n, const OracleCaps& caps);

/// connection_b and the near-hook series against S_2n brute force, plus coset
/// row sums, for 1 <= m <= n. Throws CapExceeded if n > caps.coset_cap.
VerifyReport verify_coset_oracle(int n, const OracleCaps& caps);

/// Near-hook zonal polynomials against the histogram oracle for weights <= n,
/// plus c P = c' Q. Throws CapExceeded if n > 5.
VerifyReport verify_zonal_oracle(int n);

/// Closed forms (class series, top coefficients, (n-p,1^p) diagonals, the Pi_n
/// table, integrality) for 1 <= m <= n.
VerifyReport verify_closed_forms(int n);

}  // namespace ccseries

#endif  // CCSERIES_VERIFY_HPP_
