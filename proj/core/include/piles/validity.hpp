#pragma once

#include <cstddef>
#include <string>

#include "piles/configuration.hpp"

namespace piles {

/// Kinds of forbidden patterns whose absence characterizes reachability.
enum class Pattern {
    none,
    /// k+2 consecutive columns of the same positive height (p,p,p for SPM).
    plateau,
    /// Two plateaux of length k+1 joined by a perfect staircase of k-runs
    /// (p,p,...,q,q for SPM).
    staircase,
};

struct ValidityReport {
    bool valid = true;
    Pattern pattern = Pattern::none;
    std::size_t index = 0;  // leftmost start of the pattern occurrence

    explicit operator bool() const { return valid; }
};

/// Name used by the CLI, e.g. "plateau3" for the SPM triple plateau.
std::string pattern_name(const ValidityReport& report, long long k);

/// Checks the SPM forbidden patterns: p,p,p (p > 0) and
/// p,p,p-1,...,q+1,q,q (p > q > 0). Reports the leftmost occurrence.
ValidityReport is_valid_spm(const Configuration& c);

/// Checks the IPM_k forbidden patterns (p > 0, h > 1):
///   p^[k+2],  (p+1)^[k+1]·p^[k+1],  (p+h)^[k+1]·prod_i (p+h-i)^[k]·p^[k+1].
/// k = 1 coincides with the SPM patterns.
ValidityReport is_valid_ipm(const Configuration& c, long long k);

}  // namespace piles
