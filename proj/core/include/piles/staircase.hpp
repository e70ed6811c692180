#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "piles/configuration.hpp"

namespace piles {

/// The staircase (k, k-1, ..., 1); empty for k = 0.
Configuration staircase(long long k);

/// The largest w with staircase(w) <= c componentwise; its staircase is the
/// socle of c. 0 for the empty configuration.
long long staircase_width(const Configuration& c);

/// A configuration minus its socle: a (w+1)-tuple of natural numbers with at
/// least one zero entry, satisfying entries[i] >= entries[j] - 1 for i < j.
/// The trailing component is kept even when zero; the position of the first
/// zero drives the recursive decomposition.
struct ReducedForm {
    std::vector<long long> entries;

    long long width() const { return static_cast<long long>(entries.size()) - 1; }
    long long weight() const;
    bool operator==(const ReducedForm&) const = default;
    std::string to_string() const;
};

struct ReducedFormCheck {
    bool ok = true;
    std::string reason;      // empty when ok
    long long implied_n = 0; // weight + w(w+1)/2, the weight class the tuple lives in

    explicit operator bool() const { return ok; }
};

/// Checks the reduced-form conditions (a zero entry exists; entries[i] >=
/// entries[j] - 1 for i < j) for a (w+1)-tuple.
ReducedFormCheck check_reduced_form(const std::vector<long long>& entries, long long w);

/// red_w: subtracts (w, w-1, ..., 0) pointwise, w = staircase_width(c).
/// Validates c against the SPM patterns first; throws InvalidConfiguration.
ReducedForm reduce(const Configuration& c);

/// As reduce, but skips the validity scan (generator hot path).
ReducedForm reduce_unchecked(const Configuration& c);

/// Inverse of reduce: adds the socle back. Input must satisfy the reduced-form
/// conditions (checked in debug builds only).
Configuration expand(const ReducedForm& r);

}  // namespace piles
