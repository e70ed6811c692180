#pragma once

#include <utility>
#include <vector>

#include "piles/configuration.hpp"

namespace piles {

/// True when FALL applies at column l, i.e. c[l] >= c[l+1] + 2.
bool can_fall(const Configuration& c, std::size_t l);

/// Moves one grain from column l to column l+1. Weight is preserved and the
/// result is again a partition. Throws RuleNotApplicable when can_fall fails.
Configuration apply_fall(const Configuration& c, std::size_t l);

struct SlideResult {
    Configuration config;
    long long k_prime;  // plateau length actually crossed, 1 <= k_prime < k
};

/// SLIDE_k at column l: moves one grain from column l across the plateau
/// c[l]-1 = c[l+1] = ... = c[l+k'] to column l+k'+1, for the unique k' with
/// 1 <= k' < k (the plateau length determines k'). Throws RuleNotApplicable
/// when no such k' exists.
SlideResult apply_slide(const Configuration& c, std::size_t l, long long k);

/// Columns where FALL applies.
std::vector<std::size_t> fall_targets(const Configuration& c);

/// (column, k') pairs where SLIDE_k applies.
std::vector<std::pair<std::size_t, long long>> slide_targets(const Configuration& c,
                                                             long long k);

/// The unique FALL fixed point of weight n:
/// (k, k-1, ..., l+1, l, l, l-1, ..., 1) where n = k(k+1)/2 + l, 0 <= l <= k.
Configuration phi(long long n);

}  // namespace piles
