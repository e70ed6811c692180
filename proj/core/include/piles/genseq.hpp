#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "piles/configuration.hpp"
#include "piles/staircase.hpp"

namespace piles {

/// Column indices certifying reachability via successive FALL applications.
using GeneratingSequence = std::vector<std::size_t>;

std::string sequence_to_string(const GeneratingSequence& seq);
GeneratingSequence parse_sequence(const std::string& text);

/// alpha(i) = 0, 1, ..., i-1: moves one grain from column 0 out to column i.
GeneratingSequence alpha(long long i);

/// beta(i) = alpha(i) · alpha(i-1) · ... · alpha(1).
GeneratingSequence beta(long long i);

/// beta(1) · beta(2) · ... · beta(w-1): replayed from (n), builds the socle
/// staircase and leaves the remaining grains on column 0.
GeneratingSequence socle_prefix(long long w);

/// The FALL rule carried over to reduced forms: moves a grain from entry l to
/// entry l+1 whenever entries[l] >= entries[l+1] + 1. Same column index as
/// the FALL it mirrors on the full configuration.
bool can_fall_prime(const ReducedForm& r, std::size_t l);
ReducedForm apply_fall_prime(const ReducedForm& r, std::size_t l);

/// A sequence of FALL indices transforming (p, 0, ..., 0) of width w into r,
/// built from the recursive decomposition: dust grains first (descending
/// positions), then the m layers, then the residual.
GeneratingSequence path(const ReducedForm& r);

/// A generating sequence for c: socle_prefix(sw(c)) · path(reduce(c)).
/// Throws InvalidConfiguration when c is not reachable.
GeneratingSequence generating_sequence(const Configuration& c);

/// Replays FALL from (n). Returns the final configuration; throws
/// InvalidStep(t) when step t does not satisfy the FALL precondition.
Configuration verify_sequence(long long n, const GeneratingSequence& seq);

}  // namespace piles
