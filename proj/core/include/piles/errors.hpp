#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace piles {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A FALL or SLIDE move was requested at a column where it does not apply.
struct RuleNotApplicable : Error {
    using Error::Error;
};

/// Dominance comparison of partitions with different weights.
struct WeightMismatch : Error {
    using Error::Error;
};

/// A sequence that is not a reachable configuration was passed where one is required.
struct InvalidConfiguration : Error {
    using Error::Error;
};

/// A tuple that violates the reduced-form conditions.
struct NotAReducedForm : Error {
    using Error::Error;
};

/// A decomposition step that cannot be recomposed consistently.
struct InconsistentStep : Error {
    using Error::Error;
};

/// Replay of a generating sequence hit a position where FALL does not apply.
struct InvalidStep : Error {
    InvalidStep(std::size_t position, const std::string& what)
        : Error(what), position(position) {}
    std::size_t position;
};

/// A request exceeded a configured table or search bound.
struct CapacityExceeded : Error {
    using Error::Error;
};

/// Width w is out of range for the requested weight.
struct InvalidWidth : Error {
    using Error::Error;
};

/// The peeling map is undefined on this tuple (a targeted entry is zero).
struct PeelUndefined : Error {
    using Error::Error;
};

/// An (extended form, count) pair does not sit on the peeling trajectory of the
/// requested basis.
struct TrajectoryMismatch : Error {
    using Error::Error;
};

/// An operation requiring an extended reduced form received something else.
struct NotExtended : Error {
    using Error::Error;
};

}  // namespace piles
