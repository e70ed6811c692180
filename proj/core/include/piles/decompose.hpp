#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "piles/staircase.hpp"

namespace piles {

/// One level of the recursive decomposition of a reduced form:
/// r = (t_0,...,t_{l-1}, 0, u_0,...,u_{w-l-1}) with all t_i > 0,
/// m = min(t) (0 when t is empty, i.e. l = 0), u binary.
struct DecompStep {
    long long l = 0;             // position of the first zero
    std::vector<std::uint8_t> u; // dust grains right of the zero, length w - l
    long long m = 0;             // layers peeled off the prefix; >= 1 iff l >= 1

    bool operator==(const DecompStep&) const = default;
};

/// The full recursive decomposition: the l values strictly decrease and the
/// chain ends when the residual is exhausted.
struct DecompChain {
    std::vector<DecompStep> steps;
    long long top_width = 0;

    bool operator==(const DecompChain&) const = default;
    std::string to_string() const;  // "(l;u;m)" per step, outermost first
};

struct DecompStepResult {
    DecompStep step;
    std::optional<ReducedForm> residual;  // width l-1; absent iff l = 0
};

/// Splits a reduced form at its first zero. Throws NotAReducedForm.
DecompStepResult decompose_step(const ReducedForm& r);

/// Inverse of decompose_step at width w. Throws InconsistentStep when the
/// reassembled tuple would not be a reduced form with first zero at step.l.
ReducedForm recompose_step(const DecompStep& step,
                           const std::optional<ReducedForm>& residual, long long w);

/// Iterated step decomposition until no residual remains.
DecompChain decompose_full(const ReducedForm& r);

/// Inverse of decompose_full. Throws InconsistentStep.
ReducedForm recompose_full(const DecompChain& chain);

}  // namespace piles
