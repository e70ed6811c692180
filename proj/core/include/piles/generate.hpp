#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "piles/decompose.hpp"
#include "piles/staircase.hpp"

namespace piles {

/// Counters for the amortized-cost accounting of one generation run.
struct GenStats {
    std::uint64_t nodes = 0;   // recursive generator invocations
    std::uint64_t yields = 0;  // objects emitted
    std::uint64_t work = 0;    // constant-work units: loop steps and subroutine transitions
    std::uint64_t cells = 0;   // scalar state cells held by the traversal

    GenStats& operator+=(const GenStats& other);
};

/// Enumerates binary strings of fixed length and weight over a caller-supplied
/// buffer in revolving-door order: at most two bits flip per step and each
/// step costs O(1) amortized. Setup writes the `ones` initial bits, except in
/// the degenerate all-ones case which is flagged instead of materialized so
/// that setup stays O(1) there.
class FixedWeightGen {
   public:
    FixedWeightGen() = default;

    /// bits: a region of `length` zeroed cells; positions: scratch with room
    /// for ones + 2 entries. Both stay borrowed until clear().
    void init(std::uint8_t* bits, long long* positions, long long length, long long ones);

    /// Advances to the next string; false once exhausted (idempotent).
    bool next();

    /// Restores the bit region to all-zero.
    void clear();

    /// True in the flagged degenerate case: the string is all ones but the
    /// buffer was left untouched.
    bool all_ones() const { return all_ones_; }

    std::uint64_t steps = 0;  // transitions + scan work, for the CAT accounting

   private:
    std::uint8_t* bits_ = nullptr;
    long long* c_ = nullptr;  // 1-indexed positions, c_[ones+1] = length sentinel
    long long length_ = 0;
    long long ones_ = 0;
    bool all_ones_ = false;
};

/// Enumerates binary strings of fixed length and weight through a visitor.
/// The buffer passed to the visitor is reused between calls.
void gen_fixed_weight_binary(long long length, long long ones,
                             const std::function<void(const std::vector<std::uint8_t>&)>& visit);

namespace detail {
class GenEngine;
}

/// One decomposition level as held inside a running traversal. The u bits
/// live in the traversal's shared buffer at [u_off, u_off + u_len), except
/// when u_all_ones is set.
struct GenStep {
    long long l = 0;
    long long m = 0;
    long long u_off = 0;
    long long u_len = 0;
    bool u_all_ones = false;
};

/// Read-only view of the traversal state at a yield. Valid only during the
/// visitor call; materialize (copy) anything that must outlive it.
class GenView {
   public:
    long long fiber_width() const;
    long long depth() const { return depth_; }

    /// The current decomposition chain, outermost first. O(w) copy.
    DecompChain chain() const;

    /// The current reduced form. O(w).
    ReducedForm reduced() const;

    /// expand(reduced()). O(w).
    Configuration configuration() const;

   private:
    friend class detail::GenEngine;
    friend class ReducedFormStream;
    GenView(const detail::GenEngine* engine, long long depth)
        : engine_(engine), depth_(depth) {}
    const detail::GenEngine* engine_;
    long long depth_;
};

using ReducedVisitor = std::function<void(const GenView&)>;
using ConfigurationVisitor = std::function<void(const Configuration&)>;

/// Visits every element of R(p + w(w+1)/2, w) exactly once, in constant
/// amortized time per element. Emission order: by first-zero position l
/// ascending, dust count i ascending, u in subroutine order, m ascending.
void generate_reduced(long long p, long long w, const ReducedVisitor& visit,
                      GenStats* stats = nullptr);

/// Visits every element of SPM(n, w) exactly once (expanded configurations).
void generate_spm_width(long long n, long long w, const ConfigurationVisitor& visit,
                        GenStats* stats = nullptr);

/// Visits every element of SPM(n) exactly once, fiber by fiber
/// (w = 1 .. floor(sqrt(2n))). For n = 0 emits the empty configuration.
void generate_spm(long long n, const ConfigurationVisitor& visit,
                  GenStats* stats = nullptr);

/// Pull-based adapter over the same traversal: an explicit-stack encoding of
/// the recursion, preserving the amortized bounds.
class ReducedFormStream {
   public:
    ReducedFormStream(long long p, long long w);
    ~ReducedFormStream();
    ReducedFormStream(ReducedFormStream&&) noexcept;
    ReducedFormStream& operator=(ReducedFormStream&&) noexcept;

    /// Moves to the next reduced form; false when the fiber is exhausted.
    bool advance();

    ReducedForm current() const;
    Configuration current_configuration() const;
    const GenStats& stats() const;

   private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Streams all of SPM(n), fiber by fiber.
class SpmStream {
   public:
    explicit SpmStream(long long n);

    bool advance();
    const Configuration& current() const { return current_; }

   private:
    long long n_;
    long long w_ = 0;
    bool empty_emitted_ = false;
    std::unique_ptr<ReducedFormStream> fiber_;
    Configuration current_;
};

}  // namespace piles
