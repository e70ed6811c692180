#pragma once

#include <cstdint>
#include <random>

#include "piles/counting.hpp"
#include "piles/staircase.hpp"

namespace piles {

/// The idx-th binary string of given length and weight, as ascending one
/// positions in lexicographic order of position sets.
std::vector<long long> unrank_fixed_weight(const BinomialTable& binom, long long length,
                                           long long ones, BigInt idx);

/// Exact uniform integer in [0, bound): rejection sampling on 64-bit words of
/// the engine, no floating point. Deterministic given the engine state.
BigInt uniform_bigint_below(std::mt19937_64& rng, const BigInt& bound);

/// The idx-th element of R(p + w(w+1)/2, w), 0 <= idx < c(p, w), in the
/// fixed unranking order (first-zero position ascending, then dust count,
/// then layer count, then dust placement, then the residual).
ReducedForm unrank_reduced(CountTable& table, long long p, long long w, BigInt idx);

/// The idx-th element of SPM(n), 0 <= idx < |SPM(n)|, fibers by ascending
/// staircase width.
Configuration unrank_spm(CountTable& table, long long n, BigInt idx);

/// Deterministic uniform sampler over SPM(n): draws an exact uniform integer
/// below |SPM(n)| (arbitrary precision, no floating point) and unranks it.
/// The stream of samples is a pure function of the seed.
class SpmSampler {
   public:
    SpmSampler(CountTable& table, std::uint64_t seed) : table_(&table), rng_(seed) {}

    Configuration sample(long long n);

    /// Exact uniform draw from [0, bound) by rejection on 64-bit words.
    BigInt uniform_below(const BigInt& bound);

   private:
    CountTable* table_;
    std::mt19937_64 rng_;
};

/// One-shot convenience: the first sample of SpmSampler(table, seed).
Configuration uniform_random_spm(CountTable& table, long long n, std::uint64_t seed);

}  // namespace piles
