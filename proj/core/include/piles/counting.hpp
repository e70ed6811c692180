#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "piles/errors.hpp"

namespace piles {

using BigInt = boost::multiprecision::cpp_int;

/// Pascal-rule table of binomial coefficients with rows 0..max_row.
class BinomialTable {
   public:
    explicit BinomialTable(long long max_row);

    /// C(a, b); 0 when b < 0 or b > a. Throws CapacityExceeded for a > max_row.
    const BigInt& at(long long a, long long b) const;
    long long max_row() const { return max_row_; }

   private:
    long long max_row_;
    std::vector<std::vector<BigInt>> rows_;
    BigInt zero_;
};

/// Memoized table of the reduced-form counts c(p, w) = |R(p + w(w+1)/2, w)|,
/// computed by the recurrence
///   c(p, w) = C(w, p)
///           + sum_{l=1..w} sum_{i=0..min(w-l, p-l)} sum_{m=1..(p-i)/l}
///             C(w-l, i) * c(p - i - l*m, l - 1)
/// with c(0, w) = 1 and c(p, 0) = 0 for p > 0.
///
/// Single-writer: fill entries (via c / count_spm / prepare) from one thread,
/// then freeze(); afterwards reads are lock-free and may run concurrently.
class CountTable {
   public:
    /// Capacity: p up to n_max, widths up to floor(sqrt(2 n_max)).
    explicit CountTable(long long n_max);

    const BigInt& binomial(long long a, long long b) const { return binom_.at(a, b); }
    const BinomialTable& binomials() const { return binom_; }

    /// c(p, w), memoized. Throws CapacityExceeded beyond capacity or when the
    /// entry is missing after freeze().
    const BigInt& c(long long p, long long w);

    /// |SPM(n, w)| = c(n - w(w+1)/2, w). Throws InvalidWidth unless
    /// w >= 1 and w(w+1) <= 2n.
    const BigInt& count_spm_width(long long n, long long w);

    /// |SPM(n)|: sum of the fiber counts; 1 for n = 0 (the empty configuration).
    BigInt count_spm(long long n);

    /// Computes every entry count_spm(n) and unranking can touch.
    void prepare(long long n);

    void freeze() { frozen_ = true; }
    bool frozen() const { return frozen_; }

    long long n_max() const { return n_max_; }
    long long width_cap() const { return width_cap_; }

    /// Number of big-integer additions and multiplications performed so far.
    std::uint64_t operations() const { return operations_; }

   private:
    long long n_max_;
    long long width_cap_;
    BinomialTable binom_;
    std::vector<std::vector<BigInt>> memo_;          // memo_[w][p]
    std::vector<std::vector<std::uint8_t>> known_;   // parallel to memo_
    bool frozen_ = false;
    std::uint64_t operations_ = 0;
    BigInt one_;
    BigInt zero_;
};

}  // namespace piles
