#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "piles/configuration.hpp"
#include "piles/counting.hpp"

namespace piles {

/// A staircase basis s(w, l) for IPM_k: l columns of height w followed by k
/// columns of each height w-1 down to 1. Bases are linearly ordered by (w, l)
/// lexicographically, which coincides with the sequence order on staircases.
struct IpmBasis {
    long long w = 0;
    long long l = 0;

    bool operator==(const IpmBasis&) const = default;
    auto operator<=>(const IpmBasis&) const = default;
    std::string to_string() const;
};

Configuration ipm_staircase(const IpmBasis& basis, long long k);
long long ipm_socle_weight(const IpmBasis& basis, long long k);  // l*w + k*w(w-1)/2

/// Reduced forms at basis (w, l) are tuples of length l + k(w-1) + 1; the
/// column right after the grid is always empty.
long long ipm_grid_length(const IpmBasis& basis, long long k);

/// Next basis in the linear order: (w, l+1), or (w+1, 1) past l = k.
IpmBasis ipm_successor(const IpmBasis& basis, long long k);

/// Previous basis; throws TrajectoryMismatch below (1, 1).
IpmBasis ipm_predecessor(const IpmBasis& basis, long long k);

/// The maximal basis whose staircase fits under c (sequence order).
/// Throws InvalidConfiguration for the empty configuration.
IpmBasis ipm_staircase_width(const Configuration& c, long long k);

/// A tuple of natural numbers anchored at a staircase basis. Length is the
/// grid length for genuine reduced forms but may be shorter (prefixes) or
/// longer for the augmented/extended relaxations.
struct IpmReducedForm {
    std::vector<long long> entries;
    IpmBasis basis;
    long long k = 1;

    long long weight() const;
    bool operator==(const IpmReducedForm&) const = default;
    std::string to_string() const;
};

/// Strongest class a tuple at a basis satisfies.
///   augmented: block monotonicity and the long-range slope conditions hold.
///   extended:  augmented + a zero at some in-range index congruent to l
///              (mod k) — index 0 belongs to that class when l = k. These are
///              exactly the positions where the successor staircase grows, so
///              such a zero pins the basis.
///   reduced:   extended + the tuple spans exactly the grid; n is reported.
enum class IpmClass { invalid, augmented, extended, reduced };

struct IpmClassification {
    IpmClass cls = IpmClass::invalid;
    long long n = 0;     // weight + socle weight (the weight class of the tuple)
    std::string reason;  // first violated condition, for invalid
};

IpmClassification classify_ipm_tuple(const std::vector<long long>& entries,
                                     const IpmBasis& basis, long long k);

/// c minus its socle, padded to the grid length. Validates c first.
IpmReducedForm ipm_reduce(const Configuration& c, long long k);

/// Inverse of ipm_reduce: adds the staircase back pointwise.
Configuration ipm_expand(const IpmReducedForm& r);

/// Whether the peeling step below is defined on r.
bool pl_defined(const IpmReducedForm& r);

/// One peeling step: decrements every in-range entry at index == basis.l
/// (mod k) and moves the form to the successor basis; the represented prefix
/// r + s(w,l) is unchanged. Throws PeelUndefined when a targeted entry is 0.
IpmReducedForm pl(const IpmReducedForm& r);

struct PeelResult {
    IpmReducedForm terminal;
    long long count = 0;
};

/// Iterates pl until it becomes undefined, which happens exactly when the
/// form is extended at its current basis. Empty tuples return unchanged.
PeelResult peel_to_terminal(const IpmReducedForm& r);

/// Inverse of peel_to_terminal: re-applies `count` increments along the basis
/// trajectory that starts at target_basis. Throws TrajectoryMismatch when
/// t.basis is not the basis reached from target_basis after `count` steps.
IpmReducedForm aug(const IpmReducedForm& t, long long count, const IpmBasis& target_basis);

/// Decomposition of an extended form at its first distinguished zero
/// (index basis.l + k*p): r = prefix . 0 . u, where the prefix is represented
/// through its peeling terminal and the tail u is 0/1 on the positions
/// congruent to the zero (mod k) and 0 elsewhere. When the basis has l = k
/// the zero may sit at index 0, making the prefix empty and p = -1.
struct IpmDecomp {
    IpmReducedForm t_prime;
    long long c = 0;
    long long p = 0;
    std::vector<long long> u;
};

IpmDecomp ipm_decompose(const IpmReducedForm& r);  // throws NotExtended

/// Exact inverse of ipm_decompose. Throws InconsistentStep on malformed
/// parts, TrajectoryMismatch on basis bookkeeping errors.
IpmReducedForm ipm_recompose(const IpmDecomp& d);

/// Memoized counts for the IPM decomposition recursion. Entries depend on
/// (tuple length, basis alignment l in [1, k], weight).
class IpmCountTable {
   public:
    IpmCountTable(long long k, long long n_max);

    long long k() const { return k_; }
    const BinomialTable& binomials() const { return binom_; }

    /// Number of extended forms of the given length/alignment/weight.
    const BigInt& extended_count(long long len, long long lambda, long long q);

    /// Number of augmented forms with no distinguished zero (the prefixes of
    /// the decomposition) of the given length/alignment/weight.
    const BigInt& prefix_count(long long len, long long lambda, long long q);

    /// All augmented forms: prefix_count + extended_count.
    BigInt augmented_count(long long len, long long lambda, long long q);

    /// |IPM_k(n)|.
    BigInt count(long long n);

   private:
    const BigInt& memo(std::unordered_map<std::uint64_t, BigInt>& table, bool extended,
                       long long len, long long lambda, long long q);

    long long k_;
    long long n_max_;
    BinomialTable binom_;
    std::unordered_map<std::uint64_t, BigInt> extended_, prefix_;
    BigInt zero_;
};

/// |IPM_k(n)| via a throwaway table.
BigInt ipm_count(long long n, long long k);

/// Visits every element of IPM_k(n) exactly once, basis by basis.
/// `nodes` (when given) counts recursive generator invocations.
void ipm_generate(long long n, long long k,
                  const std::function<void(const Configuration&)>& visit,
                  std::uint64_t* nodes = nullptr);

/// The idx-th augmented form of the given length/alignment/weight, in the
/// order induced by the counting recursion. Exact inverse image of
/// augmented_count; used for uniform sampling of augmented forms.
std::vector<long long> unrank_augmented(IpmCountTable& table, long long len,
                                        long long lambda, long long q, BigInt idx);

}  // namespace piles
