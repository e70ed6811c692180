#include "piles/counting.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace piles {

BinomialTable::BinomialTable(long long max_row) : max_row_(max_row), zero_(0) {
    rows_.resize(static_cast<std::size_t>(max_row_) + 1);
    for (long long a = 0; a <= max_row_; ++a) {
        auto& row = rows_[static_cast<std::size_t>(a)];
        row.resize(static_cast<std::size_t>(a) + 1);
        row[0] = 1;
        row[static_cast<std::size_t>(a)] = 1;
        for (long long b = 1; b < a; ++b)
            row[static_cast<std::size_t>(b)] = rows_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
                                               rows_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
    }
}

const BigInt& BinomialTable::at(long long a, long long b) const {
    if (a < 0 || a > max_row_)
        throw CapacityExceeded("binomial row " + std::to_string(a) + " beyond table capacity");
    if (b < 0 || b > a) return zero_;
    return rows_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

namespace {
long long width_bound(long long n) {
    long long w = static_cast<long long>(std::sqrt(2.0 * static_cast<double>(n))) + 2;
    while (w > 0 && w * (w + 1) > 2 * n) --w;
    return w;
}
}  // namespace

CountTable::CountTable(long long n_max)
    : n_max_(n_max), width_cap_(width_bound(n_max)), binom_(width_cap_ + 1), one_(1), zero_(0) {
    memo_.resize(static_cast<std::size_t>(width_cap_) + 1);
    known_.resize(static_cast<std::size_t>(width_cap_) + 1);
    for (auto& row : memo_) row.resize(static_cast<std::size_t>(n_max_) + 1);
    for (auto& row : known_) row.assign(static_cast<std::size_t>(n_max_) + 1, 0);
}

const BigInt& CountTable::c(long long p, long long w) {
    if (p < 0) return zero_;
    if (p == 0) return one_;
    if (w <= 0) return zero_;
    if (p > n_max_ || w > width_cap_)
        throw CapacityExceeded("c(" + std::to_string(p) + "," + std::to_string(w) +
                               ") beyond table capacity");
    auto& known = known_[static_cast<std::size_t>(w)][static_cast<std::size_t>(p)];
    auto& slot = memo_[static_cast<std::size_t>(w)][static_cast<std::size_t>(p)];
    if (known) return slot;
    if (frozen_) throw CapacityExceeded("table is frozen and entry is not prepared");

    BigInt total = binomial(w, p);  // l = 0: all p grains as dust on w columns
    // l = 1: the residual has width 0, which forces m = p - i.
    for (long long i = 0; i <= std::min(w - 1, p - 1); ++i) {
        total += binomial(w - 1, i);
        operations_ += 1;
    }
    for (long long l = 2; l <= w; ++l) {
        const long long i_max = std::min(w - l, p - l);
        for (long long i = 0; i <= i_max; ++i) {
            const BigInt& ways_u = binomial(w - l, i);
            for (long long m = 1; m <= (p - i) / l; ++m) {
                total += ways_u * c(p - i - l * m, l - 1);
                operations_ += 2;
            }
        }
    }
    slot = std::move(total);
    known = 1;
    return slot;
}

const BigInt& CountTable::count_spm_width(long long n, long long w) {
    if (w < 1 || w * (w + 1) > 2 * n)
        throw InvalidWidth("no configurations of weight " + std::to_string(n) +
                           " have staircase width " + std::to_string(w));
    return c(n - w * (w + 1) / 2, w);
}

BigInt CountTable::count_spm(long long n) {
    if (n < 0) throw Error("negative grain count");
    if (n == 0) return 1;  // the empty configuration
    if (n > n_max_) throw CapacityExceeded("n beyond table capacity");
    BigInt total = 0;
    for (long long w = 1; w * (w + 1) <= 2 * n; ++w) {
        total += count_spm_width(n, w);
        ++operations_;
    }
    return total;
}

void CountTable::prepare(long long n) {
    (void)count_spm(n);
    // Unranking walks the same cells the recurrence touched, plus base cases
    // served without table lookups, so count_spm is sufficient preparation.
}

}  // namespace piles
