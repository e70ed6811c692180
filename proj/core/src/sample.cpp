#include "piles/sample.hpp"

#include <algorithm>

namespace piles {

std::vector<long long> unrank_fixed_weight(const BinomialTable& binom, long long length,
                                           long long ones, BigInt idx) {
    std::vector<long long> positions;
    positions.reserve(static_cast<std::size_t>(ones));
    long long pos = 0;
    long long remaining = ones;
    while (remaining > 0) {
        // Strings whose smallest remaining one sits at `pos`.
        const BigInt& with_here = binom.at(length - pos - 1, remaining - 1);
        if (idx < with_here) {
            positions.push_back(pos);
            --remaining;
        } else {
            idx -= with_here;
        }
        ++pos;
    }
    return positions;
}

ReducedForm unrank_reduced(CountTable& table, long long p, long long w, BigInt idx) {
    ReducedForm r;
    r.entries.assign(static_cast<std::size_t>(w) + 1, 0);
    if (p == 0) return r;  // the all-zero tuple is the only element

    // l = 0: the zero leads and the p grains are dust.
    const BigInt& head = table.binomial(w, p);
    if (idx < head) {
        for (long long pos : unrank_fixed_weight(table.binomials(), w, p, idx))
            r.entries[static_cast<std::size_t>(pos) + 1] = 1;
        return r;
    }
    idx -= head;

    for (long long l = 1; l <= std::min(w, p); ++l) {
        for (long long i = 0; i <= std::min(w - l, p - l); ++i) {
            const BigInt& ways_u = table.binomial(w - l, i);
            for (long long m = 1; m <= (p - i) / l; ++m) {
                const BigInt& sub = table.c(p - i - l * m, l - 1);
                if (sub == 0) continue;
                BigInt cell = ways_u * sub;
                if (idx >= cell) {
                    idx -= cell;
                    continue;
                }
                BigInt u_rank = idx / sub;
                BigInt residual_rank = idx % sub;
                ReducedForm residual =
                    unrank_reduced(table, p - i - l * m, l - 1, std::move(residual_rank));
                for (long long pos = 0; pos < l; ++pos)
                    r.entries[static_cast<std::size_t>(pos)] =
                        residual.entries[static_cast<std::size_t>(pos)] + m;
                for (long long pos : unrank_fixed_weight(table.binomials(), w - l, i, std::move(u_rank)))
                    r.entries[static_cast<std::size_t>(l + 1 + pos)] = 1;
                return r;
            }
        }
    }
    throw Error("unrank_reduced: index out of range");
}

Configuration unrank_spm(CountTable& table, long long n, BigInt idx) {
    if (n == 0) {
        if (idx != 0) throw Error("unrank_spm: index out of range");
        return Configuration();
    }
    for (long long w = 1; w * (w + 1) <= 2 * n; ++w) {
        const BigInt& fiber = table.count_spm_width(n, w);
        if (idx < fiber) return expand(unrank_reduced(table, n - w * (w + 1) / 2, w, idx));
        idx -= fiber;
    }
    throw Error("unrank_spm: index out of range");
}

BigInt uniform_bigint_below(std::mt19937_64& rng, const BigInt& bound) {
    if (bound <= 0) throw Error("uniform_bigint_below requires a positive bound");
    if (bound == 1) return 0;
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
    const unsigned words = (bits + 63) / 64;
    const unsigned top_bits = bits - 64 * (words - 1);
    const std::uint64_t top_mask =
        top_bits >= 64 ? ~0ull : ((1ull << top_bits) - 1);
    for (;;) {
        BigInt value = 0;
        for (unsigned i = 0; i < words; ++i) {
            std::uint64_t word = rng();
            if (i == 0) word &= top_mask;  // most significant first
            value <<= 64;
            value += word;
        }
        if (value < bound) return value;
    }
}

BigInt SpmSampler::uniform_below(const BigInt& bound) {
    return uniform_bigint_below(rng_, bound);
}

Configuration SpmSampler::sample(long long n) {
    BigInt total = table_->count_spm(n);
    return unrank_spm(*table_, n, uniform_below(total));
}

Configuration uniform_random_spm(CountTable& table, long long n, std::uint64_t seed) {
    SpmSampler sampler(table, seed);
    return sampler.sample(n);
}

}  // namespace piles
