#include "piles/rules.hpp"

#include <cmath>

namespace piles {

bool can_fall(const Configuration& c, std::size_t l) {
    return c.at(l) >= c.at(l + 1) + 2;
}

Configuration apply_fall(const Configuration& c, std::size_t l) {
    if (!can_fall(c, l))
        throw RuleNotApplicable("FALL does not apply at column " + std::to_string(l));
    std::vector<long long> parts = c.parts();
    if (l + 1 >= parts.size()) parts.resize(l + 2, 0);
    parts[l] -= 1;
    parts[l + 1] += 1;
    return Configuration::trusted(std::move(parts));
}

namespace {

// Finds the unique k' for SLIDE_k at column l, or 0 if none. The plateau
// c[l+1..l+k'] at height c[l]-1 has a length fixed by the heights, so k' is
// determined rather than chosen.
long long slide_kprime(const Configuration& c, std::size_t l, long long k) {
    const long long v = c.at(l) - 1;
    if (v < 1) return 0;  // destination column would need height v-1 < 0
    long long run = 0;
    while (run < k && c.at(l + 1 + run) == v) ++run;
    if (run < 1 || run >= k) return 0;
    if (c.at(l + 1 + run) != v - 1) return 0;
    return run;
}

}  // namespace

SlideResult apply_slide(const Configuration& c, std::size_t l, long long k) {
    const long long kp = slide_kprime(c, l, k);
    if (kp == 0)
        throw RuleNotApplicable("SLIDE does not apply at column " + std::to_string(l));
    std::vector<long long> parts = c.parts();
    const std::size_t dst = l + static_cast<std::size_t>(kp) + 1;
    if (dst >= parts.size()) parts.resize(dst + 1, 0);
    parts[l] -= 1;
    parts[dst] += 1;
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return {Configuration::trusted(std::move(parts)), kp};
}

std::vector<std::size_t> fall_targets(const Configuration& c) {
    std::vector<std::size_t> out;
    for (std::size_t l = 0; l < c.columns(); ++l)
        if (can_fall(c, l)) out.push_back(l);
    return out;
}

std::vector<std::pair<std::size_t, long long>> slide_targets(const Configuration& c,
                                                             long long k) {
    std::vector<std::pair<std::size_t, long long>> out;
    for (std::size_t l = 0; l < c.columns(); ++l)
        if (long long kp = slide_kprime(c, l, k); kp != 0) out.emplace_back(l, kp);
    return out;
}

Configuration phi(long long n) {
    if (n < 0) throw InvalidConfiguration("negative grain count");
    long long k = static_cast<long long>((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0);
    while (k * (k + 1) / 2 > n) --k;
    while ((k + 1) * (k + 2) / 2 <= n) ++k;
    const long long l = n - k * (k + 1) / 2;  // 0 <= l <= k by maximality of k
    std::vector<long long> parts;
    for (long long v = k; v >= 1; --v) {
        parts.push_back(v);
        if (v == l) parts.push_back(v);
    }
    return Configuration::trusted(std::move(parts));
}

}  // namespace piles
