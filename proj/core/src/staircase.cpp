#include "piles/staircase.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>

#include "piles/validity.hpp"

namespace piles {

Configuration staircase(long long k) {
    std::vector<long long> parts;
    parts.reserve(static_cast<std::size_t>(k > 0 ? k : 0));
    for (long long v = k; v >= 1; --v) parts.push_back(v);
    return Configuration::trusted(std::move(parts));
}

long long staircase_width(const Configuration& c) {
    // staircase(w) <= c iff c[i] + i >= w for all i < w, so w is the largest
    // k whose prefix minimum of c[i] + i stays >= k.
    long long w = 0;
    long long prefix_min = std::numeric_limits<long long>::max();
    for (std::size_t i = 0; i < c.columns(); ++i) {
        prefix_min = std::min(prefix_min, c.at(i) + static_cast<long long>(i));
        const long long k = static_cast<long long>(i) + 1;
        if (prefix_min >= k) w = k;
        if (prefix_min <= k) break;  // later k only grow, prefix_min only shrinks
    }
    return w;
}

long long ReducedForm::weight() const {
    return std::accumulate(entries.begin(), entries.end(), 0LL);
}

std::string ReducedForm::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries[i]);
    }
    return out;
}

ReducedFormCheck check_reduced_form(const std::vector<long long>& entries, long long w) {
    ReducedFormCheck result;
    long long weight = 0;
    for (long long e : entries) weight += e;
    result.implied_n = weight + w * (w + 1) / 2;
    if (static_cast<long long>(entries.size()) != w + 1) {
        result.ok = false;
        result.reason = "length must be w+1";
        return result;
    }
    long long running_min = std::numeric_limits<long long>::max();
    bool has_zero = false;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] < 0) {
            result.ok = false;
            result.reason = "negative entry";
            return result;
        }
        if (entries[i] == 0) has_zero = true;
        if (i > 0 && running_min < entries[i] - 1) {
            result.ok = false;
            result.reason = "entry " + std::to_string(i) + " exceeds an earlier entry by more than 1";
            return result;
        }
        running_min = std::min(running_min, entries[i]);
    }
    if (!has_zero) {
        result.ok = false;
        result.reason = "no zero entry";
    }
    return result;
}

ReducedForm reduce_unchecked(const Configuration& c) {
    const long long w = staircase_width(c);
    ReducedForm r;
    r.entries.resize(static_cast<std::size_t>(w) + 1);
    for (long long i = 0; i <= w; ++i)
        r.entries[static_cast<std::size_t>(i)] = c.at(static_cast<std::size_t>(i)) - (w - i);
    assert(c.at(static_cast<std::size_t>(w) + 1) == 0);
    return r;
}

ReducedForm reduce(const Configuration& c) {
    if (auto report = is_valid_spm(c); !report)
        throw InvalidConfiguration("not a reachable configuration: forbidden pattern at column " +
                                   std::to_string(report.index));
    return reduce_unchecked(c);
}

Configuration expand(const ReducedForm& r) {
    assert(check_reduced_form(r.entries, r.width()).ok);
    const long long w = r.width();
    std::vector<long long> parts(r.entries.size());
    for (long long i = 0; i <= w; ++i)
        parts[static_cast<std::size_t>(i)] = r.entries[static_cast<std::size_t>(i)] + (w - i);
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Configuration::trusted(std::move(parts));
}

}  // namespace piles
