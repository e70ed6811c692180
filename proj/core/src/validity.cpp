#include "piles/validity.hpp"

#include <limits>
#include <vector>

namespace piles {

std::string pattern_name(const ValidityReport& report, long long k) {
    switch (report.pattern) {
        case Pattern::plateau:
            return "plateau" + std::to_string(k + 2);
        case Pattern::staircase:
            return "staircase";
        case Pattern::none:
            break;
    }
    return "none";
}

namespace {

struct Run {
    long long value;
    std::size_t start;
    std::size_t length;
};

}  // namespace

ValidityReport is_valid_ipm(const Configuration& c, long long k) {
    if (k < 1) throw Error("plateau parameter k must be >= 1");

    std::vector<Run> runs;
    for (std::size_t i = 0; i < c.columns();) {
        std::size_t j = i;
        while (j < c.columns() && c.at(j) == c.at(i)) ++j;
        runs.push_back({c.at(i), i, j - i});
        i = j;
    }

    const std::size_t klen = static_cast<std::size_t>(k);
    ValidityReport best;
    std::size_t best_index = std::numeric_limits<std::size_t>::max();
    auto consider = [&](Pattern pattern, std::size_t index) {
        if (index < best_index || (index == best_index && pattern == Pattern::plateau)) {
            best = {false, pattern, index};
            best_index = index;
        }
    };

    for (std::size_t a = 0; a < runs.size(); ++a) {
        if (runs[a].value <= 0) continue;
        if (runs[a].length >= klen + 2) consider(Pattern::plateau, runs[a].start);
        if (runs[a].length < klen + 1) continue;
        // Walk a perfect staircase of height-1 drops; middle runs must have
        // length exactly k, a run of length >= k+1 closes the pattern.
        for (std::size_t b = a + 1; b < runs.size(); ++b) {
            if (runs[b].value != runs[b - 1].value - 1) break;
            if (runs[b].length >= klen + 1) {
                if (runs[b].value > 0)
                    consider(Pattern::staircase, runs[a].start + runs[a].length - (klen + 1));
                break;
            }
            if (runs[b].length != klen) break;
        }
    }

    return best;
}

ValidityReport is_valid_spm(const Configuration& c) { return is_valid_ipm(c, 1); }

}  // namespace piles
