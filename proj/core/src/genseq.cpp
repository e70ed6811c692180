#include "piles/genseq.hpp"

#include <charconv>

#include "piles/decompose.hpp"
#include "piles/validity.hpp"

namespace piles {

std::string sequence_to_string(const GeneratingSequence& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(seq[i]);
    }
    return out;
}

GeneratingSequence parse_sequence(const std::string& text) {
    GeneratingSequence seq;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        unsigned long long value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
        if (ec != std::errc() || ptr != text.data() + end)
            throw Error("cannot parse sequence: " + text);
        seq.push_back(static_cast<std::size_t>(value));
        pos = end + 1;
    }
    return seq;
}

GeneratingSequence alpha(long long i) {
    GeneratingSequence seq;
    for (long long a = 0; a < i; ++a) seq.push_back(static_cast<std::size_t>(a));
    return seq;
}

namespace {
void append(GeneratingSequence& out, const GeneratingSequence& tail) {
    out.insert(out.end(), tail.begin(), tail.end());
}
void append_alpha(GeneratingSequence& out, long long i) {
    for (long long a = 0; a < i; ++a) out.push_back(static_cast<std::size_t>(a));
}
}  // namespace

GeneratingSequence beta(long long i) {
    GeneratingSequence seq;
    for (long long a = i; a >= 1; --a) append_alpha(seq, a);
    return seq;
}

GeneratingSequence socle_prefix(long long w) {
    GeneratingSequence seq;
    for (long long i = 1; i <= w - 1; ++i) append(seq, beta(i));
    return seq;
}

bool can_fall_prime(const ReducedForm& r, std::size_t l) {
    if (l + 1 >= r.entries.size()) return false;
    return r.entries[l] >= r.entries[l + 1] + 1;
}

ReducedForm apply_fall_prime(const ReducedForm& r, std::size_t l) {
    if (!can_fall_prime(r, l))
        throw RuleNotApplicable("FALL' does not apply at entry " + std::to_string(l));
    ReducedForm out = r;
    out.entries[l] -= 1;
    out.entries[l + 1] += 1;
    return out;
}

namespace {
void path_into(const ReducedForm& r, GeneratingSequence& out) {
    if (r.width() == 0) return;  // (0), nothing above the socle remains
    DecompStepResult dec = decompose_step(r);
    const long long l = dec.step.l;
    // Dust grains at descending one-positions.
    for (long long pos = r.width(); pos > l; --pos)
        if (r.entries[static_cast<std::size_t>(pos)] == 1) append_alpha(out, pos);
    // The m layers over positions 0..l-1.
    for (long long rep = 0; rep < dec.step.m; ++rep)
        for (long long a = l - 1; a >= 1; --a) append_alpha(out, a);
    if (dec.residual) path_into(*dec.residual, out);
}
}  // namespace

GeneratingSequence path(const ReducedForm& r) {
    if (auto check = check_reduced_form(r.entries, r.width()); !check)
        throw NotAReducedForm(check.reason);
    GeneratingSequence out;
    path_into(r, out);
    return out;
}

GeneratingSequence generating_sequence(const Configuration& c) {
    if (auto report = is_valid_spm(c); !report)
        throw InvalidConfiguration("not a reachable configuration: forbidden pattern at column " +
                                   std::to_string(report.index));
    const long long w = staircase_width(c);
    GeneratingSequence seq = socle_prefix(w);
    GeneratingSequence tail = path(reduce_unchecked(c));
    append(seq, tail);
    return seq;
}

Configuration verify_sequence(long long n, const GeneratingSequence& seq) {
    if (n < 0) throw Error("negative grain count");
    std::vector<long long> heights;
    if (n > 0) heights.push_back(n);
    for (std::size_t t = 0; t < seq.size(); ++t) {
        const std::size_t l = seq[t];
        const long long at_l = l < heights.size() ? heights[l] : 0;
        const long long at_next = l + 1 < heights.size() ? heights[l + 1] : 0;
        if (at_l < at_next + 2)
            throw InvalidStep(t, "FALL does not apply at column " + std::to_string(l) +
                                     " (step " + std::to_string(t) + ")");
        if (l + 1 >= heights.size()) heights.resize(l + 2, 0);
        heights[l] -= 1;
        heights[l + 1] += 1;
    }
    while (!heights.empty() && heights.back() == 0) heights.pop_back();
    return Configuration::trusted(std::move(heights));
}

}  // namespace piles
