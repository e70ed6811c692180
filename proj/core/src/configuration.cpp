#include "piles/configuration.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace piles {

Configuration::Configuration(std::vector<long long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw InvalidConfiguration("negative column height");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw InvalidConfiguration("column heights must be non-increasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Configuration Configuration::trusted(std::vector<long long> parts) {
    Configuration c;
    c.parts_ = std::move(parts);
    return c;
}

Configuration Configuration::single_column(long long n) {
    if (n < 0) throw InvalidConfiguration("negative grain count");
    Configuration c;
    if (n > 0) c.parts_.push_back(n);
    return c;
}

long long Configuration::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

long long Configuration::moment() const {
    long long m = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) m += static_cast<long long>(i) * parts_[i];
    return m;
}

std::string Configuration::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Configuration Configuration::parse(const std::string& text) {
    std::vector<long long> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        long long value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
        if (ec != std::errc() || ptr != text.data() + end)
            throw InvalidConfiguration("cannot parse configuration: " + text);
        parts.push_back(value);
        pos = end + 1;
    }
    return Configuration(std::move(parts));
}

std::size_t ConfigurationHash::operator()(const Configuration& c) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (long long p : c.parts()) {
        h ^= static_cast<std::uint64_t>(p);
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

Dominance dominance_compare(const Configuration& s, const Configuration& t) {
    if (s.weight() != t.weight())
        throw WeightMismatch("dominance comparison requires equal weights");
    const std::size_t len = std::max(s.columns(), t.columns());
    bool s_covers = true;  // all prefix sums of s >= those of t
    bool t_covers = true;
    long long sum_s = 0, sum_t = 0;
    for (std::size_t i = 0; i < len; ++i) {
        sum_s += s.at(i);
        sum_t += t.at(i);
        if (sum_s < sum_t) s_covers = false;
        if (sum_t < sum_s) t_covers = false;
    }
    if (s_covers && t_covers) return Dominance::equal;
    if (s_covers) return Dominance::below;
    if (t_covers) return Dominance::above;
    return Dominance::incomparable;
}

bool sequence_leq(const Configuration& s, const Configuration& t) {
    for (std::size_t i = 0; i < s.columns(); ++i)
        if (s.at(i) > t.at(i)) return false;
    return true;
}

}  // namespace piles
