#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "piles/errors.hpp"

namespace piles {

/// A pile configuration: a partition stored as a finite non-increasing
/// sequence of positive column heights. The infinite tail of zero columns is
/// implicit; reads past the stored support return 0.
class Configuration {
   public:
    Configuration() = default;

    /// Validates (non-negative, non-increasing), trims trailing zeros.
    /// Throws InvalidConfiguration on a sequence that is not a partition.
    explicit Configuration(std::vector<long long> parts);

    /// Adopts `parts` without checking. `parts` must already be a partition
    /// with no trailing zeros.
    static Configuration trusted(std::vector<long long> parts);

    /// The initial configuration (n, 0, ...); empty for n = 0.
    static Configuration single_column(long long n);

    /// Column height, 0 beyond the stored support.
    long long at(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    const std::vector<long long>& parts() const { return parts_; }
    std::size_t columns() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// Total number of grains.
    long long weight() const;

    /// Number of moves any FALL path from (weight) to this configuration has:
    /// each FALL shifts one grain one column to the right.
    long long moment() const;

    /// Comma-separated decimal heights, e.g. "6,6,3,3,1,1". Empty string for ().
    std::string to_string() const;

    /// Parses the to_string format. Throws InvalidConfiguration.
    static Configuration parse(const std::string& text);

    bool operator==(const Configuration&) const = default;

   private:
    std::vector<long long> parts_;
};

/// FNV-1a over the parts; suitable for unordered containers.
struct ConfigurationHash {
    std::size_t operator()(const Configuration& c) const noexcept;
};

/// Outcome of a dominance comparison between equal-weight partitions.
enum class Dominance { below, above, equal, incomparable };

/// Dominance order: s is `below` t when every prefix sum of s is >= the
/// matching prefix sum of t (s is further evolved). Throws WeightMismatch
/// when the two weights differ.
Dominance dominance_compare(const Configuration& s, const Configuration& t);

/// Componentwise order: true iff s[i] <= t[i] for all i.
bool sequence_leq(const Configuration& s, const Configuration& t);

}  // namespace piles
