#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "piles/configuration.hpp"

namespace piles {

/// Brute-force reachability closure of the pile dynamics. Intended as a test
/// fixture for desk-scale n, not as a performant enumerator.
class ReachabilitySet {
   public:
    enum class Rule { fall, slide };
    struct Edge {
        std::size_t from;
        std::size_t to;
        Rule rule;
    };

    const std::vector<Configuration>& members() const { return members_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool contains(const Configuration& c) const { return index_.count(c) != 0; }
    std::optional<std::size_t> index_of(const Configuration& c) const;
    std::size_t size() const { return members_.size(); }

   private:
    friend ReachabilitySet bfs_closure(long long n, long long k, bool keep_edges,
                                       std::size_t max_members);
    std::vector<Configuration> members_;  // BFS discovery order, members_[0] = (n)
    std::vector<Edge> edges_;
    std::unordered_map<Configuration, std::size_t, ConfigurationHash> index_;
};

/// Exact SPM(n): all configurations reachable from (n) under FALL, with the
/// FALL edges. Throws CapacityExceeded past max_members.
ReachabilitySet bfs_spm(long long n, bool keep_edges = true,
                        std::size_t max_members = 20'000'000);

/// Exact IPM_k(n): reachable under FALL and SLIDE_k.
ReachabilitySet bfs_ipm(long long n, long long k, bool keep_edges = true,
                        std::size_t max_members = 20'000'000);

}  // namespace piles
