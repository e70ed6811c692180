#include "piles/oracle.hpp"

#include "piles/rules.hpp"

namespace piles {

std::optional<std::size_t> ReachabilitySet::index_of(const Configuration& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

ReachabilitySet bfs_closure(long long n, long long k, bool keep_edges,
                            std::size_t max_members) {
    ReachabilitySet set;
    auto add = [&](const Configuration& c) -> std::size_t {
        auto [it, fresh] = set.index_.try_emplace(c, set.members_.size());
        if (fresh) {
            if (set.members_.size() >= max_members)
                throw CapacityExceeded("reachability set exceeds configured bound");
            set.members_.push_back(c);
        }
        return it->second;
    };

    add(Configuration::single_column(n));
    for (std::size_t head = 0; head < set.members_.size(); ++head) {
        // Copy: members_ may reallocate while neighbors are inserted.
        const Configuration current = set.members_[head];
        for (std::size_t l : fall_targets(current)) {
            std::size_t to = add(apply_fall(current, l));
            if (keep_edges) set.edges_.push_back({head, to, ReachabilitySet::Rule::fall});
        }
        if (k > 1) {
            for (auto [l, kp] : slide_targets(current, k)) {
                std::size_t to = add(apply_slide(current, l, k).config);
                if (keep_edges) set.edges_.push_back({head, to, ReachabilitySet::Rule::slide});
            }
        }
    }
    return set;
}

ReachabilitySet bfs_spm(long long n, bool keep_edges, std::size_t max_members) {
    return bfs_closure(n, 1, keep_edges, max_members);
}

ReachabilitySet bfs_ipm(long long n, long long k, bool keep_edges,
                        std::size_t max_members) {
    if (k < 1) throw Error("plateau parameter k must be >= 1");
    return bfs_closure(n, k, keep_edges, max_members);
}

}  // namespace piles
