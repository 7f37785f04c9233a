#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hubroute/scheme.hpp"

namespace hubroute {

// Forwarding rules, in priority order.
enum class RouteRule : uint8_t {
    kArrived = 1,           // x == t
    kNeighborDelivery = 2,  // t adjacent to x
    kLabelDescent = 3,      // x lies on t's label path, step toward t
    kHubForward = 4,        // follow the table entry for t's hub
};

struct RouteTrace {
    NodeId source = 0;
    NodeId destination = 0;
    std::vector<NodeId> walk;       // from source to destination inclusive
    std::vector<RouteRule> rules;   // rule fired at each hop (walk.size()-1 entries,
                                    // plus the final kArrived)
    uint32_t hops() const { return static_cast<uint32_t>(walk.size() - 1); }
};

// Simulates one packet. Uses only the destination's label and per-node local
// tables; the packet itself carries no mutable state. Throws internal_error
// if the hop guard (N hops) trips, which is unreachable on a correct scheme.
RouteTrace route(const Scheme& scheme, NodeId s, NodeId t);

struct PairPolicy {
    enum class Mode { kExhaustive, kSampled } mode = Mode::kExhaustive;
    uint64_t sample_count = 0;
    uint64_t seed = 0;

    static PairPolicy exhaustive() { return {}; }
    static PairPolicy sampled(uint64_t count, uint64_t seed) {
        return {Mode::kSampled, count, seed};
    }
};

// Ordered pairs (s, t), s != t: all of them, or uniformly sampled without
// replacement. Deterministic given the seed. A sample count above N(N-1) is
// clamped (clamped flag reported via return value).
bool for_each_pair(NodeId node_count, const PairPolicy& policy,
                   const std::function<void(NodeId, NodeId)>& fn);

// Routes every selected pair, streaming traces to the consumer.
bool route_all_pairs(const Scheme& scheme, const PairPolicy& policy,
                     const std::function<void(const RouteTrace&)>& consume);

}  // namespace hubroute
