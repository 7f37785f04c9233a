#include "hubroute/router.hpp"

#include <algorithm>
#include <unordered_set>

#include "hubroute/rng.hpp"

namespace hubroute {

RouteTrace route(const Scheme& scheme, NodeId s, NodeId t) {
    const Graph& g = scheme.graph();
    const NodeId n = g.node_count();
    if (s >= n || t >= n) throw std::invalid_argument("route: node id out of range");

    RouteTrace trace;
    trace.source = s;
    trace.destination = t;
    trace.walk.push_back(s);

    const Label& lt = scheme.label(t);
    const uint32_t hub_index = scheme.closest_hub_index(t);

    NodeId x = s;
    for (;;) {
        if (x == t) {  // rule 1
            trace.rules.push_back(RouteRule::kArrived);
            return trace;
        }
        if (trace.walk.size() > static_cast<size_t>(n))
            throw internal_error("route: hop guard tripped (scheme invariant violated)");

        NodeId next = kNoNode;
        if (g.has_edge(x, t)) {  // rule 2
            next = t;
            trace.rules.push_back(RouteRule::kNeighborDelivery);
        } else {
            // rule 3: x on t's label path (index > 0; index 0 is t itself)
            for (size_t j = 1; j < lt.path.size(); ++j) {
                if (lt.path[j] == x) {
                    next = lt.path[j - 1];
                    trace.rules.push_back(RouteRule::kLabelDescent);
                    break;
                }
            }
            if (next == kNoNode) {  // rule 4
                next = scheme.next_hop(x, hub_index);
                trace.rules.push_back(RouteRule::kHubForward);
            }
        }
        trace.walk.push_back(next);
        x = next;
    }
}

bool for_each_pair(NodeId node_count, const PairPolicy& policy,
                   const std::function<void(NodeId, NodeId)>& fn) {
    if (node_count < 2) return false;
    const uint64_t total = static_cast<uint64_t>(node_count) * (node_count - 1);
    auto decode = [node_count](uint64_t p) {
        NodeId s = static_cast<NodeId>(p / (node_count - 1));
        NodeId r = static_cast<NodeId>(p % (node_count - 1));
        NodeId t = r + (r >= s ? 1 : 0);
        return std::pair<NodeId, NodeId>{s, t};
    };

    if (policy.mode == PairPolicy::Mode::kExhaustive || policy.sample_count >= total) {
        for (NodeId s = 0; s < node_count; ++s)
            for (NodeId t = 0; t < node_count; ++t)
                if (s != t) fn(s, t);
        return policy.mode == PairPolicy::Mode::kSampled && policy.sample_count > total;
    }

    auto rng = make_rng(policy.seed);
    if (policy.sample_count * 2 >= total) {
        // Dense sample: partial Fisher-Yates over all pair indices.
        std::vector<uint64_t> all(total);
        for (uint64_t p = 0; p < total; ++p) all[p] = p;
        for (uint64_t i = 0; i < policy.sample_count; ++i) {
            uint64_t j = i + uniform_below(rng, total - i);
            std::swap(all[i], all[j]);
            auto [s, t] = decode(all[i]);
            fn(s, t);
        }
        return false;
    }
    // Sparse sample: rejection against a seen-set, insertion order.
    std::unordered_set<uint64_t> seen;
    seen.reserve(policy.sample_count * 2);
    uint64_t emitted = 0;
    while (emitted < policy.sample_count) {
        uint64_t p = uniform_below(rng, total);
        if (!seen.insert(p).second) continue;
        auto [s, t] = decode(p);
        fn(s, t);
        ++emitted;
    }
    return false;
}

bool route_all_pairs(const Scheme& scheme, const PairPolicy& policy,
                     const std::function<void(const RouteTrace&)>& consume) {
    return for_each_pair(scheme.graph().node_count(), policy,
                         [&](NodeId s, NodeId t) { consume(route(scheme, s, t)); });
}

}  // namespace hubroute
