#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "hubroute/graph.hpp"
#include "hubroute/router.hpp"

namespace hubroute {

// Exact BFS distances, one BFS per distinct source, cached. Safe for
// concurrent queries; each source's distance vector is filled once.
class DistanceOracle {
public:
    explicit DistanceOracle(const Graph& g) : graph_(&g) {}

    uint32_t distance(NodeId s, NodeId t);
    const std::vector<int32_t>& distances_from(NodeId s);

private:
    const Graph* graph_;
    std::mutex mutex_;
    std::unordered_map<NodeId, std::vector<int32_t>> cache_;
};

struct StretchReport {
    uint64_t pair_count = 0;
    double mean_pair_stretch = 0;   // mean of r/d over pairs
    double ratio_of_averages = 0;   // S = <r>/<d>
    double shortest_fraction = 0;   // share of pairs with r == d
    double max_stretch = 0;
    // P(stretch > value) on the fixed grid 1.0..3.0 step 0.05, plus the
    // observed max as a final point (probability 0 there).
    std::vector<std::pair<double, double>> inverse_cdf;
};

// Commutative fold over (r, d) pairs; partial accumulators merge exactly.
class StretchAccumulator {
public:
    void add(uint32_t routed_hops, uint32_t shortest_hops);
    void add_trace(const RouteTrace& trace, DistanceOracle& oracle);
    void merge(const StretchAccumulator& other);
    StretchReport finalize() const;

    uint64_t pair_count() const { return count_; }

    static constexpr double kGridStart = 1.0;
    static constexpr double kGridStep = 0.05;
    static constexpr int kGridPoints = 41;  // 1.00 .. 3.00

private:
    uint64_t count_ = 0;
    uint64_t sum_r_ = 0;
    uint64_t sum_d_ = 0;
    uint64_t shortest_ = 0;
    double sum_ratio_ = 0;
    double max_stretch_ = 0;
    uint64_t above_grid_[kGridPoints] = {};
};

StretchReport stretch_report(const Scheme& scheme, const PairPolicy& policy,
                             DistanceOracle& oracle);

struct DegreeBucketStat {
    uint32_t degree_lo = 0;
    uint32_t degree_hi = 0;  // inclusive
    uint64_t samples = 0;    // node-level mean distances contributing
    double mean_distance = 0;
    double std_error = 0;
};

// Mean BFS distance to random targets, bucketed by source degree, over a
// graph ensemble. Each bucket edge list entry is the inclusive lower bound
// of a bucket. Empty buckets are dropped. sources_per_graph = 0 uses every
// node.
std::vector<DegreeBucketStat> degree_distance_monotonicity(
    const std::vector<Graph>& ensemble, const std::vector<uint32_t>& bucket_lower_bounds,
    size_t sources_per_graph, size_t targets_per_source, uint64_t seed);

}  // namespace hubroute
