#include "hubroute/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hubroute/rng.hpp"

namespace hubroute {

const std::vector<int32_t>& DistanceOracle::distances_from(NodeId s) {
    {
        std::lock_guard lock(mutex_);
        auto it = cache_.find(s);
        if (it != cache_.end()) return it->second;
    }
    auto result = bfs(*graph_, s);
    std::lock_guard lock(mutex_);
    return cache_.try_emplace(s, std::move(result.distance)).first->second;
}

uint32_t DistanceOracle::distance(NodeId s, NodeId t) {
    int32_t d = distances_from(s)[t];
    if (d < 0) throw std::invalid_argument("distance oracle: pair is unreachable");
    return static_cast<uint32_t>(d);
}

void StretchAccumulator::add(uint32_t routed_hops, uint32_t shortest_hops) {
    if (shortest_hops == 0) throw std::invalid_argument("stretch: pairs must have s != t");
    double stretch = static_cast<double>(routed_hops) / shortest_hops;
    ++count_;
    sum_r_ += routed_hops;
    sum_d_ += shortest_hops;
    if (routed_hops == shortest_hops) ++shortest_;
    sum_ratio_ += stretch;
    max_stretch_ = std::max(max_stretch_, stretch);
    for (int i = 0; i < kGridPoints; ++i) {
        double v = kGridStart + kGridStep * i;
        if (stretch > v * (1 + 1e-12)) ++above_grid_[i];
    }
}

void StretchAccumulator::add_trace(const RouteTrace& trace, DistanceOracle& oracle) {
    add(trace.hops(), oracle.distance(trace.source, trace.destination));
}

void StretchAccumulator::merge(const StretchAccumulator& other) {
    count_ += other.count_;
    sum_r_ += other.sum_r_;
    sum_d_ += other.sum_d_;
    shortest_ += other.shortest_;
    sum_ratio_ += other.sum_ratio_;
    max_stretch_ = std::max(max_stretch_, other.max_stretch_);
    for (int i = 0; i < kGridPoints; ++i) above_grid_[i] += other.above_grid_[i];
}

StretchReport StretchAccumulator::finalize() const {
    StretchReport rep;
    rep.pair_count = count_;
    if (count_ == 0) return rep;
    rep.mean_pair_stretch = sum_ratio_ / count_;
    rep.ratio_of_averages = static_cast<double>(sum_r_) / static_cast<double>(sum_d_);
    rep.shortest_fraction = static_cast<double>(shortest_) / count_;
    rep.max_stretch = max_stretch_;
    rep.inverse_cdf.reserve(kGridPoints + 1);
    for (int i = 0; i < kGridPoints; ++i) {
        double v = kGridStart + kGridStep * i;
        rep.inverse_cdf.emplace_back(v, static_cast<double>(above_grid_[i]) / count_);
    }
    if (max_stretch_ > kGridStart + kGridStep * (kGridPoints - 1))
        rep.inverse_cdf.emplace_back(max_stretch_, 0.0);
    return rep;
}

StretchReport stretch_report(const Scheme& scheme, const PairPolicy& policy,
                             DistanceOracle& oracle) {
    StretchAccumulator acc;
    route_all_pairs(scheme, policy,
                    [&](const RouteTrace& trace) { acc.add_trace(trace, oracle); });
    return acc.finalize();
}

std::vector<DegreeBucketStat> degree_distance_monotonicity(
    const std::vector<Graph>& ensemble, const std::vector<uint32_t>& bucket_lower_bounds,
    size_t sources_per_graph, size_t targets_per_source, uint64_t seed) {
    if (ensemble.size() < 2)
        throw std::invalid_argument("degree_distance_monotonicity: need >= 2 graphs");
    if (bucket_lower_bounds.empty())
        throw std::invalid_argument("degree_distance_monotonicity: need bucket bounds");
    std::vector<uint32_t> bounds = bucket_lower_bounds;
    std::sort(bounds.begin(), bounds.end());

    const size_t nb = bounds.size();
    std::vector<double> sum(nb, 0), sum_sq(nb, 0);
    std::vector<uint64_t> cnt(nb, 0);

    auto bucket_of = [&](uint32_t degree) {
        size_t b = std::upper_bound(bounds.begin(), bounds.end(), degree) - bounds.begin();
        return b == 0 ? nb : b - 1;  // degrees below the first bound are skipped
    };

    auto rng = make_rng(seed);
    for (const Graph& g : ensemble) {
        const NodeId n = g.node_count();
        if (n < 2) continue;
        std::vector<NodeId> sources;
        if (sources_per_graph == 0 || sources_per_graph >= n) {
            sources.resize(n);
            for (NodeId u = 0; u < n; ++u) sources[u] = u;
        } else {
            for (size_t i = 0; i < sources_per_graph; ++i)
                sources.push_back(static_cast<NodeId>(uniform_below(rng, n)));
        }
        for (NodeId s : sources) {
            size_t b = bucket_of(g.degree(s));
            if (b >= nb) continue;
            auto r = bfs(g, s);
            uint64_t dsum = 0, dcnt = 0;
            if (targets_per_source == 0) {
                for (NodeId u = 0; u < n; ++u) {
                    if (u == s || r.distance[u] < 0) continue;
                    dsum += static_cast<uint64_t>(r.distance[u]);
                    ++dcnt;
                }
            } else {
                for (size_t i = 0; i < targets_per_source; ++i) {
                    NodeId u = static_cast<NodeId>(uniform_below(rng, n));
                    if (u == s || r.distance[u] < 0) continue;
                    dsum += static_cast<uint64_t>(r.distance[u]);
                    ++dcnt;
                }
            }
            if (dcnt == 0) continue;
            double mean = static_cast<double>(dsum) / dcnt;
            sum[b] += mean;
            sum_sq[b] += mean * mean;
            ++cnt[b];
        }
    }

    std::vector<DegreeBucketStat> out;
    for (size_t b = 0; b < nb; ++b) {
        if (cnt[b] == 0) continue;  // dropped with warning at the CLI layer
        DegreeBucketStat st;
        st.degree_lo = bounds[b];
        st.degree_hi = b + 1 < nb ? bounds[b + 1] - 1 : UINT32_MAX;
        st.samples = cnt[b];
        st.mean_distance = sum[b] / cnt[b];
        if (cnt[b] > 1) {
            double var = (sum_sq[b] - sum[b] * sum[b] / cnt[b]) / (cnt[b] - 1);
            st.std_error = std::sqrt(std::max(var, 0.0) / cnt[b]);
        }
        out.push_back(st);
    }
    return out;
}

}  // namespace hubroute
