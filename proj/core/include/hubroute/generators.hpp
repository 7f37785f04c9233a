#pragma once

#include <cstdint>
#include <vector>

#include "hubroute/graph.hpp"

namespace hubroute {

struct PowerLawConfig {
    uint32_t n = 0;
    double gamma = 2.3;
    uint32_t k_min = 2;
    uint32_t k_max = 0;  // 0 = natural cutoff floor(n^(1/(gamma-1)))

    uint32_t effective_k_max() const;
};

struct PoissonConfig {
    uint32_t n = 0;
    double mean_degree = 7.0;
};

using DegreeSequence = std::vector<uint32_t>;

// i.i.d. draws from P(k) = k^-gamma / sum, k in [k_min, k_max], by inverse-CDF
// table lookup. If the total is odd, one uniformly chosen node gets +1.
DegreeSequence sample_power_law(const PowerLawConfig& config, uint64_t seed);

// i.i.d. Poisson(mean_degree) draws with the same odd-sum repair.
DegreeSequence sample_poisson(const PoissonConfig& config, uint64_t seed);

struct ConfigModelResult {
    Graph graph;
    size_t self_loops_discarded = 0;
    size_t multi_edges_discarded = 0;
};

// Uniform random perfect matching on the degree-stub list; self-loops and
// multi-edges are discarded, not rewired.
ConfigModelResult configuration_model(const DegreeSequence& degrees, uint64_t seed);

// Random recursive tree: node i attaches to a uniform node j < i.
Graph random_tree(uint32_t n, uint64_t seed);

// Mean of the truncated discrete power law, by direct summation.
double power_law_mean(const PowerLawConfig& config);

}  // namespace hubroute
