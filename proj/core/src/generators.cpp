#include "hubroute/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "hubroute/rng.hpp"

namespace hubroute {

uint32_t PowerLawConfig::effective_k_max() const {
    if (k_max != 0) return k_max;
    auto natural = static_cast<uint32_t>(std::floor(std::pow(static_cast<double>(n), 1.0 / (gamma - 1.0))));
    return std::max(natural, k_min);
}

namespace {

void validate_power_law(const PowerLawConfig& c, uint32_t k_max) {
    if (c.n == 0) throw std::invalid_argument("power law: n must be positive");
    if (c.gamma <= 1.0) throw std::invalid_argument("power law: gamma must exceed 1");
    if (c.k_min < 1) throw std::invalid_argument("power law: k_min must be >= 1");
    if (c.k_min > k_max) throw std::invalid_argument("power law: k_min exceeds k_max");
}

void fix_odd_sum(DegreeSequence& degrees, Rng& rng) {
    uint64_t sum = 0;
    for (uint32_t k : degrees) sum += k;
    if (sum % 2 == 1) degrees[uniform_below(rng, degrees.size())] += 1;
}

// Poisson by Knuth's product method, chunked so exp() never underflows.
uint32_t sample_poisson_one(Rng& rng, double lambda) {
    uint32_t total = 0;
    while (lambda > 0) {
        double chunk = std::min(lambda, 30.0);
        lambda -= chunk;
        double limit = std::exp(-chunk);
        double p = 1.0;
        uint32_t k = 0;
        do {
            ++k;
            p *= uniform_double(rng);
        } while (p > limit);
        total += k - 1;
    }
    return total;
}

}  // namespace

double power_law_mean(const PowerLawConfig& config) {
    uint32_t k_max = config.effective_k_max();
    validate_power_law(config, k_max);
    double norm = 0, mean = 0;
    for (uint32_t k = config.k_min; k <= k_max; ++k) {
        double w = std::pow(static_cast<double>(k), -config.gamma);
        norm += w;
        mean += k * w;
    }
    return mean / norm;
}

DegreeSequence sample_power_law(const PowerLawConfig& config, uint64_t seed) {
    uint32_t k_max = config.effective_k_max();
    validate_power_law(config, k_max);
    std::vector<double> cdf;
    cdf.reserve(k_max - config.k_min + 1);
    double acc = 0;
    for (uint32_t k = config.k_min; k <= k_max; ++k) {
        acc += std::pow(static_cast<double>(k), -config.gamma);
        cdf.push_back(acc);
    }
    for (double& c : cdf) c /= acc;

    auto rng = make_rng(seed);
    DegreeSequence degrees(config.n);
    for (uint32_t i = 0; i < config.n; ++i) {
        double u = uniform_double(rng);
        size_t idx = std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
        if (idx == cdf.size()) idx = cdf.size() - 1;
        degrees[i] = config.k_min + static_cast<uint32_t>(idx);
    }
    fix_odd_sum(degrees, rng);
    return degrees;
}

DegreeSequence sample_poisson(const PoissonConfig& config, uint64_t seed) {
    if (config.n == 0) throw std::invalid_argument("poisson: n must be positive");
    if (config.mean_degree <= 0) throw std::invalid_argument("poisson: mean_degree must be positive");
    auto rng = make_rng(seed);
    DegreeSequence degrees(config.n);
    for (uint32_t i = 0; i < config.n; ++i) degrees[i] = sample_poisson_one(rng, config.mean_degree);
    fix_odd_sum(degrees, rng);
    return degrees;
}

ConfigModelResult configuration_model(const DegreeSequence& degrees, uint64_t seed) {
    uint64_t sum = 0;
    for (uint32_t k : degrees) sum += k;
    if (sum % 2 != 0) throw std::invalid_argument("configuration model: degree sum must be even");

    std::vector<NodeId> stubs;
    stubs.reserve(sum);
    for (NodeId i = 0; i < degrees.size(); ++i)
        for (uint32_t c = 0; c < degrees[i]; ++c) stubs.push_back(i);

    auto rng = make_rng(seed);
    fisher_yates_shuffle(stubs, rng);

    ConfigModelResult out;
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(sum / 2);
    std::unordered_set<uint64_t> seen;
    seen.reserve(sum);
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
        NodeId u = stubs[i], v = stubs[i + 1];
        if (u == v) {
            ++out.self_loops_discarded;
            continue;
        }
        if (u > v) std::swap(u, v);
        uint64_t key = (static_cast<uint64_t>(u) << 32) | v;
        if (!seen.insert(key).second) {
            ++out.multi_edges_discarded;
            continue;
        }
        edges.emplace_back(u, v);
    }
    out.graph = Graph::from_edges(static_cast<NodeId>(degrees.size()), edges);
    return out;
}

Graph random_tree(uint32_t n, uint64_t seed) {
    if (n == 0) throw std::invalid_argument("random_tree: n must be positive");
    auto rng = make_rng(seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(n > 0 ? n - 1 : 0);
    for (NodeId i = 1; i < n; ++i)
        edges.emplace_back(static_cast<NodeId>(uniform_below(rng, i)), i);
    return Graph::from_edges(n, edges);
}

}  // namespace hubroute
