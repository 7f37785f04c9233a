#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hubroute/generators.hpp"
#include "hubroute/graph.hpp"
#include "hubroute/metrics.hpp"
#include "hubroute/scheme.hpp"

namespace hubroute {

enum class Family { kPowerLaw, kPoisson, kFile };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// H(N) = round(H0 * (ln N / ln N0)^nu), clamped to [1, N]. The anchor makes
// H(N0) = H0 for every nu.
struct HubScalePolicy {
    int nu = 1;
    uint32_t anchor_n = 10000;
    uint32_t anchor_h = 100;

    uint32_t hub_count(uint32_t n) const;
};

// Pair selection request; kAuto routes all pairs when the (giant) graph has
// at most auto_exhaustive_limit nodes and samples otherwise.
struct PairSpec {
    enum class Mode { kAuto, kAll, kSample } mode = Mode::kAuto;
    uint64_t sample_count = 100000;
    static constexpr uint32_t kAutoExhaustiveLimit = 2000;

    PairPolicy resolve(NodeId node_count, uint64_t seed) const;
    std::string to_string() const;
    static PairSpec parse(const std::string& text);
};

struct ExperimentConfig {
    std::string experiment;  // label_dist | stretch_cdf | stretch_vs_n | stretch_vs_gamma | real_graph
    Family family = Family::kPowerLaw;
    std::vector<uint32_t> n_values = {10000};
    double gamma = 2.3;
    std::vector<double> gamma_values;     // stretch_vs_gamma
    uint32_t k_min = 2;
    std::vector<uint32_t> k_min_values;   // stretch_vs_gamma
    uint32_t k_max = 0;                   // 0 = natural cutoff
    std::vector<int> nu_values = {1};
    uint32_t hubs_override = 0;           // 0 = use the log^nu policy
    double mean_degree = 7.0;             // Poisson family
    uint32_t realizations = 10;
    PairSpec pairs;
    uint64_t seed = 1;
    std::string graph_file;
    std::string out_path;
    std::string format = "csv";  // csv | json

    std::string to_json() const;
    static ExperimentConfig from_json(const std::string& text);
};

struct CellResult {
    Family family = Family::kPowerLaw;
    uint32_t n = 0;          // requested N (before giant-component restriction)
    double gamma = 0;
    uint32_t k_min = 0;
    double mean_degree = 0;
    int nu = 0;
    uint32_t hub_count = 0;
    uint32_t realizations = 0;
    uint64_t pair_count = 0;
    double mean_stretch = 0;      // mean over realizations of mean_pair_stretch
    double se_stretch = 0;        // standard error over realizations
    double ratio_of_averages = 0; // pooled S
    double shortest_fraction = 0; // pooled
    double max_stretch = 0;
    double mean_giant_fraction = 0;
};

struct CellSpec {
    Family family = Family::kPowerLaw;
    uint32_t n = 10000;
    double gamma = 2.3;
    uint32_t k_min = 2;
    uint32_t k_max = 0;  // 0 = natural cutoff
    double mean_degree = 7.0;
    int nu = 1;
    uint32_t hubs_override = 0;
    HubScalePolicy policy;
    uint32_t realizations = 10;
    PairSpec pairs;
    uint64_t seed = 1;
    uint64_t cell_id = 0;  // disambiguates seed streams between cells
};

// One experiment cell: `realizations` networks, scheme per network, routed
// pairs, pooled stretch statistics. Also fills `merged` when given (pooled
// inverse CDF across realizations).
CellResult run_stretch_cell(const CellSpec& spec, StretchAccumulator* merged = nullptr);

// Generates one network of the requested family and returns its giant
// component. giant_fraction gets |giant| / n.
Graph make_network(Family family, uint32_t n, double gamma, uint32_t k_min,
                   double mean_degree, uint64_t seed, double* giant_fraction = nullptr,
                   uint32_t k_max = 0);

struct LabelDistResult {
    std::map<uint32_t, double> mean_entry_count_hist;  // entry_count -> mean count per realization
    uint32_t max_entry_count = 0;
    double mean_entry_count = 0;
    int32_t max_diameter = 0;  // largest diameter seen (estimated for big graphs)
};

LabelDistResult run_label_dist(const ExperimentConfig& config);
std::map<uint32_t, StretchReport> run_stretch_cdf(const ExperimentConfig& config);
std::vector<CellResult> run_stretch_vs_n(const ExperimentConfig& config);
std::vector<CellResult> run_stretch_vs_gamma(const ExperimentConfig& config);

struct RealGraphResult {
    std::string graph_file;
    NodeId total_nodes = 0;
    NodeId giant_nodes = 0;
    size_t giant_edges = 0;
    size_t self_loops_dropped = 0;
    size_t duplicates_dropped = 0;
    uint32_t hub_count = 0;
    StretchReport report;
};

RealGraphResult run_real_graph(const ExperimentConfig& config);

// Dispatches on config.experiment and writes config.out_path (CSV or JSON
// per config.format). Byte-identical output for identical config + seed.
void run_experiment(const ExperimentConfig& config);

}  // namespace hubroute
