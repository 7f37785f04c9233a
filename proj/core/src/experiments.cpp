#include "hubroute/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "hubroute/rng.hpp"
#include "hubroute/router.hpp"

namespace hubroute {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::kPowerLaw: return "power_law";
        case Family::kPoisson: return "poisson";
        case Family::kFile: return "file";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "power_law") return Family::kPowerLaw;
    if (name == "poisson") return Family::kPoisson;
    if (name == "file") return Family::kFile;
    throw std::invalid_argument("unknown network family: " + name);
}

uint32_t HubScalePolicy::hub_count(uint32_t n) const {
    if (n == 0) throw std::invalid_argument("hub policy: n must be positive");
    double scale = std::pow(std::log(static_cast<double>(n)) / std::log(static_cast<double>(anchor_n)),
                            static_cast<double>(nu));
    auto h = static_cast<int64_t>(std::llround(anchor_h * scale));
    h = std::clamp<int64_t>(h, 1, n);
    return static_cast<uint32_t>(h);
}

PairPolicy PairSpec::resolve(NodeId node_count, uint64_t seed) const {
    switch (mode) {
        case Mode::kAll: return PairPolicy::exhaustive();
        case Mode::kSample: return PairPolicy::sampled(sample_count, seed);
        case Mode::kAuto:
            if (node_count <= kAutoExhaustiveLimit) return PairPolicy::exhaustive();
            return PairPolicy::sampled(sample_count, seed);
    }
    return PairPolicy::exhaustive();
}

std::string PairSpec::to_string() const {
    switch (mode) {
        case Mode::kAll: return "all";
        case Mode::kAuto: return "auto";
        case Mode::kSample: return "sample:" + std::to_string(sample_count);
    }
    return "?";
}

PairSpec PairSpec::parse(const std::string& text) {
    PairSpec s;
    if (text == "all") {
        s.mode = Mode::kAll;
    } else if (text == "auto" || text.empty()) {
        s.mode = Mode::kAuto;
    } else if (text.rfind("sample:", 0) == 0) {
        s.mode = Mode::kSample;
        s.sample_count = std::stoull(text.substr(7));
        if (s.sample_count == 0) throw std::invalid_argument("pair sample count must be positive");
    } else {
        throw std::invalid_argument("bad pair policy (want all|auto|sample:K): " + text);
    }
    return s;
}

std::string ExperimentConfig::to_json() const {
    ordered_json j;
    j["experiment"] = experiment;
    j["family"] = family_name(family);
    j["n"] = n_values;
    j["gamma"] = gamma;
    j["gamma_values"] = gamma_values;
    j["kmin"] = k_min;
    j["kmax"] = k_max;
    j["kmin_values"] = k_min_values;
    j["nu"] = nu_values;
    j["hubs"] = hubs_override;
    j["mean_degree"] = mean_degree;
    j["realizations"] = realizations;
    j["pairs"] = pairs.to_string();
    j["seed"] = seed;
    j["graph_file"] = graph_file;
    j["out"] = out_path;
    j["format"] = format;
    return j.dump(2);
}

ExperimentConfig ExperimentConfig::from_json(const std::string& text) {
    auto j = ordered_json::parse(text);
    ExperimentConfig c;
    if (j.contains("experiment")) c.experiment = j["experiment"];
    if (j.contains("family")) c.family = family_from_name(j["family"]);
    if (j.contains("n")) c.n_values = j["n"].get<std::vector<uint32_t>>();
    if (j.contains("gamma")) c.gamma = j["gamma"];
    if (j.contains("gamma_values")) c.gamma_values = j["gamma_values"].get<std::vector<double>>();
    if (j.contains("kmin")) c.k_min = j["kmin"];
    if (j.contains("kmax")) c.k_max = j["kmax"];
    if (j.contains("kmin_values")) c.k_min_values = j["kmin_values"].get<std::vector<uint32_t>>();
    if (j.contains("nu")) c.nu_values = j["nu"].get<std::vector<int>>();
    if (j.contains("hubs")) c.hubs_override = j["hubs"];
    if (j.contains("mean_degree")) c.mean_degree = j["mean_degree"];
    if (j.contains("realizations")) c.realizations = j["realizations"];
    if (j.contains("pairs")) c.pairs = PairSpec::parse(j["pairs"]);
    if (j.contains("seed")) c.seed = j["seed"];
    if (j.contains("graph_file")) c.graph_file = j["graph_file"];
    if (j.contains("out")) c.out_path = j["out"];
    if (j.contains("format")) c.format = j["format"];
    return c;
}

Graph make_network(Family family, uint32_t n, double gamma, uint32_t k_min,
                   double mean_degree, uint64_t seed, double* giant_fraction,
                   uint32_t k_max) {
    ConfigModelResult cm;
    switch (family) {
        case Family::kPowerLaw: {
            PowerLawConfig cfg{n, gamma, k_min, k_max};
            cm = configuration_model(sample_power_law(cfg, derive_seed(seed, 1)),
                                     derive_seed(seed, 2));
            break;
        }
        case Family::kPoisson: {
            PoissonConfig cfg{n, mean_degree};
            cm = configuration_model(sample_poisson(cfg, derive_seed(seed, 1)),
                                     derive_seed(seed, 2));
            break;
        }
        case Family::kFile:
            throw std::invalid_argument("make_network: file family needs run_real_graph");
    }
    auto giant = giant_component(cm.graph);
    if (giant_fraction)
        *giant_fraction = static_cast<double>(giant.graph.node_count()) / n;
    return std::move(giant.graph);
}

CellResult run_stretch_cell(const CellSpec& spec, StretchAccumulator* merged) {
    if (spec.realizations < 1) throw std::invalid_argument("cell: realizations must be >= 1");
    HubScalePolicy policy = spec.policy;
    policy.nu = spec.nu;

    CellResult res;
    res.family = spec.family;
    res.n = spec.n;
    res.gamma = spec.gamma;
    res.k_min = spec.k_min;
    res.mean_degree = spec.mean_degree;
    res.nu = spec.nu;
    res.realizations = spec.realizations;

    StretchAccumulator pooled;
    std::vector<double> realization_means;
    double giant_sum = 0;
    for (uint32_t r = 0; r < spec.realizations; ++r) {
        uint64_t rseed = derive_seed(spec.seed, spec.cell_id * 1000003ull + r);
        double gf = 1.0;
        Graph g = make_network(spec.family, spec.n, spec.gamma, spec.k_min,
                               spec.mean_degree, rseed, &gf, spec.k_max);
        giant_sum += gf;
        uint32_t h = spec.hubs_override ? spec.hubs_override : policy.hub_count(spec.n);
        h = std::min<uint32_t>(h, g.node_count());
        res.hub_count = h;
        Scheme scheme = build_scheme(g, SchemeConfig{h});
        DistanceOracle oracle(g);
        StretchAccumulator acc;
        PairPolicy pp = spec.pairs.resolve(g.node_count(), derive_seed(rseed, 3));
        route_all_pairs(scheme, pp,
                        [&](const RouteTrace& trace) { acc.add_trace(trace, oracle); });
        realization_means.push_back(acc.finalize().mean_pair_stretch);
        pooled.merge(acc);
    }
    auto rep = pooled.finalize();
    res.pair_count = rep.pair_count;
    res.ratio_of_averages = rep.ratio_of_averages;
    res.shortest_fraction = rep.shortest_fraction;
    res.max_stretch = rep.max_stretch;
    res.mean_giant_fraction = giant_sum / spec.realizations;

    double sum = 0;
    for (double m : realization_means) sum += m;
    res.mean_stretch = sum / realization_means.size();
    if (realization_means.size() > 1) {
        double ss = 0;
        for (double m : realization_means) ss += (m - res.mean_stretch) * (m - res.mean_stretch);
        res.se_stretch = std::sqrt(ss / (realization_means.size() - 1) /
                                   realization_means.size());
    }
    if (merged) merged->merge(pooled);
    return res;
}

namespace {

Graph realization_graph(const ExperimentConfig& c, uint32_t n, uint64_t rseed) {
    if (c.family == Family::kFile) {
        auto load = load_edge_list_file(c.graph_file);
        return std::move(giant_component(load.graph).graph);
    }
    return make_network(c.family, n, c.gamma, c.k_min, c.mean_degree, rseed, nullptr,
                        c.k_max);
}

std::string echo_prefix(const ExperimentConfig& c, Family fam, uint32_t n, double gamma,
                        uint32_t k_min, int nu, uint32_t h) {
    std::ostringstream os;
    os << c.experiment << ',' << family_name(fam) << ',' << n << ',' << fmt(gamma) << ','
       << k_min << ',' << nu << ',' << h << ',' << c.seed << ',' << c.realizations << ','
       << c.pairs.to_string();
    return os.str();
}

constexpr const char* kEchoHeader =
    "experiment,family,n,gamma,k_min,nu,h,seed,realizations,pairs";

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write output file: " + path);
    return out;
}

}  // namespace

LabelDistResult run_label_dist(const ExperimentConfig& config) {
    if (config.n_values.empty()) throw std::invalid_argument("label_dist: need an N value");
    const uint32_t n = config.n_values.front();
    const int nu = config.nu_values.empty() ? 1 : config.nu_values.front();
    HubScalePolicy policy;
    policy.nu = nu;

    std::map<uint32_t, uint64_t> hist;
    uint64_t entry_sum = 0, node_sum = 0;
    LabelDistResult res;
    uint32_t h_used = 0;
    for (uint32_t r = 0; r < config.realizations; ++r) {
        uint64_t rseed = derive_seed(config.seed, r);
        Graph g = realization_graph(config, n, rseed);
        uint32_t h = config.hubs_override ? config.hubs_override : policy.hub_count(n);
        h = std::min<uint32_t>(h, g.node_count());
        h_used = h;
        Scheme scheme = build_scheme(g, SchemeConfig{h});
        auto d = label_size_distribution(scheme);
        for (auto [ec, cnt] : d.entry_count_hist) hist[ec] += cnt;
        res.max_entry_count = std::max(res.max_entry_count, d.max_entry_count);
        entry_sum += static_cast<uint64_t>(d.mean_entry_count * g.node_count() + 0.5);
        node_sum += g.node_count();
        auto stats = graph_stats(g, 2000, 100, derive_seed(rseed, 9));
        res.max_diameter = std::max(res.max_diameter, stats.diameter);
    }
    for (auto [ec, cnt] : hist)
        res.mean_entry_count_hist[ec] = static_cast<double>(cnt) / config.realizations;
    res.mean_entry_count = static_cast<double>(entry_sum) / node_sum;

    if (!config.out_path.empty()) {
        auto out = open_out(config.out_path);
        std::string echo = echo_prefix(config, config.family, n, config.gamma, config.k_min,
                                       nu, h_used);
        out << kEchoHeader << ",row,entry_count,mean_count\n";
        for (auto [ec, cnt] : res.mean_entry_count_hist)
            out << echo << ",hist," << ec << ',' << fmt(cnt) << '\n';
        out << echo << ",summary," << res.max_entry_count << ',' << fmt(res.mean_entry_count)
            << '\n';
    }
    return res;
}

std::map<uint32_t, StretchReport> run_stretch_cdf(const ExperimentConfig& config) {
    if (config.n_values.empty()) throw std::invalid_argument("stretch_cdf: need N values");
    const int nu = config.nu_values.empty() ? 1 : config.nu_values.front();

    std::map<uint32_t, StretchReport> reports;
    std::map<uint32_t, std::pair<std::string, CellResult>> rows;
    uint64_t cell_id = 0;
    for (uint32_t n : config.n_values) {
        CellSpec spec;
        spec.family = config.family;
        spec.n = n;
        spec.gamma = config.gamma;
        spec.k_min = config.k_min;
        spec.k_max = config.k_max;
        spec.mean_degree = config.mean_degree;
        spec.nu = nu;
        spec.hubs_override = config.hubs_override;
        spec.realizations = config.realizations;
        spec.pairs = config.pairs;
        spec.seed = config.seed;
        spec.cell_id = cell_id++;
        StretchAccumulator merged;
        CellResult cell = run_stretch_cell(spec, &merged);
        reports[n] = merged.finalize();
        rows[n] = {echo_prefix(config, config.family, n, config.gamma, config.k_min, nu,
                               cell.hub_count),
                   cell};
    }

    if (!config.out_path.empty()) {
        auto out = open_out(config.out_path);
        out << kEchoHeader << ",row,stretch,p_greater\n";
        for (auto& [n, rep] : reports) {
            const auto& echo = rows[n].first;
            for (auto [v, p] : rep.inverse_cdf)
                out << echo << ",cdf," << fmt(v) << ',' << fmt(p) << '\n';
            const auto& cell = rows[n].second;
            out << echo << ",summary_mean_stretch," << fmt(cell.mean_stretch) << ','
                << fmt(cell.se_stretch) << '\n';
            out << echo << ",summary_shortest_fraction," << fmt(rep.shortest_fraction)
                << ",\n";
            out << echo << ",summary_ratio_of_averages," << fmt(rep.ratio_of_averages)
                << ",\n";
        }
    }
    return reports;
}

std::vector<CellResult> run_stretch_vs_n(const ExperimentConfig& config) {
    if (config.n_values.empty() || config.nu_values.empty())
        throw std::invalid_argument("stretch_vs_n: need N and nu values");
    std::vector<CellResult> cells;
    uint64_t cell_id = 0;
    for (Family fam : {Family::kPowerLaw, Family::kPoisson}) {
        for (int nu : config.nu_values) {
            for (uint32_t n : config.n_values) {
                CellSpec spec;
                spec.family = fam;
                spec.n = n;
                spec.gamma = config.gamma;
                spec.k_min = config.k_min;
                spec.k_max = config.k_max;
                spec.mean_degree = config.mean_degree;
                spec.nu = nu;
                spec.hubs_override = config.hubs_override;
                spec.realizations = config.realizations;
                spec.pairs = config.pairs;
                spec.seed = config.seed;
                spec.cell_id = cell_id++;
                cells.push_back(run_stretch_cell(spec));
            }
        }
    }
    if (!config.out_path.empty()) {
        auto out = open_out(config.out_path);
        out << kEchoHeader
            << ",mean_stretch,se_stretch,ratio_of_averages,shortest_fraction,max_stretch,"
               "pair_count,giant_fraction\n";
        for (const auto& c : cells) {
            out << echo_prefix(config, c.family, c.n, c.gamma, c.k_min, c.nu, c.hub_count)
                << ',' << fmt(c.mean_stretch) << ',' << fmt(c.se_stretch) << ','
                << fmt(c.ratio_of_averages) << ',' << fmt(c.shortest_fraction) << ','
                << fmt(c.max_stretch) << ',' << c.pair_count << ','
                << fmt(c.mean_giant_fraction) << '\n';
        }
    }
    return cells;
}

std::vector<CellResult> run_stretch_vs_gamma(const ExperimentConfig& config) {
    if (config.gamma_values.empty() || config.k_min_values.empty())
        throw std::invalid_argument("stretch_vs_gamma: need gamma and k_min lists");
    const uint32_t n = config.n_values.empty() ? 10000 : config.n_values.front();
    const int nu = config.nu_values.empty() ? 1 : config.nu_values.front();

    std::vector<CellResult> cells;
    uint64_t cell_id = 0;
    for (uint32_t k_min : config.k_min_values) {
        for (double gamma : config.gamma_values) {
            CellSpec spec;
            spec.family = Family::kPowerLaw;
            spec.n = n;
            spec.gamma = gamma;
            spec.k_min = k_min;
            spec.k_max = config.k_max;
            spec.nu = nu;
            spec.hubs_override = config.hubs_override;
            spec.realizations = config.realizations;
            spec.pairs = config.pairs;
            spec.seed = config.seed;
            spec.cell_id = cell_id++;
            cells.push_back(run_stretch_cell(spec));
        }
    }
    if (!config.out_path.empty()) {
        auto out = open_out(config.out_path);
        out << kEchoHeader
            << ",mean_stretch,se_stretch,ratio_of_averages,shortest_fraction,max_stretch,"
               "pair_count,giant_fraction\n";
        for (const auto& c : cells) {
            out << echo_prefix(config, c.family, c.n, c.gamma, c.k_min, c.nu, c.hub_count)
                << ',' << fmt(c.mean_stretch) << ',' << fmt(c.se_stretch) << ','
                << fmt(c.ratio_of_averages) << ',' << fmt(c.shortest_fraction) << ','
                << fmt(c.max_stretch) << ',' << c.pair_count << ','
                << fmt(c.mean_giant_fraction) << '\n';
        }
    }
    return cells;
}

RealGraphResult run_real_graph(const ExperimentConfig& config) {
    if (config.graph_file.empty()) throw std::invalid_argument("real_graph: need --graph-file");
    auto load = load_edge_list_file(config.graph_file);
    if (load.graph.node_count() == 0) throw std::runtime_error("real_graph: empty graph");
    auto giant = giant_component(load.graph);

    RealGraphResult res;
    res.graph_file = config.graph_file;
    res.total_nodes = load.graph.node_count();
    res.giant_nodes = giant.graph.node_count();
    res.giant_edges = giant.graph.edge_count();
    res.self_loops_dropped = load.self_loops_dropped;
    res.duplicates_dropped = load.duplicates_dropped;

    // Default H = 100: the paper's AS-graph experiment does not state H.
    uint32_t h = config.hubs_override ? config.hubs_override : 100;
    h = std::min<uint32_t>(h, giant.graph.node_count());
    res.hub_count = h;

    Scheme scheme = build_scheme(giant.graph, SchemeConfig{h});
    DistanceOracle oracle(giant.graph);
    StretchAccumulator acc;
    PairPolicy pp = config.pairs.resolve(giant.graph.node_count(), derive_seed(config.seed, 3));
    route_all_pairs(scheme, pp, [&](const RouteTrace& t) { acc.add_trace(t, oracle); });
    res.report = acc.finalize();

    if (!config.out_path.empty()) {
        ordered_json j;
        j["config"] = ordered_json::parse(config.to_json());
        j["graph_file"] = res.graph_file;
        j["total_nodes"] = res.total_nodes;
        j["giant_nodes"] = res.giant_nodes;
        j["giant_edges"] = res.giant_edges;
        j["self_loops_dropped"] = res.self_loops_dropped;
        j["duplicates_dropped"] = res.duplicates_dropped;
        j["hub_count"] = res.hub_count;
        j["pair_count"] = res.report.pair_count;
        j["mean_pair_stretch"] = res.report.mean_pair_stretch;
        j["ratio_of_averages"] = res.report.ratio_of_averages;
        j["shortest_fraction"] = res.report.shortest_fraction;
        j["max_stretch"] = res.report.max_stretch;
        ordered_json cdf = ordered_json::array();
        for (auto [v, p] : res.report.inverse_cdf) cdf.push_back({{"stretch", v}, {"p_greater", p}});
        j["inverse_cdf"] = cdf;
        auto out = open_out(config.out_path);
        out << j.dump(2) << '\n';
    }
    return res;
}

void run_experiment(const ExperimentConfig& config) {
    if (config.experiment == "label_dist")
        run_label_dist(config);
    else if (config.experiment == "stretch_cdf")
        run_stretch_cdf(config);
    else if (config.experiment == "stretch_vs_n")
        run_stretch_vs_n(config);
    else if (config.experiment == "stretch_vs_gamma")
        run_stretch_vs_gamma(config);
    else if (config.experiment == "real_graph")
        run_real_graph(config);
    else
        throw std::invalid_argument("unknown experiment: " + config.experiment);
}

}  // namespace hubroute
