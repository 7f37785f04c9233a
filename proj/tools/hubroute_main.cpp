// hubroute: generate networks, build the hub-labelling scheme, route packets,
// and run the stretch / label-size experiments.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hubroute/experiments.hpp"
#include "hubroute/generators.hpp"
#include "hubroute/graph.hpp"
#include "hubroute/metrics.hpp"
#include "hubroute/router.hpp"
#include "hubroute/rng.hpp"
#include "hubroute/scheme.hpp"

using namespace hubroute;
using ordered_json = nlohmann::ordered_json;

namespace {

// Exit codes: 0 success, 1 usage error, 2 data error, 3 internal invariant.
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

ordered_json trace_to_json(const RouteTrace& t) {
    ordered_json j;
    j["source"] = t.source;
    j["destination"] = t.destination;
    j["hops"] = t.hops();
    j["walk"] = t.walk;
    std::vector<int> rules;
    rules.reserve(t.rules.size());
    for (auto r : t.rules) rules.push_back(static_cast<int>(r));
    j["rules"] = rules;
    return j;
}

struct GenerateArgs {
    std::string family = "power_law";
    uint32_t n = 10000;
    double gamma = 2.3;
    uint32_t k_min = 2;
    uint32_t k_max = 0;
    double mean_degree = 7.0;
    uint64_t seed = 1;
    std::string out;
};

void cmd_generate(const GenerateArgs& a) {
    ConfigModelResult cm;
    if (a.family == "power_law") {
        cm = configuration_model(sample_power_law({a.n, a.gamma, a.k_min, a.k_max}, derive_seed(a.seed, 1)),
                                 derive_seed(a.seed, 2));
    } else if (a.family == "poisson") {
        cm = configuration_model(sample_poisson({a.n, a.mean_degree}, derive_seed(a.seed, 1)),
                                 derive_seed(a.seed, 2));
    } else if (a.family == "tree") {
        cm.graph = random_tree(a.n, a.seed);
    } else {
        throw std::invalid_argument("unknown family: " + a.family);
    }
    save_edge_list_file(cm.graph, a.out);
    std::cerr << "generated " << a.family << " graph: n=" << cm.graph.node_count()
              << " m=" << cm.graph.edge_count()
              << " discarded_self_loops=" << cm.self_loops_discarded
              << " discarded_multi_edges=" << cm.multi_edges_discarded << "\n";
}

void cmd_ingest(const std::string& in_path, const std::string& out_path,
                const std::string& map_path) {
    auto load = load_edge_list_file(in_path);
    save_edge_list_file(load.graph, out_path);
    if (!map_path.empty()) {
        std::ofstream m(map_path);
        if (!m) throw std::runtime_error("cannot write map file: " + map_path);
        for (size_t i = 0; i < load.original_ids.size(); ++i)
            m << i << ' ' << load.original_ids[i] << '\n';
    }
    std::cerr << "ingested " << in_path << ": n=" << load.graph.node_count()
              << " m=" << load.graph.edge_count()
              << " self_loops_dropped=" << load.self_loops_dropped
              << " duplicates_dropped=" << load.duplicates_dropped << "\n";
}

void cmd_build(const std::string& graph_file, uint32_t hubs, const std::string& out_path) {
    auto load = load_edge_list_file(graph_file);
    auto giant = giant_component(load.graph);
    if (giant.graph.node_count() < load.graph.node_count())
        std::cerr << "restricted to giant component: " << giant.graph.node_count() << " of "
                  << load.graph.node_count() << " nodes\n";
    uint32_t h = std::min<uint32_t>(hubs, giant.graph.node_count());
    Scheme scheme = build_scheme(giant.graph, SchemeConfig{h});
    scheme.save_file(out_path);
    auto dist = label_size_distribution(scheme);
    std::cerr << "built scheme: hubs=" << h << " mean_label_entries=" << dist.mean_entry_count
              << " max_label_entries=" << dist.max_entry_count << "\n";
}

void cmd_route(const std::string& scheme_file, uint32_t from, uint32_t to) {
    Scheme scheme = Scheme::load_file(scheme_file);
    std::cout << trace_to_json(route(scheme, from, to)).dump() << "\n";
}

void cmd_trace(const std::string& scheme_file, bool all, const std::string& pairs,
               uint64_t seed) {
    Scheme scheme = Scheme::load_file(scheme_file);
    PairSpec spec = all ? PairSpec{PairSpec::Mode::kAll} : PairSpec::parse(pairs);
    PairPolicy policy = spec.resolve(scheme.graph().node_count(), seed);
    bool clamped = route_all_pairs(scheme, policy, [](const RouteTrace& t) {
        std::cout << trace_to_json(t).dump() << "\n";
    });
    if (clamped) std::cerr << "warning: sample count clamped to N(N-1)\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hub-based compact routing: scheme construction, packet routing, "
                 "and stretch experiments"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* cmd_gen = app.add_subcommand("generate", "generate a random network edge list");
    cmd_gen->add_option("--family", gen.family, "power_law | poisson | tree")
        ->capture_default_str();
    cmd_gen->add_option("--n", gen.n, "node count")->capture_default_str();
    cmd_gen->add_option("--gamma", gen.gamma, "power-law exponent")->capture_default_str();
    cmd_gen->add_option("--kmin", gen.k_min, "minimum degree")->capture_default_str();
    cmd_gen->add_option("--kmax", gen.k_max, "degree cutoff (0 = natural)")->capture_default_str();
    cmd_gen->add_option("--mean-degree", gen.mean_degree, "Poisson mean degree")
        ->capture_default_str();
    cmd_gen->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
    cmd_gen->add_option("--out", gen.out, "output edge-list path")->required();

    std::string in_file, out_file, map_file;
    auto* cmd_ing = app.add_subcommand("ingest", "densify an external edge list");
    cmd_ing->add_option("--graph-file", in_file, "input edge list")->required();
    cmd_ing->add_option("--out", out_file, "canonical output edge list")->required();
    cmd_ing->add_option("--map", map_file, "write dense-id -> original-id map here");

    std::string build_graph, build_out;
    uint32_t build_hubs = 100;
    auto* cmd_bld = app.add_subcommand("build", "build a routing scheme from an edge list");
    cmd_bld->add_option("--graph-file", build_graph, "input edge list")->required();
    cmd_bld->add_option("--hubs", build_hubs, "hub count H")->capture_default_str();
    cmd_bld->add_option("--out", build_out, "scheme output path")->required();

    std::string route_scheme;
    uint32_t route_from = 0, route_to = 0;
    auto* cmd_rt = app.add_subcommand("route", "route one packet, print the trace as JSON");
    cmd_rt->add_option("--scheme", route_scheme, "scheme file")->required();
    cmd_rt->add_option("--from", route_from, "source node")->required();
    cmd_rt->add_option("--to", route_to, "destination node")->required();

    std::string trace_scheme, trace_pairs = "sample:1000";
    bool trace_all = false;
    uint64_t trace_seed = 1;
    auto* cmd_tr = app.add_subcommand("trace", "stream route traces as JSON lines");
    cmd_tr->add_option("--scheme", trace_scheme, "scheme file")->required();
    cmd_tr->add_flag("--all", trace_all, "all ordered pairs");
    cmd_tr->add_option("--pairs", trace_pairs, "all | sample:K")->capture_default_str();
    cmd_tr->add_option("--seed", trace_seed, "sampling seed")->capture_default_str();

    std::string exp_id, exp_config_file, exp_pairs, exp_out, exp_format, exp_graph_file,
        exp_family;
    std::vector<uint32_t> exp_n, exp_kmin_values;
    std::vector<double> exp_gamma_values;
    std::vector<int> exp_nu;
    double exp_gamma = 0, exp_mean_degree = 0;
    uint32_t exp_kmin = 0, exp_kmax = 0, exp_hubs = 0, exp_realizations = 0;
    uint64_t exp_seed = 0;
    auto* cmd_exp = app.add_subcommand(
        "experiment", "run an experiment: label_dist | stretch_cdf | stretch_vs_n | "
                      "stretch_vs_gamma | real_graph");
    cmd_exp->add_option("id", exp_id, "experiment id")->required();
    cmd_exp->add_option("--config", exp_config_file, "JSON config file (flags override)");
    cmd_exp->add_option("--family", exp_family, "power_law | poisson | file");
    cmd_exp->add_option("--n", exp_n, "network sizes");
    cmd_exp->add_option("--gamma", exp_gamma, "power-law exponent");
    cmd_exp->add_option("--gamma-values", exp_gamma_values, "gamma grid (stretch_vs_gamma)");
    cmd_exp->add_option("--kmin", exp_kmin, "minimum degree");
    cmd_exp->add_option("--kmin-values", exp_kmin_values, "k_min grid (stretch_vs_gamma)");
    cmd_exp->add_option("--kmax", exp_kmax, "degree cutoff (0 = natural)");
    cmd_exp->add_option("--nu", exp_nu, "hub scaling exponents (H ~ log^nu N)");
    cmd_exp->add_option("--hubs", exp_hubs, "fixed hub count (overrides the nu policy)");
    cmd_exp->add_option("--mean-degree", exp_mean_degree, "Poisson mean degree");
    cmd_exp->add_option("--realizations", exp_realizations, "networks per cell");
    cmd_exp->add_option("--pairs", exp_pairs, "all | auto | sample:K");
    cmd_exp->add_option("--seed", exp_seed, "base seed");
    cmd_exp->add_option("--graph-file", exp_graph_file, "edge list (file family / real_graph)");
    cmd_exp->add_option("--out", exp_out, "output path");
    cmd_exp->add_option("--format", exp_format, "csv | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (cmd_gen->parsed()) {
            cmd_generate(gen);
        } else if (cmd_ing->parsed()) {
            cmd_ingest(in_file, out_file, map_file);
        } else if (cmd_bld->parsed()) {
            cmd_build(build_graph, build_hubs, build_out);
        } else if (cmd_rt->parsed()) {
            cmd_route(route_scheme, route_from, route_to);
        } else if (cmd_tr->parsed()) {
            cmd_trace(trace_scheme, trace_all, trace_pairs, trace_seed);
        } else if (cmd_exp->parsed()) {
            ExperimentConfig config;
            if (!exp_config_file.empty()) {
                std::ifstream in(exp_config_file);
                if (!in) throw std::runtime_error("cannot open config: " + exp_config_file);
                std::stringstream ss;
                ss << in.rdbuf();
                config = ExperimentConfig::from_json(ss.str());
            }
            config.experiment = exp_id;
            if (cmd_exp->count("--family")) config.family = family_from_name(exp_family);
            if (cmd_exp->count("--n")) config.n_values = exp_n;
            if (cmd_exp->count("--gamma")) config.gamma = exp_gamma;
            if (cmd_exp->count("--gamma-values")) config.gamma_values = exp_gamma_values;
            if (cmd_exp->count("--kmin")) config.k_min = exp_kmin;
            if (cmd_exp->count("--kmax")) config.k_max = exp_kmax;
            if (cmd_exp->count("--kmin-values")) config.k_min_values = exp_kmin_values;
            if (cmd_exp->count("--nu")) config.nu_values = exp_nu;
            if (cmd_exp->count("--hubs")) config.hubs_override = exp_hubs;
            if (cmd_exp->count("--mean-degree")) config.mean_degree = exp_mean_degree;
            if (cmd_exp->count("--realizations")) config.realizations = exp_realizations;
            if (cmd_exp->count("--pairs")) config.pairs = PairSpec::parse(exp_pairs);
            if (cmd_exp->count("--seed")) config.seed = exp_seed;
            if (cmd_exp->count("--graph-file")) config.graph_file = exp_graph_file;
            if (cmd_exp->count("--out")) config.out_path = exp_out;
            if (cmd_exp->count("--format")) config.format = exp_format;
            run_experiment(config);
        }
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return 0;
}
