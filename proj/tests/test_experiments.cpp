#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hubroute/experiments.hpp"
#include "hubroute/generators.hpp"

using namespace hubroute;
namespace fs = std::filesystem;

namespace {

fs::path tmp_dir() {
    auto d = fs::temp_directory_path() / "hubroute_test";
    fs::create_directories(d);
    return d;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("hub scale policy anchor holds for every nu") {
    for (int nu : {0, 1, 2, 3}) {
        HubScalePolicy p;
        p.nu = nu;
        CHECK(p.hub_count(10000) == 100);
    }
    HubScalePolicy p0;
    p0.nu = 0;
    CHECK(p0.hub_count(1000) == 100);
    CHECK(p0.hub_count(500000) == 100);

    HubScalePolicy p1;
    p1.nu = 1;
    CHECK(p1.hub_count(1000) == 75);  // round(100 * ln(1000)/ln(10000))
    // clamped to [1, n]
    HubScalePolicy p3;
    p3.nu = 3;
    CHECK(p3.hub_count(2) >= 1);
    CHECK(p3.hub_count(2) <= 2);
}

TEST_CASE("pair spec parsing") {
    CHECK(PairSpec::parse("all").mode == PairSpec::Mode::kAll);
    CHECK(PairSpec::parse("auto").mode == PairSpec::Mode::kAuto);
    auto s = PairSpec::parse("sample:5000");
    CHECK(s.mode == PairSpec::Mode::kSample);
    CHECK(s.sample_count == 5000);
    CHECK(s.to_string() == "sample:5000");
    CHECK_THROWS_AS(PairSpec::parse("bogus"), std::invalid_argument);

    // auto resolves by size
    CHECK(PairSpec().resolve(100, 1).mode == PairPolicy::Mode::kExhaustive);
    CHECK(PairSpec().resolve(5000, 1).mode == PairPolicy::Mode::kSampled);
}

TEST_CASE("experiment config JSON round trip") {
    ExperimentConfig c;
    c.experiment = "stretch_vs_n";
    c.n_values = {500, 1000};
    c.gamma = 2.5;
    c.k_min = 3;
    c.nu_values = {0, 2};
    c.realizations = 4;
    c.pairs = PairSpec::parse("sample:123");
    c.seed = 99;
    auto c2 = ExperimentConfig::from_json(c.to_json());
    CHECK(c2.experiment == c.experiment);
    CHECK(c2.n_values == c.n_values);
    CHECK(c2.gamma == c.gamma);
    CHECK(c2.k_min == c.k_min);
    CHECK(c2.nu_values == c.nu_values);
    CHECK(c2.realizations == c.realizations);
    CHECK(c2.pairs.to_string() == "sample:123");
    CHECK(c2.seed == c.seed);
}

TEST_CASE("label_dist smoke run conserves node counts") {
    ExperimentConfig c;
    c.experiment = "label_dist";
    c.n_values = {100};
    c.realizations = 3;
    c.hubs_override = 5;
    c.seed = 7;
    c.out_path = (tmp_dir() / "label_dist.csv").string();
    auto res = run_label_dist(c);
    double total = 0;
    for (auto [ec, cnt] : res.mean_entry_count_hist) total += cnt;
    // giant-component restriction may trim a few nodes below 100
    CHECK(total > 80);
    CHECK(total <= 100);
    CHECK(res.max_entry_count <= static_cast<uint32_t>(res.max_diameter) + 1);
    CHECK(fs::exists(c.out_path));
}

TEST_CASE("label_dist on a tree file matches BFS hub distances") {
    auto tree = random_tree(60, 3);
    auto file = tmp_dir() / "tree.edges";
    save_edge_list_file(tree, file.string());

    ExperimentConfig c;
    c.experiment = "label_dist";
    c.family = Family::kFile;
    c.graph_file = file.string();
    c.n_values = {60};
    c.realizations = 1;
    c.hubs_override = 2;
    auto res = run_label_dist(c);

    auto scheme = build_scheme(tree, {2});
    std::map<uint32_t, double> expected;
    for (NodeId u = 0; u < 60; ++u) {
        uint32_t d0 = static_cast<uint32_t>(bfs(tree, scheme.hubs()[0]).distance[u]);
        uint32_t d1 = static_cast<uint32_t>(bfs(tree, scheme.hubs()[1]).distance[u]);
        expected[std::min(d0, d1) + 1] += 1;
    }
    CHECK(res.mean_entry_count_hist == expected);
}

TEST_CASE("stretch_cdf smoke: boundary and headline fields") {
    ExperimentConfig c;
    c.experiment = "stretch_cdf";
    c.n_values = {300};
    c.realizations = 2;
    c.seed = 5;
    c.out_path = (tmp_dir() / "cdf.csv").string();
    auto reports = run_stretch_cdf(c);
    REQUIRE(reports.count(300) == 1);
    const auto& rep = reports[300];
    CHECK(rep.pair_count > 0);
    CHECK(rep.mean_pair_stretch >= 1.0);
    CHECK(rep.inverse_cdf.back().second == doctest::Approx(0.0));
    CHECK(rep.inverse_cdf.front().second ==
          doctest::Approx(1.0 - rep.shortest_fraction));
}

TEST_CASE("stretch_vs_n covers both families and echoes H") {
    ExperimentConfig c;
    c.experiment = "stretch_vs_n";
    c.n_values = {200, 400};
    c.nu_values = {0};
    c.realizations = 2;
    c.seed = 11;
    auto cells = run_stretch_vs_n(c);
    CHECK(cells.size() == 4);  // 2 families x 1 nu x 2 N
    bool saw_pl = false, saw_po = false;
    for (const auto& cell : cells) {
        CHECK(cell.mean_stretch >= 1.0);
        CHECK(cell.hub_count >= 1);
        if (cell.family == Family::kPowerLaw) saw_pl = true;
        if (cell.family == Family::kPoisson) saw_po = true;
    }
    CHECK(saw_pl);
    CHECK(saw_po);
}

TEST_CASE("stretch_vs_gamma reports giant fraction") {
    ExperimentConfig c;
    c.experiment = "stretch_vs_gamma";
    c.n_values = {300};
    c.gamma_values = {2.2, 3.0};
    c.k_min_values = {1, 2};
    c.realizations = 2;
    c.seed = 13;
    auto cells = run_stretch_vs_gamma(c);
    CHECK(cells.size() == 4);
    for (const auto& cell : cells) {
        CHECK(cell.mean_stretch >= 1.0);
        CHECK(cell.ratio_of_averages < 2.0);
        CHECK(cell.mean_giant_fraction > 0.0);
        CHECK(cell.mean_giant_fraction <= 1.0);
        if (cell.k_min == 1) CHECK(cell.mean_giant_fraction < 1.0);
    }
}

TEST_CASE("real_graph on a hand-made path file routes at stretch 1") {
    auto file = tmp_dir() / "path.edges";
    {
        std::ofstream out(file);
        out << "# tiny path graph with noise\n";
        out << "0 1\n1 2\n2 3\n3 4\n";
        out << "1 0\n";   // duplicate
        out << "2 2\n";   // self loop
    }
    ExperimentConfig c;
    c.experiment = "real_graph";
    c.graph_file = file.string();
    c.hubs_override = 1;
    c.pairs = PairSpec::parse("all");
    c.out_path = (tmp_dir() / "real.json").string();
    auto res = run_real_graph(c);
    CHECK(res.total_nodes == 5);
    CHECK(res.giant_nodes == 5);
    CHECK(res.self_loops_dropped == 1);
    CHECK(res.duplicates_dropped == 1);
    CHECK(res.report.mean_pair_stretch == doctest::Approx(1.0));
    CHECK(res.report.shortest_fraction == doctest::Approx(1.0));
    CHECK(slurp(c.out_path).find("\"shortest_fraction\": 1.0") != std::string::npos);
}

TEST_CASE("identical config and seed give byte-identical outputs") {
    for (const char* experiment : {"label_dist", "stretch_vs_n"}) {
        ExperimentConfig c;
        c.experiment = experiment;
        c.n_values = {150};
        c.nu_values = {1};
        c.realizations = 2;
        c.hubs_override = 4;
        c.seed = 21;
        auto p1 = tmp_dir() / "det1.csv";
        auto p2 = tmp_dir() / "det2.csv";
        c.out_path = p1.string();
        run_experiment(c);
        c.out_path = p2.string();
        run_experiment(c);
        CHECK(slurp(p1) == slurp(p2));
    }
}

TEST_CASE("unknown experiment id is rejected") {
    ExperimentConfig c;
    c.experiment = "nope";
    CHECK_THROWS_AS(run_experiment(c), std::invalid_argument);
}
