#include <doctest.h>

#include <cmath>

#include "hubroute/generators.hpp"
#include "hubroute/metrics.hpp"
#include "hubroute/rng.hpp"
#include "test_helpers.hpp"

using namespace hubroute;
using namespace hubroute::testing;

TEST_CASE("distance oracle basics") {
    auto k5 = complete_graph(5);
    DistanceOracle o(k5);
    CHECK(o.distance(0, 4) == 1);

    auto p = path_graph(5);
    DistanceOracle op(p);
    CHECK(op.distance(0, 4) == 4);

    auto cm = configuration_model(sample_power_law({120, 2.3, 2, 0}, 2), 3);
    auto g = std::move(giant_component(cm.graph).graph);
    DistanceOracle og(g);
    auto rng = make_rng(4);
    for (int i = 0; i < 100; ++i) {
        NodeId s = static_cast<NodeId>(uniform_below(rng, g.node_count()));
        NodeId t = static_cast<NodeId>(uniform_below(rng, g.node_count()));
        CHECK(og.distance(s, t) == og.distance(t, s));
    }
}

TEST_CASE("oracle rejects unreachable pairs") {
    auto g = Graph::from_edges(4, {{0, 1}, {2, 3}});
    DistanceOracle o(g);
    CHECK_THROWS_AS(o.distance(0, 2), std::invalid_argument);
}

TEST_CASE("stretch report two-point arithmetic") {
    StretchAccumulator acc;
    acc.add(2, 2);
    acc.add(3, 2);
    auto rep = acc.finalize();
    CHECK(rep.mean_pair_stretch == doctest::Approx(1.25));
    CHECK(rep.ratio_of_averages == doctest::Approx(1.25));
    CHECK(rep.shortest_fraction == doctest::Approx(0.5));
}

TEST_CASE("the two stretch notions diverge") {
    StretchAccumulator acc;
    acc.add(2, 2);
    acc.add(6, 3);
    auto rep = acc.finalize();
    CHECK(rep.mean_pair_stretch == doctest::Approx(1.5));
    CHECK(rep.ratio_of_averages == doctest::Approx(1.6));
    CHECK(rep.max_stretch == doctest::Approx(2.0));
}

TEST_CASE("accumulator merge equals single-pass") {
    StretchAccumulator a, b, whole;
    a.add(2, 2);
    a.add(5, 4);
    b.add(7, 5);
    whole.add(2, 2);
    whole.add(5, 4);
    whole.add(7, 5);
    a.merge(b);
    auto ra = a.finalize(), rw = whole.finalize();
    CHECK(ra.mean_pair_stretch == doctest::Approx(rw.mean_pair_stretch));
    CHECK(ra.ratio_of_averages == doctest::Approx(rw.ratio_of_averages));
    CHECK(ra.inverse_cdf == rw.inverse_cdf);
}

TEST_CASE("inverse CDF invariants") {
    StretchAccumulator acc;
    acc.add(2, 2);   // stretch 1
    acc.add(3, 2);   // 1.5
    acc.add(5, 2);   // 2.5
    auto rep = acc.finalize();
    // non-increasing in the value coordinate
    for (size_t i = 1; i < rep.inverse_cdf.size(); ++i) {
        CHECK(rep.inverse_cdf[i].first > rep.inverse_cdf[i - 1].first);
        CHECK(rep.inverse_cdf[i].second <= rep.inverse_cdf[i - 1].second);
    }
    // P(stretch > 1) = 1 - shortest_fraction
    CHECK(rep.inverse_cdf.front().first == doctest::Approx(1.0));
    CHECK(rep.inverse_cdf.front().second == doctest::Approx(1.0 - rep.shortest_fraction));
    // P(stretch > max observed) = 0
    CHECK(rep.inverse_cdf.back().second == doctest::Approx(0.0));
}

TEST_CASE("stretch on a tree is identically 1") {
    auto g = random_tree(80, 7);
    auto s = build_scheme(g, {4});
    DistanceOracle oracle(g);
    auto rep = stretch_report(s, PairPolicy::exhaustive(), oracle);
    CHECK(rep.pair_count == 80 * 79);
    CHECK(rep.mean_pair_stretch == doctest::Approx(1.0));
    CHECK(rep.ratio_of_averages == doctest::Approx(1.0));
    CHECK(rep.shortest_fraction == doctest::Approx(1.0));
}

TEST_CASE("degree-distance monotonicity on the star, by enumeration") {
    // center degree 9: mean distance 1; leaves: (1 + 8*2)/9
    std::vector<Graph> ensemble{star_graph(9), star_graph(9)};
    auto stats = degree_distance_monotonicity(ensemble, {1, 9}, 0, 0, 1);
    REQUIRE(stats.size() == 2);
    CHECK(stats[0].degree_lo == 1);
    CHECK(stats[0].mean_distance == doctest::Approx(17.0 / 9.0));
    CHECK(stats[1].mean_distance == doctest::Approx(1.0));
    CHECK(stats[1].mean_distance <= stats[0].mean_distance);
}

TEST_CASE("regular ring collapses to a single bucket") {
    std::vector<Graph> ensemble{cycle_graph(20), cycle_graph(20)};
    auto stats = degree_distance_monotonicity(ensemble, {1, 2, 5}, 0, 0, 1);
    REQUIRE(stats.size() == 1);  // empty buckets dropped
    CHECK(stats[0].degree_lo == 2);
    CHECK(stats[0].samples == 40);
}

TEST_CASE("monotonicity requires an ensemble") {
    std::vector<Graph> one{cycle_graph(5)};
    CHECK_THROWS_AS(degree_distance_monotonicity(one, {1}, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("exhaustive vs sampled stretch agree on small graphs") {
    auto cm = configuration_model(sample_power_law({300, 2.3, 2, 0}, 31), 32);
    auto g = std::move(giant_component(cm.graph).graph);
    auto s = build_scheme(g, {10});
    DistanceOracle oracle(g);
    auto exact = stretch_report(s, PairPolicy::exhaustive(), oracle);

    const uint64_t k = 5000;
    auto sampled = stretch_report(s, PairPolicy::sampled(k, 77), oracle);
    // crude SE bound: stretch values live in [1, 2]; sd <= 0.5
    double se = 0.5 / std::sqrt(static_cast<double>(k));
    CHECK(std::abs(sampled.mean_pair_stretch - exact.mean_pair_stretch) < 3 * se);
}
