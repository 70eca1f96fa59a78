#include <doctest.h>

#include <algorithm>
#include <random>

#include <json.hpp>

#include "pcd/metrics.hpp"
#include "support/oracle.hpp"

using namespace pcd;

namespace {

ClusterSizes sizes_of(std::vector<std::size_t> s) { return ClusterSizes{std::move(s), 0}; }

Assignment permuted(const Assignment& a, std::mt19937_64& rng) {
    std::vector<Label> perm(a.k());
    for (std::size_t m = 0; m < a.k(); ++m) perm[m] = static_cast<Label>(m + 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Label> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ? perm[a[i] - 1] : 0;
    return Assignment(out, a.k());
}

}  // namespace

TEST_CASE("imbalance factor") {
    for (double xi : {1.0, 3.0, 4.0, 0.5}) {
        CHECK(imbalance_factor(sizes_of({5, 5, 5}), xi).value == doctest::Approx(1.0));
        const auto single = imbalance_factor(sizes_of({7, 0}), xi);
        CHECK(single.value == 0.0);
        CHECK(single.degenerate);
    }
    CHECK(imbalance_factor(sizes_of({3, 1}), 3.0).value == doctest::Approx(0.5963).epsilon(1e-4));
    CHECK(imbalance_factor(sizes_of({0, 0}), 3.0).degenerate);
    CHECK_THROWS_AS(imbalance_factor(sizes_of({4}), 3.0), std::invalid_argument);
}

TEST_CASE("imbalance factor is continuous at the entropy limit") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::size_t> s(2 + rng() % 6);
        for (auto& v : s) v = 1 + rng() % 50;
        const double entropy = imbalance_factor(sizes_of(s), 1.0).value;
        CHECK(std::abs(imbalance_factor(sizes_of(s), 1.0 + 1e-6).value - entropy) <= 1e-4);
        CHECK(std::abs(imbalance_factor(sizes_of(s), 1.0 - 1e-6).value - entropy) <= 1e-4);
    }
}

TEST_CASE("F1 examples") {
    const Assignment truth({1, 1, 2, 2}, 2);
    CHECK(f1_score(truth, truth) == 1.0);
    CHECK(f1_score(Assignment({2, 2, 1, 1}, 2), truth) == 1.0);
    CHECK(f1_score(Assignment({1, 1, 1, 1}, 2), truth) == doctest::Approx(1.0 / 3.0));
    CHECK(f1_score(Assignment(4, 2), truth) == 0.0);
    CHECK_THROWS_AS(f1_score(Assignment(3, 2), truth), std::invalid_argument);
}

TEST_CASE("matching finds the optimal one-to-one assignment") {
    // Greedy on the largest entry (0.9) would give 0.9 + 0.1; optimum is 0.8 + 0.8.
    const std::vector<double> scores{0.9, 0.8, 0.8, 0.1};
    const auto m = max_weight_matching(scores, 2, 2);
    CHECK(m == std::vector<int>{1, 0});
    const auto wide = max_weight_matching({0.1, 0.5, 0.3}, 1, 3);
    CHECK(wide == std::vector<int>{1});
}

TEST_CASE("F1 is invariant under relabeling and equals 1 on itself") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 5 + rng() % 60;
        const std::size_t k = 2 + rng() % 5;
        const auto truth = oracle::random_labels(rng, n, k);
        const auto pred = oracle::random_labels(rng, n, k);
        CHECK(f1_score(permuted(pred, rng), truth) == doctest::Approx(f1_score(pred, truth)));
        if (cluster_sizes(truth).nonempty_clusters() == k) CHECK(f1_score(truth, truth) == doctest::Approx(1.0));
    }
}

TEST_CASE("quality report on the triangle") {
    const auto g = parse_edge_list(std::string("0 1 1\n1 2 1\n0 2 -1\n"));
    const auto r = quality_report(g, Assignment({1, 1, 2}, 2), 1.0);
    CHECK(r.size == 3);
    CHECK(r.k_nonempty == 2);
    CHECK(r.polarity == doctest::Approx(2.0 / 3.0));
    CHECK(r.cc_plus == 1.0);
    CHECK(r.cc_minus == 0.0);
    CHECK(r.density == 1.0);
    CHECK(r.isolation == 1.0);
    CHECK(r.mac == 1.0);
    CHECK(r.mao == 0.5);
    CHECK(r.degenerate_flags.count("mac_degenerate") == 1);
}

TEST_CASE("all-neutral report is zero and flagged") {
    const auto g = parse_edge_list(std::string("0 1 1\n1 2 1\n0 2 -1\n"));
    const auto r = quality_report(g, Assignment(3, 2), 1.0);
    CHECK(r.size == 0);
    for (double v : {r.polarity, r.imbalance_factor, r.mac, r.mao, r.cc_plus, r.cc_minus, r.density, r.isolation}) {
        CHECK(v == 0.0);
    }
    for (const char* flag : {"if_degenerate", "polarity_degenerate", "mac_degenerate", "mao_degenerate",
                             "cc_plus_degenerate", "cc_minus_degenerate", "dens_degenerate", "iso_degenerate"}) {
        CHECK_MESSAGE(r.degenerate_flags.count(flag) == 1, flag);
    }
}

TEST_CASE("perfect two-block graph scores 1 everywhere") {
    std::vector<EdgeRecord> edges;
    for (Vertex i = 0; i < 8; ++i) {
        for (Vertex j = i + 1; j < 8; ++j) edges.push_back({i, j, (i < 4) == (j < 4) ? 1.0 : -1.0});
    }
    const auto g = SignedGraph::from_edges(8, edges);
    const auto r = quality_report(g, Assignment({1, 1, 1, 1, 2, 2, 2, 2}, 2), 1.0);
    for (double v : {r.mac, r.mao, r.cc_plus, r.cc_minus, r.density, r.isolation, r.imbalance_factor}) {
        CHECK(v == doctest::Approx(1.0));
    }
    CHECK(r.degenerate_flags.empty());
}

TEST_CASE("isolation counts the neutral-to-member boundary once") {
    // Members {0,1} joined by +1; neutral vertex 2 tied to both.
    const auto g = parse_edge_list(std::string("0 1 1\n0 2 -1\n1 2 1\n"));
    const auto r = quality_report(g, Assignment({1, 1, 0}, 1), 0.0, 3.0);
    CHECK(r.isolation == doctest::Approx(2.0 / 4.0));
}

TEST_CASE("fuzzed reports stay in range and ignore cluster names") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 40;
        const std::size_t k = 2 + rng() % 4;
        const auto g = oracle::random_graph(rng, n, 0.5, trial % 2 ? oracle::Weights::kReal : oracle::Weights::kUnit);
        const auto a = oracle::random_labels(rng, n, k);
        const auto truth = oracle::random_labels(rng, n, k);
        const auto r = quality_report(g, a, 1.0 / static_cast<double>(k - 1), 3.0, &truth);
        for (double v : {r.density, r.isolation, r.mac, r.mao, r.imbalance_factor, *r.f1}) {
            CHECK(v >= -1e-12);
            CHECK(v <= 1 + 1e-12);
        }
        CHECK(std::abs(r.cc_plus) <= 1 + 1e-12);
        CHECK(std::abs(r.cc_minus) <= 1 + 1e-12);
        CHECK(r.k_nonempty <= k);

        const auto p = quality_report(g, permuted(a, rng), 1.0 / static_cast<double>(k - 1), 3.0, &truth);
        CHECK(p.polarity == doctest::Approx(r.polarity));
        CHECK(p.imbalance_factor == doctest::Approx(r.imbalance_factor));
        CHECK(p.mac == doctest::Approx(r.mac));
        CHECK(p.mao == doctest::Approx(r.mao));
        CHECK(p.cc_plus == doctest::Approx(r.cc_plus));
        CHECK(p.cc_minus == doctest::Approx(r.cc_minus));
        CHECK(p.density == doctest::Approx(r.density));
        CHECK(p.isolation == doctest::Approx(r.isolation));
        CHECK(*p.f1 == doctest::Approx(*r.f1));
    }
}

TEST_CASE("report JSON uses the table column names") {
    const auto g = parse_edge_list(std::string("0 1 1\n1 2 1\n0 2 -1\n"));
    const Assignment a({1, 1, 2}, 2);
    const auto r = quality_report(g, a, 1.0, 3.0, &a);
    const auto j = nlohmann::json::parse(metrics_to_json(r));
    for (const char* key : {"SIZE", "IF", "POL", "K", "MAC", "MAO", "CC+", "CC-", "DENS", "ISO", "F1", "degenerate"}) {
        CHECK_MESSAGE(j.contains(key), key);
    }
    CHECK(j["F1"] == 1.0);
}
