#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pcd/assignment.hpp"
#include "pcd/signed_graph.hpp"

namespace pcd {

inline constexpr double kDefaultXi = 3.0;

struct ImbalanceValue {
    double value = 0.0;
    bool degenerate = false;  // no non-neutral vertex, or a single non-empty cluster
};

// Renyi-style balance of the non-neutral cluster proportions, normalized by
// log2(k): 1 is perfectly balanced, 0 puts everything in one cluster.
// xi == 1 evaluates the Shannon-entropy limit. Throws std::invalid_argument
// when k < 2 or xi <= 0.
ImbalanceValue imbalance_factor(const ClusterSizes& sizes, double xi = kDefaultXi);

// Maximum-weight one-to-one matching on a rows x cols score matrix (row
// major). Returns, per row, the matched column or -1. Ties resolve to the
// lexicographically smallest assignment the algorithm reaches.
std::vector<int> max_weight_matching(const std::vector<double>& scores, std::size_t rows, std::size_t cols);

// Mean over the truth clusters of the F1 of each truth cluster against the
// predicted cluster it is matched to under the F1-maximizing one-to-one
// matching. Unmatched or empty-matched truth clusters score 0. Neutral
// vertices belong to no cluster. Throws std::invalid_argument on a length
// mismatch.
double f1_score(const Assignment& pred, const Assignment& truth);

struct MetricsReport {
    std::size_t size = 0;        // SIZE: non-neutral vertex count
    std::size_t k_nonempty = 0;  // K
    double polarity = 0.0;       // POL
    double imbalance_factor = 0.0;  // IF
    double mac = 0.0;
    double mao = 0.0;
    double cc_plus = 0.0;
    double cc_minus = 0.0;
    double density = 0.0;
    double isolation = 0.0;
    std::optional<double> f1;
    std::set<std::string> degenerate_flags;
};

MetricsReport quality_report(const SignedGraph& g, const Assignment& a, double alpha, double xi = kDefaultXi,
                             const Assignment* truth = nullptr);

// Keys: SIZE, IF, POL, K, MAC, MAO, CC+, CC-, DENS, ISO, F1 (when present),
// degenerate (sorted flag list).
std::string metrics_to_json(const MetricsReport& r);

}  // namespace pcd
