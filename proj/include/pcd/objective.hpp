#pragma once

#include <cstddef>

#include "pcd/assignment.hpp"
#include "pcd/signed_graph.hpp"

namespace pcd {

// Building blocks of every objective below. The four N-terms are sums over
// ordered vertex pairs (i, j), i != j, so each undirected edge inside the
// non-neutral part counts twice. Neutral vertices contribute to nothing.
struct TermDecomposition {
    double n_intra_pos = 0.0;
    double n_intra_neg = 0.0;
    double n_inter_pos = 0.0;
    double n_inter_neg = 0.0;
    double sum_sq_sizes = 0.0;
    std::size_t non_neutral_count = 0;
    // Graph-wide ordered sums of |A_ij| and A_ij.
    double c_abs = 0.0;
    double c_sim = 0.0;
};

struct ObjectiveParams {
    double alpha = 1.0;
    double beta = 0.0;
};

// 1/(k-1) for k >= 2, 0 for k == 1.
double default_alpha(std::size_t k);

// Throws std::invalid_argument on a length mismatch.
TermDecomposition decompose(const SignedGraph& g, const Assignment& a);

// (N+intra - N-intra) + alpha (N-inter - N+inter) - beta sum |S_m|^2
double pcd_objective(const TermDecomposition& d, const ObjectiveParams& p);

// Same value computed pair by pair with intra-cluster weights shifted by
// -beta (diagonal pairs included). Independent of decompose().
double shifted_objective(const SignedGraph& g, const Assignment& a, const ObjectiveParams& p);

struct PolarityValue {
    double value = 0.0;
    bool degenerate = false;  // no non-neutral vertex; value is 0
};

PolarityValue polarity(const TermDecomposition& d, double alpha);

enum class CcVariant { kFull, kMaxAgree, kMinDisagreeNeg, kMaxCorr, kMinCutNeg };

double cc_objective(const TermDecomposition& d, CcVariant variant);

}  // namespace pcd
