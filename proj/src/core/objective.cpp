#include "pcd/objective.hpp"

#include <cmath>
#include <stdexcept>

namespace pcd {

double default_alpha(std::size_t k) { return k >= 2 ? 1.0 / static_cast<double>(k - 1) : 0.0; }

TermDecomposition decompose(const SignedGraph& g, const Assignment& a) {
    if (a.size() != g.vertex_count()) {
        throw std::invalid_argument("assignment has " + std::to_string(a.size()) + " labels, graph has " +
                                    std::to_string(g.vertex_count()) + " vertices");
    }
    TermDecomposition d;
    for (Vertex i = 0; i < g.vertex_count(); ++i) {
        const Label li = a[i];
        for (const auto& nb : g.row(i)) {
            d.c_abs += std::abs(nb.weight);
            d.c_sim += nb.weight;
            const Label lj = a[nb.id];
            if (li == kNeutral || lj == kNeutral) continue;
            const double w = nb.weight;
            if (li == lj) {
                (w > 0 ? d.n_intra_pos : d.n_intra_neg) += std::abs(w);
            } else {
                (w > 0 ? d.n_inter_pos : d.n_inter_neg) += std::abs(w);
            }
        }
    }
    const auto cs = cluster_sizes(a);
    for (auto s : cs.sizes) d.sum_sq_sizes += static_cast<double>(s) * static_cast<double>(s);
    d.non_neutral_count = cs.non_neutral_count();
    return d;
}

double pcd_objective(const TermDecomposition& d, const ObjectiveParams& p) {
    return (d.n_intra_pos - d.n_intra_neg) + p.alpha * (d.n_inter_neg - d.n_inter_pos) -
           p.beta * d.sum_sq_sizes;
}

double shifted_objective(const SignedGraph& g, const Assignment& a, const ObjectiveParams& p) {
    if (a.size() != g.vertex_count()) throw std::invalid_argument("assignment size mismatch");
    // Every ordered intra pair, including i == j, carries -beta; the stored
    // entries then add A_ij on top for the nonzero ones.
    double intra = 0.0;
    double inter = 0.0;
    const auto cs = cluster_sizes(a);
    for (auto s : cs.sizes) {
        const double sz = static_cast<double>(s);
        intra -= p.beta * sz * sz;
    }
    for (Vertex i = 0; i < g.vertex_count(); ++i) {
        if (a[i] == kNeutral) continue;
        for (const auto& nb : g.row(i)) {
            const Label lj = a[nb.id];
            if (lj == kNeutral) continue;
            (lj == a[i] ? intra : inter) += nb.weight;
        }
    }
    return intra - p.alpha * inter;
}

PolarityValue polarity(const TermDecomposition& d, double alpha) {
    if (d.non_neutral_count == 0) return {0.0, true};
    const double num = (d.n_intra_pos - d.n_intra_neg) + alpha * (d.n_inter_neg - d.n_inter_pos);
    return {num / static_cast<double>(d.non_neutral_count), false};
}

double cc_objective(const TermDecomposition& d, CcVariant variant) {
    switch (variant) {
        case CcVariant::kFull:
            return d.n_intra_pos - d.n_intra_neg + d.n_inter_neg - d.n_inter_pos;
        case CcVariant::kMaxAgree:
            return d.n_intra_pos + d.n_inter_neg;
        case CcVariant::kMinDisagreeNeg:
            return -d.n_intra_neg - d.n_inter_pos;
        case CcVariant::kMaxCorr:
            return d.n_intra_pos - d.n_intra_neg;
        case CcVariant::kMinCutNeg:
            return d.n_inter_neg - d.n_inter_pos;
    }
    throw std::invalid_argument("unknown CC variant");
}

}  // namespace pcd
