#include "pcd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "pcd/objective.hpp"

namespace pcd {

ImbalanceValue imbalance_factor(const ClusterSizes& sizes, double xi) {
    const std::size_t k = sizes.sizes.size();
    if (k < 2) throw std::invalid_argument("imbalance factor needs k >= 2");
    if (!(xi > 0.0) || !std::isfinite(xi)) throw std::invalid_argument("xi must be positive and finite");
    const auto total = static_cast<double>(sizes.non_neutral_count());
    if (total == 0.0 || sizes.nonempty_clusters() == 1) return {0.0, true};

    const double log_k = std::log2(static_cast<double>(k));
    if (xi == 1.0) {
        double entropy = 0.0;
        for (auto s : sizes.sizes) {
            if (s == 0) continue;
            const double p = static_cast<double>(s) / total;
            entropy -= p * std::log2(p);
        }
        return {entropy / log_k, false};
    }
    double power_sum = 0.0;
    for (auto s : sizes.sizes) {
        if (s == 0) continue;
        power_sum += std::pow(static_cast<double>(s) / total, xi);
    }
    return {std::log2(power_sum) / (1.0 - xi) / log_k, false};
}

std::vector<int> max_weight_matching(const std::vector<double>& scores, std::size_t rows, std::size_t cols) {
    if (scores.size() != rows * cols) throw std::invalid_argument("score matrix has wrong size");
    const std::size_t n = std::max(rows, cols);
    if (n == 0) return {};
    // Hungarian algorithm (potentials form) minimizing -score on the square
    // zero-padded matrix; 1-based internal indexing.
    auto cost = [&](std::size_t r, std::size_t c) {
        return (r < rows && c < cols) ? -scores[r * cols + c] : 0.0;
    };
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = match[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> row_to_col(rows, -1);
    for (std::size_t j = 1; j <= n; ++j) {
        const std::size_t r = match[j] - 1;
        if (r < rows && j - 1 < cols) row_to_col[r] = static_cast<int>(j - 1);
    }
    return row_to_col;
}

double f1_score(const Assignment& pred, const Assignment& truth) {
    if (pred.size() != truth.size()) throw std::invalid_argument("prediction and truth differ in length");
    const std::size_t kt = truth.k();
    const std::size_t kp = pred.k();
    if (kt == 0) return 0.0;
    std::vector<double> overlap(kt * kp, 0.0);
    std::vector<double> truth_size(kt, 0.0), pred_size(kp, 0.0);
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const Label t = truth[i];
        const Label p = pred[i];
        if (t != kNeutral) truth_size[t - 1] += 1.0;
        if (p != kNeutral) pred_size[p - 1] += 1.0;
        if (t != kNeutral && p != kNeutral) overlap[(t - 1) * kp + (p - 1)] += 1.0;
    }
    // F1 = harmonic mean of precision |P∩T|/|P| and recall |P∩T|/|T|.
    std::vector<double> f1(kt * kp, 0.0);
    for (std::size_t t = 0; t < kt; ++t) {
        for (std::size_t p = 0; p < kp; ++p) {
            const double inter = overlap[t * kp + p];
            if (inter > 0.0) f1[t * kp + p] = 2.0 * inter / (truth_size[t] + pred_size[p]);
        }
    }
    const auto match = max_weight_matching(f1, kt, kp);
    double total = 0.0;
    for (std::size_t t = 0; t < kt; ++t) {
        if (match[t] >= 0) total += f1[t * kp + static_cast<std::size_t>(match[t])];
    }
    return total / static_cast<double>(kt);
}

MetricsReport quality_report(const SignedGraph& g, const Assignment& a, double alpha, double xi,
                             const Assignment* truth) {
    if (a.size() != g.vertex_count()) {
        throw std::invalid_argument("labels cover " + std::to_string(a.size()) + " vertices, graph has " +
                                    std::to_string(g.vertex_count()));
    }
    MetricsReport r;
    const std::size_t k = a.k();
    const auto sizes = cluster_sizes(a);
    const auto d = decompose(g, a);
    r.size = sizes.non_neutral_count();
    r.k_nonempty = sizes.nonempty_clusters();
    if (truth) r.f1 = f1_score(a, *truth);

    if (k >= 2) {
        const auto imb = imbalance_factor(sizes, xi);
        r.imbalance_factor = imb.value;
        if (imb.degenerate) r.degenerate_flags.insert("if_degenerate");
    } else {
        r.degenerate_flags.insert("if_degenerate");
    }

    const auto pol = polarity(d, alpha);
    r.polarity = pol.value;
    if (pol.degenerate) r.degenerate_flags.insert("polarity_degenerate");

    if (r.size == 0) {
        for (const char* f : {"mac_degenerate", "mao_degenerate", "cc_plus_degenerate", "cc_minus_degenerate",
                              "dens_degenerate", "iso_degenerate"}) {
            r.degenerate_flags.insert(f);
        }
        return r;
    }

    // Per-cluster positive intra mass and per-cluster-pair negative mass,
    // plus the neutral-to-non-neutral boundary.
    std::vector<double> intra_pos(k, 0.0);
    std::vector<double> cross_neg(k * k, 0.0);
    double boundary = 0.0;
    for (Vertex i = 0; i < g.vertex_count(); ++i) {
        const Label li = a[i];
        for (const auto& nb : g.row(i)) {
            const Label lj = a[nb.id];
            if (li == kNeutral) {
                if (lj != kNeutral) boundary += std::abs(nb.weight);
                continue;
            }
            if (lj == kNeutral) continue;
            if (li == lj) {
                if (nb.weight > 0) intra_pos[li - 1] += nb.weight;
            } else if (nb.weight < 0) {
                cross_neg[(li - 1) * k + (lj - 1)] -= nb.weight;
            }
        }
    }

    double mac_sum = 0.0;
    for (std::size_t m = 0; m < k; ++m) {
        const auto s = static_cast<double>(sizes.sizes[m]);
        if (sizes.sizes[m] < 2) {
            mac_sum += 1.0;
            r.degenerate_flags.insert("mac_degenerate");
        } else {
            mac_sum += intra_pos[m] / (s * (s - 1.0));
        }
    }
    r.mac = mac_sum / static_cast<double>(k);

    if (k >= 2) {
        double mao_sum = 0.0;
        for (std::size_t m = 0; m < k; ++m) {
            for (std::size_t p = 0; p < k; ++p) {
                if (m == p) continue;
                if (sizes.sizes[m] == 0 || sizes.sizes[p] == 0) {
                    r.degenerate_flags.insert("mao_degenerate");
                    continue;
                }
                mao_sum += cross_neg[m * k + p] /
                           (static_cast<double>(sizes.sizes[m]) * static_cast<double>(sizes.sizes[p]));
            }
        }
        r.mao = mao_sum / static_cast<double>(k * (k - 1));
    } else {
        r.degenerate_flags.insert("mao_degenerate");
    }

    auto ratio = [&r](double num, double den, const char* flag) {
        if (den == 0.0) {
            r.degenerate_flags.insert(flag);
            return 0.0;
        }
        return num / den;
    };
    r.cc_plus = ratio(d.n_intra_pos - d.n_intra_neg, d.n_intra_pos + d.n_intra_neg, "cc_plus_degenerate");
    r.cc_minus = ratio(d.n_inter_neg - d.n_inter_pos, d.n_inter_neg + d.n_inter_pos, "cc_minus_degenerate");
    const double nnz = d.n_intra_pos + d.n_intra_neg + d.n_inter_pos + d.n_inter_neg;
    const auto big_n = static_cast<double>(r.size);
    r.density = ratio(nnz, big_n * (big_n - 1.0), "dens_degenerate");
    r.isolation = ratio(nnz, nnz + boundary, "iso_degenerate");
    return r;
}

std::string metrics_to_json(const MetricsReport& r) {
    nlohmann::ordered_json j;
    j["SIZE"] = r.size;
    j["IF"] = r.imbalance_factor;
    j["POL"] = r.polarity;
    j["K"] = r.k_nonempty;
    j["MAC"] = r.mac;
    j["MAO"] = r.mao;
    j["CC+"] = r.cc_plus;
    j["CC-"] = r.cc_minus;
    j["DENS"] = r.density;
    j["ISO"] = r.isolation;
    if (r.f1) j["F1"] = *r.f1;
    j["degenerate"] = std::vector<std::string>(r.degenerate_flags.begin(), r.degenerate_flags.end());
    return j.dump();
}

}  // namespace pcd
