#include "pcd/ssbm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pcd {

std::vector<std::size_t> group_sizes(std::size_t k, std::size_t ell, double rho) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    if (!(rho >= 1.0) || !std::isfinite(rho)) throw std::invalid_argument("rho must be finite and >= 1");
    if (k == 1 || rho == 1.0) {
        if (ell == 0) throw std::invalid_argument("group size rounds to 0");
        return std::vector<std::size_t>(k, ell);
    }
    const double total = static_cast<double>(k * ell);
    std::vector<double> ratios(k);
    for (std::size_t i = 0; i < k; ++i) {
        ratios[i] = std::pow(rho, static_cast<double>(i) / static_cast<double>(k - 1));
    }
    const double s = total / std::accumulate(ratios.begin(), ratios.end(), 0.0);
    std::vector<std::size_t> sizes(k);
    for (std::size_t i = 0; i < k; ++i) {
        const double r = std::round(s * ratios[i]);
        if (r < 1.0) throw std::invalid_argument("group size rounds to 0");
        sizes[i] = static_cast<std::size_t>(r);
    }
    const auto assigned = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
    auto& largest = sizes.back();
    const auto adjusted = static_cast<long long>(largest) + static_cast<long long>(k * ell) -
                          static_cast<long long>(assigned);
    if (adjusted < 1) throw std::invalid_argument("group size rounds to 0");
    largest = static_cast<std::size_t>(adjusted);
    return sizes;
}

SsbmInstance generate_ssbm(const SsbmParams& p) {
    if (!(p.eta >= 0.0 && p.eta <= 1.0)) throw std::invalid_argument("eta must lie in [0, 1]");
    if (p.k == 0) throw std::invalid_argument("k must be at least 1");
    const auto sizes = group_sizes(p.k, p.ell, p.rho);
    const auto planted = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
    if (planted > p.n) {
        throw std::invalid_argument("planted groups need " + std::to_string(planted) + " vertices but n=" +
                                    std::to_string(p.n));
    }

    std::vector<Label> labels(p.n, kNeutral);
    std::size_t v = 0;
    for (std::size_t g = 0; g < sizes.size(); ++g) {
        for (std::size_t c = 0; c < sizes[g]; ++c) labels[v++] = static_cast<Label>(g + 1);
    }

    const double keep = 1.0 - p.eta;
    const double flip = 1.0 - p.eta / 2.0;
    const double q = std::min(p.eta, 0.5);
    Rng rng(p.seed, Stream::kGenerate);
    std::vector<EdgeRecord> edges;
    for (std::size_t i = 0; i < p.n; ++i) {
        for (std::size_t j = i + 1; j < p.n; ++j) {
            const double u = rng.uniform();
            double w = 0.0;
            if (labels[i] == kNeutral || labels[j] == kNeutral) {
                w = u < q ? 1.0 : (u < 2.0 * q ? -1.0 : 0.0);
            } else if (labels[i] == labels[j]) {
                w = u < keep ? 1.0 : (u < flip ? -1.0 : 0.0);
            } else {
                w = u < keep ? -1.0 : (u < flip ? 1.0 : 0.0);
            }
            if (w != 0.0) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), w});
        }
    }
    return {SignedGraph::from_edges(p.n, edges), Assignment(std::move(labels), p.k)};
}

}  // namespace pcd
