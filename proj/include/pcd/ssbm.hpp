#pragma once

#include <cstddef>
#include <vector>

#include "pcd/assignment.hpp"
#include "pcd/rng.hpp"
#include "pcd/signed_graph.hpp"

namespace pcd {

// Modified signed stochastic block model with planted polarized groups and
// neutral filler vertices.
struct SsbmParams {
    std::size_t n = 0;
    std::size_t k = 2;
    std::size_t ell = 0;  // per-group size in balanced mode; mean size otherwise
    double eta = 0.0;     // noise level in [0, 1]
    double rho = 1.0;     // largest/smallest group size ratio, >= 1
    Seed seed = 0;
};

// Geometric progression s * rho^(i/(k-1)), i = 0..k-1, summing to k*ell.
// Each size is rounded to nearest, then the largest group absorbs the
// rounding residue. Throws std::invalid_argument when k == 0, rho < 1, or a
// group would be empty.
std::vector<std::size_t> group_sizes(std::size_t k, std::size_t ell, double rho);

struct SsbmInstance {
    SignedGraph graph;
    Assignment truth;  // planted groups 1..k, neutral 0
};

// Vertices are laid out group by group (group 1 first), neutrals last. For
// every pair i < j in ascending (i, j) order exactly one uniform draw u is
// taken from the kGenerate stream:
//   same group:       u < 1-eta -> +1,  u < 1-eta/2 -> -1,  else absent
//   different groups: u < 1-eta -> -1,  u < 1-eta/2 -> +1,  else absent
//   neutral involved: q = min(eta, 1/2); u < q -> +1,  u < 2q -> -1,  else absent
// Throws std::invalid_argument on invalid parameters.
SsbmInstance generate_ssbm(const SsbmParams& p);

}  // namespace pcd
