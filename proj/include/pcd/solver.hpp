#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcd/assignment.hpp"
#include "pcd/objective.hpp"
#include "pcd/rng.hpp"
#include "pcd/signed_graph.hpp"

namespace pcd {

// How the per-vertex move scores are obtained. All three pick the same move
// for the same state, so a shared seed gives identical trajectories.
enum class SolverVariant {
    kNaive,           // full objective per candidate placement, O(k |E|) per step
    kGradientDirect,  // closed-form gradient from one pass over the row, O(k + deg)
    kLspcd,           // gradient from the cached table M = 2AX, O(k) + O(deg) update
};

enum class ConvergenceMode {
    // After n consecutive draws without a move, sweep 0..n-1 once; converged
    // iff the sweep moves nothing.
    kWindowThenSweep,
    // Verification sweep after every n draws regardless of recent moves.
    kSweepOnly,
};

std::string_view to_string(SolverVariant v);
std::optional<SolverVariant> parse_variant(std::string_view s);

struct MoveEvent {
    std::uint64_t step;
    Vertex vertex;
    Label from;
    Label to;
};

struct SolverConfig {
    std::size_t k = 2;
    std::optional<double> alpha;  // default_alpha(k) when unset
    double beta = 0.0;
    Seed seed = 0;
    SolverVariant variant = SolverVariant::kLspcd;
    std::uint64_t max_steps = std::numeric_limits<std::uint64_t>::max();
    ConvergenceMode convergence = ConvergenceMode::kWindowThenSweep;
    InitMode init = InitMode::kUniformWithNeutral;
    std::uint64_t track_gap_every = 0;  // 0 disables gap tracking
    std::uint64_t trace_every = 0;      // 0 means every n steps
    std::size_t max_dense_entries = std::size_t{1} << 28;  // cap on n*k for M
    std::function<void(const MoveEvent&)> on_move;

    ObjectiveParams params() const { return {alpha.value_or(default_alpha(k)), beta}; }
};

// G_{i,0..k}; entry 0 (neutral) is always 0.
struct GradientRow {
    std::vector<double> values;
};

// Relative tolerance under which two move scores count as tied.
inline constexpr double kTieTolerance = 1e-9;

// Argmax over {0..k} preferring `current`, then the smallest index, among
// entries within kTieTolerance of the maximum.
Label choose_move(const GradientRow& g, Label current);

// Closed-form gradient row for vertex i from one pass over its neighbors.
GradientRow gradient_row_direct(const SignedGraph& g, const Assignment& a, const ClusterSizes& sizes,
                                Vertex i, const ObjectiveParams& p);
GradientRow gradient_row_direct(const SignedGraph& g, const Assignment& a, Vertex i,
                                const ObjectiveParams& p);

struct MoveOutcome {
    bool moved = false;
    Label from = kNeutral;
    Label to = kNeutral;
    double gain = 0.0;  // G[to] - G[from]
};

// Mutable local-search state over a borrowed graph. The graph must outlive
// the state.
class SolverState {
public:
    // Random initial assignment drawn from cfg.seed.
    SolverState(const SignedGraph& g, const SolverConfig& cfg);
    SolverState(const SignedGraph& g, const SolverConfig& cfg, Assignment initial);

    const Assignment& assignment() const { return assignment_; }
    const ClusterSizes& sizes() const { return sizes_; }
    const SolverConfig& config() const { return cfg_; }
    const ObjectiveParams& params() const { return params_; }
    // Running objective, updated by the gain of every accepted move.
    double objective() const { return objective_; }

    // Gradient row from M. Requires variant kLspcd; throws std::logic_error
    // otherwise and std::out_of_range for a bad id.
    GradientRow gradient_row(Vertex i) const;
    // Gradient row through the configured variant.
    GradientRow move_scores(Vertex i) const;

    MoveOutcome step(Vertex i);

    // Sum over vertices of max_m G_{i,m} - G_{i,label(i)}, with per-vertex
    // terms inside the tie tolerance counted as 0.
    double duality_gap() const;

    // M[i][m-1] = 2 * sum_{j in S_m} A_ij (kLspcd only; empty otherwise).
    std::span<const double> score_table() const { return m_; }
    // Rebuilds M from scratch into a separate buffer (for consistency checks).
    std::vector<double> recompute_score_table() const;

private:
    void build_score_table();
    GradientRow naive_scores(Vertex i) const;

    const SignedGraph* graph_;
    SolverConfig cfg_;
    ObjectiveParams params_;
    Assignment assignment_;
    ClusterSizes sizes_;
    std::vector<double> m_;
    // Upper-triangle edge list used by the naive variant's full evaluations.
    std::vector<Vertex> edge_u_, edge_v_;
    std::vector<double> edge_w_;
    double objective_ = 0.0;
};

struct SolveReport {
    double final_objective = 0.0;
    double polarity = 0.0;
    bool polarity_degenerate = false;
    std::vector<std::pair<std::uint64_t, double>> objective_trace;
    // (t, smallest gap observed at or before t)
    std::vector<std::pair<std::uint64_t, double>> gap_trace;
    std::uint64_t moves_accepted = 0;
    std::uint64_t steps = 0;
    bool converged = false;
    double wall_time_ms = 0.0;
    double h0_ordered = 0.0;
};

struct SolveResult {
    Assignment assignment;
    SolveReport report;
};

// Throws std::invalid_argument for k == 0 and std::length_error when the
// dense score table would exceed cfg.max_dense_entries.
SolveResult solve(const SignedGraph& g, const SolverConfig& cfg);
SolveResult solve(const SignedGraph& g, const SolverConfig& cfg, Assignment initial);
// solve() with the variant forced to kNaive.
SolveResult solve_naive(const SignedGraph& g, SolverConfig cfg);

// Result JSON: n, k, alpha, beta, seed, variant, labels, objective,
// polarity, steps, moves, converged, time_ms, gap_trace, objective_trace,
// h0_ordered.
std::string solve_result_to_json(const SolveResult& r, const SolverConfig& cfg);

}  // namespace pcd
