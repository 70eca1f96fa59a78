#include "pcd/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace pcd {

std::string_view to_string(SolverVariant v) {
    switch (v) {
        case SolverVariant::kNaive: return "naive";
        case SolverVariant::kGradientDirect: return "gradient_direct";
        case SolverVariant::kLspcd: return "lspcd";
    }
    return "unknown";
}

std::optional<SolverVariant> parse_variant(std::string_view s) {
    if (s == "naive") return SolverVariant::kNaive;
    if (s == "gradient_direct") return SolverVariant::kGradientDirect;
    if (s == "lspcd") return SolverVariant::kLspcd;
    return std::nullopt;
}

namespace {

bool within_tie(double value, double best) {
    const double scale = std::max({1.0, std::abs(value), std::abs(best)});
    return value >= best - kTieTolerance * scale;
}

// Gradient in terms of the per-cluster row sums M_{i,m}.
void fill_gradient(std::span<const double> m_row, const ClusterSizes& sizes, Label current,
                   const ObjectiveParams& p, std::vector<double>& out) {
    const std::size_t k = m_row.size();
    double m_total = 0.0;
    for (double v : m_row) m_total += v;
    out.assign(k + 1, 0.0);
    for (std::size_t m = 1; m <= k; ++m) {
        const double member = current == m ? 1.0 : 0.0;
        out[m] = (1.0 + p.alpha) * m_row[m - 1] - p.alpha * m_total -
                 2.0 * p.beta * static_cast<double>(sizes.sizes[m - 1]) + 2.0 * p.beta * member - p.beta;
    }
}

}  // namespace

Label choose_move(const GradientRow& g, Label current) {
    const auto& v = g.values;
    const double best = *std::max_element(v.begin(), v.end());
    if (within_tie(v[current], best)) return current;
    for (std::size_t m = 0; m < v.size(); ++m) {
        if (within_tie(v[m], best)) return static_cast<Label>(m);
    }
    return current;
}

GradientRow gradient_row_direct(const SignedGraph& g, const Assignment& a, const ClusterSizes& sizes,
                                Vertex i, const ObjectiveParams& p) {
    std::vector<double> m_row(a.k(), 0.0);
    for (const auto& nb : g.neighbors(i)) {
        const Label l = a[nb.id];
        if (l != kNeutral) m_row[l - 1] += 2.0 * nb.weight;
    }
    GradientRow row;
    fill_gradient(m_row, sizes, a[i], p, row.values);
    return row;
}

GradientRow gradient_row_direct(const SignedGraph& g, const Assignment& a, Vertex i,
                                const ObjectiveParams& p) {
    if (a.size() != g.vertex_count()) throw std::invalid_argument("assignment size mismatch");
    return gradient_row_direct(g, a, cluster_sizes(a), i, p);
}

SolverState::SolverState(const SignedGraph& g, const SolverConfig& cfg)
    : SolverState(g, cfg, random_assignment(g.vertex_count(), cfg.k == 0 ? 1 : cfg.k, cfg.seed, cfg.init)) {}

SolverState::SolverState(const SignedGraph& g, const SolverConfig& cfg, Assignment initial)
    : graph_(&g), cfg_(cfg), params_(cfg.params()), assignment_(std::move(initial)) {
    if (cfg_.k == 0) throw std::invalid_argument("k must be at least 1");
    if (assignment_.size() != g.vertex_count()) throw std::invalid_argument("assignment size mismatch");
    if (assignment_.k() != cfg_.k) throw std::invalid_argument("assignment k differs from solver k");
    if (!std::isfinite(params_.alpha) || !std::isfinite(params_.beta)) {
        throw std::invalid_argument("alpha and beta must be finite");
    }
    sizes_ = cluster_sizes(assignment_);
    objective_ = pcd_objective(decompose(g, assignment_), params_);
    if (cfg_.variant == SolverVariant::kLspcd) build_score_table();
    if (cfg_.variant == SolverVariant::kNaive) {
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
            for (const auto& nb : g.row(u)) {
                if (nb.id <= u) continue;
                edge_u_.push_back(u);
                edge_v_.push_back(nb.id);
                edge_w_.push_back(nb.weight);
            }
        }
    }
}

void SolverState::build_score_table() {
    const std::size_t n = graph_->vertex_count();
    const std::size_t k = cfg_.k;
    if (n != 0 && k > cfg_.max_dense_entries / n) {
        throw std::length_error("score table of " + std::to_string(n) + " x " + std::to_string(k) +
                                " entries exceeds the configured cap of " +
                                std::to_string(cfg_.max_dense_entries));
    }
    m_ = recompute_score_table();
}

std::vector<double> SolverState::recompute_score_table() const {
    const std::size_t n = graph_->vertex_count();
    const std::size_t k = cfg_.k;
    std::vector<double> m(n * k, 0.0);
    for (Vertex i = 0; i < n; ++i) {
        double* row = m.data() + static_cast<std::size_t>(i) * k;
        for (const auto& nb : graph_->row(i)) {
            const Label l = assignment_[nb.id];
            if (l != kNeutral) row[l - 1] += 2.0 * nb.weight;
        }
    }
    return m;
}

GradientRow SolverState::gradient_row(Vertex i) const {
    if (cfg_.variant != SolverVariant::kLspcd) throw std::logic_error("score table is only kept by lspcd");
    if (i >= graph_->vertex_count()) throw std::out_of_range("vertex out of range");
    const std::size_t k = cfg_.k;
    GradientRow row;
    fill_gradient({m_.data() + static_cast<std::size_t>(i) * k, k}, sizes_, assignment_[i], params_, row.values);
    return row;
}

GradientRow SolverState::naive_scores(Vertex i) const {
    // Score of placement m is f(i -> m) - f(i -> neutral), each side a full
    // evaluation of the objective over every edge and every cluster size.
    // Intra and inter sums are kept apart and differenced separately so that
    // integer-weight instances stay exact.
    const std::size_t k = cfg_.k;
    const std::size_t n = graph_->vertex_count();
    const std::size_t width = k + 1;
    // kind[a * width + b]: 0 = a neutral endpoint, 1 = same cluster, 2 = different clusters.
    std::vector<std::uint8_t> kind(width * width, 0);
    for (std::size_t a = 1; a <= k; ++a) {
        for (std::size_t b = 1; b <= k; ++b) kind[a * width + b] = a == b ? 1 : 2;
    }
    std::vector<Label> trial(assignment_.labels().begin(), assignment_.labels().end());
    std::vector<double> intra(width), inter(width), sum_sq(width);
    std::vector<std::size_t> counts(width);
    for (std::size_t m = 0; m <= k; ++m) {
        trial[i] = static_cast<Label>(m);
        double acc[3] = {0.0, 0.0, 0.0};
        for (std::size_t e = 0; e < edge_w_.size(); ++e) {
            acc[kind[trial[edge_u_[e]] * width + trial[edge_v_[e]]]] += edge_w_[e];
        }
        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t v = 0; v < n; ++v) ++counts[trial[v]];
        double sq = 0.0;
        for (std::size_t c = 1; c <= k; ++c) sq += static_cast<double>(counts[c]) * static_cast<double>(counts[c]);
        // Each undirected edge stands for two ordered pairs.
        intra[m] = 2.0 * acc[1];
        inter[m] = 2.0 * acc[2];
        sum_sq[m] = sq;
    }
    GradientRow row;
    row.values.assign(width, 0.0);
    for (std::size_t m = 1; m <= k; ++m) {
        row.values[m] = (intra[m] - intra[0]) - params_.alpha * (inter[m] - inter[0]) -
                        params_.beta * (sum_sq[m] - sum_sq[0]);
    }
    return row;
}

GradientRow SolverState::move_scores(Vertex i) const {
    if (i >= graph_->vertex_count()) throw std::out_of_range("vertex out of range");
    switch (cfg_.variant) {
        case SolverVariant::kLspcd: return gradient_row(i);
        case SolverVariant::kGradientDirect:
            return gradient_row_direct(*graph_, assignment_, sizes_, i, params_);
        case SolverVariant::kNaive: return naive_scores(i);
    }
    throw std::logic_error("unknown solver variant");
}

MoveOutcome SolverState::step(Vertex i) {
    const GradientRow g = move_scores(i);
    const Label from = assignment_[i];
    const Label to = choose_move(g, from);
    if (to == from) return {false, from, from, 0.0};

    assignment_.set(i, to);
    if (from != kNeutral) --sizes_.sizes[from - 1];
    else --sizes_.neutral_count;
    if (to != kNeutral) ++sizes_.sizes[to - 1];
    else ++sizes_.neutral_count;

    if (cfg_.variant == SolverVariant::kLspcd) {
        const std::size_t k = cfg_.k;
        for (const auto& nb : graph_->row(i)) {
            double* row = m_.data() + static_cast<std::size_t>(nb.id) * k;
            if (from != kNeutral) row[from - 1] -= 2.0 * nb.weight;
            if (to != kNeutral) row[to - 1] += 2.0 * nb.weight;
        }
    }
    const double gain = g.values[to] - g.values[from];
    objective_ += gain;
    return {true, from, to, gain};
}

double SolverState::duality_gap() const {
    double gap = 0.0;
    for (Vertex i = 0; i < graph_->vertex_count(); ++i) {
        const GradientRow g = cfg_.variant == SolverVariant::kLspcd
                                  ? gradient_row(i)
                                  : gradient_row_direct(*graph_, assignment_, sizes_, i, params_);
        const double best = *std::max_element(g.values.begin(), g.values.end());
        const double here = g.values[assignment_[i]];
        if (!within_tie(here, best)) gap += best - here;
    }
    return gap;
}

namespace {

class Run {
public:
    Run(const SignedGraph& g, SolverState& state, SolveReport& report)
        : g_(g), state_(state), report_(report), cfg_(state.config()) {
        const std::uint64_t n = g.vertex_count();
        trace_every_ = cfg_.trace_every ? cfg_.trace_every : std::max<std::uint64_t>(n, 1);
    }

    void execute() {
        const std::uint64_t n = g_.vertex_count();
        record(true);
        if (n == 0) {
            report_.converged = true;
            return;
        }
        Rng select(cfg_.seed, Stream::kSelect);
        std::uint64_t quiet = 0;       // consecutive draws without a move
        std::uint64_t since_sweep = 0;  // draws since the last verification sweep
        while (report_.steps < cfg_.max_steps) {
            const bool sweep_due = cfg_.convergence == ConvergenceMode::kWindowThenSweep ? quiet >= n
                                                                                          : since_sweep >= n;
            if (sweep_due) {
                bool moved = false;
                Vertex v = 0;
                for (; v < n && report_.steps < cfg_.max_steps; ++v) moved |= advance(v);
                if (v == n && !moved) {
                    report_.converged = true;
                    break;
                }
                quiet = 0;
                since_sweep = 0;
                continue;
            }
            const auto i = static_cast<Vertex>(select.below(n));
            quiet = advance(i) ? 0 : quiet + 1;
            ++since_sweep;
        }
        if (report_.objective_trace.empty() || report_.objective_trace.back().first != report_.steps) {
            record(true);
        } else if (cfg_.track_gap_every &&
                   (report_.gap_trace.empty() || report_.gap_trace.back().first != report_.steps)) {
            record_gap();
        }
    }

private:
    bool advance(Vertex i) {
        const MoveOutcome out = state_.step(i);
        const std::uint64_t t = report_.steps++;
        if (out.moved) {
            ++report_.moves_accepted;
            if (cfg_.on_move) cfg_.on_move({t, i, out.from, out.to});
        }
        record(false);
        return out.moved;
    }

    void record(bool force) {
        const std::uint64_t t = report_.steps;
        if (force || t % trace_every_ == 0) {
            report_.objective_trace.emplace_back(t, pcd_objective(decompose(g_, state_.assignment()), state_.params()));
        }
        if (cfg_.track_gap_every && (force || t % cfg_.track_gap_every == 0)) record_gap();
    }

    void record_gap() {
        const double gap = state_.duality_gap();
        best_gap_ = report_.gap_trace.empty() ? gap : std::min(best_gap_, gap);
        report_.gap_trace.emplace_back(report_.steps, best_gap_);
    }

    const SignedGraph& g_;
    SolverState& state_;
    SolveReport& report_;
    const SolverConfig& cfg_;
    std::uint64_t trace_every_ = 1;
    double best_gap_ = 0.0;
};

}  // namespace

SolveResult solve(const SignedGraph& g, const SolverConfig& cfg, Assignment initial) {
    const auto start = std::chrono::steady_clock::now();
    SolverState state(g, cfg, std::move(initial));
    SolveReport report;
    report.h0_ordered = g.h0_ordered();
    Run(g, state, report).execute();

    const auto d = decompose(g, state.assignment());
    report.final_objective = pcd_objective(d, state.params());
    const auto pol = polarity(d, state.params().alpha);
    report.polarity = pol.value;
    report.polarity_degenerate = pol.degenerate;
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return {state.assignment(), std::move(report)};
}

SolveResult solve(const SignedGraph& g, const SolverConfig& cfg) {
    if (cfg.k == 0) throw std::invalid_argument("k must be at least 1");
    const auto start = std::chrono::steady_clock::now();
    auto result = solve(g, cfg, random_assignment(g.vertex_count(), cfg.k, cfg.seed, cfg.init));
    result.report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

SolveResult solve_naive(const SignedGraph& g, SolverConfig cfg) {
    cfg.variant = SolverVariant::kNaive;
    return solve(g, cfg);
}

std::string solve_result_to_json(const SolveResult& r, const SolverConfig& cfg) {
    const auto p = cfg.params();
    nlohmann::json j;
    j["n"] = r.assignment.size();
    j["k"] = cfg.k;
    j["alpha"] = p.alpha;
    j["beta"] = p.beta;
    j["seed"] = cfg.seed;
    j["variant"] = std::string(to_string(cfg.variant));
    j["labels"] = std::vector<Label>(r.assignment.labels().begin(), r.assignment.labels().end());
    j["objective"] = r.report.final_objective;
    j["polarity"] = r.report.polarity;
    j["steps"] = r.report.steps;
    j["moves"] = r.report.moves_accepted;
    j["converged"] = r.report.converged;
    j["time_ms"] = r.report.wall_time_ms;
    j["h0_ordered"] = r.report.h0_ordered;
    auto pairs = [](const auto& trace) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [t, v] : trace) arr.push_back({t, v});
        return arr;
    };
    j["gap_trace"] = pairs(r.report.gap_trace);
    j["objective_trace"] = pairs(r.report.objective_trace);
    return j.dump();
}

}  // namespace pcd
