#include "pcd/pcd.h"

#include <fstream>
#include <new>
#include <stdexcept>
#include <string>

#include "pcd/assignment.hpp"
#include "pcd/metrics.hpp"
#include "pcd/objective.hpp"
#include "pcd/signed_graph.hpp"
#include "pcd/solver.hpp"
#include "pcd/ssbm.hpp"

struct pcd_graph {
    pcd::SignedGraph graph;
};

struct pcd_labels {
    pcd::Assignment assignment;
};

struct pcd_result {
    pcd_labels labels;
    pcd::SolveReport report;
    double alpha;
    std::string json;
};

struct pcd_metrics {
    pcd::MetricsReport report;
    std::string json;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_line = 0;

// Invalid input files surface as parse errors; missing files as I/O errors.
class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename F>
pcd_status guard(F&& f) {
    g_last_error.clear();
    g_last_line = 0;
    try {
        f();
        return PCD_OK;
    } catch (const pcd::ParseError& e) {
        g_last_error = e.what();
        g_last_line = e.line();
        return PCD_ERR_PARSE;
    } catch (const IoError& e) {
        g_last_error = e.what();
        return PCD_ERR_IO;
    } catch (const std::out_of_range& e) {
        g_last_error = e.what();
        return PCD_ERR_OUT_OF_RANGE;
    } catch (const std::length_error& e) {
        g_last_error = e.what();
        return PCD_ERR_RESOURCE;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return PCD_ERR_RESOURCE;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return PCD_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PCD_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return PCD_ERR_INTERNAL;
    }
}

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

pcd::ParseOptions to_options(const pcd_parse_options* o) {
    pcd::ParseOptions opts;
    if (!o) return opts;
    opts.index_base = o->index_base;
    opts.duplicate_policy = o->duplicate_policy == PCD_DUPLICATE_SUM ? pcd::DuplicatePolicy::kSum
                                                                     : pcd::DuplicatePolicy::kError;
    opts.asymmetry_policy = o->asymmetry_policy == PCD_ASYMMETRY_SUM_THEN_HALVE
                                ? pcd::AsymmetryPolicy::kSumThenHalve
                                : pcd::AsymmetryPolicy::kError;
    opts.comment_prefix = o->comment_prefix;
    if (o->n_override) opts.n_override = o->n_override;
    return opts;
}

pcd::SolverConfig to_config(const pcd_solver_config& c) {
    pcd::SolverConfig cfg;
    cfg.k = c.k;
    if (!c.alpha_auto) cfg.alpha = c.alpha;
    cfg.beta = c.beta;
    cfg.seed = c.seed;
    switch (c.variant) {
        case PCD_VARIANT_NAIVE: cfg.variant = pcd::SolverVariant::kNaive; break;
        case PCD_VARIANT_GRADIENT_DIRECT: cfg.variant = pcd::SolverVariant::kGradientDirect; break;
        case PCD_VARIANT_LSPCD: cfg.variant = pcd::SolverVariant::kLspcd; break;
        default: throw std::invalid_argument("unknown solver variant");
    }
    cfg.max_steps = c.max_steps;
    cfg.convergence = c.convergence == PCD_CONVERGENCE_SWEEP_ONLY ? pcd::ConvergenceMode::kSweepOnly
                                                                  : pcd::ConvergenceMode::kWindowThenSweep;
    cfg.init = c.init == PCD_INIT_NON_NEUTRAL_ONLY ? pcd::InitMode::kNonNeutralOnly
                                                   : pcd::InitMode::kUniformWithNeutral;
    cfg.track_gap_every = c.track_gap_every;
    cfg.trace_every = c.trace_every;
    cfg.max_dense_entries = c.max_dense_entries;
    return cfg;
}

void write_text(const char* path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(std::string("cannot open ") + path + " for writing");
    out << text;
    if (!out) throw IoError(std::string("write failed: ") + path);
}

pcd_status parse_graph(const char* path, const char* text, const pcd_parse_options* opts, pcd_graph** out,
                       size_t* error_line) {
    const pcd_status st = guard([&] {
        require(out != nullptr, "out must not be null");
        *out = nullptr;
        pcd::SignedGraph g;
        if (path) {
            std::ifstream in(path);
            if (!in) throw IoError(std::string("cannot open ") + path);
            g = pcd::parse_edge_list(in, to_options(opts));
        } else {
            require(text != nullptr, "text must not be null");
            g = pcd::parse_edge_list(std::string(text), to_options(opts));
        }
        *out = new pcd_graph{std::move(g)};
    });
    if (error_line) *error_line = g_last_line;
    return st;
}

}  // namespace

extern "C" {

const char* pcd_version(void) { return "1.0.0"; }

const char* pcd_status_string(pcd_status status) {
    switch (status) {
        case PCD_OK: return "ok";
        case PCD_ERR_INVALID_ARGUMENT: return "invalid argument";
        case PCD_ERR_PARSE: return "parse error";
        case PCD_ERR_IO: return "I/O error";
        case PCD_ERR_OUT_OF_RANGE: return "out of range";
        case PCD_ERR_RESOURCE: return "resource limit";
        case PCD_ERR_MISMATCH: return "mismatch";
        case PCD_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* pcd_last_error(void) { return g_last_error.c_str(); }

void pcd_parse_options_init(pcd_parse_options* opts) {
    if (!opts) return;
    opts->index_base = 0;
    opts->duplicate_policy = PCD_DUPLICATE_ERROR;
    opts->asymmetry_policy = PCD_ASYMMETRY_ERROR;
    opts->comment_prefix = '#';
    opts->n_override = 0;
}

pcd_status pcd_graph_parse_file(const char* path, const pcd_parse_options* opts, pcd_graph** out,
                                size_t* error_line) {
    if (!path) {
        g_last_error = "path must not be null";
        return PCD_ERR_INVALID_ARGUMENT;
    }
    return parse_graph(path, nullptr, opts, out, error_line);
}

pcd_status pcd_graph_parse_string(const char* text, const pcd_parse_options* opts, pcd_graph** out,
                                  size_t* error_line) {
    return parse_graph(nullptr, text, opts, out, error_line);
}

pcd_status pcd_graph_from_edges(size_t n, size_t edge_count, const uint32_t* u, const uint32_t* v,
                                const double* w, pcd_graph** out) {
    return guard([&] {
        require(out != nullptr, "out must not be null");
        require(edge_count == 0 || (u && v && w), "edge arrays must not be null");
        std::vector<pcd::EdgeRecord> edges(edge_count);
        for (size_t e = 0; e < edge_count; ++e) edges[e] = {u[e], v[e], w[e]};
        *out = new pcd_graph{pcd::SignedGraph::from_edges(n, edges)};
    });
}

pcd_status pcd_graph_write_file(const pcd_graph* g, const char* path) {
    return guard([&] {
        require(g && path, "graph and path must not be null");
        write_text(path, pcd::to_edge_list(g->graph));
    });
}

void pcd_graph_free(pcd_graph* g) { delete g; }

size_t pcd_graph_vertex_count(const pcd_graph* g) { return g ? g->graph.vertex_count() : 0; }
size_t pcd_graph_edge_count(const pcd_graph* g) { return g ? g->graph.edge_count() : 0; }
double pcd_graph_h0_undirected(const pcd_graph* g) { return g ? g->graph.h0_undirected() : 0.0; }
double pcd_graph_h0_ordered(const pcd_graph* g) { return g ? g->graph.h0_ordered() : 0.0; }

pcd_status pcd_graph_row_abs_sum(const pcd_graph* g, size_t vertex, double* out) {
    return guard([&] {
        require(g && out, "graph and out must not be null");
        if (vertex >= g->graph.vertex_count()) throw std::out_of_range("vertex out of range");
        *out = g->graph.row_abs_sum(static_cast<pcd::Vertex>(vertex));
    });
}

pcd_status pcd_graph_neighbors(const pcd_graph* g, size_t vertex, uint32_t* ids, double* weights,
                               size_t capacity, size_t* count) {
    return guard([&] {
        require(g && count, "graph and count must not be null");
        if (vertex >= g->graph.vertex_count()) throw std::out_of_range("vertex out of range");
        const auto row = g->graph.neighbors(static_cast<pcd::Vertex>(vertex));
        *count = row.size();
        for (size_t i = 0; i < row.size() && i < capacity; ++i) {
            if (ids) ids[i] = row[i].id;
            if (weights) weights[i] = row[i].weight;
        }
    });
}

pcd_status pcd_labels_create(const uint32_t* labels, size_t n, size_t k, pcd_labels** out) {
    return guard([&] {
        require(out != nullptr, "out must not be null");
        require(n == 0 || labels != nullptr, "labels must not be null");
        *out = new pcd_labels{pcd::Assignment(std::vector<pcd::Label>(labels, labels + n), k)};
    });
}

pcd_status pcd_labels_read_file(const char* path, size_t k_hint, pcd_labels** out) {
    return guard([&] {
        require(path && out, "path and out must not be null");
        std::ifstream probe(path);
        if (!probe) throw IoError(std::string("cannot open ") + path);
        *out = new pcd_labels{pcd::read_assignment(path, k_hint)};
    });
}

pcd_status pcd_labels_random(size_t n, size_t k, uint64_t seed, int non_neutral_only, pcd_labels** out) {
    return guard([&] {
        require(out != nullptr, "out must not be null");
        *out = new pcd_labels{pcd::random_assignment(
            n, k, seed, non_neutral_only ? pcd::InitMode::kNonNeutralOnly : pcd::InitMode::kUniformWithNeutral)};
    });
}

pcd_status pcd_labels_write_csv(const pcd_labels* l, const char* path) {
    return guard([&] {
        require(l && path, "labels and path must not be null");
        write_text(path, pcd::assignment_to_csv(l->assignment));
    });
}

pcd_status pcd_labels_write_json(const pcd_labels* l, const char* path) {
    return guard([&] {
        require(l && path, "labels and path must not be null");
        write_text(path, pcd::assignment_to_json(l->assignment) + "\n");
    });
}

void pcd_labels_free(pcd_labels* l) { delete l; }
size_t pcd_labels_size(const pcd_labels* l) { return l ? l->assignment.size() : 0; }
size_t pcd_labels_k(const pcd_labels* l) { return l ? l->assignment.k() : 0; }
const uint32_t* pcd_labels_data(const pcd_labels* l) { return l ? l->assignment.labels().data() : nullptr; }

pcd_status pcd_ssbm_group_sizes(size_t k, size_t ell, double rho, size_t* sizes_out) {
    return guard([&] {
        require(sizes_out != nullptr, "sizes_out must not be null");
        const auto sizes = pcd::group_sizes(k, ell, rho);
        for (size_t i = 0; i < sizes.size(); ++i) sizes_out[i] = sizes[i];
    });
}

pcd_status pcd_ssbm_generate(const pcd_ssbm_params* params, pcd_graph** graph, pcd_labels** truth) {
    return guard([&] {
        require(params && graph, "params and graph must not be null");
        *graph = nullptr;
        if (truth) *truth = nullptr;
        pcd::SsbmParams p{params->n, params->k, params->ell, params->eta, params->rho, params->seed};
        auto inst = pcd::generate_ssbm(p);
        auto* g = new pcd_graph{std::move(inst.graph)};
        if (truth) {
            try {
                *truth = new pcd_labels{std::move(inst.truth)};
            } catch (...) {
                delete g;
                throw;
            }
        }
        *graph = g;
    });
}

void pcd_solver_config_init(pcd_solver_config* cfg) {
    if (!cfg) return;
    const pcd::SolverConfig defaults;
    cfg->k = defaults.k;
    cfg->alpha_auto = 1;
    cfg->alpha = 0.0;
    cfg->beta = defaults.beta;
    cfg->seed = defaults.seed;
    cfg->variant = PCD_VARIANT_LSPCD;
    cfg->max_steps = defaults.max_steps;
    cfg->convergence = PCD_CONVERGENCE_WINDOW_THEN_SWEEP;
    cfg->init = PCD_INIT_UNIFORM_WITH_NEUTRAL;
    cfg->track_gap_every = 0;
    cfg->trace_every = 0;
    cfg->max_dense_entries = defaults.max_dense_entries;
}

pcd_status pcd_variant_parse(const char* name, pcd_variant* out) {
    return guard([&] {
        require(name && out, "name and out must not be null");
        const auto v = pcd::parse_variant(name);
        if (!v) throw std::invalid_argument(std::string("unknown variant '") + name + "'");
        *out = *v == pcd::SolverVariant::kNaive            ? PCD_VARIANT_NAIVE
               : *v == pcd::SolverVariant::kGradientDirect ? PCD_VARIANT_GRADIENT_DIRECT
                                                           : PCD_VARIANT_LSPCD;
    });
}

const char* pcd_variant_name(pcd_variant v) {
    switch (v) {
        case PCD_VARIANT_NAIVE: return "naive";
        case PCD_VARIANT_GRADIENT_DIRECT: return "gradient_direct";
        case PCD_VARIANT_LSPCD: return "lspcd";
    }
    return "unknown";
}

pcd_status pcd_solve(const pcd_graph* g, const pcd_solver_config* cfg, const pcd_labels* initial,
                     pcd_result** out) {
    return guard([&] {
        require(g && cfg && out, "graph, config and out must not be null");
        *out = nullptr;
        const auto config = to_config(*cfg);
        auto res = initial ? pcd::solve(g->graph, config, initial->assignment) : pcd::solve(g->graph, config);
        std::string json = pcd::solve_result_to_json(res, config);
        *out = new pcd_result{pcd_labels{std::move(res.assignment)}, std::move(res.report), config.params().alpha,
                              std::move(json)};
    });
}

void pcd_result_free(pcd_result* r) { delete r; }
double pcd_result_objective(const pcd_result* r) { return r ? r->report.final_objective : 0.0; }
double pcd_result_polarity(const pcd_result* r) { return r ? r->report.polarity : 0.0; }
double pcd_result_alpha(const pcd_result* r) { return r ? r->alpha : 0.0; }
int pcd_result_converged(const pcd_result* r) { return r && r->report.converged ? 1 : 0; }
uint64_t pcd_result_steps(const pcd_result* r) { return r ? r->report.steps : 0; }
uint64_t pcd_result_moves(const pcd_result* r) { return r ? r->report.moves_accepted : 0; }
double pcd_result_time_ms(const pcd_result* r) { return r ? r->report.wall_time_ms : 0.0; }
const pcd_labels* pcd_result_labels(const pcd_result* r) { return r ? &r->labels : nullptr; }
const char* pcd_result_json(const pcd_result* r) { return r ? r->json.c_str() : ""; }

pcd_status pcd_objective(const pcd_graph* g, const pcd_labels* l, double alpha, double beta, double* out) {
    return guard([&] {
        require(g && l && out, "arguments must not be null");
        *out = pcd::pcd_objective(pcd::decompose(g->graph, l->assignment), {alpha, beta});
    });
}

pcd_status pcd_polarity(const pcd_graph* g, const pcd_labels* l, double alpha, double* out) {
    return guard([&] {
        require(g && l && out, "arguments must not be null");
        *out = pcd::polarity(pcd::decompose(g->graph, l->assignment), alpha).value;
    });
}

pcd_status pcd_f1_score(const pcd_labels* pred, const pcd_labels* truth, double* out) {
    const pcd_status st = guard([&] {
        require(pred && truth && out, "arguments must not be null");
        *out = pcd::f1_score(pred->assignment, truth->assignment);
    });
    return st == PCD_ERR_INVALID_ARGUMENT && pred && truth && pred->assignment.size() != truth->assignment.size()
               ? PCD_ERR_MISMATCH
               : st;
}

pcd_status pcd_imbalance_factor(const size_t* sizes, size_t k, double xi, double* out) {
    return guard([&] {
        require(out != nullptr && (k == 0 || sizes != nullptr), "arguments must not be null");
        pcd::ClusterSizes cs;
        cs.sizes.assign(sizes, sizes + k);
        *out = pcd::imbalance_factor(cs, xi).value;
    });
}

pcd_status pcd_evaluate(const pcd_graph* g, const pcd_labels* l, double alpha, double xi, const pcd_labels* truth,
                        pcd_metrics** out) {
    if (g && l && g->graph.vertex_count() != l->assignment.size()) {
        g_last_error = "labels cover " + std::to_string(l->assignment.size()) + " vertices, graph has " +
                       std::to_string(g->graph.vertex_count());
        return PCD_ERR_MISMATCH;
    }
    if (truth && l && truth->assignment.size() != l->assignment.size()) {
        g_last_error = "truth and labels differ in length";
        return PCD_ERR_MISMATCH;
    }
    return guard([&] {
        require(g && l && out, "arguments must not be null");
        *out = nullptr;
        auto report = pcd::quality_report(g->graph, l->assignment, alpha, xi, truth ? &truth->assignment : nullptr);
        std::string json = pcd::metrics_to_json(report);
        *out = new pcd_metrics{std::move(report), std::move(json)};
    });
}

void pcd_metrics_free(pcd_metrics* m) { delete m; }

void pcd_metrics_get(const pcd_metrics* m, pcd_metrics_values* out) {
    if (!m || !out) return;
    const auto& r = m->report;
    out->size = r.size;
    out->k_nonempty = r.k_nonempty;
    out->polarity = r.polarity;
    out->imbalance_factor = r.imbalance_factor;
    out->mac = r.mac;
    out->mao = r.mao;
    out->cc_plus = r.cc_plus;
    out->cc_minus = r.cc_minus;
    out->density = r.density;
    out->isolation = r.isolation;
    out->has_f1 = r.f1.has_value() ? 1 : 0;
    out->f1 = r.f1.value_or(0.0);
    out->degenerate = r.degenerate_flags.empty() ? 0 : 1;
}

const char* pcd_metrics_json(const pcd_metrics* m) { return m ? m->json.c_str() : ""; }

}  // extern "C"
