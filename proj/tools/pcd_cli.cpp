// pcd: generate / solve / eval / sweep / bench front end over the C API.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcd/pcd.h"

namespace {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitUsage = 2,
    kExitInput = 3,
    kExitBudget = 4,
};

struct GraphDeleter {
    void operator()(pcd_graph* g) const { pcd_graph_free(g); }
};
struct LabelsDeleter {
    void operator()(pcd_labels* l) const { pcd_labels_free(l); }
};
struct ResultDeleter {
    void operator()(pcd_result* r) const { pcd_result_free(r); }
};
struct MetricsDeleter {
    void operator()(pcd_metrics* m) const { pcd_metrics_free(m); }
};
using GraphPtr = std::unique_ptr<pcd_graph, GraphDeleter>;
using LabelsPtr = std::unique_ptr<pcd_labels, LabelsDeleter>;
using ResultPtr = std::unique_ptr<pcd_result, ResultDeleter>;
using MetricsPtr = std::unique_ptr<pcd_metrics, MetricsDeleter>;

// Thrown inside command handlers; carries the process exit code.
struct CommandError {
    int code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) { throw CommandError{code, message}; }

void check(pcd_status st, const std::string& context) {
    if (st == PCD_OK) return;
    const int code = st == PCD_ERR_INVALID_ARGUMENT ? kExitUsage
                     : (st == PCD_ERR_INTERNAL)      ? kExitFailure
                                                     : kExitInput;
    fail(code, context + ": " + pcd_last_error());
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("PCD_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            fail(kExitUsage, std::string("PCD_SEED is not an unsigned integer: ") + env);
        }
    }
    return 0;
}

// "auto" or a number.
std::optional<double> parse_alpha(const std::string& s) {
    if (s == "auto") return std::nullopt;
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(kExitUsage, "--alpha must be 'auto' or a number, got '" + s + "'");
    }
}

double resolve_alpha(const std::optional<double>& alpha, std::size_t k) {
    if (alpha) return *alpha;
    return k >= 2 ? 1.0 / static_cast<double>(k - 1) : 0.0;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(kExitInput, "cannot open " + path + " for writing");
    out << text;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

// ---- generate -------------------------------------------------------------

struct GenerateArgs {
    std::size_t n = 0;
    std::size_t k = 2;
    std::size_t ell = 0;
    double eta = 0.0;
    double rho = 1.0;
    std::optional<std::uint64_t> seed;
    std::string out_prefix;
};

int run_generate(const GenerateArgs& a) {
    pcd_ssbm_params p{a.n, a.k, a.ell, a.eta, a.rho, a.seed.value_or(default_seed())};
    pcd_graph* g = nullptr;
    pcd_labels* t = nullptr;
    check(pcd_ssbm_generate(&p, &g, &t), "generate");
    GraphPtr graph(g);
    LabelsPtr truth(t);
    check(pcd_graph_write_file(graph.get(), (a.out_prefix + ".edges").c_str()), "write edges");
    check(pcd_labels_write_csv(truth.get(), (a.out_prefix + ".truth.csv").c_str()), "write truth");
    return kExitOk;
}

// ---- shared graph loading ---------------------------------------------------

struct GraphArgs {
    std::string path;
    int index_base = 0;
    std::string duplicates = "error";
    std::string asymmetry = "error";
    std::size_t n = 0;
};

void add_graph_options(CLI::App* cmd, GraphArgs& g) {
    cmd->add_option("graph,--graph", g.path, "Edge-list file (u v w per line)")->required();
    cmd->add_option("--index-base", g.index_base, "Index of the first vertex in the file")
        ->check(CLI::IsMember({0, 1}));
    cmd->add_option("--duplicates", g.duplicates, "Repeated edges: error | sum")
        ->check(CLI::IsMember({"error", "sum"}));
    cmd->add_option("--asymmetry", g.asymmetry, "Directed input: error | sum-then-halve")
        ->check(CLI::IsMember({"error", "sum-then-halve"}));
    cmd->add_option("--n", g.n, "Vertex count override (keeps trailing isolated vertices)");
}

GraphPtr load_graph(const GraphArgs& a) {
    pcd_parse_options opts;
    pcd_parse_options_init(&opts);
    opts.index_base = a.index_base;
    opts.duplicate_policy = a.duplicates == "sum" ? PCD_DUPLICATE_SUM : PCD_DUPLICATE_ERROR;
    opts.asymmetry_policy = a.asymmetry == "sum-then-halve" ? PCD_ASYMMETRY_SUM_THEN_HALVE : PCD_ASYMMETRY_ERROR;
    opts.n_override = a.n;
    pcd_graph* g = nullptr;
    std::size_t line = 0;
    const pcd_status st = pcd_graph_parse_file(a.path.c_str(), &opts, &g, &line);
    if (st != PCD_OK) fail(kExitInput, a.path + ": " + pcd_last_error());
    return GraphPtr(g);
}

// ---- solve ------------------------------------------------------------------

struct SolveArgs {
    GraphArgs graph;
    std::size_t k = 2;
    std::string alpha = "auto";
    double beta = 0.0;
    std::optional<std::uint64_t> seed;
    std::string variant = "lspcd";
    std::optional<std::uint64_t> max_steps;
    std::string convergence = "window_then_sweep";
    std::string init = "uniform_with_neutral";
    std::uint64_t track_gap_every = 0;
    std::uint64_t trace_every = 0;
    std::optional<std::size_t> max_dense;
    std::string out;
    std::string labels_out;
};

pcd_variant variant_or_fail(const std::string& name) {
    pcd_variant v{};
    if (pcd_variant_parse(name.c_str(), &v) != PCD_OK) fail(kExitUsage, pcd_last_error());
    return v;
}

int run_solve(const SolveArgs& a) {
    const auto alpha = parse_alpha(a.alpha);
    pcd_solver_config cfg;
    pcd_solver_config_init(&cfg);
    cfg.variant = variant_or_fail(a.variant);
    cfg.k = a.k;
    cfg.alpha_auto = alpha ? 0 : 1;
    cfg.alpha = alpha.value_or(0.0);
    cfg.beta = a.beta;
    cfg.seed = a.seed.value_or(default_seed());
    if (a.max_steps) cfg.max_steps = *a.max_steps;
    cfg.convergence = a.convergence == "sweep_only" ? PCD_CONVERGENCE_SWEEP_ONLY : PCD_CONVERGENCE_WINDOW_THEN_SWEEP;
    cfg.init = a.init == "non_neutral_only" ? PCD_INIT_NON_NEUTRAL_ONLY : PCD_INIT_UNIFORM_WITH_NEUTRAL;
    cfg.track_gap_every = a.track_gap_every;
    cfg.trace_every = a.trace_every;
    if (a.max_dense) cfg.max_dense_entries = *a.max_dense;

    GraphPtr graph = load_graph(a.graph);
    pcd_result* r = nullptr;
    check(pcd_solve(graph.get(), &cfg, nullptr, &r), "solve");
    ResultPtr result(r);
    write_output(a.out, std::string(pcd_result_json(result.get())) + "\n");
    if (!a.labels_out.empty()) check(pcd_labels_write_csv(pcd_result_labels(result.get()), a.labels_out.c_str()), "write labels");
    return pcd_result_converged(result.get()) ? kExitOk : kExitBudget;
}

// ---- eval -------------------------------------------------------------------

struct EvalArgs {
    GraphArgs graph;
    std::string labels;
    std::string truth;
    std::string alpha = "auto";
    double xi = 3.0;
    std::size_t k = 0;
    std::size_t truth_k = 0;
    std::string out;
};

int run_eval(const EvalArgs& a) {
    const auto alpha = parse_alpha(a.alpha);
    GraphPtr graph = load_graph(a.graph);
    pcd_labels* l = nullptr;
    check(pcd_labels_read_file(a.labels.c_str(), a.k, &l), a.labels);
    LabelsPtr labels(l);
    LabelsPtr truth;
    if (!a.truth.empty()) {
        pcd_labels* t = nullptr;
        check(pcd_labels_read_file(a.truth.c_str(), a.truth_k, &t), a.truth);
        truth.reset(t);
    }
    pcd_metrics* m = nullptr;
    check(pcd_evaluate(graph.get(), labels.get(), resolve_alpha(alpha, pcd_labels_k(labels.get())), a.xi,
                       truth.get(), &m),
          "eval");
    MetricsPtr metrics(m);
    write_output(a.out, std::string(pcd_metrics_json(metrics.get())) + "\n");
    return kExitOk;
}

// ---- sweep ------------------------------------------------------------------

struct SweepArgs {
    std::vector<std::string> axes;
    std::string spec;
    std::size_t repeats = 1;
    std::size_t n = 500;
    std::size_t k = 4;
    std::size_t ell = 100;
    double eta = 0.1;
    double rho = 1.0;
    double beta = 0.4;
    std::string alpha = "auto";
    std::optional<std::uint64_t> seed;
    std::string variant = "lspcd";
    double xi = 3.0;
    std::string out;
};

const std::vector<std::string> kSweepAxes = {"eta", "beta", "alpha", "k", "rho", "seed"};

struct SweepCell {
    std::map<std::string, double> values;  // every axis, swept or fixed
    std::size_t repeat = 0;
};

struct SweepRow {
    double f1 = 0.0, pol = 0.0, imbalance = 0.0, time_ms = 0.0;
    std::uint64_t steps = 0;
    bool converged = false;
    std::string error;
};

std::vector<double> parse_value_list(const std::string& name, const std::string& list) {
    std::vector<double> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            fail(kExitUsage, "axis " + name + ": bad value '" + item + "'");
        }
    }
    if (out.empty()) fail(kExitUsage, "axis " + name + " has no values");
    return out;
}

SweepRow run_cell(const SweepCell& cell, const SweepArgs& a, pcd_variant variant) {
    SweepRow row;
    const auto k = static_cast<std::size_t>(cell.values.at("k"));
    const auto seed = static_cast<std::uint64_t>(cell.values.at("seed")) + cell.repeat;
    pcd_ssbm_params p{a.n, k, a.ell, cell.values.at("eta"), cell.values.at("rho"), seed};
    pcd_graph* g = nullptr;
    pcd_labels* t = nullptr;
    if (pcd_ssbm_generate(&p, &g, &t) != PCD_OK) {
        row.error = pcd_last_error();
        return row;
    }
    GraphPtr graph(g);
    LabelsPtr truth(t);
    pcd_solver_config cfg;
    pcd_solver_config_init(&cfg);
    cfg.k = k;
    cfg.alpha_auto = 0;
    cfg.alpha = cell.values.at("alpha");
    cfg.beta = cell.values.at("beta");
    cfg.seed = seed;
    cfg.variant = variant;
    pcd_result* r = nullptr;
    if (pcd_solve(graph.get(), &cfg, nullptr, &r) != PCD_OK) {
        row.error = pcd_last_error();
        return row;
    }
    ResultPtr result(r);
    pcd_metrics* m = nullptr;
    if (pcd_evaluate(graph.get(), pcd_result_labels(result.get()), cfg.alpha, a.xi, truth.get(), &m) != PCD_OK) {
        row.error = pcd_last_error();
        return row;
    }
    MetricsPtr metrics(m);
    pcd_metrics_values v{};
    pcd_metrics_get(metrics.get(), &v);
    row.f1 = v.f1;
    row.pol = v.polarity;
    row.imbalance = v.imbalance_factor;
    row.steps = pcd_result_steps(result.get());
    row.time_ms = pcd_result_time_ms(result.get());
    row.converged = pcd_result_converged(result.get()) != 0;
    return row;
}

int run_sweep(SweepArgs a, unsigned threads) {
    // Axis values in a fixed canonical order, whatever order they were given in.
    std::map<std::string, std::vector<double>> axes;
    if (!a.spec.empty()) {
        std::ifstream in(a.spec);
        if (!in) fail(kExitInput, "cannot open " + a.spec);
        nlohmann::json spec;
        try {
            spec = nlohmann::json::parse(in);
            if (spec.contains("repeats")) a.repeats = spec["repeats"].get<std::size_t>();
            if (spec.contains("axes")) {
                for (auto& [name, vals] : spec["axes"].items()) axes[name] = vals.get<std::vector<double>>();
            }
            if (spec.contains("fixed")) {
                const auto& f = spec["fixed"];
                a.n = f.value("n", a.n);
                a.k = f.value("k", a.k);
                a.ell = f.value("ell", a.ell);
                a.eta = f.value("eta", a.eta);
                a.rho = f.value("rho", a.rho);
                a.beta = f.value("beta", a.beta);
                if (f.contains("alpha")) {
                    a.alpha = f["alpha"].is_string() ? f["alpha"].get<std::string>() : fmt(f["alpha"].get<double>());
                }
                if (f.contains("seed")) a.seed = f["seed"].get<std::uint64_t>();
            }
        } catch (const nlohmann::json::exception& e) {
            fail(kExitInput, a.spec + ": " + e.what());
        }
    }
    for (const auto& axis : a.axes) {
        const auto eq = axis.find('=');
        if (eq == std::string::npos) fail(kExitUsage, "--axis expects name=v1,v2,..., got '" + axis + "'");
        const std::string name = axis.substr(0, eq);
        axes[name] = parse_value_list(name, axis.substr(eq + 1));
    }
    if (axes.empty()) fail(kExitUsage, "sweep needs at least one axis");
    for (const auto& [name, vals] : axes) {
        if (std::find(kSweepAxes.begin(), kSweepAxes.end(), name) == kSweepAxes.end()) {
            fail(kExitUsage, "unknown sweep axis '" + name + "' (eta, beta, alpha, k, rho, seed)");
        }
    }
    if (a.repeats == 0) fail(kExitUsage, "--repeats must be at least 1");
    const pcd_variant variant = variant_or_fail(a.variant);
    const auto fixed_alpha = parse_alpha(a.alpha);

    // Cartesian product; last axis (in kSweepAxes order) varies fastest.
    std::vector<SweepCell> cells(1);
    cells[0].values = {{"eta", a.eta}, {"beta", a.beta}, {"alpha", std::numeric_limits<double>::quiet_NaN()},
                       {"k", static_cast<double>(a.k)}, {"rho", a.rho},
                       {"seed", static_cast<double>(a.seed.value_or(default_seed()))}};
    for (const auto& name : kSweepAxes) {
        auto it = axes.find(name);
        if (it == axes.end()) continue;
        std::vector<SweepCell> next;
        for (const auto& c : cells) {
            for (double v : it->second) {
                SweepCell copy = c;
                copy.values[name] = v;
                next.push_back(copy);
            }
        }
        cells = std::move(next);
    }
    std::vector<SweepCell> jobs;
    for (const auto& c : cells) {
        for (std::size_t r = 0; r < a.repeats; ++r) {
            SweepCell job = c;
            job.repeat = r;
            if (std::isnan(job.values["alpha"])) {
                job.values["alpha"] = resolve_alpha(fixed_alpha, static_cast<std::size_t>(job.values["k"]));
            }
            jobs.push_back(job);
        }
    }

    std::vector<SweepRow> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j = next++; j < jobs.size(); j = next++) rows[j] = run_cell(jobs[j], a, variant);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::max(1u, threads); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::ostringstream csv;
    csv << "n,ell,eta,beta,alpha,k,rho,seed,repeat,F1,POL,IF,steps,time_ms,converged,error\n";
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        const auto& v = jobs[j].values;
        const auto& r = rows[j];
        csv << a.n << ',' << a.ell << ',' << fmt(v.at("eta")) << ',' << fmt(v.at("beta")) << ','
            << fmt(v.at("alpha")) << ',' << static_cast<std::size_t>(v.at("k")) << ',' << fmt(v.at("rho")) << ','
            << static_cast<std::uint64_t>(v.at("seed")) + jobs[j].repeat << ',' << jobs[j].repeat << ','
            << fmt(r.f1) << ',' << fmt(r.pol) << ',' << fmt(r.imbalance) << ',' << r.steps << ','
            << fmt(r.time_ms) << ',' << (r.converged ? 1 : 0) << ',' << '"' << r.error << '"' << '\n';
    }
    write_output(a.out, csv.str());
    return kExitOk;
}

// ---- bench ------------------------------------------------------------------

struct BenchArgs {
    std::string graph_path;
    std::size_t n = 2000;
    std::size_t k = 4;
    std::optional<std::size_t> ell;
    double eta = 0.4;
    double rho = 1.0;
    double beta = 0.4;
    std::string alpha = "auto";
    std::optional<std::uint64_t> seed;
    std::size_t repeats = 3;
    std::vector<std::string> variants = {"naive", "gradient_direct", "lspcd"};
    std::string out;
};

int run_bench(const BenchArgs& a) {
    if (a.repeats == 0) fail(kExitUsage, "--repeats must be at least 1");
    std::vector<pcd_variant> variants;
    for (const auto& name : a.variants) variants.push_back(variant_or_fail(name));
    const std::uint64_t seed = a.seed.value_or(default_seed());

    GraphPtr graph;
    if (!a.graph_path.empty()) {
        GraphArgs ga;
        ga.path = a.graph_path;
        graph = load_graph(ga);
    } else {
        const std::size_t ell = a.ell.value_or(a.n / (a.k + 1));
        pcd_ssbm_params p{a.n, a.k, ell, a.eta, a.rho, seed};
        pcd_graph* g = nullptr;
        check(pcd_ssbm_generate(&p, &g, nullptr), "generate");
        graph.reset(g);
    }

    pcd_solver_config cfg;
    pcd_solver_config_init(&cfg);
    const auto alpha = parse_alpha(a.alpha);
    cfg.k = a.k;
    cfg.alpha_auto = alpha ? 0 : 1;
    cfg.alpha = alpha.value_or(0.0);
    cfg.beta = a.beta;
    cfg.seed = seed;

    std::ostringstream csv;
    csv << "variant,repeat,time_ms,steps,moves,objective,converged\n";
    std::vector<std::pair<std::string, double>> medians;
    std::optional<double> reference_objective;
    std::vector<std::uint32_t> reference_labels;
    std::string reference_variant;
    for (pcd_variant v : variants) {
        cfg.variant = v;
        std::vector<double> times;
        for (std::size_t rep = 0; rep < a.repeats; ++rep) {
            pcd_result* r = nullptr;
            check(pcd_solve(graph.get(), &cfg, nullptr, &r), std::string("solve ") + pcd_variant_name(v));
            ResultPtr result(r);
            const double obj = pcd_result_objective(result.get());
            const pcd_labels* labels = pcd_result_labels(result.get());
            const std::uint32_t* data = pcd_labels_data(labels);
            std::vector<std::uint32_t> current(data, data + pcd_labels_size(labels));
            if (!reference_objective) {
                reference_objective = obj;
                reference_labels = current;
                reference_variant = pcd_variant_name(v);
            } else if (obj != *reference_objective || current != reference_labels) {
                std::cout << csv.str();
                fail(kExitFailure, std::string("variant ") + pcd_variant_name(v) + " ended at objective " + fmt(obj) +
                                       " but " + reference_variant + " ended at " + fmt(*reference_objective));
            }
            times.push_back(pcd_result_time_ms(result.get()));
            csv << pcd_variant_name(v) << ',' << rep << ',' << fmt(times.back()) << ','
                << pcd_result_steps(result.get()) << ',' << pcd_result_moves(result.get()) << ',' << fmt(obj)
                << ',' << pcd_result_converged(result.get()) << '\n';
        }
        std::sort(times.begin(), times.end());
        medians.emplace_back(pcd_variant_name(v), times[times.size() / 2]);
    }
    for (const auto& [name, t] : medians) csv << name << ",median," << fmt(t) << ",,,,\n";
    write_output(a.out, csv.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polarized community discovery in signed networks"};
    app.require_subcommand(1);
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--threads", threads, "Concurrent sweep cells (default: hardware concurrency)");

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Sample an m-SSBM graph with planted communities");
    generate->add_option("--n", gen.n, "Total vertex count")->required();
    generate->add_option("--k", gen.k, "Planted communities")->required();
    generate->add_option("--ell", gen.ell, "Community size (mean size when --rho > 1)")->required();
    generate->add_option("--eta", gen.eta, "Noise level in [0, 1]")->required();
    generate->add_option("--rho", gen.rho, "Largest/smallest community size ratio");
    generate->add_option("--seed", gen.seed, "RNG seed (default: $PCD_SEED or 0)");
    generate->add_option("--out-prefix", gen.out_prefix, "Writes <prefix>.edges and <prefix>.truth.csv")->required();

    SolveArgs sol;
    auto* solve = app.add_subcommand("solve", "Run local search on an edge-list graph");
    add_graph_options(solve, sol.graph);
    solve->add_option("--k", sol.k, "Number of non-neutral clusters")->required();
    solve->add_option("--alpha", sol.alpha, "Inter-cluster weight, or 'auto' for 1/(k-1)");
    solve->add_option("--beta", sol.beta, "Squared-size regularization strength");
    solve->add_option("--seed", sol.seed, "RNG seed (default: $PCD_SEED or 0)");
    solve->add_option("--variant", sol.variant, "naive | gradient_direct | lspcd");
    solve->add_option("--max-steps", sol.max_steps, "Step budget (default: unbounded)");
    solve->add_option("--convergence", sol.convergence, "window_then_sweep | sweep_only")
        ->check(CLI::IsMember({"window_then_sweep", "sweep_only"}));
    solve->add_option("--init", sol.init, "uniform_with_neutral | non_neutral_only")
        ->check(CLI::IsMember({"uniform_with_neutral", "non_neutral_only"}));
    solve->add_option("--track-gap-every", sol.track_gap_every, "Duality gap sampling interval (0 = off)");
    solve->add_option("--trace-every", sol.trace_every, "Objective sampling interval (0 = n)");
    solve->add_option("--max-dense-entries", sol.max_dense, "Cap on n*k for the score table");
    solve->add_option("--out", sol.out, "Result JSON path (default: stdout)");
    solve->add_option("--labels-out", sol.labels_out, "Also write labels as CSV");

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "Compute quality metrics for a labeling");
    add_graph_options(eval, ev.graph);
    eval->add_option("--labels", ev.labels, "Labels (JSON or CSV)")->required();
    eval->add_option("--truth", ev.truth, "Ground-truth labels for F1");
    eval->add_option("--alpha", ev.alpha, "Polarity alpha, or 'auto' for 1/(k-1)");
    eval->add_option("--xi", ev.xi, "Imbalance factor exponent (default 3)");
    eval->add_option("--k", ev.k, "Cluster count of the labels (default: from file)");
    eval->add_option("--truth-k", ev.truth_k, "Cluster count of the truth (default: from file)");
    eval->add_option("--out", ev.out, "Report JSON path (default: stdout)");

    SweepArgs sw;
    auto* sweep = app.add_subcommand("sweep", "Grid of generate+solve+eval runs, one CSV row per run");
    sweep->add_option("--threads", threads, "Concurrent sweep cells (default: hardware concurrency)");
    sweep->add_option("--axis", sw.axes, "name=v1,v2,... over eta, beta, alpha, k, rho, seed");
    sweep->add_option("--spec", sw.spec, "JSON spec {axes:{..}, repeats, fixed:{..}}");
    sweep->add_option("--repeats", sw.repeats, "Runs per cell (seed + repeat)");
    sweep->add_option("--n", sw.n, "Vertex count");
    sweep->add_option("--k", sw.k, "Planted clusters (also the solver k)");
    sweep->add_option("--ell", sw.ell, "Community size");
    sweep->add_option("--eta", sw.eta, "Noise level");
    sweep->add_option("--rho", sw.rho, "Size ratio");
    sweep->add_option("--beta", sw.beta, "Regularization strength");
    sweep->add_option("--alpha", sw.alpha, "Inter-cluster weight or 'auto'");
    sweep->add_option("--seed", sw.seed, "Base seed (default: $PCD_SEED or 0)");
    sweep->add_option("--variant", sw.variant, "Solver variant");
    sweep->add_option("--xi", sw.xi, "Imbalance factor exponent");
    sweep->add_option("--out", sw.out, "CSV path (default: stdout)");

    BenchArgs be;
    auto* bench = app.add_subcommand("bench", "Time the three solver variants on one instance");
    bench->add_option("--graph", be.graph_path, "Edge-list file instead of a generated m-SSBM graph");
    bench->add_option("--n", be.n, "Vertex count");
    bench->add_option("--k", be.k, "Clusters");
    bench->add_option("--ell", be.ell, "Community size (default: n/(k+1))");
    bench->add_option("--eta", be.eta, "Noise level");
    bench->add_option("--rho", be.rho, "Size ratio");
    bench->add_option("--beta", be.beta, "Regularization strength");
    bench->add_option("--alpha", be.alpha, "Inter-cluster weight or 'auto'");
    bench->add_option("--seed", be.seed, "Seed for generation and solving");
    bench->add_option("--repeats", be.repeats, "Timed runs per variant");
    bench->add_option("--variants", be.variants, "Comma-separated subset of naive,gradient_direct,lspcd")
        ->delimiter(',');
    bench->add_option("--out", be.out, "CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*generate) return run_generate(gen);
        if (*solve) return run_solve(sol);
        if (*eval) return run_eval(ev);
        if (*sweep) return run_sweep(sw, threads);
        if (*bench) return run_bench(be);
    } catch (const CommandError& e) {
        std::cerr << "pcd: " << e.message << '\n';
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "pcd: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
