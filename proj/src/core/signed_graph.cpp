#include "pcd/signed_graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>
#include <type_traits>
#include <unordered_map>

namespace pcd {

SignedGraph SignedGraph::from_edges(std::size_t n, std::span<const EdgeRecord> edges) {
    if (n > std::numeric_limits<Vertex>::max()) throw std::invalid_argument("vertex count too large");
    struct Triplet {
        Vertex row;
        Vertex col;
        double weight;
    };
    std::vector<Triplet> triplets;
    triplets.reserve(edges.size() * 2);
    for (const auto& e : edges) {
        if (e.u >= n || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
        if (!std::isfinite(e.weight)) throw std::invalid_argument("non-finite edge weight");
        if (e.weight == 0.0) continue;
        triplets.push_back({e.u, e.v, e.weight});
        triplets.push_back({e.v, e.u, e.weight});
    }
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    SignedGraph g;
    g.offsets_.assign(n + 1, 0);
    g.entries_.reserve(triplets.size());
    for (std::size_t t = 0; t < triplets.size(); ++t) {
        const auto& tr = triplets[t];
        if (t > 0 && triplets[t - 1].row == tr.row && triplets[t - 1].col == tr.col) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(std::min(tr.row, tr.col)) +
                                        ", " + std::to_string(std::max(tr.row, tr.col)) + ")");
        }
        g.entries_.push_back({tr.col, tr.weight});
        ++g.offsets_[tr.row + 1];
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    return g;
}

std::span<const Neighbor> SignedGraph::neighbors(Vertex i) const {
    if (i >= vertex_count()) {
        throw std::out_of_range("vertex " + std::to_string(i) + " out of range (n=" +
                                std::to_string(vertex_count()) + ")");
    }
    return row(i);
}

double SignedGraph::weight(Vertex i, Vertex j) const {
    auto r = neighbors(i);
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const Neighbor& nb, Vertex id) { return nb.id < id; });
    return (it != r.end() && it->id == j) ? it->weight : 0.0;
}

double SignedGraph::row_abs_sum(Vertex i) const {
    double s = 0.0;
    for (const auto& nb : neighbors(i)) s += std::abs(nb.weight);
    return s;
}

double SignedGraph::max_row_abs_sum() const {
    double best = 0.0;
    for (Vertex i = 0; i < vertex_count(); ++i) best = std::max(best, row_abs_sum(i));
    return best;
}

double SignedGraph::h0_ordered() const {
    double s = 0.0;
    for (const auto& nb : entries_) s += std::abs(nb.weight);
    return s;
}

double SignedGraph::h0_undirected() const { return h0_ordered() / 2.0; }

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

bool is_separator(char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; }

// Splits on runs of whitespace and/or commas.
std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_separator(line[i])) ++i;
        const std::size_t start = i;
        while (i < line.size() && !is_separator(line[i])) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

template <typename T>
bool parse_number(std::string_view tok, T& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if constexpr (std::is_floating_point_v<T>) {
        if (first != last && *first == '+') ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

struct PairSlot {
    double forward_sum = 0.0;  // records written as (min, max)
    double reverse_sum = 0.0;  // records written as (max, min)
    std::uint32_t forward_count = 0;
    std::uint32_t reverse_count = 0;
};

}  // namespace

SignedGraph parse_edge_list(std::istream& in, const ParseOptions& opts) {
    if (opts.index_base != 0 && opts.index_base != 1) {
        throw std::invalid_argument("index_base must be 0 or 1");
    }
    const bool directed = opts.asymmetry_policy == AsymmetryPolicy::kSumThenHalve;
    const bool sum_duplicates = opts.duplicate_policy == DuplicatePolicy::kSum;

    std::unordered_map<std::uint64_t, PairSlot> slots;
    std::size_t header_n = 0;
    std::size_t max_id_plus_one = 0;
    std::string line;
    std::size_t lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view body = trim(line);
        if (body.empty()) continue;
        if (body.front() == opts.comment_prefix) {
            const std::string_view rest = trim(body.substr(1));
            if (rest.starts_with("n=")) {
                std::size_t hint = 0;
                if (parse_number(trim(rest.substr(2)), hint)) header_n = std::max(header_n, hint);
            }
            continue;
        }

        const auto tokens = tokenize(body);
        if (tokens.size() != 3) throw ParseError(lineno, "expected 'u v w', got " + std::string(body));
        std::uint64_t u = 0;
        std::uint64_t v = 0;
        double w = 0.0;
        if (!parse_number(tokens[0], u) || !parse_number(tokens[1], v)) {
            throw ParseError(lineno, "vertex ids must be non-negative integers");
        }
        if (!parse_number(tokens[2], w) || !std::isfinite(w)) {
            throw ParseError(lineno, "malformed weight '" + std::string(tokens[2]) + "'");
        }
        const auto base = static_cast<std::uint64_t>(opts.index_base);
        if (u < base || v < base) throw ParseError(lineno, "vertex id below index base");
        u -= base;
        v -= base;
        if (u >= std::numeric_limits<Vertex>::max() || v >= std::numeric_limits<Vertex>::max()) {
            throw ParseError(lineno, "vertex id too large");
        }
        if (u == v) throw ParseError(lineno, "self-loop on vertex " + std::string(tokens[0]));
        max_id_plus_one = std::max<std::size_t>(max_id_plus_one, std::max(u, v) + 1);

        const bool forward = u < v;
        const std::uint64_t key = (std::min(u, v) << 32) | std::max(u, v);
        PairSlot& slot = slots[key];
        std::uint32_t& same_count = forward ? slot.forward_count : slot.reverse_count;
        const std::uint32_t other_count = forward ? slot.reverse_count : slot.forward_count;
        double& same_sum = forward ? slot.forward_sum : slot.reverse_sum;
        const double other_sum = forward ? slot.reverse_sum : slot.forward_sum;

        if (same_count > 0 && !sum_duplicates) throw ParseError(lineno, "duplicate edge");
        if (!directed && !sum_duplicates && other_count > 0) {
            // Undirected input listing both orientations: allowed only as an exact mirror.
            if (other_sum != w) throw ParseError(lineno, "asymmetric pair");
            ++same_count;
            continue;
        }
        same_sum += w;
        ++same_count;
    }

    const std::size_t n = std::max({max_id_plus_one, header_n, opts.n_override.value_or(0)});
    std::vector<EdgeRecord> edges;
    edges.reserve(slots.size());
    for (const auto& [key, slot] : slots) {
        double w = 0.0;
        if (directed) {
            w = (slot.forward_sum + slot.reverse_sum) / 2.0;
        } else if (sum_duplicates) {
            w = slot.forward_sum + slot.reverse_sum;
        } else {
            w = slot.forward_count ? slot.forward_sum : slot.reverse_sum;
        }
        if (w == 0.0) continue;
        edges.push_back({static_cast<Vertex>(key >> 32), static_cast<Vertex>(key & 0xffffffffu), w});
    }
    return SignedGraph::from_edges(n, edges);
}

SignedGraph parse_edge_list(const std::string& text, const ParseOptions& opts) {
    std::istringstream in(text);
    return parse_edge_list(in, opts);
}

SignedGraph read_edge_list(const std::string& path, const ParseOptions& opts) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_edge_list(in, opts);
}

void write_edge_list(std::ostream& out, const SignedGraph& g) {
    out << "# n=" << g.vertex_count() << '\n' << "# edges=" << g.edge_count() << '\n';
    char buf[64];
    for (Vertex i = 0; i < g.vertex_count(); ++i) {
        for (const auto& nb : g.row(i)) {
            if (nb.id <= i) continue;
            auto res = std::to_chars(buf, buf + sizeof buf, nb.weight);
            out << i << '\t' << nb.id << '\t' << std::string_view(buf, res.ptr - buf) << '\n';
        }
    }
}

std::string to_edge_list(const SignedGraph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace pcd
