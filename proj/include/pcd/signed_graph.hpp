#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcd {

using Vertex = std::uint32_t;

struct Neighbor {
    Vertex id;
    double weight;

    friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Thrown by the edge-list reader; carries the 1-based line number of the
// offending record (0 when the error is not tied to a line).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

enum class DuplicatePolicy { kError, kSum };
enum class AsymmetryPolicy { kError, kSumThenHalve };

struct ParseOptions {
    int index_base = 0;
    DuplicatePolicy duplicate_policy = DuplicatePolicy::kError;
    AsymmetryPolicy asymmetry_policy = AsymmetryPolicy::kError;
    char comment_prefix = '#';
    // Minimum vertex count; lets trailing isolated vertices survive.
    std::optional<std::size_t> n_override;
};

struct EdgeRecord {
    Vertex u;
    Vertex v;
    double weight;
};

// Immutable symmetric sparse signed adjacency in CSR form. Every undirected
// edge {i,j} is stored twice, once in each row; rows are sorted by neighbor
// id, the diagonal is empty and no stored weight is zero.
class SignedGraph {
public:
    SignedGraph() : offsets_(1, 0) {}

    // Builds from undirected edges. Each edge must appear once (either
    // orientation); zero weights are skipped. Throws std::invalid_argument on
    // self-loops, duplicates or ids >= n.
    static SignedGraph from_edges(std::size_t n, std::span<const EdgeRecord> edges);

    std::size_t vertex_count() const { return offsets_.size() - 1; }
    std::size_t edge_count() const { return entries_.size() / 2; }

    // Row i of A restricted to nonzeros. Throws std::out_of_range.
    std::span<const Neighbor> neighbors(Vertex i) const;

    // Unchecked row access for hot loops.
    std::span<const Neighbor> row(Vertex i) const {
        return {entries_.data() + offsets_[i], entries_.data() + offsets_[i + 1]};
    }

    double weight(Vertex i, Vertex j) const;

    double row_abs_sum(Vertex i) const;
    double max_row_abs_sum() const;

    // h0 with each undirected edge counted once.
    double h0_undirected() const;
    // h0 over ordered pairs, i.e. 2 * h0_undirected().
    double h0_ordered() const;

    std::span<const Neighbor> entries() const { return entries_; }
    std::span<const std::size_t> offsets() const { return offsets_; }

    friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Neighbor> entries_;
};

SignedGraph parse_edge_list(std::istream& in, const ParseOptions& opts = {});
SignedGraph parse_edge_list(const std::string& text, const ParseOptions& opts = {});
SignedGraph read_edge_list(const std::string& path, const ParseOptions& opts = {});

// Canonical text form: "# n=<n>" and "# edges=<m>" header comments, then one
// "u\tv\tw" line per undirected edge with u < v, sorted, 0-based ids and
// shortest round-trip weights. The reader honors the "# n=" header.
void write_edge_list(std::ostream& out, const SignedGraph& g);
std::string to_edge_list(const SignedGraph& g);

}  // namespace pcd
