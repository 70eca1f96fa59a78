#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pcd/rng.hpp"

namespace pcd {

// Cluster label; 0 is the neutral set, 1..k the non-neutral clusters.
using Label = std::uint32_t;
inline constexpr Label kNeutral = 0;

struct ClusterSizes {
    std::vector<std::size_t> sizes;  // |S_1| .. |S_k|
    std::size_t neutral_count = 0;

    std::size_t non_neutral_count() const;
    std::size_t nonempty_clusters() const;

    friend bool operator==(const ClusterSizes&, const ClusterSizes&) = default;
};

class Assignment {
public:
    Assignment() = default;
    // All vertices neutral.
    Assignment(std::size_t n, std::size_t k);
    // Throws std::invalid_argument if any label exceeds k.
    Assignment(std::vector<Label> labels, std::size_t k);

    std::size_t size() const { return labels_.size(); }
    std::size_t k() const { return k_; }
    Label operator[](std::size_t i) const { return labels_[i]; }
    std::span<const Label> labels() const { return labels_; }

    // Throws std::invalid_argument if label > k.
    void set(std::size_t i, Label label);

    friend bool operator==(const Assignment&, const Assignment&) = default;

private:
    std::vector<Label> labels_;
    std::size_t k_ = 0;
};

enum class InitMode { kUniformWithNeutral, kNonNeutralOnly };

// Labels drawn i.i.d. from {0..k} (or {1..k} for kNonNeutralOnly) using the
// kInit stream of seed. Throws std::invalid_argument when k == 0.
Assignment random_assignment(std::size_t n, std::size_t k, Seed seed,
                             InitMode mode = InitMode::kUniformWithNeutral);

ClusterSizes cluster_sizes(const Assignment& a);

// {"k":K,"labels":[...]}
std::string assignment_to_json(const Assignment& a);
// "vertex,label" header followed by one row per vertex.
std::string assignment_to_csv(const Assignment& a);

// Accepts either format above (JSON objects may carry extra keys, e.g. a
// solve result). For CSV, k defaults to the largest label seen unless k_hint
// is nonzero. Throws ParseError / std::invalid_argument.
Assignment parse_assignment(const std::string& text, std::size_t k_hint = 0);
Assignment read_assignment(const std::string& path, std::size_t k_hint = 0);

}  // namespace pcd
