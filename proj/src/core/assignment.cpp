#include "pcd/assignment.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include <json.hpp>

#include "pcd/signed_graph.hpp"

namespace pcd {

std::size_t ClusterSizes::non_neutral_count() const {
    std::size_t total = 0;
    for (auto s : sizes) total += s;
    return total;
}

std::size_t ClusterSizes::nonempty_clusters() const {
    return static_cast<std::size_t>(std::count_if(sizes.begin(), sizes.end(), [](auto s) { return s > 0; }));
}

Assignment::Assignment(std::size_t n, std::size_t k) : labels_(n, kNeutral), k_(k) {}

Assignment::Assignment(std::vector<Label> labels, std::size_t k) : labels_(std::move(labels)), k_(k) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] > k_) {
            throw std::invalid_argument("label " + std::to_string(labels_[i]) + " of vertex " +
                                        std::to_string(i) + " exceeds k=" + std::to_string(k_));
        }
    }
}

void Assignment::set(std::size_t i, Label label) {
    if (label > k_) throw std::invalid_argument("label exceeds k");
    labels_.at(i) = label;
}

Assignment random_assignment(std::size_t n, std::size_t k, Seed seed, InitMode mode) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    Rng rng(seed, Stream::kInit);
    std::vector<Label> labels(n);
    for (auto& l : labels) {
        l = mode == InitMode::kUniformWithNeutral ? static_cast<Label>(rng.below(k + 1))
                                                  : static_cast<Label>(1 + rng.below(k));
    }
    return Assignment(std::move(labels), k);
}

ClusterSizes cluster_sizes(const Assignment& a) {
    ClusterSizes cs;
    cs.sizes.assign(a.k(), 0);
    for (Label l : a.labels()) {
        if (l == kNeutral) {
            ++cs.neutral_count;
        } else {
            ++cs.sizes[l - 1];
        }
    }
    return cs;
}

std::string assignment_to_json(const Assignment& a) {
    nlohmann::json j;
    j["k"] = a.k();
    j["labels"] = std::vector<Label>(a.labels().begin(), a.labels().end());
    return j.dump();
}

std::string assignment_to_csv(const Assignment& a) {
    std::ostringstream out;
    out << "vertex,label\n";
    for (std::size_t i = 0; i < a.size(); ++i) out << i << ',' << a[i] << '\n';
    return out.str();
}

namespace {

Assignment parse_json_assignment(const std::string& text, std::size_t k_hint) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("invalid JSON labels: ") + e.what());
    }
    if (!j.is_object() || !j.contains("labels") || !j["labels"].is_array()) {
        throw ParseError(0, "JSON labels must be an object with a 'labels' array");
    }
    std::vector<Label> labels;
    labels.reserve(j["labels"].size());
    for (const auto& v : j["labels"]) {
        if (!v.is_number_unsigned()) throw ParseError(0, "labels must be non-negative integers");
        labels.push_back(v.get<Label>());
    }
    std::size_t k = k_hint;
    if (k == 0 && j.contains("k")) k = j["k"].get<std::size_t>();
    if (k == 0 && !labels.empty()) k = *std::max_element(labels.begin(), labels.end());
    return Assignment(std::move(labels), std::max<std::size_t>(k, 1));
}

Assignment parse_csv_assignment(const std::string& text, std::size_t k_hint) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::pair<std::size_t, Label>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (line.starts_with("vertex")) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError(lineno, "expected 'vertex,label'");
        std::size_t vertex = 0;
        Label label = 0;
        const std::string_view vs(line.data(), comma);
        const std::string_view ls(line.data() + comma + 1, line.size() - comma - 1);
        auto r1 = std::from_chars(vs.data(), vs.data() + vs.size(), vertex);
        auto r2 = std::from_chars(ls.data(), ls.data() + ls.size(), label);
        if (r1.ec != std::errc() || r1.ptr != vs.data() + vs.size() || r2.ec != std::errc() ||
            r2.ptr != ls.data() + ls.size()) {
            throw ParseError(lineno, "expected 'vertex,label'");
        }
        rows.emplace_back(vertex, label);
    }
    std::size_t n = 0;
    Label max_label = 0;
    for (auto [v, l] : rows) {
        n = std::max(n, v + 1);
        max_label = std::max(max_label, l);
    }
    std::vector<Label> labels(n, kNeutral);
    std::vector<bool> seen(n, false);
    for (auto [v, l] : rows) {
        if (seen[v]) throw ParseError(0, "vertex " + std::to_string(v) + " labeled twice");
        seen[v] = true;
        labels[v] = l;
    }
    const std::size_t k = k_hint ? k_hint : std::max<std::size_t>(max_label, 1);
    return Assignment(std::move(labels), k);
}

}  // namespace

Assignment parse_assignment(const std::string& text, std::size_t k_hint) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_json_assignment(text, k_hint);
    return parse_csv_assignment(text, k_hint);
}

Assignment read_assignment(const std::string& path, std::size_t k_hint) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_assignment(buf.str(), k_hint);
}

}  // namespace pcd
