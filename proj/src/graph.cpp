#include "qgshap/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qgshap {

namespace {

void check_node_set(const std::vector<int>& nodes, int n, const char* what) {
    for (int v : nodes) {
        if (v < 0 || v >= n) {
            throw std::invalid_argument(std::string(what) + ": node index out of range");
        }
    }
}

}  // namespace

Graph::Graph(int num_nodes, Matrix features, std::vector<std::pair<int, int>> edges,
             std::optional<int> label, std::optional<std::vector<int>> ground_truth,
             std::optional<std::vector<int>> targets)
    : num_nodes_(num_nodes),
      features_(std::move(features)),
      edges_(std::move(edges)),
      label_(label),
      ground_truth_(std::move(ground_truth)),
      targets_(std::move(targets)) {
    if (num_nodes_ < 1) throw std::invalid_argument("Graph: need at least one node");
    if (features_.rows != num_nodes_) {
        throw std::invalid_argument("Graph: feature row count does not match node count");
    }
    for (auto& [u, v] : edges_) {
        if (u < 0 || u >= num_nodes_ || v < 0 || v >= num_nodes_) {
            throw std::invalid_argument("Graph: edge endpoint out of range");
        }
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw std::invalid_argument("Graph: duplicate edge");
    }
    if (label_ && *label_ != 0 && *label_ != 1) {
        throw std::invalid_argument("Graph: label must be 0 or 1");
    }
    if (ground_truth_) {
        std::sort(ground_truth_->begin(), ground_truth_->end());
        check_node_set(*ground_truth_, num_nodes_, "Graph ground_truth");
    }
    if (targets_) {
        std::sort(targets_->begin(), targets_->end());
        check_node_set(*targets_, num_nodes_, "Graph targets");
    }
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(num_nodes_);
    for (const auto& [u, v] : edges_) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

std::vector<Coalition> enumerate_coalitions(int n, std::optional<int> exclude) {
    if (n < 1 || n > kMaxNodes) throw std::invalid_argument("enumerate_coalitions: n out of range");
    std::vector<Coalition> out;
    if (!exclude) {
        const std::uint32_t full = (1u << n) - 1u;
        out.reserve(full);
        for (std::uint32_t mask = 1; mask <= full; ++mask) out.push_back({mask});
        return out;
    }
    const int j = *exclude;
    if (j < 0 || j >= n) throw std::invalid_argument("enumerate_coalitions: exclude out of range");
    std::vector<int> positions;
    for (int q = 0; q < n; ++q) {
        if (q != j) positions.push_back(q);
    }
    const std::uint32_t count = 1u << (n - 1);
    out.reserve(count);
    for (std::uint32_t sub = 0; sub < count; ++sub) {
        std::uint32_t mask = 0;
        for (int b = 0; b < n - 1; ++b) {
            if ((sub >> b) & 1u) mask |= 1u << positions[b];
        }
        out.push_back({mask});
    }
    return out;
}

Graph mask_zero_fill(const Graph& g, Coalition s) {
    if (s.mask > g.full_mask()) throw std::invalid_argument("mask_zero_fill: mask out of range");
    Matrix f = g.features();
    for (int v = 0; v < g.num_nodes(); ++v) {
        if (!s.contains(v)) {
            for (int c = 0; c < f.cols; ++c) f(v, c) = 0.0;
        }
    }
    return Graph(g.num_nodes(), std::move(f), g.edges(), g.label(), g.ground_truth(), g.targets());
}

Graph induced_subgraph(const Graph& g, Coalition s) {
    if (s.mask > g.full_mask()) throw std::invalid_argument("induced_subgraph: mask out of range");
    if (s.empty()) throw std::invalid_argument("induced_subgraph: empty coalition");
    std::vector<int> to_new(g.num_nodes(), -1);
    int next = 0;
    for (int v = 0; v < g.num_nodes(); ++v) {
        if (s.contains(v)) to_new[v] = next++;
    }
    Matrix f(next, g.feature_dim());
    for (int v = 0; v < g.num_nodes(); ++v) {
        if (to_new[v] < 0) continue;
        for (int c = 0; c < f.cols; ++c) f(to_new[v], c) = g.features()(v, c);
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges()) {
        if (to_new[u] >= 0 && to_new[v] >= 0) edges.emplace_back(to_new[u], to_new[v]);
    }
    return Graph(next, std::move(f), std::move(edges), g.label());
}

Graph complement_subgraph(const Graph& g, Coalition s) {
    if (s.mask > g.full_mask()) throw std::invalid_argument("complement_subgraph: mask out of range");
    if (s.mask == g.full_mask()) throw std::invalid_argument("complement_subgraph: full coalition");
    return induced_subgraph(g, Coalition{static_cast<std::uint32_t>(~s.mask) & g.full_mask()});
}

std::vector<Graph> read_graphs_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);
    std::vector<Graph> graphs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        const int n = j.at("num_nodes").get<int>();
        const auto& feat = j.at("features");
        if (static_cast<int>(feat.size()) != n) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": feature rows do not match num_nodes");
        }
        const int d = feat.empty() ? 0 : static_cast<int>(feat[0].size());
        Matrix f(n, d);
        for (int v = 0; v < n; ++v) {
            if (static_cast<int>(feat[v].size()) != d) {
                throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                         ": ragged feature rows");
            }
            for (int c = 0; c < d; ++c) f(v, c) = feat[v][c].get<double>();
        }
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges")) {
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        }
        std::optional<int> label;
        if (j.contains("label")) label = j.at("label").get<int>();
        std::optional<std::vector<int>> gt;
        if (j.contains("ground_truth")) gt = j.at("ground_truth").get<std::vector<int>>();
        std::optional<std::vector<int>> targets;
        if (j.contains("targets")) targets = j.at("targets").get<std::vector<int>>();
        graphs.emplace_back(n, std::move(f), std::move(edges), label, std::move(gt),
                            std::move(targets));
    }
    return graphs;
}

void write_graphs_jsonl(const std::string& path, const std::vector<Graph>& graphs) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write dataset file: " + path);
    for (const Graph& g : graphs) {
        nlohmann::json j;
        j["num_nodes"] = g.num_nodes();
        auto feat = nlohmann::json::array();
        for (int v = 0; v < g.num_nodes(); ++v) {
            auto row = nlohmann::json::array();
            for (int c = 0; c < g.feature_dim(); ++c) row.push_back(g.features()(v, c));
            feat.push_back(std::move(row));
        }
        j["features"] = std::move(feat);
        auto edges = nlohmann::json::array();
        for (const auto& [u, v] : g.edges()) edges.push_back(nlohmann::json::array({u, v}));
        j["edges"] = std::move(edges);
        if (g.label()) j["label"] = *g.label();
        if (g.ground_truth()) j["ground_truth"] = *g.ground_truth();
        if (g.targets()) j["targets"] = *g.targets();
        out << j.dump() << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace qgshap
