#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgshap/matrix.hpp"

namespace qgshap {

// Hard cap on node counts: coalition tables are dense over 2^n masks.
inline constexpr int kMaxNodes = 16;

// A subset of nodes, encoded as a bitmask over node indices.
struct Coalition {
    std::uint32_t mask = 0;

    int size() const { return std::popcount(mask); }
    bool contains(int node) const { return (mask >> node) & 1u; }
    bool empty() const { return mask == 0; }
};

// Undirected graph with per-node feature rows. Immutable once built; the
// masking operations below return fresh graphs.
class Graph {
  public:
    Graph(int num_nodes, Matrix features, std::vector<std::pair<int, int>> edges,
          std::optional<int> label = std::nullopt,
          std::optional<std::vector<int>> ground_truth = std::nullopt,
          std::optional<std::vector<int>> targets = std::nullopt);

    int num_nodes() const { return num_nodes_; }
    int feature_dim() const { return features_.cols; }
    const Matrix& features() const { return features_; }
    // Normalized edge list: u < v, sorted ascending, no duplicates.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::optional<int> label() const { return label_; }
    const std::optional<std::vector<int>>& ground_truth() const { return ground_truth_; }
    // Nodes an explainer is scored against for top-k accuracy (e.g. the two
    // endpoints of the distinguishing edge). Often equal to ground_truth.
    const std::optional<std::vector<int>>& targets() const { return targets_; }

    std::uint32_t full_mask() const { return (num_nodes_ >= 32) ? ~0u : ((1u << num_nodes_) - 1u); }

    // Neighbor lists, each sorted ascending.
    std::vector<std::vector<int>> adjacency() const;

  private:
    int num_nodes_;
    Matrix features_;
    std::vector<std::pair<int, int>> edges_;
    std::optional<int> label_;
    std::optional<std::vector<int>> ground_truth_;
    std::optional<std::vector<int>> targets_;
};

// All coalitions over n players in ascending mask order. Without `exclude`:
// the 2^n - 1 non-empty masks. With `exclude = j`: all 2^(n-1) subsets of the
// remaining players, including the empty one (needed for marginal
// contributions v(S u {j}) - v(S) down to S = {}).
std::vector<Coalition> enumerate_coalitions(int n, std::optional<int> exclude = std::nullopt);

// Same node set and edges; feature rows of nodes outside s zeroed.
Graph mask_zero_fill(const Graph& g, Coalition s);

// Node set restricted to s, indices compacted in ascending original order.
Graph induced_subgraph(const Graph& g, Coalition s);

// induced_subgraph over the complement of s.
Graph complement_subgraph(const Graph& g, Coalition s);

// JSONL dataset files: one graph object per line with keys num_nodes, edges,
// features, label and optional ground_truth / targets.
std::vector<Graph> read_graphs_jsonl(const std::string& path);
void write_graphs_jsonl(const std::string& path, const std::vector<Graph>& graphs);

}  // namespace qgshap
