#pragma once

// Dinic max-flow on small integer networks.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace hatgame::detail {

class FlowNetwork {
 public:
  using Capacity = std::int64_t;
  static constexpr Capacity kInfinite = std::numeric_limits<Capacity>::max() / 4;

  explicit FlowNetwork(int num_nodes) : adjacency_(static_cast<std::size_t>(num_nodes)) {}

  void add_edge(int from, int to, Capacity capacity) {
    adjacency_[from].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, capacity});
    adjacency_[to].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, 0});
  }

  Capacity max_flow(int source, int sink) {
    Capacity total = 0;
    while (build_levels(source, sink)) {
      cursor_.assign(adjacency_.size(), 0);
      while (Capacity pushed = augment(source, sink, kInfinite)) total += pushed;
    }
    return total;
  }

 private:
  struct Edge {
    int to;
    Capacity residual;
  };

  bool build_levels(int source, int sink) {
    level_.assign(adjacency_.size(), -1);
    level_[source] = 0;
    std::queue<int> frontier;
    frontier.push(source);
    while (!frontier.empty()) {
      const int node = frontier.front();
      frontier.pop();
      for (int id : adjacency_[node]) {
        const Edge& e = edges_[id];
        if (e.residual > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[node] + 1;
          frontier.push(e.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  Capacity augment(int node, int sink, Capacity limit) {
    if (node == sink) return limit;
    for (auto& i = cursor_[node]; i < adjacency_[node].size(); ++i) {
      const int id = adjacency_[node][i];
      Edge& e = edges_[id];
      if (e.residual <= 0 || level_[e.to] != level_[node] + 1) continue;
      if (Capacity pushed = augment(e.to, sink, std::min(limit, e.residual))) {
        e.residual -= pushed;
        edges_[id ^ 1].residual += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace hatgame::detail
