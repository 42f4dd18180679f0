#pragma once

#include <utility>
#include <vector>

namespace pgg {

// Simple undirected graph with 0-based node ids. Rejects self-loops,
// parallel edges, and out-of-range endpoints at construction. Neighbor lists
// are kept sorted.
class Graph {
 public:
  Graph() = default;
  Graph(int node_count, const std::vector<std::pair<int, int>>& edge_list);

  int node_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
  bool has_edge(int u, int v) const;
  int max_degree() const;
  // Edge list with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
};

Graph make_path(int n);   // nodes 0..n-1, edges {i, i+1}
Graph make_cycle(int n);  // n >= 3

}  // namespace pgg
