#include "pgg/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pgg {

Graph::Graph(int node_count, const std::vector<std::pair<int, int>>& edge_list) {
  if (node_count < 0) throw std::invalid_argument("negative node count");
  adj_.resize(static_cast<size_t>(node_count));
  std::vector<int> deg(static_cast<size_t>(node_count), 0);
  for (auto [u, v] : edge_list) {
    if (u < 0 || v < 0 || u >= node_count || v >= node_count)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                  " " + std::to_string(v));
    if (u == v) throw std::invalid_argument("self-loop at node " + std::to_string(u));
    ++deg[static_cast<size_t>(u)];
    ++deg[static_cast<size_t>(v)];
  }
  for (int i = 0; i < node_count; ++i) adj_[static_cast<size_t>(i)].reserve(static_cast<size_t>(deg[static_cast<size_t>(i)]));
  for (auto [u, v] : edge_list) {
    adj_[static_cast<size_t>(u)].push_back(v);
    adj_[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw std::invalid_argument("parallel edge");
  }
  edge_count_ = static_cast<int>(edge_list.size());
}

bool Graph::has_edge(int u, int v) const {
  const auto& nbrs = adj_[static_cast<size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(edge_count_));
  for (int u = 0; u < node_count(); ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least one node");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(n - 1));
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three nodes");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(n));
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

}  // namespace pgg
