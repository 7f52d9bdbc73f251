#include "pxcayley/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace pxcayley {

Graph::Graph(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
  if (num_vertices < 0) throw std::domain_error("negative vertex count");
  adj_.assign(num_vertices, {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices)
      throw std::domain_error("edge endpoint out of range");
    if (u == v) throw std::domain_error("loop edge rejected");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& row : adj_) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw std::domain_error("duplicate edge rejected");
  }
  num_edges_ = static_cast<int>(edges.size());
  if (num_vertices <= 64) {
    masks_.assign(num_vertices, 0);
    for (int v = 0; v < num_vertices; ++v) {
      for (int w : adj_[v]) masks_[v] |= std::uint64_t{1} << w;
    }
  }
}

bool Graph::adjacent(int u, int v) const {
  if (!masks_.empty()) return (masks_[u] >> v) & 1;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

bool Graph::is_connected() const {
  const int n = num_vertices();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace pxcayley
