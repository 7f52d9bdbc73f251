#ifndef PXCAYLEY_GRAPH_HPP
#define PXCAYLEY_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace pxcayley {

// Simple undirected graph with sorted adjacency lists. Construction rejects
// loops and duplicate edges.
class Graph {
 public:
  Graph() = default;
  Graph(int num_vertices, const std::vector<std::pair<int, int>>& edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return num_edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool is_connected() const;

  // Adjacency row as a bitmask; only valid for graphs on <= 64 vertices.
  std::uint64_t neighbor_mask(int v) const { return masks_[v]; }
  bool has_masks() const { return !masks_.empty(); }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> masks_;
  int num_edges_ = 0;
};

}  // namespace pxcayley

#endif
