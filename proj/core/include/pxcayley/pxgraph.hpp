#ifndef PXCAYLEY_PXGRAPH_HPP
#define PXCAYLEY_PXGRAPH_HPP

#include <cstdint>
#include <string>

#include "pxcayley/graph.hpp"

namespace pxcayley {

// Vertex (i, w) of PX(n,k): cycle position i in Z_n and a k-bit word w,
// first letter most significant.
struct PxVertex {
  int i = 0;
  std::uint32_t word = 0;
};

// The Praeger-Xu graph PX(n,k) on Z_n x {0,1}^k: (i, w1..wk) is adjacent to
// (i+1, w2..wk b) for b in {0,1}, edges symmetrized. 4-regular and simple
// for n >= 3, 1 <= k <= n-1.
class PxGraph {
 public:
  PxGraph(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  const Graph& graph() const { return graph_; }
  int num_vertices() const { return graph_.num_vertices(); }

  // Fixed bijection idx = i * 2^k + word; throws std::domain_error outside
  // the valid ranges.
  int vertex_index(const PxVertex& v) const;
  PxVertex index_vertex(int idx) const;

  // Edge-list text: header "n k |V| |E|", then one "u v" line per edge with
  // u < v, lexicographically ordered.
  std::string to_edge_list() const;

 private:
  int n_;
  int k_;
  Graph graph_;
};

inline PxGraph build_px(int n, int k) { return PxGraph(n, k); }

}  // namespace pxcayley

#endif
