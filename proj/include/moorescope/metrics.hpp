#ifndef MOORESCOPE_METRICS_HPP
#define MOORESCOPE_METRICS_HPP

#include <vector>

#include "moorescope/graph.hpp"

namespace moorescope {

// Exact hop distances from source; kInfDist for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// All-pairs hop counts. Immutable after compute(); shareable across threads.
class DistanceMatrix {
 public:
  static DistanceMatrix compute(const Graph& g);

  int at(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  int order() const { return n_; }

  // Max entry; kInfDist if some pair is unreachable.
  int diameter() const;

 private:
  DistanceMatrix(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {}
  int n_;
  std::vector<int> d_;
};

// Max over all pairs of hop distance; kInfDist if disconnected. n >= 1.
int diameter(const Graph& g);

// Length of the shortest cycle; kInfDist for forests. Per-vertex truncated
// BFS, first non-tree edge closing a cycle.
int girth(const Graph& g);

struct DegreeStats {
  int min_degree;
  int max_degree;
  bool is_regular;
};
DegreeStats degree_stats(const Graph& g);

}  // namespace moorescope

#endif
