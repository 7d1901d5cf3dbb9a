#ifndef MOORESCOPE_GRAPH_HPP
#define MOORESCOPE_GRAPH_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "moorescope/errors.hpp"

namespace moorescope {

using Vertex = int;

// Single-byte graph6 header; every desk-scale target fits.
inline constexpr int kMaxVertices = 62;

// Sentinel for unreachable / no cycle, distinct from any legal hop count.
inline constexpr int kInfDist = std::numeric_limits<int>::max();

// Simple undirected graph on vertices 0..n-1. Dual representation: sorted
// neighbor lists for stable iteration, one bitset word per vertex for O(1)
// adjacency tests. Immutable once built; safe to share across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int order() const { return n_; }
  int edge_count() const { return edge_count_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }

  bool adjacent(Vertex u, Vertex v) const {
    return (mask_[u] >> v) & 1u;
  }

  std::uint64_t neighbor_mask(Vertex v) const { return mask_[v]; }

  // Construction-phase only; keeps neighbor lists sorted. Rejects loops,
  // duplicates and out-of-range endpoints.
  void add_edge(Vertex u, Vertex v);

  // Copy with vertex v relabeled to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  int n_ = 0;
  int edge_count_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> mask_;
};

// Open vertex sequence; consecutive vertices adjacent, no vertex repeated.
// An empty sequence is the "no common vertex" marker; a single vertex is a
// 0-length path.
struct Path {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  bool empty() const { return vertices.empty(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool contains(Vertex v) const;

  // Checks adjacency of consecutive vertices and absence of repeats.
  bool valid_in(const Graph& g) const;

  bool operator==(const Path& other) const = default;
};

}  // namespace moorescope

#endif
