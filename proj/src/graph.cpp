#include "moorescope/graph.hpp"

#include <algorithm>
#include <string>

namespace moorescope {

Graph::Graph(int n) : n_(n), adj_(n), mask_(n, 0) {
  if (n < 0 || n > kMaxVertices) {
    throw SizeError("graph order " + std::to_string(n) + " outside [0, " +
                    std::to_string(kMaxVertices) + "]");
  }
}

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges)
    : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::out_of_range("edge endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("self-loop rejected");
  if (adjacent(u, v)) throw std::invalid_argument("duplicate edge rejected");
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
  mask_[u] |= std::uint64_t{1} << v;
  mask_[v] |= std::uint64_t{1} << u;
  ++edge_count_;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  Graph out(n_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.add_edge(perm[u], perm[v]);
    }
  }
  return out;
}

bool Path::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool Path::valid_in(const Graph& g) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j]) return false;
    }
    if (i + 1 < vertices.size() && !g.adjacent(vertices[i], vertices[i + 1])) {
      return false;
    }
  }
  return true;
}

}  // namespace moorescope
