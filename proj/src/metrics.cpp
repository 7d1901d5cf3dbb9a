#include "moorescope/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace moorescope {

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  if (source < 0 || source >= g.order()) {
    throw std::out_of_range("bfs source out of range");
  }
  std::vector<int> dist(g.order(), kInfDist);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] == kInfDist) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

DistanceMatrix DistanceMatrix::compute(const Graph& g) {
  int n = g.order();
  std::vector<int> d;
  d.reserve(static_cast<std::size_t>(n) * n);
  for (Vertex v = 0; v < n; ++v) {
    auto row = bfs_distances(g, v);
    d.insert(d.end(), row.begin(), row.end());
  }
  return DistanceMatrix(n, std::move(d));
}

int DistanceMatrix::diameter() const {
  int best = 0;
  for (int x : d_) {
    if (x == kInfDist) return kInfDist;
    best = std::max(best, x);
  }
  return best;
}

int diameter(const Graph& g) {
  if (g.order() < 1) throw DomainError("diameter requires n >= 1");
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int x : bfs_distances(g, v)) {
      if (x == kInfDist) return kInfDist;
      best = std::max(best, x);
    }
  }
  return best;
}

int girth(const Graph& g) {
  if (g.order() < 1) throw DomainError("girth requires n >= 1");
  int n = g.order();
  int best = kInfDist;
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kInfDist);
    queue.clear();
    dist[root] = 0;
    parent[root] = -1;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex u = queue[head];
      // A cycle found deeper than this cannot beat the current best.
      if (best != kInfDist && 2 * dist[u] >= best) break;
      for (Vertex v : g.neighbors(u)) {
        if (dist[v] == kInfDist) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (v != parent[u]) {
          // Non-tree edge: the two root paths plus (u,v) contain a cycle of
          // at most this length; min over all roots is exact.
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  return best;
}

DegreeStats degree_stats(const Graph& g) {
  if (g.order() == 0) return {0, 0, true};
  int lo = g.degree(0);
  int hi = lo;
  for (Vertex v = 1; v < g.order(); ++v) {
    lo = std::min(lo, g.degree(v));
    hi = std::max(hi, g.degree(v));
  }
  return {lo, hi, lo == hi};
}

}  // namespace moorescope
