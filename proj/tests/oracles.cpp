#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracles {

using moorescope::kInfDist;

std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInfDist));
  for (Vertex v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (Vertex w : g.neighbors(v)) d[v][w] = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (d[i][k] == kInfDist) continue;
      for (int j = 0; j < n; ++j) {
        if (d[k][j] == kInfDist) continue;
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

namespace {

// DFS from anchor over vertices > anchor; emits each cycle once by
// requiring the second vertex to be smaller than the last.
void cycle_dfs(const Graph& g, Vertex anchor, std::vector<Vertex>& path,
               std::vector<bool>& on_path, int maxlen,
               std::vector<std::vector<Vertex>>& out) {
  Vertex u = path.back();
  for (Vertex v : g.neighbors(u)) {
    if (v == anchor && path.size() >= 3 && path[1] < path.back()) {
      out.push_back(path);
    }
    if (v <= anchor || on_path[v]) continue;
    if (static_cast<int>(path.size()) >= maxlen) continue;
    path.push_back(v);
    on_path[v] = true;
    cycle_dfs(g, anchor, path, on_path, maxlen, out);
    on_path[v] = false;
    path.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Vertex>> brute_cycles(const Graph& g, int maxlen) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path;
  std::vector<bool> on_path(g.order(), false);
  for (Vertex anchor = 0; anchor < g.order(); ++anchor) {
    path.assign(1, anchor);
    on_path.assign(g.order(), false);
    on_path[anchor] = true;
    cycle_dfs(g, anchor, path, on_path, maxlen, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int brute_girth(const Graph& g) {
  auto cycles = brute_cycles(g, g.order());
  int best = kInfDist;
  for (const auto& c : cycles) best = std::min<int>(best, c.size());
  return best;
}

namespace {

long path_count_rec(const Graph& g, Vertex u, Vertex b, int budget,
                    std::vector<bool>& used) {
  if (u == b) return 1;
  if (budget == 0) return 0;
  long total = 0;
  used[u] = true;
  for (Vertex w : g.neighbors(u)) {
    if (!used[w]) total += path_count_rec(g, w, b, budget - 1, used);
  }
  used[u] = false;
  return total;
}

}  // namespace

long brute_path_count(const Graph& g, Vertex a, Vertex b, int maxlen) {
  if (a == b) return 1;
  std::vector<bool> used(g.order(), false);
  return path_count_rec(g, a, b, maxlen, used);
}

std::string ref_graph6_encode(const Graph& g) {
  int n = g.order();
  std::string bits;
  for (Vertex col = 1; col < n; ++col) {
    for (Vertex row = 0; row < col; ++row) {
      bits.push_back(g.adjacent(row, col) ? '1' : '0');
    }
  }
  while (bits.size() % 6 != 0) bits.push_back('0');
  std::string out(1, static_cast<char>(n + 63));
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (int j = 0; j < 6; ++j) v = v * 2 + (bits[i + j] - '0');
    out.push_back(static_cast<char>(v + 63));
  }
  return out;
}

Graph ref_graph6_decode(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty");
  int n = s[0] - 63;
  std::string bits;
  for (std::size_t i = 1; i < s.size(); ++i) {
    int v = s[i] - 63;
    for (int j = 5; j >= 0; --j) bits.push_back(((v >> j) & 1) ? '1' : '0');
  }
  Graph g(n);
  std::size_t k = 0;
  for (Vertex col = 1; col < n; ++col) {
    for (Vertex row = 0; row < col; ++row, ++k) {
      if (bits.at(k) == '1') g.add_edge(row, col);
    }
  }
  return g;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph random_relabeling(const Graph& g, std::mt19937& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabeled(perm);
}

}  // namespace oracles
