#include "moorescope/repeats.hpp"

#include <stdexcept>

namespace moorescope {

namespace {

void path_dfs(const Graph& g, std::vector<Vertex>& path, std::uint64_t used,
              int budget, std::vector<std::vector<Path>>& to) {
  Vertex u = path.back();
  for (Vertex w : g.neighbors(u)) {
    if ((used >> w) & 1) continue;
    to[w].push_back(Path{path});
    to[w].back().vertices.push_back(w);
    if (budget > 1) {
      path.push_back(w);
      path_dfs(g, path, used | (std::uint64_t{1} << w), budget - 1, to);
      path.pop_back();
    }
  }
}

}  // namespace

std::vector<RepeatRecord> repeats_of(const Graph& g, Vertex x, int diam) {
  if (x < 0 || x >= g.order()) throw std::out_of_range("vertex out of range");
  std::vector<std::vector<Path>> to(g.order());
  std::vector<Vertex> path{x};
  if (diam >= 1) path_dfs(g, path, std::uint64_t{1} << x, diam, to);

  std::vector<RepeatRecord> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == x) continue;
    if (to[v].size() >= 2) {
      out.push_back(RepeatRecord{x, v, static_cast<int>(to[v].size()) - 1,
                                 std::move(to[v])});
    }
  }
  return out;
}

int repeat_multiplicity_sum(const Graph& g, Vertex x, int diam) {
  int sum = 0;
  for (const auto& r : repeats_of(g, x, diam)) sum += r.multiplicity;
  return sum;
}

}  // namespace moorescope
