#include "moorescope/cycles.hpp"

#include <algorithm>
#include <set>

namespace moorescope {

Cycle Cycle::canonical(std::vector<Vertex> raw) {
  const int k = static_cast<int>(raw.size());
  if (k < 3) throw PreconditionError("cycle needs at least 3 vertices");
  int pos = static_cast<int>(
      std::min_element(raw.begin(), raw.end()) - raw.begin());
  std::vector<Vertex> out(k);
  Vertex succ = raw[(pos + 1) % k];
  Vertex pred = raw[(pos + k - 1) % k];
  int dir = succ < pred ? 1 : -1;
  for (int i = 0; i < k; ++i) out[i] = raw[((pos + dir * i) % k + k) % k];
  return Cycle{std::move(out)};
}

bool Cycle::contains(Vertex v) const { return index_of(v) >= 0; }

int Cycle::index_of(Vertex v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  return it == vertices.end() ? -1
                              : static_cast<int>(it - vertices.begin());
}

int Cycle::cycle_distance(Vertex a, Vertex b) const {
  int i = index_of(a);
  int j = index_of(b);
  if (i < 0 || j < 0) throw PreconditionError("vertex not on cycle");
  int fwd = ((j - i) % length() + length()) % length();
  return std::min(fwd, length() - fwd);
}

Path Cycle::arc(Vertex from, int steps, int dir) const {
  int i = index_of(from);
  if (i < 0) throw PreconditionError("vertex not on cycle");
  Path p;
  for (int s = 0; s <= steps; ++s) {
    p.vertices.push_back(vertices[((i + dir * s) % length() + length()) % length()]);
  }
  return p;
}

namespace {

void through_dfs(const Graph& g, Vertex origin, std::vector<Vertex>& path,
                 std::uint64_t on_path, int maxlen, std::set<Cycle>& out) {
  Vertex u = path.back();
  for (Vertex w : g.neighbors(u)) {
    if (w == origin && path.size() >= 3) out.insert(Cycle::canonical(path));
    if (((on_path >> w) & 1) == 0 &&
        static_cast<int>(path.size()) < maxlen) {
      path.push_back(w);
      through_dfs(g, origin, path, on_path | (std::uint64_t{1} << w), maxlen,
                  out);
      path.pop_back();
    }
  }
}

}  // namespace

std::vector<Cycle> short_cycles_through(const Graph& g, Vertex v, int diam) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
  std::set<Cycle> found;
  std::vector<Vertex> path{v};
  through_dfs(g, v, path, std::uint64_t{1} << v, 2 * diam, found);
  return {found.begin(), found.end()};
}

namespace {

// Anchored DFS: cycles whose minimum vertex is the anchor, one direction.
void anchored_dfs(const Graph& g, Vertex anchor, std::vector<Vertex>& path,
                  std::uint64_t on_path, int maxlen,
                  std::vector<Cycle>& out) {
  Vertex u = path.back();
  for (Vertex w : g.neighbors(u)) {
    if (w == anchor && path.size() >= 3 && path[1] < path.back()) {
      out.push_back(Cycle::canonical(path));
    }
    if (w > anchor && ((on_path >> w) & 1) == 0 &&
        static_cast<int>(path.size()) < maxlen) {
      path.push_back(w);
      anchored_dfs(g, anchor, path, on_path | (std::uint64_t{1} << w), maxlen,
                   out);
      path.pop_back();
    }
  }
}

}  // namespace

std::vector<Cycle> all_cycles_upto(const Graph& g, int maxlen) {
  std::vector<Cycle> out;
  std::vector<Vertex> path;
  for (Vertex anchor = 0; anchor < g.order(); ++anchor) {
    path.assign(1, anchor);
    anchored_dfs(g, anchor, path, std::uint64_t{1} << anchor, maxlen, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Path> intersection_path(const Cycle& c1, const Cycle& c2) {
  std::vector<Vertex> common;
  for (Vertex v : c1.vertices) {
    if (c2.contains(v)) common.push_back(v);
  }
  if (common.empty()) return Path{};

  auto cyclic_adjacent = [](const Cycle& c, Vertex a, Vertex b) {
    int i = c.index_of(a);
    int j = c.index_of(b);
    int k = c.length();
    return (i + 1) % k == j || (j + 1) % k == i;
  };

  // Edges present in both cycles, as an adjacency map over `common`.
  std::vector<std::vector<Vertex>> adj(common.size());
  int edge_count = 0;
  for (std::size_t i = 0; i < common.size(); ++i) {
    for (std::size_t j = i + 1; j < common.size(); ++j) {
      if (cyclic_adjacent(c1, common[i], common[j]) &&
          cyclic_adjacent(c2, common[i], common[j])) {
        adj[i].push_back(static_cast<Vertex>(j));
        adj[j].push_back(static_cast<Vertex>(i));
        ++edge_count;
      }
    }
  }

  // A path on k vertices has k-1 edges, degrees <= 2, and is connected.
  if (edge_count != static_cast<int>(common.size()) - 1) return std::nullopt;
  int endpoint = -1;
  for (std::size_t i = 0; i < common.size(); ++i) {
    if (adj[i].size() > 2) return std::nullopt;
    if (adj[i].size() <= 1 && endpoint < 0) endpoint = static_cast<int>(i);
  }
  Path p;
  int prev = -1;
  int cur = endpoint;
  for (std::size_t step = 0; step < common.size(); ++step) {
    p.vertices.push_back(common[cur]);
    int next = -1;
    for (int w : adj[cur]) {
      if (w != prev) next = w;
    }
    prev = cur;
    if (next < 0) break;
    cur = next;
  }
  if (p.vertices.size() != common.size()) return std::nullopt;  // disconnected
  return p;
}

Vertex rep_in_cycle(const Cycle& c, Vertex x, int diam) {
  if (c.length() != 2 * diam) {
    throw PreconditionError("vertex repeat is defined on 2D-cycles only");
  }
  int i = c.index_of(x);
  if (i < 0) throw PreconditionError("vertex not on cycle");
  return c.vertices[(i + diam) % c.length()];
}

Path rep_path_in_cycle(const Cycle& c, const Path& p, int diam) {
  if (c.length() != 2 * diam) {
    throw PreconditionError("path repeat is defined on 2D-cycles only");
  }
  if (p.empty()) throw PreconditionError("empty path has no repeat");
  if (p.length() > diam - 1) {
    throw PreconditionError("path longer than D-1 has no repeat");
  }
  const int k = c.length();
  int i = c.index_of(p.vertices[0]);
  if (i < 0) throw PreconditionError("path not on cycle");
  int dir = 0;
  if (p.vertices.size() >= 2) {
    Vertex second = p.vertices[1];
    if (c.vertices[(i + 1) % k] == second) {
      dir = 1;
    } else if (c.vertices[(i + k - 1) % k] == second) {
      dir = -1;
    } else {
      throw PreconditionError("path is not an arc of the cycle");
    }
  }
  Path out;
  for (std::size_t s = 0; s < p.vertices.size(); ++s) {
    int idx = ((i + dir * static_cast<int>(s)) % k + k) % k;
    if (c.vertices[idx] != p.vertices[s]) {
      throw PreconditionError("path is not an arc of the cycle");
    }
    out.vertices.push_back(c.vertices[(idx + diam) % k]);
  }
  return out;
}

}  // namespace moorescope
