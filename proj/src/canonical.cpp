#include "moorescope/canonical.hpp"

#include <algorithm>
#include <map>

#include "moorescope/graph6.hpp"

namespace moorescope {

namespace {

using Cells = std::vector<std::vector<Vertex>>;

// 1-dimensional refinement: split cells by per-cell neighbor counts until
// equitable. Sub-cells are ordered by their count signatures, which keeps
// the procedure labeling-invariant.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      if (cells[ci].size() <= 1) continue;
      std::map<std::vector<int>, std::vector<Vertex>> groups;
      for (Vertex v : cells[ci]) {
        std::vector<int> sig(cells.size());
        for (std::size_t cj = 0; cj < cells.size(); ++cj) {
          int cnt = 0;
          for (Vertex w : cells[cj]) cnt += g.adjacent(v, w) ? 1 : 0;
          sig[cj] = cnt;
        }
        groups[std::move(sig)].push_back(v);
      }
      if (groups.size() > 1) {
        Cells replacement;
        for (auto& [sig, members] : groups) replacement.push_back(std::move(members));
        cells.erase(cells.begin() + static_cast<long>(ci));
        cells.insert(cells.begin() + static_cast<long>(ci),
                     std::make_move_iterator(replacement.begin()),
                     std::make_move_iterator(replacement.end()));
        changed = true;
        break;
      }
    }
  }
}

std::string encode(const Graph& g, const std::vector<Vertex>& new_of_old) {
  std::vector<Vertex> old_of_new(g.order());
  for (Vertex v = 0; v < g.order(); ++v) old_of_new[new_of_old[v]] = v;
  std::string out;
  out.push_back(static_cast<char>(g.order() + 63));
  int acc = 0;
  int used = 0;
  for (Vertex col = 1; col < g.order(); ++col) {
    for (Vertex row = 0; row < col; ++row) {
      acc = (acc << 1) |
            (g.adjacent(old_of_new[row], old_of_new[col]) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

struct CanonSearch {
  const Graph& g;
  std::string best;
  std::vector<Vertex> best_perm;

  void run(Cells cells) {
    refine(g, cells);
    int target = -1;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      if (cells[ci].size() > 1) {
        target = static_cast<int>(ci);
        break;
      }
    }
    if (target < 0) {
      std::vector<Vertex> perm(g.order());
      for (std::size_t pos = 0; pos < cells.size(); ++pos) {
        perm[cells[pos][0]] = static_cast<Vertex>(pos);
      }
      std::string enc = encode(g, perm);
      if (best.empty() || enc < best) {
        best = std::move(enc);
        best_perm = std::move(perm);
      }
      return;
    }
    std::vector<Vertex> members = cells[target];
    std::sort(members.begin(), members.end());
    for (Vertex v : members) {
      Cells next = cells;
      std::vector<Vertex> rest;
      for (Vertex w : cells[target]) {
        if (w != v) rest.push_back(w);
      }
      next[target] = {v};
      next.insert(next.begin() + target + 1, std::move(rest));
      run(std::move(next));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxVertices) {
    throw SizeError("canonical form supports n <= 62");
  }
  if (g.order() == 0) return {write_graph6(g), {}};
  Cells initial(1);
  for (Vertex v = 0; v < g.order(); ++v) initial[0].push_back(v);
  CanonSearch search{g, {}, {}};
  search.run(std::move(initial));
  return {std::move(search.best), std::move(search.best_perm)};
}

std::string canonical_key_colored(const Graph& g, std::span<const int> colors) {
  std::map<int, std::vector<Vertex>> by_color;
  for (Vertex v = 0; v < g.order(); ++v) by_color[colors[v]].push_back(v);
  Cells initial;
  std::string sizes;
  for (auto& [color, members] : by_color) {
    sizes += std::to_string(color) + ":" + std::to_string(members.size()) + ";";
    initial.push_back(std::move(members));
  }
  CanonSearch search{g, {}, {}};
  search.run(std::move(initial));
  return sizes + search.best;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_form(g).graph6 == canonical_form(h).graph6;
}

}  // namespace moorescope
