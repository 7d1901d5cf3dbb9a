#ifndef MOORESCOPE_CYCLES_HPP
#define MOORESCOPE_CYCLES_HPP

#include <optional>
#include <vector>

#include "moorescope/graph.hpp"

namespace moorescope {

// Cycle as a canonical cyclic vertex sequence: smallest vertex first,
// then the smaller of its two cyclic neighbors. Equality and set
// membership are therefore well-defined.
struct Cycle {
  std::vector<Vertex> vertices;

  static Cycle canonical(std::vector<Vertex> raw);

  int length() const { return static_cast<int>(vertices.size()); }
  bool contains(Vertex v) const;
  int index_of(Vertex v) const;  // -1 when absent

  // Hops between two member vertices the short way around.
  int cycle_distance(Vertex a, Vertex b) const;

  // The arc of `steps` hops starting at member vertex `from`, walking
  // forward (dir=+1) or backward (dir=-1) in stored order.
  Path arc(Vertex from, int steps, int dir) const;

  bool operator==(const Cycle& o) const = default;
  bool operator<(const Cycle& o) const { return vertices < o.vertices; }
};

// All distinct cycles of length <= 2*diam through v, each reported once.
std::vector<Cycle> short_cycles_through(const Graph& g, Vertex v, int diam);

// All distinct cycles of length <= maxlen in g.
std::vector<Cycle> all_cycles_upto(const Graph& g, int maxlen);

// Common subgraph of two cycles when it is a single path: an empty path
// for disjoint cycles, a 0-length path for one shared vertex. nullopt when
// the intersection is disconnected or contains a cycle.
std::optional<Path> intersection_path(const Cycle& c1, const Cycle& c2);

// For x on a 2D-cycle, the unique vertex at cycle-distance D.
Vertex rep_in_cycle(const Cycle& c, Vertex x, int diam);

// For a subpath of a 2D-cycle of length <= D-1, the opposite subpath:
// every vertex shifted by D around the cycle. Involution; endpoints
// commute with rep_in_cycle.
Path rep_path_in_cycle(const Cycle& c, const Path& p, int diam);

}  // namespace moorescope

#endif
