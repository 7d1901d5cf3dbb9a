#ifndef MOORESCOPE_REPEATS_HPP
#define MOORESCOPE_REPEATS_HPP

#include <vector>

#include "moorescope/graph.hpp"

namespace moorescope {

// x' is a repeat of x with multiplicity m when exactly m+1 distinct simple
// paths of length <= D join them. All paths of length <= D are counted,
// not only shortest ones: multiplicity-2 repeats require a D-path counted
// alongside shorter ones.
struct RepeatRecord {
  Vertex x;
  Vertex other;
  int multiplicity;               // path count minus one
  std::vector<Path> witnesses;    // the multiplicity+1 paths, x -> other
};

// Every repeat of x, ordered by the other endpoint.
std::vector<RepeatRecord> repeats_of(const Graph& g, Vertex x, int diam);

// Sum of repeat multiplicities over repeats_of(x); 2 for every vertex of a
// defect-2 graph.
int repeat_multiplicity_sum(const Graph& g, Vertex x, int diam);

}  // namespace moorescope

#endif
