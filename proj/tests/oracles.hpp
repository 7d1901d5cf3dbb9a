// Test-only brute-force oracles, kept independent of the library's
// algorithmic paths: straightforward enumerations, no bitsets, no pruning
// beyond what the definition itself demands.
#ifndef MOORESCOPE_TEST_ORACLES_HPP
#define MOORESCOPE_TEST_ORACLES_HPP

#include <random>
#include <string>
#include <vector>

#include "moorescope/graph.hpp"

namespace oracles {

using moorescope::Graph;
using moorescope::Vertex;

// All-pairs shortest paths by Floyd-Warshall.
std::vector<std::vector<int>> floyd_warshall(const Graph& g);

// Girth by enumerating every cycle; moorescope::kInfDist for forests.
int brute_girth(const Graph& g);

// Every cycle of length <= maxlen, each as a canonical vertex list:
// smallest vertex first, then the smaller of its two cyclic neighbors.
// Sorted lexicographically.
std::vector<std::vector<Vertex>> brute_cycles(const Graph& g, int maxlen);

// Number of simple paths from a to b of length <= maxlen (plain recursion).
long brute_path_count(const Graph& g, Vertex a, Vertex b, int maxlen);

// Reference graph6 codec: bit-string based, written separately from the
// production codec.
std::string ref_graph6_encode(const Graph& g);
Graph ref_graph6_decode(const std::string& s);

// Erdos-Renyi-style random graph from a seeded engine.
Graph random_graph(int n, double p, std::mt19937& rng);

// Random relabeling of g.
Graph random_relabeling(const Graph& g, std::mt19937& rng);

}  // namespace oracles

#endif
