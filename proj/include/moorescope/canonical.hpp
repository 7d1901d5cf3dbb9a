#ifndef MOORESCOPE_CANONICAL_HPP
#define MOORESCOPE_CANONICAL_HPP

#include <span>
#include <string>
#include <vector>

#include "moorescope/graph.hpp"

namespace moorescope {

struct CanonicalForm {
  std::string graph6;             // canonical graph6 string
  std::vector<Vertex> relabeling; // relabeling[v] = canonical label of v
};

// Deterministic, labeling-invariant canonical form: iterated
// neighbor-count refinement plus backtracking over the first non-singleton
// cell, taking the lexicographically least graph6 encoding over all
// discrete partitions reached.
CanonicalForm canonical_form(const Graph& g);

// Same, respecting an initial partition by color: only color-preserving
// relabelings compete. The returned string encodes the color-class sizes,
// so equal keys mean color-isomorphic.
std::string canonical_key_colored(const Graph& g, std::span<const int> colors);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace moorescope

#endif
