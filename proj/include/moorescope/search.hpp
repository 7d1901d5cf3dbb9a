#ifndef MOORESCOPE_SEARCH_HPP
#define MOORESCOPE_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "moorescope/graph.hpp"

namespace moorescope {

struct SearchLimits {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  double max_seconds = 0.0;     // 0 = unlimited
};

struct SearchConfig {
  int delta = 3;
  int diam = 2;
  int defect = 2;
  int jobs = 1;
  SearchLimits limits;

  // Derived on make():
  int order = 0;              // moore_bound(delta, diam) - defect
  int girth_min = 3;          // sound pruning bound: 2D+1-defect for defect <= 2
  bool force_regular = true;  // defect < regularity threshold

  // Throws DomainError / InfeasibleConfig / SizeError.
  static SearchConfig make(int delta, int diam, int defect);
};

struct SearchStats {
  std::uint64_t nodes = 0;   // augmentation events explored
  std::uint64_t leaves = 0;  // complete graphs reached
  std::uint64_t girth_prunes = 0;
  std::uint64_t reach_prunes = 0;
  std::uint64_t degree_prunes = 0;
  std::uint64_t disconnect_prunes = 0;
  std::uint64_t duplicate_solutions = 0;

  bool operator==(const SearchStats&) const = default;
};

struct SearchResult {
  std::vector<std::string> solutions;  // canonical graph6, discovery order
  SearchStats stats;
  bool exhaustive = true;
};

// All (delta, diam, -defect)-graphs up to isomorphism, by vertex-ordered
// edge augmentation: vertices settled in index order, neighbor candidates
// in increasing index, untouched vertices entered in index order. Pruning:
// exact degrees when regularity is forced, incremental girth floor, and an
// optimistic reachability bound per settled vertex. Every emitted solution
// has diameter exactly diam and maximum degree exactly delta.
SearchResult enumerate_defect_graphs(const SearchConfig& cfg);

// Independent oracle: every d-regular graph on `order` vertices up to
// isomorphism (naive row-wise generation plus canonical dedup), filtered
// by the predicate. The predicate must be labeling-invariant. Guarded to
// order <= 12.
std::vector<Graph> brute_force_filter(
    int order, int degree, const std::function<bool(const Graph&)>& predicate);

}  // namespace moorescope

#endif
