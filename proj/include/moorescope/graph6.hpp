#ifndef MOORESCOPE_GRAPH6_HPP
#define MOORESCOPE_GRAPH6_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "moorescope/graph.hpp"

namespace moorescope {

// Standard graph6: header byte n+63 (n <= 62), then the upper adjacency
// triangle in column-major order x(1,0), x(2,0), x(2,1), x(3,0), ... packed
// big-endian into 6-bit groups, each offset by 63, zero-padded.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// One graph6 string per line; '#' comment lines and blank lines ignored.
// Throws ParseError on the first malformed line.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace moorescope

#endif
