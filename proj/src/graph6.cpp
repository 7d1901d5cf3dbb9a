#include "moorescope/graph6.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace moorescope {

namespace {
constexpr int kBias = 63;
constexpr int kMaxByte = 126;
}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw ParseError("empty graph6 string", 0);
  unsigned char header = static_cast<unsigned char>(line[0]);
  if (header < kBias || header > kMaxByte) {
    throw ParseError("invalid header byte", 0);
  }
  if (header == kMaxByte) {
    // '~' introduces the multi-byte order encoding for n > 62.
    throw ParseError("unsupported order header (n > 62)", 0);
  }
  int n = header - kBias;
  std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t nbytes = (nbits + 5) / 6;
  if (line.size() < 1 + nbytes) {
    throw ParseError("truncated graph6 body: expected " +
                         std::to_string(nbytes) + " edge bytes",
                     line.size());
  }
  if (line.size() > 1 + nbytes) {
    throw ParseError("trailing bytes after graph6 body", 1 + nbytes);
  }

  Graph g(n);
  std::size_t bit = 0;
  for (Vertex col = 1; col < n; ++col) {
    for (Vertex row = 0; row < col; ++row, ++bit) {
      std::size_t byte_index = 1 + bit / 6;
      unsigned char b = static_cast<unsigned char>(line[byte_index]);
      if (b < kBias || b > kMaxByte) {
        throw ParseError("invalid body byte", byte_index);
      }
      int value = b - kBias;
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(row, col);
    }
  }
  // Padding bits must be zero.
  for (std::size_t pad = nbits; pad < nbytes * 6; ++pad) {
    std::size_t byte_index = 1 + pad / 6;
    int value = static_cast<unsigned char>(line[byte_index]) - kBias;
    if ((value >> (5 - pad % 6)) & 1) {
      throw ParseError("nonzero padding bits", byte_index);
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  int n = g.order();
  if (n > kMaxVertices) {
    throw SizeError("graph6 single-byte header supports n <= 62");
  }
  std::string out;
  out.push_back(static_cast<char>(n + kBias));
  int acc = 0;
  int used = 0;
  for (Vertex col = 1; col < n; ++col) {
    for (Vertex row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph6_stream(in);
}

}  // namespace moorescope
