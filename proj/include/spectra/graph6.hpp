#ifndef SPECTRA_GRAPH6_HPP
#define SPECTRA_GRAPH6_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "spectra/graph.hpp"

namespace spectra {

/// Malformed graph6 input. `offset()` is the 0-based byte position of the
/// first offending byte (or the string length for truncated input).
class Graph6Error : public GraphError {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : GraphError("graph6 byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Standard graph6: size prefix N(n), then the upper triangle read column by
// column (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed big-endian into 6-bit
// groups, each offset by 63, zero-padded to a whole byte.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

}  // namespace spectra

#endif  // SPECTRA_GRAPH6_HPP
