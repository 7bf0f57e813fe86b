#ifndef CHROMHAM_GRAPH6_HH
#define CHROMHAM_GRAPH6_HH

#include <stdexcept>
#include <string>
#include <string_view>

#include "chromham/graph.hh"

namespace chromham {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int max_graph6_order = 62;
inline constexpr std::string_view graph6_header = ">>graph6<<";

/// Decodes one graph6 string (single-byte order form, n <= 62). A leading
/// ">>graph6<<" header and a trailing newline are stripped. Non-zero padding
/// bits and trailing bytes are rejected so that encoding a parsed string
/// reproduces it byte for byte.
Graph parse_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

}  // namespace chromham

#endif
