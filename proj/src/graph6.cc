#include "chromham/graph6.hh"

namespace chromham {

namespace {

constexpr int bias = 63;

int decode_byte(char c, std::size_t offset) {
  const int value = static_cast<unsigned char>(c);
  if (value < bias || value > 126)
    throw Graph6Error("graph6: byte " + std::to_string(value) + " at offset " + std::to_string(offset) +
                      " outside 63..126");
  return value - bias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(graph6_header)) text.remove_prefix(graph6_header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("graph6: empty input");

  const int n = decode_byte(text[0], 0);
  if (n > max_graph6_order) throw Graph6Error("graph6: orders above 62 are not supported");

  const int bits = pair_count(n);
  const std::size_t chunks = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() < 1 + chunks)
    throw Graph6Error("graph6: truncated payload, expected " + std::to_string(chunks) + " bytes after order, got " +
                      std::to_string(text.size() - 1));
  if (text.size() > 1 + chunks) throw Graph6Error("graph6: trailing bytes after payload");

  GraphBuilder b(n);
  int bit = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++bit) {
      const std::size_t at = 1 + static_cast<std::size_t>(bit / 6);
      const int chunk = decode_byte(text[at], at);
      if ((chunk >> (5 - bit % 6)) & 1) b.add_edge(u, v);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = chunks;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (decode_byte(text[last], last) & pad_mask) throw Graph6Error("graph6: non-zero padding bits");
  }
  return b.build();
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > max_graph6_order) throw Graph6Error("graph6: orders above 62 are not supported");
  std::string out(1, static_cast<char>(bias + n));
  int chunk = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(bias + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(bias + (chunk << (6 - filled))));
  return out;
}

}  // namespace chromham
