#ifndef CHROMHAM_CYCLE_HH
#define CHROMHAM_CYCLE_HH

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "chromham/graph.hh"

namespace chromham {

enum class Direction { forward, backward };

/// Oriented cycle: a sequence of at least three distinct vertices, read
/// cyclically. Adjacency in a host graph is checked by validate_cycle().
class Cycle {
 public:
  /// Throws std::invalid_argument on fewer than three vertices or repeats.
  explicit Cycle(std::vector<Vertex> order);

  int length() const { return static_cast<int>(order_.size()); }
  const std::vector<Vertex>& order() const { return order_; }
  VertexSet vertices() const { return members_; }
  bool contains(Vertex v) const { return v >= 0 && v < 64 && members_.contains(v); }
  /// Position of v in order(); throws std::out_of_range when v is off the cycle.
  int position(Vertex v) const;

  Vertex succ(Vertex v) const;
  Vertex pred(Vertex v) const;
  Vertex at(int position) const;

  /// Vertices from x to y inclusive, walking with (forward) or against
  /// (backward) the orientation.
  std::vector<Vertex> arc(Vertex x, Vertex y, Direction d = Direction::forward) const;

  Cycle reversed() const;
  /// Same orientation, starting at v.
  Cycle rotated_to(Vertex v) const;
  /// Rotation to the least vertex, then the reading whose second vertex is smaller.
  Cycle normalized() const;

  friend bool operator==(const Cycle& a, const Cycle& b) { return a.order_ == b.order_; }

 private:
  std::vector<Vertex> order_;
  VertexSet members_;
  std::array<std::int8_t, 64> pos_{};
};

struct CycleNeighbors {
  Vertex succ;
  Vertex pred;
};
CycleNeighbors cycle_nav(const Cycle& c, Vertex x);

/// Distinct vertices inside the graph, consecutive ones adjacent, including last to first.
bool validate_cycle(const Graph& g, const Cycle& c);
bool validate_cycle(const Graph& g, const std::vector<Vertex>& sequence);

std::string format_vertices(const std::vector<Vertex>& vs);
std::string format_vertices(VertexSet s);

}  // namespace chromham

#endif
