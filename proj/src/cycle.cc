#include "chromham/cycle.hh"

#include <algorithm>
#include <stdexcept>

namespace chromham {

Cycle::Cycle(std::vector<Vertex> order) : order_(std::move(order)) {
  if (order_.size() < 3) throw std::invalid_argument("a cycle needs at least three vertices");
  pos_.fill(-1);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    const Vertex v = order_[i];
    if (v < 0 || v >= 64) throw std::invalid_argument("cycle vertex " + std::to_string(v) + " outside 0..63");
    if (members_.contains(v)) throw std::invalid_argument("cycle repeats vertex " + std::to_string(v));
    members_.insert(v);
    pos_[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(i);
  }
}

int Cycle::position(Vertex v) const {
  if (!contains(v)) throw std::out_of_range("vertex " + std::to_string(v) + " is not on the cycle");
  return pos_[static_cast<std::size_t>(v)];
}

Vertex Cycle::at(int position) const {
  const int len = length();
  return order_[static_cast<std::size_t>(((position % len) + len) % len)];
}

Vertex Cycle::succ(Vertex v) const { return at(position(v) + 1); }
Vertex Cycle::pred(Vertex v) const { return at(position(v) - 1); }

std::vector<Vertex> Cycle::arc(Vertex x, Vertex y, Direction d) const {
  const int step = d == Direction::forward ? 1 : -1;
  int p = position(x);
  const int end = position(y);
  std::vector<Vertex> out{x};
  while (p != end) {
    p = ((p + step) % length() + length()) % length();
    out.push_back(order_[static_cast<std::size_t>(p)]);
  }
  return out;
}

Cycle Cycle::reversed() const {
  std::vector<Vertex> rev(order_.rbegin(), order_.rend());
  return Cycle(std::move(rev));
}

Cycle Cycle::rotated_to(Vertex v) const {
  std::vector<Vertex> rot(order_);
  std::rotate(rot.begin(), rot.begin() + position(v), rot.end());
  return Cycle(std::move(rot));
}

Cycle Cycle::normalized() const {
  const Vertex low = *std::min_element(order_.begin(), order_.end());
  Cycle c = rotated_to(low);
  if (c.order_[1] > c.order_.back()) c = c.reversed().rotated_to(low);
  return c;
}

CycleNeighbors cycle_nav(const Cycle& c, Vertex x) { return {c.succ(x), c.pred(x)}; }

bool validate_cycle(const Graph& g, const std::vector<Vertex>& sequence) {
  if (sequence.size() < 3) return false;
  VertexSet seen;
  for (Vertex v : sequence) {
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i < sequence.size(); ++i)
    if (!g.adjacent(sequence[i], sequence[(i + 1) % sequence.size()])) return false;
  return true;
}

bool validate_cycle(const Graph& g, const Cycle& c) { return validate_cycle(g, c.order()); }

std::string format_vertices(const std::vector<Vertex>& vs) {
  if (vs.empty()) return "-";
  std::string out;
  for (Vertex v : vs) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string format_vertices(VertexSet s) { return format_vertices(s.to_vector()); }

}  // namespace chromham
