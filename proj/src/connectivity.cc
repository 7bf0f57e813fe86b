#include <algorithm>
#include <array>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>

#include "chromham/invariants.hh"

namespace chromham {

namespace {

// Node set of the vertex-split network: in(v) = 2v, out(v) = 2v + 1, and
// one extra sink. 128 bits cover graphs up to order 63.
struct NodeBits {
  std::array<std::uint64_t, 2> words{};

  bool test(int i) const { return (words[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1U; }
  void set(int i) { words[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }

  template <typename F>
  void for_each(F&& f) const {
    for (int w = 0; w < 2; ++w)
      for (std::uint64_t rest = words[static_cast<std::size_t>(w)]; rest != 0; rest &= rest - 1)
        f(w * 64 + std::countr_zero(rest));
  }
};

constexpr int max_flow_order = 63;

int in_node(Vertex v) { return 2 * v; }
int out_node(Vertex v) { return 2 * v + 1; }

class UnitNetwork {
 public:
  explicit UnitNetwork(int nodes)
      : residual_(static_cast<std::size_t>(nodes)), original_(static_cast<std::size_t>(nodes)), parent_(static_cast<std::size_t>(nodes)) {}

  void add_arc(int a, int b) {
    residual_[static_cast<std::size_t>(a)].set(b);
    original_[static_cast<std::size_t>(a)].set(b);
  }

  int max_flow(int source, int sink, int limit) {
    int flow = 0;
    while (flow < limit && augment(source, sink)) ++flow;
    return flow;
  }

  bool carries_flow(int a, int b) const {
    return original_[static_cast<std::size_t>(a)].test(b) && !residual_[static_cast<std::size_t>(a)].test(b);
  }

  int flow_successor(int a) const {
    int next = -1;
    original_[static_cast<std::size_t>(a)].for_each([&](int b) {
      if (next < 0 && carries_flow(a, b)) next = b;
    });
    return next;
  }

 private:
  // Breadth-first search visiting residual arcs in increasing node order.
  bool augment(int source, int sink) {
    std::fill(parent_.begin(), parent_.end(), -1);
    parent_[static_cast<std::size_t>(source)] = source;
    std::queue<int> frontier;
    frontier.push(source);
    while (!frontier.empty() && parent_[static_cast<std::size_t>(sink)] < 0) {
      const int a = frontier.front();
      frontier.pop();
      residual_[static_cast<std::size_t>(a)].for_each([&](int b) {
        if (parent_[static_cast<std::size_t>(b)] >= 0) return;
        parent_[static_cast<std::size_t>(b)] = a;
        frontier.push(b);
      });
    }
    if (parent_[static_cast<std::size_t>(sink)] < 0) return false;
    for (int b = sink; b != source;) {
      const int a = parent_[static_cast<std::size_t>(b)];
      residual_[static_cast<std::size_t>(a)].reset(b);
      residual_[static_cast<std::size_t>(b)].set(a);
      b = a;
    }
    return true;
  }

  std::vector<NodeBits> residual_;
  std::vector<NodeBits> original_;
  std::vector<int> parent_;
};

void require_flow_order(const Graph& g) {
  if (g.order() > max_flow_order)
    throw std::domain_error("connectivity routines support graphs up to order " + std::to_string(max_flow_order));
}

}  // namespace

int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit) {
  require_flow_order(g);
  if (s == t || g.adjacent(s, t)) throw std::invalid_argument("local_connectivity needs distinct non-adjacent vertices");
  UnitNetwork net(2 * g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v != s && v != t) net.add_arc(in_node(v), out_node(v));
    for (Vertex w : g.neighbors(v)) net.add_arc(out_node(v), in_node(w));
  }
  return net.max_flow(out_node(s), in_node(t), limit);
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("vertex_connectivity of the empty graph");
  require_flow_order(g);
  int best = n - 1;
  // Some vertex among the first best+1 lies outside a minimum separator, and
  // a vertex on the far side of that separator has a larger index.
  for (Vertex i = 0; i < n && i <= best; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) best = std::min(best, local_connectivity(g, i, j, best));
  return best;
}

PathSystem menger_fan(const Graph& g, Vertex x0, const Cycle& c, int k) {
  require_flow_order(g);
  if (x0 < 0 || x0 >= g.order()) throw std::out_of_range("menger_fan: hub outside the graph");
  if (c.contains(x0)) throw std::invalid_argument("menger_fan: hub " + std::to_string(x0) + " lies on the cycle");
  for (Vertex v : c.order())
    if (v >= g.order()) throw std::out_of_range("menger_fan: cycle leaves the graph");

  const int sink = 2 * g.order();
  UnitNetwork net(sink + 1);
  const VertexSet on_cycle = c.vertices();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (on_cycle.contains(v)) {
      net.add_arc(in_node(v), sink);
      continue;
    }
    if (v != x0) net.add_arc(in_node(v), out_node(v));
    for (Vertex w : g.neighbors(v)) net.add_arc(out_node(v), in_node(w));
  }
  const int flow = net.max_flow(out_node(x0), sink, g.order());
  if (flow < k)
    throw ConnectivityError("menger_fan: only " + std::to_string(flow) + " disjoint paths from " + std::to_string(x0) +
                            " to the cycle, need " + std::to_string(k));

  std::vector<std::vector<Vertex>> paths;
  for (Vertex w : g.neighbors(x0)) {
    if (!net.carries_flow(out_node(x0), in_node(w))) continue;
    std::vector<Vertex> path{x0};
    for (int node = in_node(w); node != sink; node = net.flow_successor(node))
      if (node % 2 == 0) path.push_back(node / 2);
    // Cut at the first cycle vertex so the attachment is the path's only cycle vertex.
    auto hit = std::find_if(path.begin() + 1, path.end(), [&](Vertex v) { return on_cycle.contains(v); });
    path.erase(hit + 1, path.end());
    paths.push_back(std::move(path));
  }

  if (paths.empty()) return PathSystem{x0, {}, {}};
  Vertex lowest = paths.front().back();
  for (const auto& p : paths) lowest = std::min(lowest, p.back());
  const int base = c.position(lowest);
  auto offset = [&](const std::vector<Vertex>& p) { return (c.position(p.back()) - base + c.length()) % c.length(); };
  std::sort(paths.begin(), paths.end(), [&](const auto& a, const auto& b) { return offset(a) < offset(b); });

  PathSystem fan{x0, std::move(paths), {}};
  for (const auto& p : fan.paths) fan.attachments.push_back(p.back());
  return fan;
}

bool validate_fan(const Graph& g, const Cycle& c, const PathSystem& fan, int min_paths) {
  if (fan.hub < 0 || fan.hub >= g.order() || c.contains(fan.hub)) return false;
  if (fan.paths.size() != fan.attachments.size()) return false;
  if (static_cast<int>(fan.paths.size()) < min_paths) return false;
  VertexSet used = VertexSet::single(fan.hub);
  int previous_offset = -1;
  for (std::size_t i = 0; i < fan.paths.size(); ++i) {
    const auto& p = fan.paths[i];
    if (p.size() < 2 || p.front() != fan.hub || p.back() != fan.attachments[i]) return false;
    for (std::size_t j = 1; j < p.size(); ++j) {
      const Vertex v = p[j];
      if (v < 0 || v >= g.order() || used.contains(v) || !g.adjacent(p[j - 1], v)) return false;
      if (c.contains(v) != (j + 1 == p.size())) return false;
      used.insert(v);
    }
    const int offset =
        (c.position(p.back()) - c.position(fan.attachments.front()) + c.length()) % c.length();
    if (offset <= previous_offset) return false;
    previous_offset = offset;
  }
  return true;
}

}  // namespace chromham
