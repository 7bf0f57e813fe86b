#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "chromham/cycles.hh"

namespace chromham {

namespace {

std::optional<Cycle> hamiltonian_by_subsets(const Graph& g) {
  // Vertex 0 is the fixed start; bit i of a subset stands for vertex i + 1.
  const int m = g.order() - 1;
  std::vector<std::uint32_t> neighbor_bits(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    neighbor_bits[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(g.neighbors(i + 1).bits() >> 1);
  const std::uint32_t start_bits = static_cast<std::uint32_t>(g.neighbors(0).bits() >> 1);

  // ends[sub]: vertices v in sub such that some path from 0 covers exactly sub + {0} and stops at v.
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  std::vector<std::uint32_t> ends(std::size_t{full} + 1, 0);
  for (std::uint32_t sub = 1; sub <= full; ++sub) {
    if (std::has_single_bit(sub)) {
      ends[sub] = sub & start_bits;
      continue;
    }
    std::uint32_t reach = 0;
    for (std::uint32_t rest = sub; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (ends[sub ^ (std::uint32_t{1} << v)] & neighbor_bits[static_cast<std::size_t>(v)]) reach |= std::uint32_t{1} << v;
    }
    ends[sub] = reach;
  }

  const std::uint32_t closing = ends[full] & start_bits;
  if (closing == 0) return std::nullopt;
  std::vector<Vertex> tail;
  int v = std::countr_zero(closing);
  for (std::uint32_t sub = full;;) {
    tail.push_back(v + 1);
    const std::uint32_t prev = sub ^ (std::uint32_t{1} << v);
    if (prev == 0) break;
    v = std::countr_zero(ends[prev] & neighbor_bits[static_cast<std::size_t>(v)]);
    sub = prev;
  }
  std::vector<Vertex> order{0};
  order.insert(order.end(), tail.rbegin(), tail.rend());
  return Cycle(std::move(order));
}

class HamiltonianBacktrack {
 public:
  explicit HamiltonianBacktrack(const Graph& g) : g_(g) {}

  std::optional<Cycle> run() {
    path_ = {0};
    if (extend(VertexSet::single(0))) return Cycle(path_);
    return std::nullopt;
  }

 private:
  bool extend(VertexSet visited) {
    const Vertex last = path_.back();
    if (static_cast<int>(path_.size()) == g_.order()) return g_.adjacent(last, 0);
    for (Vertex w : g_.neighbors(last) - visited) {
      const VertexSet remaining = g_.vertices() - visited - VertexSet::single(w);
      if (!viable(remaining, w)) continue;
      path_.push_back(w);
      if (extend(visited | VertexSet::single(w))) return true;
      path_.pop_back();
    }
    return false;
  }

  // Every unvisited vertex still needs two usable neighbors, and the
  // unvisited part plus both path ends, with head and 0 linked, must have no
  // articulation point.
  bool viable(VertexSet remaining, Vertex head) const {
    const VertexSet usable = remaining | VertexSet::single(head) | VertexSet::single(0);
    for (Vertex r : remaining)
      if ((g_.neighbors(r) & usable).size() < 2) return false;
    if (!remaining.empty() && (g_.neighbors(0) & remaining).empty()) return false;
    if (usable.size() < 3) return true;
    for (Vertex cut : usable)
      if (!linked_connected(usable - VertexSet::single(cut), head)) return false;
    return true;
  }

  bool linked_connected(VertexSet within, Vertex head) const {
    VertexSet seen = VertexSet::single(within.first());
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) {
        next |= g_.neighbors(v);
        if (v == head) next.insert(0);
        if (v == 0) next.insert(head);
      }
      frontier = (next & within) - seen;
      seen |= frontier;
    }
    return seen == within;
  }

  const Graph& g_;
  std::vector<Vertex> path_;
};

bool unbalanced_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  int count[2] = {0, 0};
  for (Vertex root : g.vertices()) {
    if (side[static_cast<std::size_t>(root)] >= 0) continue;
    side[static_cast<std::size_t>(root)] = 0;
    ++count[0];
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      const int s = side[static_cast<std::size_t>(u)];
      for (Vertex w : g.neighbors(u)) {
        int& t = side[static_cast<std::size_t>(w)];
        if (t == s) return false;
        if (t < 0) {
          t = 1 - s;
          ++count[t];
          stack.push_back(w);
        }
      }
    }
  }
  return count[0] != count[1];
}

}  // namespace

std::optional<Cycle> find_hamiltonian_cycle(const Graph& g) {
  if (g.order() < 3) throw std::invalid_argument("find_hamiltonian_cycle needs at least three vertices");
  if (min_degree(g) < 2 || !is_connected(g)) return std::nullopt;
  if (g.order() <= hamiltonian_dp_limit) return hamiltonian_by_subsets(g);
  if (unbalanced_bipartite(g)) return std::nullopt;
  return HamiltonianBacktrack(g).run();
}

std::optional<Cycle> longest_cycle(const Graph& g) {
  const int n = g.order();
  if (n > longest_cycle_limit)
    throw std::domain_error("longest_cycle is exact only up to order " + std::to_string(longest_cycle_limit));
  if (n < 3) return std::nullopt;

  // ends[mask]: vertices v such that a path from the lowest vertex of mask covers exactly mask and stops at v.
  const std::uint32_t size = std::uint32_t{1} << n;
  std::vector<std::uint32_t> ends(size, 0);
  auto nbrs = [&](Vertex v) { return static_cast<std::uint32_t>(g.neighbors(v).bits()); };
  int best_len = 0;
  Vertex best_start = n;
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    const int s = std::countr_zero(mask);
    if (std::has_single_bit(mask)) {
      ends[mask] = mask;
      continue;
    }
    std::uint32_t reach = 0;
    for (std::uint32_t rest = mask & (mask - 1); rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (ends[mask ^ (std::uint32_t{1} << v)] & nbrs(v)) reach |= std::uint32_t{1} << v;
    }
    ends[mask] = reach;
    const int len = std::popcount(mask);
    if (len >= 3 && (reach & nbrs(s)) && (len > best_len || (len == best_len && s < best_start))) {
      best_len = len;
      best_start = s;
    }
  }
  if (best_len == 0) return std::nullopt;

  // Lexicographically least completion: the rest of the cycle, read backwards
  // from the start, is a path covering some X and ending at the next vertex.
  const std::uint32_t start_bit = std::uint32_t{1} << best_start;
  std::uint32_t pool = (size - 1) & ~((start_bit << 1) - 1);
  std::vector<Vertex> order{best_start};
  for (int i = 0; i + 1 < best_len; ++i) {
    const Vertex last = order.back();
    const int want = best_len - i - 1;
    std::uint32_t candidates = 0;
    for (std::uint32_t sub = pool;; sub = (sub - 1) & pool) {
      if (std::popcount(sub) == want) candidates |= ends[sub | start_bit] & nbrs(last);
      if (sub == 0) break;
    }
    candidates &= ~start_bit;
    const Vertex next = std::countr_zero(candidates);
    order.push_back(next);
    pool &= ~(std::uint32_t{1} << next);
  }
  return Cycle(std::move(order));
}

}  // namespace chromham
