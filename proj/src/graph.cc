#include "chromham/graph.hh"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chromham {

VertexSet::VertexSet(std::initializer_list<Vertex> members) {
  for (Vertex v : members) {
    if (v < 0 || v >= 64) throw std::out_of_range("vertex index " + std::to_string(v) + " outside 0..63");
    insert(v);
  }
}

std::vector<Vertex> VertexSet::to_vector() const { return {begin(), end()}; }

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u) - VertexSet::range(u + 1)) out.emplace_back(u, v);
  return out;
}

GraphBuilder::GraphBuilder(int n) {
  if (n < 0 || n > Graph::max_order)
    throw std::out_of_range("graph order " + std::to_string(n) + " outside 0.." +
                            std::to_string(Graph::max_order));
  g_.n_ = n;
}

void GraphBuilder::check(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
    throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") outside a graph of order " + std::to_string(g_.n_));
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  check(u, v);
  g_.rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  g_.rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check(u, v);
  g_.rows_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
  g_.rows_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
  return *this;
}

Graph with_edges(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

Graph with_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return b.build();
}

namespace {

GraphBuilder side_by_side(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > Graph::max_order)
    throw std::out_of_range("combined order " + std::to_string(n) + " exceeds " +
                            std::to_string(Graph::max_order));
  GraphBuilder b(n);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(u + g.order(), v + g.order());
  return b;
}

}  // namespace

Graph join(const Graph& g, const Graph& h) {
  auto b = side_by_side(g, h);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < h.order(); ++v) b.add_edge(u, v + g.order());
  return b.build();
}

Graph disjoint_union(const Graph& g, const Graph& h) { return side_by_side(g, h).build(); }

InducedSubgraph induced(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw std::out_of_range("induced: vertex set exceeds graph order");
  InducedSubgraph out{Graph{}, s.to_vector()};
  GraphBuilder b(s.size());
  for (std::size_t i = 0; i < out.original.size(); ++i)
    for (std::size_t j = i + 1; j < out.original.size(); ++j)
      if (g.adjacent(out.original[i], out.original[j]))
        b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  out.graph = b.build();
  return out;
}

bool is_clique(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if (!(s - VertexSet::single(v)).subset_of(g.neighbors(v))) return false;
  return true;
}

bool is_independent(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if (!(g.neighbors(v) & s).empty()) return false;
  return true;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("min_degree of the empty graph");
  int best = g.order();
  for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool is_connected(const Graph& g, VertexSet within) {
  if (within.empty()) return true;
  VertexSet seen = VertexSet::single(within.first());
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen == within;
}

Graph complete_graph(int n) { return complement(edgeless_graph(n)); }

Graph edgeless_graph(int n) { return GraphBuilder(n).build(); }

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph needs n >= 3");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

Graph star_graph(int n) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(0, v);
  return b.build();
}

Graph complete_bipartite(int a, int b) { return join(edgeless_graph(a), edgeless_graph(b)); }

Graph petersen_graph() {
  GraphBuilder b(10);
  for (Vertex v = 0; v < 5; ++v) {
    b.add_edge(v, (v + 1) % 5);
    b.add_edge(v, v + 5);
    b.add_edge(v + 5, (v + 2) % 5 + 5);
  }
  return b.build();
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("relabel: permutation size mismatch");
  VertexSet image;
  for (Vertex v : perm) {
    if (v < 0 || v >= g.order() || image.contains(v)) throw std::invalid_argument("relabel: not a permutation");
    image.insert(v);
  }
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges())
    b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return b.build();
}

int pair_count(int n) { return n * (n - 1) / 2; }

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  GraphBuilder b(n);
  int bit = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u, ++bit)
      if ((mask >> bit) & 1U) b.add_edge(u, v);
  return b.build();
}

std::uint64_t edge_mask(const Graph& g) {
  if (pair_count(g.order()) > 64) throw std::domain_error("edge_mask: more than 64 vertex pairs");
  std::uint64_t mask = 0;
  int bit = 0;
  for (Vertex v = 1; v < g.order(); ++v)
    for (Vertex u = 0; u < v; ++u, ++bit)
      if (g.adjacent(u, v)) mask |= std::uint64_t{1} << bit;
  return mask;
}

std::uint64_t labeled_graph_count(int n) {
  if (n < 0 || n > max_enumeration_order)
    throw std::domain_error("labeled enumeration supports 0 <= n <= " + std::to_string(max_enumeration_order) +
                            "; stream graph6 input for larger orders");
  return std::uint64_t{1} << pair_count(n);
}

void enumerate_labeled(int n, const std::function<void(const Graph&)>& visit) {
  const std::uint64_t total = labeled_graph_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) visit(graph_from_edge_mask(n, mask));
}

}  // namespace chromham
