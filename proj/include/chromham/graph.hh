#ifndef CHROMHAM_GRAPH_HH
#define CHROMHAM_GRAPH_HH

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <utility>
#include <vector>

namespace chromham {

using Vertex = int;

/// Subset of the dense vertex range 0..63, stored as a single bit row.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    Vertex operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> members);

  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  /// Lowest member; undefined on the empty set.
  constexpr Vertex first() const { return std::countr_zero(bits_); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }
  std::vector<Vertex> to_vector() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Immutable simple undirected graph on the vertices 0..order()-1.
///
/// Build one with GraphBuilder or with_edges(); every constructor below
/// returns a symmetric, loop-free adjacency.
class Graph {
 public:
  static constexpr int max_order = 64;

  Graph() = default;

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex v) const { return VertexSet(rows_[static_cast<std::size_t>(v)]); }
  bool adjacent(Vertex u, Vertex v) const { return (rows_[static_cast<std::size_t>(u)] >> v) & 1U; }
  int degree(Vertex v) const { return std::popcount(rows_[static_cast<std::size_t>(v)]); }
  int edge_count() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  int n_ = 0;
  std::array<std::uint64_t, max_order> rows_{};
};

/// The only mutable path to a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  /// Throws std::out_of_range for a bad index and std::invalid_argument for a loop.
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& remove_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }
  int order() const { return g_.n_; }

  Graph build() const { return g_; }

 private:
  void check(Vertex u, Vertex v) const;

  Graph g_;
};

Graph with_edges(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);
Graph with_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

Graph complement(const Graph& g);
/// Vertices of h are shifted by g.order().
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the vertex of the host graph that became vertex i.
  std::vector<Vertex> original;
};
InducedSubgraph induced(const Graph& g, VertexSet s);

bool is_clique(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);
int min_degree(const Graph& g);
bool is_connected(const Graph& g, VertexSet within);
inline bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

// Named families.
Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

/// Applies perm (old vertex -> new vertex).
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

// Labeled enumeration. Bit i of an edge mask is the i-th vertex pair in
// graph6 column order (0,1),(0,2),(1,2),(0,3),...
int pair_count(int n);
Graph graph_from_edge_mask(int n, std::uint64_t mask);
std::uint64_t edge_mask(const Graph& g);

inline constexpr int max_enumeration_order = 7;

/// Calls visit on every labeled graph of order n in edge-mask order.
/// Throws std::domain_error when n exceeds max_enumeration_order.
void enumerate_labeled(int n, const std::function<void(const Graph&)>& visit);
std::uint64_t labeled_graph_count(int n);

}  // namespace chromham

#endif
