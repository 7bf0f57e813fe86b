#include <stdexcept>
#include <string>

#include "chromham/theorem.hh"

namespace chromham {

Graph build_extremal(int k, int n) {
  if (k < 2) throw std::invalid_argument("build_extremal: k must be at least 2");
  if (n < 2 * k + 1) throw std::invalid_argument("build_extremal: n must be at least 2k+1");
  return join(complete_graph(k), disjoint_union(edgeless_graph(k), complete_graph(n - 2 * k)));
}

std::optional<ExtremalMatch> recognize_extremal(const Graph& g) {
  const int n = g.order();
  if (n < 5) return std::nullopt;
  VertexSet a;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) a.insert(v);
  const int k = a.size();
  if (k < 2 || n < 2 * k + 1) return std::nullopt;

  const VertexSet rest = g.vertices() - a;
  ExtremalPartition p{a, {}, {}};
  for (Vertex v : rest) {
    if ((g.neighbors(v) & rest).empty())
      p.b.insert(v);
    else
      p.c_part.insert(v);
  }
  if (p.c_part.empty()) {
    // n = 2k+1: every remaining vertex has degree k, any one can be the K_1.
    if (p.b.size() != k + 1) return std::nullopt;
    Vertex top = 0;
    for (Vertex v : p.b) top = v;
    p.b.erase(top);
    p.c_part.insert(top);
  }
  if (!validate_extremal_partition(g, k, p)) return std::nullopt;
  return ExtremalMatch{k, p};
}

bool validate_extremal_partition(const Graph& g, int k, const ExtremalPartition& p) {
  const int n = g.order();
  if (k < 2 || p.a.size() != k || p.b.size() != k || p.c_part.size() != n - 2 * k || p.c_part.empty()) return false;
  if ((p.a | p.b | p.c_part) != g.vertices()) return false;
  if (!(p.a & p.b).empty() || !(p.a & p.c_part).empty() || !(p.b & p.c_part).empty()) return false;
  for (Vertex v : p.a)
    if (g.degree(v) != n - 1) return false;
  for (Vertex v : p.b)
    if (g.neighbors(v) != p.a) return false;
  for (Vertex v : p.c_part)
    if (g.neighbors(v) != (p.a | p.c_part) - VertexSet::single(v)) return false;
  return true;
}

}  // namespace chromham
