#ifndef CHROMHAM_INVARIANTS_HH
#define CHROMHAM_INVARIANTS_HH

#include <optional>
#include <stdexcept>
#include <vector>

#include "chromham/cycle.hh"
#include "chromham/graph.hh"

namespace chromham {

struct Coloring {
  /// assignment[v] is the 0-based color of v.
  std::vector<int> assignment;
  int colors_used = 0;
};

/// Proper, every vertex colored, colors_used equal to the number of distinct colors.
bool is_proper(const Graph& g, const Coloring& c);

VertexSet max_clique(const Graph& g);

struct IndependenceResult {
  int alpha;
  VertexSet witness;
};
IndependenceResult independence_number(const Graph& g);

struct ChromaticResult {
  int chi;
  Coloring witness;
};
ChromaticResult chromatic_number(const Graph& g);

/// Proper coloring with at most t colors, or nullopt when none exists.
std::optional<Coloring> is_k_colorable(const Graph& g, int t);

/// Sequential DSATUR; an upper bound for chromatic_number.
Coloring greedy_coloring(const Graph& g);

/// Number of internally disjoint s-t paths for non-adjacent s, t, stopping at limit.
int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit = Graph::max_order);

/// kappa(g); complete graphs get n-1.
int vertex_connectivity(const Graph& g);

/// A fan of internally disjoint paths from a hub to distinct vertices of a cycle.
struct PathSystem {
  Vertex hub = 0;
  /// paths[i] runs hub, ..., attachments[i].
  std::vector<std::vector<Vertex>> paths;
  /// Ordered along the cycle's orientation starting from the lowest-index attachment.
  std::vector<Vertex> attachments;
};

class ConnectivityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maximum fan from x0 onto c via unit-capacity augmenting paths on the
/// vertex-split network (lowest-index BFS). Throws std::invalid_argument when
/// x0 is on c and ConnectivityError when fewer than k paths exist.
PathSystem menger_fan(const Graph& g, Vertex x0, const Cycle& c, int k);

/// Checks every fan invariant against g and c (min_paths paths or more).
bool validate_fan(const Graph& g, const Cycle& c, const PathSystem& fan, int min_paths = 0);

struct NordhausGaddum {
  int chi;
  int chi_complement;
  int slack;
};
NordhausGaddum nordhaus_gaddum(const Graph& g);

}  // namespace chromham

#endif
