#ifndef CHROMHAM_CYCLES_HH
#define CHROMHAM_CYCLES_HH

#include <optional>
#include <utility>
#include <vector>

#include "chromham/cycle.hh"
#include "chromham/graph.hh"
#include "chromham/invariants.hh"

namespace chromham {

/// Orders up to this use the subset dynamic program; larger graphs fall back
/// to backtracking with degree and connectivity pruning.
inline constexpr int hamiltonian_dp_limit = 24;
/// Largest order longest_cycle accepts.
inline constexpr int longest_cycle_limit = 20;

/// Exact: nullopt means no Hamiltonian cycle exists. Throws std::invalid_argument for n < 3.
std::optional<Cycle> find_hamiltonian_cycle(const Graph& g);

/// A maximum-length cycle, or nullopt for an acyclic graph. Among all longest
/// cycles returns the lexicographically least normalized sequence (see
/// Cycle::normalized). Throws std::domain_error above longest_cycle_limit.
std::optional<Cycle> longest_cycle(const Graph& g);

/// Flips the orientation so that the successor of the lowest-index attachment
/// is the lower-indexed of its two cycle neighbors, then rotates the cycle to
/// start at that attachment and lists the fan in the new cycle order.
std::pair<Cycle, PathSystem> orient_by_fan(const Cycle& c, const PathSystem& fan);

/// Relists the fan along c starting from attachments[first].
PathSystem rotate_fan(const PathSystem& fan, std::size_t first);
/// The same fan read against c.reversed(), starting from the same first attachment.
PathSystem reverse_fan(const PathSystem& fan);

/// {hub} together with the successor of every attachment.
VertexSet successors_set(const Cycle& c, const PathSystem& fan);

struct SegmentDecomposition {
  std::vector<Vertex> attachments;
  std::vector<Vertex> successors;
  /// segments[i] runs from the second successor of attachments[i] to attachments[i+1], wrapping.
  std::vector<std::vector<Vertex>> segments;
  /// 0-based i with segments[i].size() >= 2.
  std::vector<int> big_segment_indices;
};

/// Uses the first k attachments. Throws std::invalid_argument when k < 2,
/// there are fewer than k attachments, they are not in cycle order, or two
/// consecutive attachments are cycle neighbors (an empty segment).
SegmentDecomposition segments(const Cycle& c, const PathSystem& fan, int k);

// Extension rules. Each returns a cycle of g strictly longer than c, or
// nullopt. Every returned cycle has been validated against g.

/// Inserts the hub next to an attachment whose successor it sees, or reroutes
/// through two attachments whose successors are adjacent.
std::optional<Cycle> extend_successor_chord(const Graph& g, const Cycle& c, const PathSystem& fan);

/// hub, z, the cycle from u_j around to u_{j-1}, then P_{j-1} back to the hub
/// (and the mirror image). Throws std::invalid_argument when z is on c or is the hub.
std::optional<Cycle> extend_offcycle(const Graph& g, const Cycle& c, const PathSystem& fan, Vertex z);

/// Two attachments u_i, u_j whose predecessors lie strictly inside their
/// segments and are adjacent: hub, P_i, C[u_i .. u_j^-], the chord,
/// C backwards [u_i^- .. u_j], P_j.
std::optional<Cycle> extend_predecessor_chord(const Graph& g, const Cycle& c, const PathSystem& fan);

/// Configuration with exactly one long segment, relabeled so that it follows
/// u_1: the segment reads y_1 .. y_r u_2. For 2 <= y_index <= r and
/// y_{y_index} adjacent to u_1^+, tries the two rotations that absorb the
/// hub through y_{y_index - 1}. Throws std::invalid_argument unless exactly
/// one segment is long.
std::optional<Cycle> extend_case1_rotation(const Graph& g, const Cycle& c, const PathSystem& fan, int y_index);

}  // namespace chromham

#endif
