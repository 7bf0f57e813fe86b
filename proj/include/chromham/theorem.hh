#ifndef CHROMHAM_THEOREM_HH
#define CHROMHAM_THEOREM_HH

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "chromham/cycle.hh"
#include "chromham/graph.hh"

namespace chromham {

/// Vertex classes of K_k v (complement of K_k  u  K_{n-2k}).
struct ExtremalPartition {
  VertexSet a;       // the joined clique of universal vertices
  VertexSet b;       // the independent k-set
  VertexSet c_part;  // the clique on n-2k vertices
  friend bool operator==(const ExtremalPartition&, const ExtremalPartition&) = default;
};

/// Layout: a = {0..k-1}, b = {k..2k-1}, c_part = {2k..n-1}.
/// Throws std::invalid_argument unless k >= 2 and n >= 2k+1.
Graph build_extremal(int k, int n);

struct ExtremalMatch {
  int k;
  ExtremalPartition partition;
};

/// Reads the partition off the degrees: the universal vertices form a; the
/// rest must split into an independent k-set and a clique with no edges
/// between them. When n = 2k+1 the highest remaining vertex is taken as the
/// clique part.
std::optional<ExtremalMatch> recognize_extremal(const Graph& g);

bool validate_extremal_partition(const Graph& g, int k, const ExtremalPartition& p);

struct HypothesisReport {
  int n = 0;
  int k = 0;
  int kappa = 0;
  int chi = 0;
  bool k_connected_ok = false;  // kappa >= k
  bool chi_ok = false;          // chi >= n - k
  bool k_ge_2 = false;

  bool holds() const { return k_connected_ok && chi_ok && k_ge_2; }
  /// Name of the first failing flag, empty when the hypothesis holds.
  std::string failing_flag() const;
};

HypothesisReport check_hypothesis(const Graph& g, int k);

class HypothesisError : public std::invalid_argument {
 public:
  HypothesisError(const HypothesisReport& report);
  const HypothesisReport& report() const { return report_; }

 private:
  HypothesisReport report_;
};

struct HamiltonianCertificate {
  Cycle cycle;
};
struct ExtremalCertificate {
  int k;
  ExtremalPartition partition;
};
struct CounterexampleCertificate {
  std::string report;
};
using Certificate = std::variant<HamiltonianCertificate, ExtremalCertificate, CounterexampleCertificate>;

std::string_view certificate_kind(const Certificate& cert);

/// Hamiltonian cycle first, then the extremal structure. Throws HypothesisError.
Certificate certify(const Graph& g, int k);
/// Same, for a caller that has already established the hypothesis.
Certificate certify_unchecked(const Graph& g, int k);

/// Re-checks a certificate against g from scratch. Counterexamples never validate.
bool validate_certificate(const Graph& g, const Certificate& cert);

/// One tab-separated line: kind, graph6, then the payload
///   hamiltonian  <g6>  cycle=v,v,...
///   extremal     <g6>  k=K  a=...  b=...  c=...
///   counterexample  <g6>  k=K  reason=<text>
std::string format_certificate(const Graph& g, const Certificate& cert, int k);

struct ParsedCertificate {
  Graph graph;
  Certificate certificate;
};
/// Inverse of format_certificate. Throws std::invalid_argument on malformed lines.
ParsedCertificate parse_certificate(std::string_view line);

// Proof trace.

enum class TraceConclusion {
  hamiltonian,
  extremal_balanced,  // n = 2k+1, no long segment
  extremal_wide,      // n >= 2k+2, one long segment
  failed,
};
std::string_view conclusion_name(TraceConclusion c);

struct ProofStep {
  std::string id;
  std::string description;
  bool passed = false;
  std::string witness;
};

struct ProofTrace {
  std::vector<ProofStep> steps;
  TraceConclusion conclusion = TraceConclusion::failed;
  /// Number of long segments, -1 when the trace stopped before the split.
  int case_index = -1;
  /// Vertices y_j walked in the one-long-segment chain.
  int propagation_steps = 0;

  bool all_passed() const;
};

/// Replays the non-Hamiltonicity argument step by step on g with the exact
/// longest cycle. Throws HypothesisError when the hypothesis fails and
/// std::domain_error when g is too large for the exact longest-cycle solver.
/// A failed assertion ends the trace with a failed step.
ProofTrace trace_proof(const Graph& g, int k);

/// One line per step: "step <index> <id> PASS|FAIL <description> <witness>", tab-separated,
/// followed by a "conclusion" line.
std::string format_trace(const ProofTrace& trace);

}  // namespace chromham

#endif
