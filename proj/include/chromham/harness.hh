#ifndef CHROMHAM_HARNESS_HH
#define CHROMHAM_HARNESS_HH

#include <array>
#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "chromham/graph.hh"

namespace chromham {

struct GraphAtK {
  std::string graph6;
  int k;
  friend auto operator<=>(const GraphAtK&, const GraphAtK&) = default;
};

struct MalformedLine {
  std::size_t line;
  std::string message;
};

struct VerificationReport {
  using PerK = std::array<std::uint64_t, Graph::max_order>;

  int k_min = 2;
  int k_max = 0;
  std::uint64_t total_graphs = 0;
  PerK hypothesis_hits{};
  PerK hamiltonian{};
  PerK extremal{};
  std::vector<GraphAtK> counterexamples;
  /// Every non-Hamiltonian hypothesis hit, extremal or not.
  std::vector<GraphAtK> non_hamiltonian;
  std::uint64_t nordhaus_gaddum_violations = 0;
  int nordhaus_gaddum_min_slack = Graph::max_order + 1;
  std::vector<MalformedLine> malformed;
  std::vector<std::string> records;
  std::chrono::duration<double> elapsed{0};

  std::uint64_t total_hits() const;
  std::uint64_t total_hamiltonian() const;
  std::uint64_t total_extremal() const;
  /// hamiltonian + extremal + counterexamples == hypothesis_hits for every k.
  bool consistent() const;

  /// Adds another partial report; lists are re-sorted, so the result does not
  /// depend on merge order.
  void merge(const VerificationReport& other);
  bool same_tallies(const VerificationReport& other) const;
};

struct VerifyOptions {
  int k_min = 2;
  /// Upper end of the k sweep; nullopt means n-1 for each graph.
  std::optional<int> k_max;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
  bool keep_records = false;
};

constexpr int max_internal_order = max_enumeration_order;

/// Every labeled graph on n vertices. Throws std::domain_error for n outside [1, 7].
VerificationReport verify_order(int n, const VerifyOptions& options = {});

/// graph6 lines, optionally restricted to order n (other orders count as
/// malformed). Blank lines and ">>graph6<<" headers are skipped.
VerificationReport verify_stream(std::istream& in, const VerifyOptions& options = {},
                                 std::optional<int> expected_order = std::nullopt);

/// Tab-separated: graph6, n=, k=, kappa=, chi=, alpha=, k_ge_2=, k_connected=,
/// chi_ge_n_minus_k=, kind=, digest= (FNV-1a of the certificate line).
std::string classify(const Graph& g, int k);

std::string format_report(const VerificationReport& report);

}  // namespace chromham

#endif
