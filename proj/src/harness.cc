#include "chromham/harness.hh"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "chromham/cycles.hh"
#include "chromham/graph6.hh"
#include "chromham/invariants.hh"
#include "chromham/theorem.hh"

namespace chromham {

namespace {

std::uint64_t sum(const VerificationReport::PerK& a) {
  std::uint64_t total = 0;
  for (auto x : a) total += x;
  return total;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

unsigned worker_count(const VerifyOptions& options) {
  unsigned t = options.threads ? options.threads : std::thread::hardware_concurrency();
  return std::max(1u, t);
}

void tally(const Graph& g, const VerifyOptions& options, VerificationReport& r) {
  ++r.total_graphs;
  const int n = g.order();
  if (n == 0) return;

  const NordhausGaddum ng = nordhaus_gaddum(g);
  r.nordhaus_gaddum_min_slack = std::min(r.nordhaus_gaddum_min_slack, ng.slack);
  if (ng.slack < 0) ++r.nordhaus_gaddum_violations;

  const int k_max = std::min(options.k_max.value_or(n - 1), Graph::max_order - 1);
  r.k_max = std::max(r.k_max, k_max);
  const int delta = min_degree(g);
  std::optional<int> kappa;
  std::optional<bool> hamiltonian;
  for (int k = std::max(options.k_min, 2); k <= k_max; ++k) {
    if (options.keep_records) r.records.push_back(classify(g, k));
    if (delta < k) continue;
    if (!kappa) kappa = vertex_connectivity(g);
    if (*kappa < k || ng.chi < n - k) continue;
    ++r.hypothesis_hits[static_cast<std::size_t>(k)];
    if (!hamiltonian) hamiltonian = find_hamiltonian_cycle(g).has_value();
    if (*hamiltonian) {
      ++r.hamiltonian[static_cast<std::size_t>(k)];
      continue;
    }
    r.non_hamiltonian.push_back({to_graph6(g), k});
    const Certificate cert = certify_unchecked(g, k);
    if (std::holds_alternative<ExtremalCertificate>(cert))
      ++r.extremal[static_cast<std::size_t>(k)];
    else
      r.counterexamples.push_back({to_graph6(g), k});
  }
}

template <typename Work>
VerificationReport run_sharded(std::size_t items, const VerifyOptions& options, Work work) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t shards = std::min<std::size_t>(worker_count(options), std::max<std::size_t>(items, 1));
  std::vector<VerificationReport> partial(shards);
  auto run_shard = [&](std::size_t s) {
    partial[s].k_min = options.k_min;
    const std::size_t lo = items * s / shards;
    const std::size_t hi = items * (s + 1) / shards;
    for (std::size_t i = lo; i < hi; ++i) work(i, partial[s]);
  };
  if (shards == 1) {
    run_shard(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t s = 0; s < shards; ++s) pool.emplace_back(run_shard, s);
    for (auto& t : pool) t.join();
  }
  VerificationReport out;
  out.k_min = options.k_min;
  for (const auto& p : partial) out.merge(p);
  out.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

}  // namespace

std::uint64_t VerificationReport::total_hits() const { return sum(hypothesis_hits); }
std::uint64_t VerificationReport::total_hamiltonian() const { return sum(hamiltonian); }
std::uint64_t VerificationReport::total_extremal() const { return sum(extremal); }

bool VerificationReport::consistent() const {
  PerK bad{};
  for (const auto& c : counterexamples) ++bad[static_cast<std::size_t>(c.k)];
  for (std::size_t k = 0; k < hypothesis_hits.size(); ++k)
    if (hamiltonian[k] + extremal[k] + bad[k] != hypothesis_hits[k]) return false;
  return true;
}

void VerificationReport::merge(const VerificationReport& other) {
  k_max = std::max(k_max, other.k_max);
  total_graphs += other.total_graphs;
  for (std::size_t k = 0; k < hypothesis_hits.size(); ++k) {
    hypothesis_hits[k] += other.hypothesis_hits[k];
    hamiltonian[k] += other.hamiltonian[k];
    extremal[k] += other.extremal[k];
  }
  counterexamples.insert(counterexamples.end(), other.counterexamples.begin(), other.counterexamples.end());
  std::sort(counterexamples.begin(), counterexamples.end());
  non_hamiltonian.insert(non_hamiltonian.end(), other.non_hamiltonian.begin(), other.non_hamiltonian.end());
  std::sort(non_hamiltonian.begin(), non_hamiltonian.end());
  nordhaus_gaddum_violations += other.nordhaus_gaddum_violations;
  nordhaus_gaddum_min_slack = std::min(nordhaus_gaddum_min_slack, other.nordhaus_gaddum_min_slack);
  malformed.insert(malformed.end(), other.malformed.begin(), other.malformed.end());
  std::sort(malformed.begin(), malformed.end(), [](const auto& a, const auto& b) { return a.line < b.line; });
  records.insert(records.end(), other.records.begin(), other.records.end());
}

bool VerificationReport::same_tallies(const VerificationReport& o) const {
  return total_graphs == o.total_graphs && hypothesis_hits == o.hypothesis_hits && hamiltonian == o.hamiltonian &&
         extremal == o.extremal && counterexamples == o.counterexamples && non_hamiltonian == o.non_hamiltonian &&
         nordhaus_gaddum_violations == o.nordhaus_gaddum_violations && nordhaus_gaddum_min_slack == o.nordhaus_gaddum_min_slack;
}

VerificationReport verify_order(int n, const VerifyOptions& options) {
  if (n < 1 || n > max_internal_order)
    throw std::domain_error("verify_order: internal enumeration needs 1 <= n <= " +
                            std::to_string(max_internal_order) + ", got " + std::to_string(n));
  const std::uint64_t count = labeled_graph_count(n);
  return run_sharded(static_cast<std::size_t>(count), options, [&](std::size_t mask, VerificationReport& r) {
    tally(graph_from_edge_mask(n, mask), options, r);
  });
}

VerificationReport verify_stream(std::istream& in, const VerifyOptions& options, std::optional<int> expected_order) {
  struct Line {
    std::size_t number;
    std::string text;
  };
  std::vector<Line> lines;
  std::string text;
  for (std::size_t number = 1; std::getline(in, text); ++number) {
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty() || text == graph6_header) continue;
    lines.push_back({number, text});
  }
  return run_sharded(lines.size(), options, [&](std::size_t i, VerificationReport& r) {
    Graph g;
    try {
      g = parse_graph6(lines[i].text);
    } catch (const Graph6Error& e) {
      r.malformed.push_back({lines[i].number, e.what()});
      return;
    }
    if (expected_order && g.order() != *expected_order) {
      r.malformed.push_back({lines[i].number, "order " + std::to_string(g.order()) + ", expected " +
                                                  std::to_string(*expected_order)});
      return;
    }
    tally(g, options, r);
  });
}

std::string classify(const Graph& g, int k) {
  std::ostringstream out;
  out << to_graph6(g) << "\tn=" << g.order() << "\tk=" << k;
  HypothesisReport h;
  int alpha = 0;
  if (g.order() > 0 && k >= 0) {
    h = check_hypothesis(g, k);
    alpha = independence_number(g).alpha;
  } else {
    h.n = g.order();
    h.k = k;
  }
  out << "\tkappa=" << h.kappa << "\tchi=" << h.chi << "\talpha=" << alpha << "\tk_ge_2=" << h.k_ge_2
      << "\tk_connected=" << h.k_connected_ok << "\tchi_ge_n_minus_k=" << h.chi_ok;
  std::string payload;
  if (h.holds()) {
    const Certificate cert = certify_unchecked(g, k);
    out << "\tkind=" << certificate_kind(cert);
    payload = format_certificate(g, cert, k);
  } else {
    payload = "hypothesis-failed\t" + to_graph6(g) + "\t" + h.failing_flag();
    out << "\tkind=hypothesis-failed\tfailing=" << h.failing_flag();
  }
  char digest[17];
  std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(fnv1a(payload)));
  out << "\tdigest=" << digest;
  return out.str();
}

std::string format_report(const VerificationReport& r) {
  std::ostringstream out;
  out << "graphs\t" << r.total_graphs << '\n';
  out << "k\thits\thamiltonian\textremal\tcounterexamples\n";
  VerificationReport::PerK bad{};
  for (const auto& c : r.counterexamples) ++bad[static_cast<std::size_t>(c.k)];
  for (int k = std::max(r.k_min, 2); k <= r.k_max; ++k) {
    const auto i = static_cast<std::size_t>(k);
    out << k << '\t' << r.hypothesis_hits[i] << '\t' << r.hamiltonian[i] << '\t' << r.extremal[i] << '\t' << bad[i]
        << '\n';
  }
  out << "hypothesis_hits\t" << r.total_hits() << '\n';
  out << "hamiltonian\t" << r.total_hamiltonian() << '\n';
  out << "extremal\t" << r.total_extremal() << '\n';
  out << "counterexamples\t" << r.counterexamples.size() << '\n';
  out << "nordhaus_gaddum_violations\t" << r.nordhaus_gaddum_violations << '\n';
  if (r.nordhaus_gaddum_min_slack <= Graph::max_order) out << "nordhaus_gaddum_min_slack\t" << r.nordhaus_gaddum_min_slack << '\n';
  out << "malformed\t" << r.malformed.size() << '\n';
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.3f", r.elapsed.count());
  out << "elapsed_seconds\t" << secs << '\n';
  for (const auto& c : r.counterexamples) out << "counterexample\t" << c.graph6 << "\tk=" << c.k << '\n';
  for (const auto& m : r.malformed) out << "malformed\tline=" << m.line << '\t' << m.message << '\n';
  return out.str();
}

}  // namespace chromham
