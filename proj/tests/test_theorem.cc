#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "chromham/cycles.hh"
#include "chromham/graph6.hh"
#include "chromham/invariants.hh"
#include "chromham/theorem.hh"
#include "oracles.hh"

using namespace chromham;

TEST_CASE("extremal construction") {
  CHECK(build_extremal(2, 5).edge_count() == 7);
  CHECK(build_extremal(2, 6).edge_count() == 10);
  const Graph g = build_extremal(3, 7);
  CHECK(g.edge_count() == 15);
  CHECK(oracle::chi(g) == 4);
  CHECK(oracle::alpha(g) == 4);
  CHECK(oracle::kappa(g) == 3);
  CHECK_FALSE(oracle::hamiltonian(g));
  CHECK_THROWS_AS(build_extremal(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_extremal(3, 6), std::invalid_argument);
}

TEST_CASE("extremal recognition") {
  const auto m = recognize_extremal(build_extremal(2, 5));
  REQUIRE(m.has_value());
  CHECK(m->k == 2);
  CHECK(m->partition.a == VertexSet{0, 1});
  CHECK_FALSE(recognize_extremal(complete_graph(6)).has_value());
  CHECK_FALSE(recognize_extremal(cycle_graph(7)).has_value());
  CHECK_FALSE(recognize_extremal(petersen_graph()).has_value());

  std::vector<Vertex> perm(8);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937(5));
  const Graph base = build_extremal(3, 8);
  const Graph moved = relabel(base, perm);
  const auto r = recognize_extremal(moved);
  REQUIRE(r.has_value());
  CHECK(r->k == 3);
  VertexSet a, b, c;
  for (Vertex v : {0, 1, 2}) a.insert(perm[static_cast<std::size_t>(v)]);
  for (Vertex v : {3, 4, 5}) b.insert(perm[static_cast<std::size_t>(v)]);
  for (Vertex v : {6, 7}) c.insert(perm[static_cast<std::size_t>(v)]);
  CHECK(r->partition == ExtremalPartition{a, b, c});

  // Adding one edge inside the independent part breaks the shape.
  GraphBuilder extra(7);
  for (auto [u, v] : build_extremal(2, 7).edges()) extra.add_edge(u, v);
  extra.add_edge(2, 3);
  CHECK_FALSE(recognize_extremal(extra.build()).has_value());
}

TEST_CASE("hypothesis check") {
  auto r = check_hypothesis(complete_graph(5), 2);
  CHECK(r.holds());
  CHECK(r.kappa == 4);
  CHECK(r.chi == 5);
  r = check_hypothesis(cycle_graph(6), 2);
  CHECK(r.k_connected_ok);
  CHECK_FALSE(r.chi_ok);
  CHECK(r.failing_flag() == "chi_ge_n_minus_k");
  r = check_hypothesis(build_extremal(2, 5), 2);
  CHECK(r.holds());
  CHECK(r.chi == 3);
  CHECK(check_hypothesis(complete_graph(4), 1).failing_flag() == "k_ge_2");
  CHECK(check_hypothesis(path_graph(4), 2).failing_flag() == "k_connected");
}

TEST_CASE("certify") {
  const Certificate k5 = certify(complete_graph(5), 2);
  REQUIRE(std::holds_alternative<HamiltonianCertificate>(k5));
  CHECK(std::get<HamiltonianCertificate>(k5).cycle.length() == 5);
  CHECK(validate_certificate(complete_graph(5), k5));

  const Certificate e = certify(build_extremal(2, 5), 2);
  REQUIRE(std::holds_alternative<ExtremalCertificate>(e));
  CHECK(std::get<ExtremalCertificate>(e).k == 2);
  CHECK(validate_certificate(build_extremal(2, 5), e));

  const Certificate e3 = certify(build_extremal(3, 9), 3);
  REQUIRE(std::holds_alternative<ExtremalCertificate>(e3));
  CHECK(std::get<ExtremalCertificate>(e3).k == 3);

  CHECK_THROWS_AS(certify(path_graph(4), 2), HypothesisError);
  try {
    certify(cycle_graph(6), 2);
    FAIL("expected a hypothesis error");
  } catch (const HypothesisError& err) {
    CHECK(err.report().failing_flag() == "chi_ge_n_minus_k");
  }
  CHECK(std::holds_alternative<CounterexampleCertificate>(certify_unchecked(petersen_graph(), 3)));
  CHECK_FALSE(validate_certificate(build_extremal(2, 5), Certificate{ExtremalCertificate{2, {{0}, {1}, {2}}}}));
}

TEST_CASE("certificate lines round trip") {
  const std::vector<std::pair<Graph, int>> cases = {
      {complete_graph(5), 2}, {build_extremal(2, 5), 2}, {build_extremal(4, 13), 4}, {cycle_graph(5), 2}};
  for (const auto& [g, k] : cases) {
    const Certificate cert = certify(g, k);
    const std::string line = format_certificate(g, cert, k);
    const ParsedCertificate back = parse_certificate(line);
    CHECK(back.graph == g);
    CHECK(certificate_kind(back.certificate) == certificate_kind(cert));
    CHECK(validate_certificate(back.graph, back.certificate));
    CHECK(format_certificate(back.graph, back.certificate, k) == line);
  }
  const std::string bad = format_certificate(petersen_graph(), certify_unchecked(petersen_graph(), 3), 3);
  CHECK(bad.rfind("counterexample\t", 0) == 0);
  CHECK_FALSE(validate_certificate(petersen_graph(), parse_certificate(bad).certificate));
  CHECK_THROWS_AS(parse_certificate("hamiltonian\tC~"), std::invalid_argument);
  CHECK_THROWS_AS(parse_certificate("hamiltonian\tC~\tcycle=0,1,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_certificate("extremal\tC~\tk=2\ta=0\tb=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_certificate("hamiltonian\t!!\tcycle=0,1,2"), std::invalid_argument);
}

TEST_CASE("trace on the balanced extremal graph") {
  const ProofTrace t = trace_proof(build_extremal(2, 5), 2);
  CHECK(t.all_passed());
  CHECK(t.case_index == 0);
  CHECK(t.conclusion == TraceConclusion::extremal_balanced);
  CHECK(t.steps.back().id == "case0-structure");
}

TEST_CASE("trace on a wide extremal graph") {
  const ProofTrace t = trace_proof(build_extremal(2, 7), 2);
  CHECK(t.all_passed());
  CHECK(t.case_index == 1);
  CHECK(t.propagation_steps == 2);
  CHECK(t.conclusion == TraceConclusion::extremal_wide);
  for (int k = 2; k <= 4; ++k)
    for (int n = 2 * k + 1; n <= 2 * k + 5 && n <= longest_cycle_limit; ++n) {
      const ProofTrace e = trace_proof(build_extremal(k, n), k);
      CHECK(e.all_passed());
      CHECK(e.case_index == (n == 2 * k + 1 ? 0 : 1));
      CHECK(e.propagation_steps == (n == 2 * k + 1 ? 0 : n - 2 * k - 1));
    }
}

TEST_CASE("trace short-circuits on Hamiltonian graphs") {
  const ProofTrace t = trace_proof(complete_graph(6), 3);
  REQUIRE(t.steps.size() == 1);
  CHECK(t.steps[0].id == "hamiltonian");
  CHECK(t.conclusion == TraceConclusion::hamiltonian);
  CHECK_THROWS_AS(trace_proof(path_graph(5), 2), HypothesisError);
}

TEST_CASE("trace text for k = 3") {
  const std::string text = format_trace(trace_proof(build_extremal(3, 10), 3));
  CHECK(text.find("FAIL") == std::string::npos);
  CHECK(text.find("conclusion\textremal n>=2k+2") != std::string::npos);
}

TEST_CASE("trace output has one tab-separated line per step") {
  const ProofTrace t = trace_proof(build_extremal(2, 6), 2);
  const std::string text = format_trace(t);
  const auto lines = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
  CHECK(lines == t.steps.size() + 1);
  CHECK(text.rfind("step\t1\torder-bound\tPASS\t", 0) == 0);
}
