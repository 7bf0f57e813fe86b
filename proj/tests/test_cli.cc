#include <doctest.h>

#include <sstream>

#include "chromham/cli.hh"
#include "chromham/graph6.hh"
#include "chromham/theorem.hh"

using namespace chromham;

namespace {

CommandOutcome call(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  return run(args, in);
}

}  // namespace

TEST_CASE("cli extremal") {
  const auto out = call({"extremal", "--k", "2", "--n", "5"});
  CHECK(out.exit_code == 0);
  CHECK(out.payload == to_graph6(build_extremal(2, 5)) + "\n");
  CHECK(parse_graph6(out.payload.substr(0, out.payload.size() - 1)).edge_count() == 7);
  CHECK(call({"extremal", "--k", "1", "--n", "5"}).exit_code == 2);
}

TEST_CASE("cli invariants") {
  const auto out = call({"invariants", "C~"});
  CHECK(out.exit_code == 0);
  CHECK(out.payload.find("kappa\t3\n") != std::string::npos);
  CHECK(out.payload.find("chi\t4\n") != std::string::npos);
  CHECK(out.payload.find("alpha\t1\n") != std::string::npos);
  CHECK(out.payload.find("hamiltonian\tyes\n") != std::string::npos);
  const auto piped = call({"invariants"}, "C~\nD}o\n");
  CHECK(piped.exit_code == 0);
  CHECK(piped.payload.find("hamiltonian\tno\n") != std::string::npos);
  CHECK(call({"invariants", "C"}).exit_code == 2);
}

TEST_CASE("cli certify round trip") {
  const std::string g6 = to_graph6(build_extremal(2, 6));
  const auto out = call({"certify", g6, "--k", "2"});
  CHECK(out.exit_code == 0);
  const auto parsed = parse_certificate(out.payload);
  CHECK(parsed.graph == build_extremal(2, 6));
  CHECK(validate_certificate(parsed.graph, parsed.certificate));
  const auto bad = call({"certify", to_graph6(path_graph(4)), "--k", "2"});
  CHECK(bad.exit_code == 2);
  CHECK(bad.payload.find("k_connected") != std::string::npos);
}

TEST_CASE("cli trace") {
  const auto out = call({"trace", to_graph6(build_extremal(2, 7)), "--k", "2"});
  CHECK(out.exit_code == 0);
  CHECK(out.payload.find("FAIL") == std::string::npos);
  CHECK(out.payload.find("conclusion\textremal n>=2k+2") != std::string::npos);
}

TEST_CASE("cli verify") {
  const auto out = call({"verify", "--n", "5"});
  CHECK(out.exit_code == 0);
  CHECK(out.payload.find("counterexamples\t0\n") != std::string::npos);
  const auto streamed = call({"verify", "--n", "4", "--stream", "-"}, "C~\nC\n");
  CHECK(streamed.exit_code == 2);
  CHECK(streamed.payload.find("malformed\tline=2") != std::string::npos);
  CHECK(call({"verify", "--n", "9"}).exit_code == 2);
}

TEST_CASE("cli graph6 codec") {
  const auto enc = call({"g6", "encode", "4", "0-1", "0-2", "0-3", "1-2", "1-3", "2-3"});
  CHECK(enc.payload == "C~\n");
  const auto dec = call({"g6", "decode"}, "C~\n?\n");
  CHECK(dec.payload == "4 0-1 0-2 0-3 1-2 1-3 2-3\n0\n");
  CHECK(call({"g6", "encode", "3", "0-3"}).exit_code == 2);
}

TEST_CASE("cli usage errors") {
  CHECK(call({}).exit_code == 2);
  CHECK(call({"frobnicate"}).exit_code == 2);
  CHECK(call({"certify", "C~"}).exit_code == 2);
  CHECK(call({"--help"}).exit_code == 0);
}
