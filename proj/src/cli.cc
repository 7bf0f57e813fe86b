#include "chromham/cli.hh"

#include <CLI11.hpp>

#include <fstream>
#include <istream>
#include <sstream>

#include "chromham/cycles.hh"
#include "chromham/graph6.hh"
#include "chromham/harness.hh"
#include "chromham/invariants.hh"
#include "chromham/theorem.hh"

namespace chromham {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> input_lines(const std::vector<std::string>& given, std::istream& in) {
  if (!given.empty()) return given;
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line != graph6_header) out.push_back(line);
  }
  if (out.empty()) throw InputError("no graph given on the command line or standard input");
  return out;
}

Graph read_graph6(const std::string& text) {
  try {
    return parse_graph6(text);
  } catch (const Graph6Error& e) {
    throw InputError("bad graph6 '" + text + "': " + e.what());
  }
}

std::string edge_list(const Graph& g) {
  std::string out = std::to_string(g.order());
  for (auto [u, v] : g.edges()) out += " " + std::to_string(u) + "-" + std::to_string(v);
  return out;
}

Graph parse_edge_list(const std::string& line) {
  std::istringstream in(line);
  int n = -1;
  if (!(in >> n) || n < 0 || n > max_graph6_order) throw InputError("edge list must start with an order in [0, 62]");
  GraphBuilder b(n);
  std::string token;
  while (in >> token) {
    int u = 0, v = 0;
    char dash = 0;
    std::istringstream edge(token);
    if (!(edge >> u >> dash >> v) || dash != '-' || !edge.eof()) throw InputError("bad edge '" + token + "'");
    try {
      b.add_edge(u, v);
    } catch (const std::exception& e) {
      throw InputError("bad edge '" + token + "': " + e.what());
    }
  }
  return b.build();
}

std::string invariants_block(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw InputError("invariants: the empty graph has none of interest");
  std::ostringstream out;
  out << "graph6\t" << to_graph6(g) << '\n';
  out << "n\t" << n << "\nedges\t" << g.edge_count() << '\n';
  out << "kappa\t" << vertex_connectivity(g) << '\n';
  out << "chi\t" << chromatic_number(g).chi << '\n';
  out << "alpha\t" << independence_number(g).alpha << '\n';
  out << "omega\t" << max_clique(g).size() << '\n';
  out << "delta\t" << min_degree(g) << '\n';
  const auto ham = n >= 3 ? find_hamiltonian_cycle(g) : std::nullopt;
  out << "hamiltonian\t" << (ham ? "yes" : "no") << '\n';
  if (ham) out << "cycle\t" << format_vertices(ham->order()) << '\n';
  return out.str();
}

CommandOutcome certify_lines(const std::vector<std::string>& lines, int k) {
  CommandOutcome out;
  for (const auto& text : lines) {
    const Graph g = read_graph6(text);
    const Certificate cert = certify(g, k);
    out.payload += format_certificate(g, cert, k) + "\n";
    if (std::holds_alternative<CounterexampleCertificate>(cert)) out.exit_code = 1;
  }
  return out;
}

CommandOutcome trace_lines(const std::vector<std::string>& lines, int k) {
  CommandOutcome out;
  for (const auto& text : lines) {
    const ProofTrace trace = trace_proof(read_graph6(text), k);
    out.payload += "graph6\t" + text + "\n" + format_trace(trace);
    if (!trace.all_passed() || trace.conclusion == TraceConclusion::failed) out.exit_code = 1;
  }
  return out;
}

}  // namespace

CommandOutcome run(const std::vector<std::string>& args, std::istream& in) {
  CLI::App app{"Hamiltonicity of k-connected graphs with large chromatic number", "chromham"};
  app.require_subcommand(1);

  std::vector<std::string> graphs;
  int k = 0;
  int n = 0;

  auto* inv = app.add_subcommand("invariants", "n, kappa, chi, alpha, omega, delta and a Hamiltonian cycle");
  inv->add_option("graph6", graphs, "graph6 strings (default: standard input)");

  auto* cert = app.add_subcommand("certify", "Hamiltonian cycle or extremal partition");
  cert->add_option("graph6", graphs, "graph6 strings (default: standard input)");
  cert->add_option("--k", k, "connectivity parameter")->required();

  auto* trace = app.add_subcommand("trace", "step-by-step check of the non-Hamiltonian case");
  trace->add_option("graph6", graphs, "graph6 strings (default: standard input)");
  trace->add_option("--k", k, "connectivity parameter")->required();

  auto* ext = app.add_subcommand("extremal", "graph6 of K_k v (K_k^c u K_{n-2k})");
  ext->add_option("--k", k, "k >= 2")->required();
  ext->add_option("--n", n, "n >= 2k+1")->required();

  VerifyOptions options;
  int k_max = -1;
  unsigned threads = 0;
  std::string stream;
  bool records = false;
  auto* verify = app.add_subcommand("verify", "exhaustive or streamed check over all graphs of order n");
  verify->add_option("--n", n, "graph order")->required();
  verify->add_option("--k-min", options.k_min, "smallest k (default 2)");
  verify->add_option("--k-max", k_max, "largest k (default n-1)");
  verify->add_option("--stream", stream, "graph6 file, '-' for standard input");
  verify->add_option("--threads", threads, "worker threads (default: hardware)");
  verify->add_flag("--records", records, "print one classify record per graph and k");

  auto* g6 = app.add_subcommand("g6", "graph6 codec");
  g6->require_subcommand(1);
  std::vector<std::string> codec_args;
  auto* encode = g6->add_subcommand("encode", "edge list '<n> u-v u-v ...' to graph6");
  encode->add_option("edges", codec_args, "order followed by edges (default: standard input)");
  auto* decode = g6->add_subcommand("decode", "graph6 to edge list '<n> u-v u-v ...'");
  decode->add_option("graph6", codec_args, "graph6 strings (default: standard input)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    return {code == 0 ? 0 : 2, out.str() + err.str()};
  }

  try {
    if (*inv) {
      CommandOutcome out;
      for (const auto& text : input_lines(graphs, in)) out.payload += invariants_block(read_graph6(text));
      return out;
    }
    if (*cert) return certify_lines(input_lines(graphs, in), k);
    if (*trace) return trace_lines(input_lines(graphs, in), k);
    if (*ext) return {0, to_graph6(build_extremal(k, n)) + "\n"};
    if (*verify) {
      if (k_max >= 0) options.k_max = k_max;
      options.threads = threads;
      options.keep_records = records;
      VerificationReport report;
      if (stream.empty()) {
        report = verify_order(n, options);
      } else if (stream == "-") {
        report = verify_stream(in, options, n);
      } else {
        std::ifstream file(stream);
        if (!file) throw InputError("cannot open " + stream);
        report = verify_stream(file, options, n);
      }
      CommandOutcome out;
      for (const auto& r : report.records) out.payload += r + "\n";
      out.payload += format_report(report);
      if (!report.counterexamples.empty() || report.nordhaus_gaddum_violations > 0)
        out.exit_code = 1;
      else if (!report.malformed.empty())
        out.exit_code = 2;
      return out;
    }
    if (*encode) {
      std::vector<std::string> lines;
      if (codec_args.empty()) {
        lines = input_lines({}, in);
      } else {
        std::string joined;
        for (const auto& a : codec_args) joined += (joined.empty() ? "" : " ") + a;
        lines.push_back(joined);
      }
      CommandOutcome out;
      for (const auto& line : lines) out.payload += to_graph6(parse_edge_list(line)) + "\n";
      return out;
    }
    if (*decode) {
      CommandOutcome out;
      for (const auto& text : input_lines(codec_args, in)) out.payload += edge_list(read_graph6(text)) + "\n";
      return out;
    }
  } catch (const HypothesisError& e) {
    return {2, std::string(e.what()) + "\nfailing\t" + e.report().failing_flag() + "\n"};
  } catch (const std::exception& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
  return {2, app.help()};
}

}  // namespace chromham
