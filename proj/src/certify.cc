#include <charconv>
#include <sstream>

#include "chromham/cycles.hh"
#include "chromham/graph6.hh"
#include "chromham/invariants.hh"
#include "chromham/theorem.hh"

namespace chromham {

std::string HypothesisReport::failing_flag() const {
  if (!k_ge_2) return "k_ge_2";
  if (!k_connected_ok) return "k_connected";
  if (!chi_ok) return "chi_ge_n_minus_k";
  return {};
}

HypothesisError::HypothesisError(const HypothesisReport& report)
    : std::invalid_argument("hypothesis violated: " + report.failing_flag() + " (n=" + std::to_string(report.n) +
                            " k=" + std::to_string(report.k) + " kappa=" + std::to_string(report.kappa) +
                            " chi=" + std::to_string(report.chi) + ")"),
      report_(report) {}

HypothesisReport check_hypothesis(const Graph& g, int k) {
  if (g.order() == 0) throw std::invalid_argument("check_hypothesis on the empty graph");
  if (k < 0) throw std::invalid_argument("check_hypothesis: negative k");
  HypothesisReport r;
  r.n = g.order();
  r.k = k;
  r.kappa = vertex_connectivity(g);
  r.chi = chromatic_number(g).chi;
  r.k_ge_2 = k >= 2;
  r.k_connected_ok = r.kappa >= k;
  r.chi_ok = r.chi >= r.n - k;
  return r;
}

std::string_view certificate_kind(const Certificate& cert) {
  switch (cert.index()) {
    case 0:
      return "hamiltonian";
    case 1:
      return "extremal";
    default:
      return "counterexample";
  }
}

Certificate certify(const Graph& g, int k) {
  const HypothesisReport report = check_hypothesis(g, k);
  if (!report.holds()) throw HypothesisError(report);
  return certify_unchecked(g, k);
}

Certificate certify_unchecked(const Graph& g, int k) {
  if (g.order() >= 3) {
    if (auto cycle = find_hamiltonian_cycle(g)) return HamiltonianCertificate{*cycle};
  }
  if (auto match = recognize_extremal(g)) {
    if (match->k == k) return ExtremalCertificate{k, match->partition};
    return CounterexampleCertificate{"non-Hamiltonian; extremal shape has k=" + std::to_string(match->k) +
                                     " instead of " + std::to_string(k)};
  }
  return CounterexampleCertificate{"non-Hamiltonian and not K_k v (K_k^c u K_{n-2k})"};
}

bool validate_certificate(const Graph& g, const Certificate& cert) {
  if (const auto* h = std::get_if<HamiltonianCertificate>(&cert))
    return h->cycle.length() == g.order() && validate_cycle(g, h->cycle);
  if (const auto* e = std::get_if<ExtremalCertificate>(&cert)) return validate_extremal_partition(g, e->k, e->partition);
  return false;
}

std::string format_certificate(const Graph& g, const Certificate& cert, int k) {
  std::ostringstream out;
  out << certificate_kind(cert) << '\t' << to_graph6(g);
  if (const auto* h = std::get_if<HamiltonianCertificate>(&cert)) {
    out << "\tcycle=" << format_vertices(h->cycle.order());
  } else if (const auto* e = std::get_if<ExtremalCertificate>(&cert)) {
    out << "\tk=" << e->k << "\ta=" << format_vertices(e->partition.a) << "\tb=" << format_vertices(e->partition.b)
        << "\tc=" << format_vertices(e->partition.c_part);
  } else {
    std::string reason = std::get<CounterexampleCertificate>(cert).report;
    for (char& ch : reason)
      if (ch == '\t' || ch == '\n') ch = ' ';
    out << "\tk=" << k << "\treason=" << reason;
  }
  return out.str();
}

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  while (true) {
    const auto tab = line.find('\t');
    out.push_back(line.substr(0, tab));
    if (tab == std::string_view::npos) break;
    line.remove_prefix(tab + 1);
  }
  return out;
}

std::string_view field_value(std::string_view field, std::string_view key) {
  if (!field.starts_with(key) || field.size() <= key.size() || field[key.size()] != '=')
    throw std::invalid_argument("certificate: expected field '" + std::string(key) + "='");
  return field.substr(key.size() + 1);
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("certificate: bad integer '" + std::string(text) + "'");
  return value;
}

std::vector<Vertex> parse_vertex_list(std::string_view text) {
  std::vector<Vertex> out;
  if (text == "-") return out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_int(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

VertexSet parse_vertex_set(std::string_view text) {
  VertexSet s;
  for (Vertex v : parse_vertex_list(text)) {
    if (v < 0 || v >= 64) throw std::invalid_argument("certificate: vertex out of range");
    s.insert(v);
  }
  return s;
}

}  // namespace

ParsedCertificate parse_certificate(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  const auto fields = split_tabs(line);
  if (fields.size() < 3) throw std::invalid_argument("certificate: too few fields");
  Graph g;
  try {
    g = parse_graph6(fields[1]);
  } catch (const Graph6Error& e) {
    throw std::invalid_argument(std::string("certificate: ") + e.what());
  }
  if (fields[0] == "hamiltonian" && fields.size() == 3)
    return {g, HamiltonianCertificate{Cycle(parse_vertex_list(field_value(fields[2], "cycle")))}};
  if (fields[0] == "extremal" && fields.size() == 6) {
    ExtremalPartition p{parse_vertex_set(field_value(fields[3], "a")), parse_vertex_set(field_value(fields[4], "b")),
                        parse_vertex_set(field_value(fields[5], "c"))};
    return {g, ExtremalCertificate{parse_int(field_value(fields[2], "k")), p}};
  }
  if (fields[0] == "counterexample" && fields.size() == 4) {
    parse_int(field_value(fields[2], "k"));
    return {g, CounterexampleCertificate{std::string(field_value(fields[3], "reason"))}};
  }
  throw std::invalid_argument("certificate: unknown kind or field count");
}

}  // namespace chromham
