#include <sstream>

#include "chromham/cycles.hh"
#include "chromham/graph6.hh"
#include "chromham/invariants.hh"
#include "chromham/theorem.hh"

namespace chromham {

std::string_view conclusion_name(TraceConclusion c) {
  switch (c) {
    case TraceConclusion::hamiltonian:
      return "hamiltonian";
    case TraceConclusion::extremal_balanced:
      return "extremal n=2k+1";
    case TraceConclusion::extremal_wide:
      return "extremal n>=2k+2";
    case TraceConclusion::failed:
      break;
  }
  return "failed";
}

bool ProofTrace::all_passed() const {
  for (const auto& s : steps)
    if (!s.passed) return false;
  return !steps.empty();
}

namespace {

std::string edge_text(Vertex u, Vertex v) { return std::to_string(u) + "-" + std::to_string(v); }

std::string cycle_text(const std::optional<Cycle>& c) {
  return c ? "longer_cycle=" + format_vertices(c->order()) : "longer_cycle=none";
}

std::string coloring_text(const Coloring& c) {
  std::string out = "coloring=";
  for (std::size_t v = 0; v < c.assignment.size(); ++v) {
    if (v) out += ',';
    out += std::to_string(c.assignment[v]);
  }
  return out + " colors=" + std::to_string(c.colors_used);
}

PathSystem first_paths(const PathSystem& fan, int k) {
  PathSystem out{fan.hub, {}, {}};
  for (int i = 0; i < k && i < static_cast<int>(fan.paths.size()); ++i) {
    out.paths.push_back(fan.paths[static_cast<std::size_t>(i)]);
    out.attachments.push_back(fan.attachments[static_cast<std::size_t>(i)]);
  }
  return out;
}

// Builds the trace; every assertion goes through check(), and the first
// failure stops the run.
class ProofRun {
 public:
  ProofRun(const Graph& g, int k) : g_(g), k_(k), n_(g.order()) {}

  ProofTrace run() {
    if (auto ham = find_hamiltonian_cycle(g_)) {
      check("hamiltonian", "G is Hamiltonian; nothing to prove", true, "cycle=" + format_vertices(ham->order()));
      trace_.conclusion = TraceConclusion::hamiltonian;
      return std::move(trace_);
    }
    if (n_ > longest_cycle_limit)
      throw std::domain_error("trace_proof needs an exact longest cycle; order " + std::to_string(n_) +
                              " exceeds " + std::to_string(longest_cycle_limit));
    if (preliminaries() && coloring_steps()) dispatch();
    return std::move(trace_);
  }

 private:
  bool check(std::string id, std::string description, bool passed, std::string witness) {
    trace_.steps.push_back({std::move(id), std::move(description), passed, std::move(witness)});
    return passed;
  }

  bool preliminaries() {
    const int delta = min_degree(g_);
    if (!check("order-bound", "non-Hamiltonian forces n >= 2k+1 (else delta >= k >= n/2)", n_ >= 2 * k_ + 1,
               "n=" + std::to_string(n_) + " k=" + std::to_string(k_) + " delta=" + std::to_string(delta)))
      return false;

    auto longest = longest_cycle(g_);
    if (!longest || longest->length() == n_)
      return check("longest-cycle", "an exact longest cycle C misses some vertex", false,
                   longest ? "cycle=" + format_vertices(longest->order()) : "acyclic");
    cycle_ = *longest;
    x0_ = (g_.vertices() - cycle_->vertices()).first();
    check("longest-cycle", "exact longest cycle C and the lowest off-cycle vertex x0", true,
          "cycle=" + format_vertices(cycle_->order()) + " length=" + std::to_string(cycle_->length()) +
              " x0=" + std::to_string(x0_));

    PathSystem fan;
    try {
      fan = menger_fan(g_, x0_, *cycle_, k_);
    } catch (const ConnectivityError& e) {
      return check("fan", "at least k paths from x0 to C, disjoint except at x0", false, e.what());
    }
    auto [oriented, ordered] = orient_by_fan(*cycle_, fan);
    cycle_ = oriented;
    full_fan_ = ordered;
    std::string paths;
    for (const auto& p : full_fan_.paths) paths += (paths.empty() ? "" : "|") + format_vertices(p);
    if (!check("fan", "at least k paths from x0 to C, disjoint except at x0", validate_fan(g_, *cycle_, full_fan_, k_),
               "oriented_cycle=" + format_vertices(cycle_->order()) + " s=" + std::to_string(full_fan_.paths.size()) +
                   " attachments=" + format_vertices(full_fan_.attachments) + " paths=" + paths))
      return false;

    const VertexSet t = successors_set(*cycle_, full_fan_);
    const bool independent = is_independent(g_, t);
    std::string witness = "T=" + format_vertices(t);
    if (!independent) witness += " " + cycle_text(extend_successor_chord(g_, *cycle_, full_fan_));
    if (!check("independent-set", "T = {x0, u_1^+, ..., u_s^+} is independent, else C is not longest", independent,
               witness))
      return false;

    fan_ = first_paths(full_fan_, k_);
    s_set_ = successors_set(*cycle_, fan_);
    return true;
  }

  bool coloring_steps() {
    const int chi = chromatic_number(g_).chi;
    const Graph gc = complement(g_);
    const int alpha = independence_number(g_).alpha;
    const int omega_c = max_clique(gc).size();
    const int chi_c = chromatic_number(gc).chi;
    std::ostringstream w;
    w << "n+1=" << n_ + 1 << " chi=" << chi << " alpha=" << alpha << " omega_c=" << omega_c << " chi_c=" << chi_c
      << " S=" << format_vertices(s_set_);
    if (!check("equality-chain", "n+1 <= chi + alpha = chi + omega(G^c) <= chi + chi(G^c) <= n+1 forces chi = n-k, alpha = k+1",
               chi == n_ - k_ && alpha == k_ + 1 && omega_c == k_ + 1 && chi_c == k_ + 1, w.str()))
      return false;

    const VertexSet rest = g_.vertices() - s_set_;
    if (is_clique(g_, rest))
      return check("clique-outside-S", "G[V - S] is complete", true, "V-S=" + format_vertices(rest));

    // Two non-adjacent vertices of V - S share a color: an (n-k-1)-coloring.
    Vertex x = -1, y = -1;
    for (Vertex u : rest)
      for (Vertex v : rest - g_.neighbors(u))
        if (u < v && x < 0) x = u, y = v;
    Coloring c{std::vector<int>(static_cast<std::size_t>(n_), 0), 0};
    int next = 0;
    for (Vertex v : rest) c.assignment[static_cast<std::size_t>(v)] = v == y ? c.assignment[static_cast<std::size_t>(x)] : next++;
    for (Vertex v : s_set_) c.assignment[static_cast<std::size_t>(v)] = next;
    c.colors_used = next + 1;
    return check("clique-outside-S", "G[V - S] is complete", false,
                 "missing=" + edge_text(x, y) + " proper=" + (is_proper(g_, c) ? "yes " : "no ") + coloring_text(c));
  }

  void dispatch() {
    SegmentDecomposition seg;
    try {
      seg = segments(*cycle_, fan_, k_);
    } catch (const std::invalid_argument& e) {
      check("segments", "segments T_i = C[u_i^++, u_{i+1}] are non-empty", false, e.what());
      return;
    }
    trace_.case_index = static_cast<int>(seg.big_segment_indices.size());
    std::string w;
    for (std::size_t i = 0; i < seg.segments.size(); ++i)
      w += "T" + std::to_string(i + 1) + "=" + format_vertices(seg.segments[i]) + " ";
    w += "long=" + std::to_string(trace_.case_index);
    check("segments", "segments T_i = C[u_i^++, u_{i+1}] and the number of long ones", true, w);

    if (trace_.case_index == 0)
      no_long_segment();
    else if (trace_.case_index == 1)
      one_long_segment(static_cast<std::size_t>(seg.big_segment_indices.front()));
    else
      several_long_segments();
  }

  // With |V - V(C)| >= 2 the off-cycle vertices form a clique, and a second
  // one z reroutes C through x0 and z. A longest C never allows this.
  bool only_x0_off_cycle(const std::string& id, const PathSystem& fan, std::size_t target) {
    const VertexSet off = g_.vertices() - cycle_->vertices();
    if (off == VertexSet::single(x0_))
      return check(id, "V - V(C) = {x0}", true, "off_cycle=" + std::to_string(x0_));
    const Vertex z = (off - VertexSet::single(x0_)).first();
    const Vertex u = fan.attachments[target % fan.attachments.size()];
    std::ostringstream w;
    w << "off_cycle=" << format_vertices(off) << " off_clique=" << (is_clique(g_, off) ? "yes" : "no") << " z=" << z
      << " x0z=" << (g_.adjacent(x0_, z) ? "yes" : "no") << " zu=" << edge_text(z, u) << ":"
      << (g_.adjacent(z, u) ? "yes" : "no") << " " << cycle_text(extend_offcycle(g_, *cycle_, fan, z));
    return check(id, "V - V(C) = {x0}; a second off-cycle vertex yields a longer cycle", false, w.str());
  }

  bool matches_extremal(const std::string& id, const std::string& description, const ExtremalPartition& expected) {
    const auto match = recognize_extremal(g_);
    std::string w = "a=" + format_vertices(expected.a) + " b=" + format_vertices(expected.b) +
                    " c=" + format_vertices(expected.c_part);
    bool ok = match && match->k == k_ && validate_extremal_partition(g_, k_, expected);
    if (match) w += " recognized_k=" + std::to_string(match->k);
    return check(id, description, ok, w);
  }

  void no_long_segment() {
    if (!only_x0_off_cycle("case0-offcycle", fan_, 1)) return;
    const VertexSet rest = g_.vertices() - s_set_;
    bool joined = true;
    for (Vertex x : s_set_) joined = joined && rest.subset_of(g_.neighbors(x));
    if (!check("case0-join", "every vertex of S sees every vertex of V - S (S independent, delta >= k)", joined,
               "S=" + format_vertices(s_set_) + " V-S=" + format_vertices(rest)))
      return;
    // The partition puts x0's side of S into b and the highest member of S into the K_1.
    ExtremalPartition expected{rest, s_set_, {}};
    Vertex top = 0;
    for (Vertex v : s_set_) top = v;
    expected.b.erase(top);
    expected.c_part.insert(top);
    if (!matches_extremal("case0-structure", "G = K_k v K_{k+1}^c, n = 2k+1", expected) || n_ != 2 * k_ + 1) {
      trace_.steps.back().passed = false;
      return;
    }
    trace_.conclusion = TraceConclusion::extremal_balanced;
  }

  void one_long_segment(std::size_t big) {
    const PathSystem fan = rotate_fan(fan_, big);
    const Cycle& c = *cycle_;
    // u_3 wraps to u_1 when k = 2.
    if (!only_x0_off_cycle("case1-offcycle", fan, 2)) return;

    const auto& att = fan.attachments;
    const Vertex u1 = att[0];
    const Vertex u1_plus = c.succ(u1);
    std::vector<Vertex> y = c.arc(c.succ(u1_plus), att[1]);
    y.pop_back();
    const int r = static_cast<int>(y.size());
    std::vector<Vertex> other_succ;
    for (std::size_t l = 1; l < att.size(); ++l) other_succ.push_back(c.succ(att[l]));

    const Cycle reversed = c.reversed();
    const PathSystem reversed_fan = reverse_fan(rotate_fan(fan, 1));
    for (int j = r; j >= 1; --j) {
      const Vertex yj = y[static_cast<std::size_t>(j - 1)];
      trace_.propagation_steps = r - j + 1;
      std::ostringstream w;
      w << "j=" << j << " y_j=" << yj;
      // x0 y_j and y_j u_l^+ are absent, else a longer cycle: for j = r by the
      // predecessor argument, below that by the rotations through y_{j+1}.
      auto witness = [&]() {
        return j == r ? extend_successor_chord(g_, reversed, reversed_fan) : extend_case1_rotation(g_, c, fan, j + 1);
      };
      if (g_.adjacent(x0_, yj)) {
        w << " x0y_j present " << cycle_text(witness());
        check("case1-chain", "x0 y_j not an edge", false, w.str());
        return;
      }
      for (Vertex ul_plus : other_succ) {
        if (g_.adjacent(yj, ul_plus)) {
          w << " y_ju_l^+=" << edge_text(yj, ul_plus) << " present " << cycle_text(witness());
          check("case1-chain", "y_j u_l^+ not an edge for l >= 2", false, w.str());
          return;
        }
      }
      if (!g_.adjacent(yj, u1_plus)) {
        VertexSet bigger = s_set_ | VertexSet::single(yj);
        w << " independent=" << format_vertices(bigger) << " (size k+2)";
        check("case1-chain", "u_1^+ y_j is an edge, else S + y_j is independent", false, w.str());
        return;
      }
    }
    check("case1-chain", "for all j: y_j u_1^+ in E, x0 y_j and y_j u_l^+ (l >= 2) not in E", true,
          "r=" + std::to_string(r) + " y=" + format_vertices(y) + " u1+=" + std::to_string(u1_plus));

    const VertexSet low_side = s_set_ - VertexSet::single(u1_plus);
    VertexSet attachments;
    for (Vertex u : att) attachments.insert(u);
    bool sees_all = true;
    for (Vertex w : low_side) sees_all = sees_all && attachments.subset_of(g_.neighbors(w)) && g_.degree(w) >= k_;
    if (!check("case1-attachments", "each w in S - {u_1^+} sees every u_s (delta >= k)", sees_all,
               "S-u1+=" + format_vertices(low_side) + " attachments=" + format_vertices(attachments)))
      return;

    for (Vertex ut : att) {
      if (g_.adjacent(u1_plus, ut)) continue;
      // V - S distinct colors, u_1^+ borrows u_t's, the rest of S borrows y_1's.
      Coloring col{std::vector<int>(static_cast<std::size_t>(n_), 0), 0};
      int next = 0;
      for (Vertex v : g_.vertices() - s_set_) col.assignment[static_cast<std::size_t>(v)] = next++;
      col.assignment[static_cast<std::size_t>(u1_plus)] = col.assignment[static_cast<std::size_t>(ut)];
      for (Vertex w : low_side) col.assignment[static_cast<std::size_t>(w)] = col.assignment[static_cast<std::size_t>(y.front())];
      col.colors_used = next;
      check("case1-coloring", "u_1^+ sees every u_t, else G has an (n-k-1)-coloring", false,
            "missing=" + edge_text(u1_plus, ut) + " proper=" + (is_proper(g_, col) ? "yes " : "no ") + coloring_text(col));
      return;
    }
    check("case1-coloring", "u_1^+ sees every u_t, else G has an (n-k-1)-coloring", true,
          "u1+=" + std::to_string(u1_plus));

    VertexSet cpart = VertexSet::single(u1_plus);
    for (Vertex v : y) cpart.insert(v);
    if (!matches_extremal("case1-structure", "G = K_k v (K_k^c u K_{n-2k}), n >= 2k+2",
                          ExtremalPartition{attachments, low_side, cpart}) ||
        n_ < 2 * k_ + 2) {
      trace_.steps.back().passed = false;
      return;
    }
    trace_.conclusion = TraceConclusion::extremal_wide;
  }

  void several_long_segments() {
    // V - S is a clique, so the predecessors of two attachments ending long
    // segments are adjacent, and that chord lengthens C.
    auto longer = extend_predecessor_chord(g_, *cycle_, fan_);
    check("case2-chord", "two long segments give a chord u_i^- u_j^- and a cycle longer than C", false,
          cycle_text(longer));
  }

  const Graph& g_;
  const int k_;
  const int n_;
  ProofTrace trace_;
  std::optional<Cycle> cycle_;
  Vertex x0_ = -1;
  PathSystem full_fan_;
  PathSystem fan_;
  VertexSet s_set_;
};

}  // namespace

ProofTrace trace_proof(const Graph& g, int k) {
  const HypothesisReport report = check_hypothesis(g, k);
  if (!report.holds()) throw HypothesisError(report);
  return ProofRun(g, k).run();
}

std::string format_trace(const ProofTrace& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    out << "step\t" << i + 1 << '\t' << s.id << '\t' << (s.passed ? "PASS" : "FAIL") << '\t' << s.description << '\t'
        << s.witness << '\n';
  }
  out << "conclusion\t" << conclusion_name(trace.conclusion) << "\tcase=" << trace.case_index
      << "\tpropagation=" << trace.propagation_steps << '\n';
  return out.str();
}

}  // namespace chromham
