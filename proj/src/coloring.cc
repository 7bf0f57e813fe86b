#include <array>
#include <bit>
#include <stdexcept>

#include "chromham/invariants.hh"

namespace chromham {

namespace {

void require_nonempty(const Graph& g, const char* what) {
  if (g.order() == 0) throw std::invalid_argument(std::string(what) + " of the empty graph");
}

// Branch and bound; the bound at each step is the number of colors a
// sequential greedy coloring of the remaining candidates needs.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  VertexSet run() {
    expand(g_.vertices());
    return best_;
  }

 private:
  void expand(VertexSet candidates) {
    std::array<Vertex, 64> order{};
    std::array<int, 64> bound{};
    int count = 0;
    VertexSet uncolored = candidates;
    for (int color = 1; !uncolored.empty(); ++color) {
      VertexSet open = uncolored;
      while (!open.empty()) {
        const Vertex v = open.first();
        open -= g_.neighbors(v) | VertexSet::single(v);
        uncolored.erase(v);
        order[static_cast<std::size_t>(count)] = v;
        bound[static_cast<std::size_t>(count)] = color;
        ++count;
      }
    }
    for (int i = count - 1; i >= 0; --i) {
      if (current_.size() + bound[static_cast<std::size_t>(i)] <= best_.size()) return;
      const Vertex v = order[static_cast<std::size_t>(i)];
      current_.insert(v);
      const VertexSet next = candidates & g_.neighbors(v);
      if (next.empty()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.erase(v);
      candidates.erase(v);
    }
  }

  const Graph& g_;
  VertexSet best_;
  VertexSet current_;
};

// DSATUR-ordered backtracking. A vertex may open color c only when colors
// 0..c-1 are already in use.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int max_colors) : g_(g), max_colors_(max_colors), color_(static_cast<std::size_t>(g.order()), -1) {}

  std::optional<Coloring> run() {
    if (!search(g_.vertices(), 0)) return std::nullopt;
    Coloring out{color_, 0};
    for (int c : color_) out.colors_used = std::max(out.colors_used, c + 1);
    return out;
  }

  Coloring greedy() {
    VertexSet uncolored = g_.vertices();
    int used = 0;
    while (!uncolored.empty()) {
      const auto [v, blocked] = select(uncolored, used);
      const int c = std::countr_one(blocked);
      assign(v, c);
      used = std::max(used, c + 1);
      uncolored.erase(v);
    }
    return Coloring{color_, used};
  }

 private:
  struct Choice {
    Vertex vertex;
    std::uint64_t blocked;
  };

  std::uint64_t blocked_colors(Vertex v, int used) const {
    std::uint64_t mask = 0;
    for (int c = 0; c < used; ++c)
      if (!(classes_[static_cast<std::size_t>(c)] & g_.neighbors(v)).empty()) mask |= std::uint64_t{1} << c;
    return mask;
  }

  // Highest saturation, then most uncolored neighbors, then lowest index.
  Choice select(VertexSet uncolored, int used) const {
    Choice best{-1, 0};
    int best_sat = -1;
    int best_deg = -1;
    for (Vertex v : uncolored) {
      const std::uint64_t blocked = blocked_colors(v, used);
      const int sat = std::popcount(blocked);
      const int deg = (g_.neighbors(v) & uncolored).size();
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = {v, blocked};
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  void assign(Vertex v, int c) {
    color_[static_cast<std::size_t>(v)] = c;
    classes_[static_cast<std::size_t>(c)].insert(v);
  }

  void unassign(Vertex v, int c) {
    color_[static_cast<std::size_t>(v)] = -1;
    classes_[static_cast<std::size_t>(c)].erase(v);
  }

  bool search(VertexSet uncolored, int used) {
    if (uncolored.empty()) return true;
    const auto [v, blocked] = select(uncolored, used);
    uncolored.erase(v);
    for (int c = 0; c < used; ++c) {
      if ((blocked >> c) & 1U) continue;
      assign(v, c);
      if (search(uncolored, used)) return true;
      unassign(v, c);
    }
    if (used < max_colors_) {
      assign(v, used);
      if (search(uncolored, used + 1)) return true;
      unassign(v, used);
    }
    return false;
  }

  const Graph& g_;
  int max_colors_;
  std::vector<int> color_;
  std::array<VertexSet, 64> classes_{};
};

}  // namespace

bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.assignment.size()) != g.order()) return false;
  std::uint64_t seen = 0;
  for (int color : c.assignment) {
    if (color < 0 || color >= 64) return false;
    seen |= std::uint64_t{1} << color;
  }
  if (std::popcount(seen) != c.colors_used) return false;
  for (auto [u, v] : g.edges())
    if (c.assignment[static_cast<std::size_t>(u)] == c.assignment[static_cast<std::size_t>(v)]) return false;
  return true;
}

VertexSet max_clique(const Graph& g) {
  require_nonempty(g, "max_clique");
  return CliqueSearch(g).run();
}

IndependenceResult independence_number(const Graph& g) {
  require_nonempty(g, "independence_number");
  const VertexSet s = max_clique(complement(g));
  return {s.size(), s};
}

std::optional<Coloring> is_k_colorable(const Graph& g, int t) {
  if (t < 0) throw std::invalid_argument("is_k_colorable: negative color count");
  return ColoringSearch(g, std::min(t, 64)).run();
}

Coloring greedy_coloring(const Graph& g) { return ColoringSearch(g, 64).greedy(); }

ChromaticResult chromatic_number(const Graph& g) {
  require_nonempty(g, "chromatic_number");
  const int lower = max_clique(g).size();
  Coloring best = greedy_coloring(g);
  while (best.colors_used > lower) {
    auto fewer = is_k_colorable(g, best.colors_used - 1);
    if (!fewer) break;
    best = std::move(*fewer);
  }
  return {best.colors_used, std::move(best)};
}

NordhausGaddum nordhaus_gaddum(const Graph& g) {
  require_nonempty(g, "nordhaus_gaddum");
  const int chi = chromatic_number(g).chi;
  const int chi_c = chromatic_number(complement(g)).chi;
  return {chi, chi_c, g.order() + 1 - chi - chi_c};
}

}  // namespace chromham
