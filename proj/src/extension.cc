#include <algorithm>
#include <stdexcept>
#include <string>

#include "chromham/cycles.hh"

namespace chromham {

namespace {

class Route {
 public:
  Route& then(const std::vector<Vertex>& piece, std::size_t skip = 0) {
    seq_.insert(seq_.end(), piece.begin() + static_cast<std::ptrdiff_t>(std::min(skip, piece.size())), piece.end());
    return *this;
  }
  Route& then(Vertex v) {
    seq_.push_back(v);
    return *this;
  }
  // Interior of a fan path walked from the attachment back toward the hub.
  Route& back_along(const std::vector<Vertex>& path) {
    if (path.size() > 2) seq_.insert(seq_.end(), path.rbegin() + 1, path.rend() - 1);
    return *this;
  }

  std::optional<Cycle> if_longer(const Graph& g, const Cycle& c) const {
    if (static_cast<int>(seq_.size()) <= c.length() || !validate_cycle(g, seq_)) return std::nullopt;
    return Cycle(seq_);
  }

 private:
  std::vector<Vertex> seq_;
};

bool on_interior(const std::vector<Vertex>& path, Vertex v) {
  return path.size() > 2 && std::find(path.begin() + 1, path.end() - 1, v) != path.end() - 1;
}

std::size_t wrap(std::ptrdiff_t i, std::size_t s) {
  const auto m = static_cast<std::ptrdiff_t>(s);
  return static_cast<std::size_t>(((i % m) + m) % m);
}

}  // namespace

std::pair<Cycle, PathSystem> orient_by_fan(const Cycle& c, const PathSystem& fan) {
  if (fan.attachments.empty()) return {c, fan};
  const Vertex first = *std::min_element(fan.attachments.begin(), fan.attachments.end());
  Cycle oriented = c.succ(first) < c.pred(first) ? c : c.reversed();
  oriented = oriented.rotated_to(first);

  PathSystem out{fan.hub, fan.paths, {}};
  std::sort(out.paths.begin(), out.paths.end(),
            [&](const auto& a, const auto& b) { return oriented.position(a.back()) < oriented.position(b.back()); });
  for (const auto& p : out.paths) out.attachments.push_back(p.back());
  return {oriented, out};
}

PathSystem rotate_fan(const PathSystem& fan, std::size_t first) {
  PathSystem out = fan;
  if (fan.paths.empty()) return out;
  first %= fan.paths.size();
  std::rotate(out.paths.begin(), out.paths.begin() + static_cast<std::ptrdiff_t>(first), out.paths.end());
  std::rotate(out.attachments.begin(), out.attachments.begin() + static_cast<std::ptrdiff_t>(first),
              out.attachments.end());
  return out;
}

PathSystem reverse_fan(const PathSystem& fan) {
  PathSystem out = fan;
  if (fan.paths.size() > 1) {
    std::reverse(out.paths.begin() + 1, out.paths.end());
    std::reverse(out.attachments.begin() + 1, out.attachments.end());
  }
  return out;
}

VertexSet successors_set(const Cycle& c, const PathSystem& fan) {
  VertexSet out = VertexSet::single(fan.hub);
  for (Vertex u : fan.attachments) out.insert(c.succ(u));
  return out;
}

SegmentDecomposition segments(const Cycle& c, const PathSystem& fan, int k) {
  if (k < 2) throw std::invalid_argument("segments: need k >= 2");
  if (static_cast<int>(fan.attachments.size()) < k)
    throw std::invalid_argument("segments: fewer than k attachments");
  SegmentDecomposition out;
  out.attachments.assign(fan.attachments.begin(), fan.attachments.begin() + k);

  const int base = c.position(out.attachments.front());
  int previous = -1;
  for (Vertex u : out.attachments) {
    const int offset = (c.position(u) - base + c.length()) % c.length();
    if (offset <= previous) throw std::invalid_argument("segments: attachments are not in cycle order");
    previous = offset;
  }

  const auto count = static_cast<std::size_t>(k);
  for (std::size_t i = 0; i < count; ++i) {
    const Vertex u = out.attachments[i];
    const Vertex next = out.attachments[(i + 1) % count];
    const Vertex plus = c.succ(u);
    if (plus == next)
      throw std::invalid_argument("segments: attachments " + std::to_string(u) + " and " + std::to_string(next) +
                                  " are consecutive on the cycle");
    out.successors.push_back(plus);
    out.segments.push_back(c.arc(c.succ(plus), next));
    if (out.segments.back().size() >= 2) out.big_segment_indices.push_back(static_cast<int>(i));
  }
  return out;
}

std::optional<Cycle> extend_successor_chord(const Graph& g, const Cycle& c, const PathSystem& fan) {
  const auto& att = fan.attachments;
  for (std::size_t i = 0; i < att.size(); ++i) {
    const Vertex ui = att[i];
    const Vertex plus = c.succ(ui);
    if (g.adjacent(fan.hub, plus)) {
      auto out = Route().then(fan.paths[i]).then(c.arc(ui, plus, Direction::backward), 1).if_longer(g, c);
      if (out) return out;
    }
  }
  for (std::size_t i = 0; i < att.size(); ++i) {
    for (std::size_t j = 0; j < att.size(); ++j) {
      if (i == j) continue;
      const Vertex ui_plus = c.succ(att[i]);
      const Vertex uj_plus = c.succ(att[j]);
      if (!g.adjacent(ui_plus, uj_plus)) continue;
      auto out = Route()
                     .then(fan.paths[i])
                     .then(c.arc(att[i], uj_plus, Direction::backward), 1)
                     .then(c.arc(ui_plus, att[j]))
                     .back_along(fan.paths[j])
                     .if_longer(g, c);
      if (out) return out;
    }
  }
  return std::nullopt;
}

std::optional<Cycle> extend_offcycle(const Graph& g, const Cycle& c, const PathSystem& fan, Vertex z) {
  if (z < 0 || z >= g.order()) throw std::out_of_range("extend_offcycle: vertex outside the graph");
  if (c.contains(z)) throw std::invalid_argument("extend_offcycle: z lies on the cycle");
  if (z == fan.hub) throw std::invalid_argument("extend_offcycle: z is the hub");
  if (!g.adjacent(fan.hub, z)) return std::nullopt;

  const auto& att = fan.attachments;
  const std::size_t s = att.size();
  for (std::size_t j = 0; j < s; ++j) {
    if (!g.adjacent(z, att[j])) continue;
    const std::size_t prev = wrap(static_cast<std::ptrdiff_t>(j) - 1, s);
    const std::size_t next = wrap(static_cast<std::ptrdiff_t>(j) + 1, s);
    if (!on_interior(fan.paths[prev], z)) {
      auto out = Route().then(fan.hub).then(z).then(c.arc(att[j], att[prev])).back_along(fan.paths[prev]).if_longer(g, c);
      if (out) return out;
    }
    if (!on_interior(fan.paths[next], z)) {
      auto out = Route()
                     .then(fan.hub)
                     .then(z)
                     .then(c.arc(att[j], att[next], Direction::backward))
                     .back_along(fan.paths[next])
                     .if_longer(g, c);
      if (out) return out;
    }
  }
  return std::nullopt;
}

std::optional<Cycle> extend_predecessor_chord(const Graph& g, const Cycle& c, const PathSystem& fan) {
  const auto& att = fan.attachments;
  if (att.size() < 2) return std::nullopt;
  VertexSet excluded;
  for (Vertex u : att) {
    excluded.insert(u);
    excluded.insert(c.succ(u));
  }
  for (std::size_t i = 0; i < att.size(); ++i) {
    const Vertex pi = c.pred(att[i]);
    if (excluded.contains(pi)) continue;
    for (std::size_t j = 0; j < att.size(); ++j) {
      const Vertex pj = c.pred(att[j]);
      if (i == j || excluded.contains(pj) || !g.adjacent(pi, pj)) continue;
      auto out = Route()
                     .then(fan.paths[i])
                     .then(c.arc(att[i], pj), 1)
                     .then(c.arc(pi, att[j], Direction::backward))
                     .back_along(fan.paths[j])
                     .if_longer(g, c);
      if (out) return out;
    }
  }
  return std::nullopt;
}

std::optional<Cycle> extend_case1_rotation(const Graph& g, const Cycle& c, const PathSystem& fan, int y_index) {
  const int s = static_cast<int>(fan.attachments.size());
  const SegmentDecomposition seg = segments(c, fan, s);
  if (seg.big_segment_indices.size() != 1)
    throw std::invalid_argument("extend_case1_rotation: expected exactly one segment of length >= 2, found " +
                                std::to_string(seg.big_segment_indices.size()));

  const auto big = static_cast<std::size_t>(seg.big_segment_indices.front());
  const PathSystem f = rotate_fan(fan, big);
  const std::vector<Vertex>& t1 = seg.segments[big];
  const int r = static_cast<int>(t1.size()) - 1;
  if (y_index < 2 || y_index > r) return std::nullopt;

  const Vertex u1 = f.attachments[0];
  const Vertex u1_plus = c.succ(u1);
  const Vertex yj = t1[static_cast<std::size_t>(y_index - 1)];
  const Vertex y_prev = t1[static_cast<std::size_t>(y_index - 2)];
  if (!g.adjacent(yj, u1_plus)) return std::nullopt;

  if (g.adjacent(f.hub, y_prev)) {
    auto out = Route()
                   .then(f.hub)
                   .then(c.arc(y_prev, u1_plus, Direction::backward))
                   .then(c.arc(yj, u1))
                   .back_along(f.paths[0])
                   .if_longer(g, c);
    if (out) return out;
  }
  for (std::size_t l = 1; l < f.attachments.size(); ++l) {
    const Vertex ul = f.attachments[l];
    if (!g.adjacent(c.succ(ul), y_prev)) continue;
    auto out = Route()
                   .then(f.paths[l])
                   .then(c.arc(ul, yj, Direction::backward), 1)
                   .then(c.arc(u1_plus, y_prev))
                   .then(c.arc(c.succ(ul), u1))
                   .back_along(f.paths[0])
                   .if_longer(g, c);
    if (out) return out;
  }
  return std::nullopt;
}

}  // namespace chromham
