#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kpvc/graph.hpp"

namespace kpvc {

// Outerplanar embedding given by its Hamiltonian boundary. cycle lists the
// vertices 0..n-1 in boundary order; chords are the remaining edges, stored
// with u < v. A maximal outerplanar graph has exactly n - 3 chords.
struct OuterplanarEmbedding {
  std::vector<Vertex> cycle;
  std::vector<Edge> chords;

  std::size_t order() const noexcept { return cycle.size(); }
};

using MaxOuterplanarRep = OuterplanarEmbedding;

namespace detail {

inline Edge normalized(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Position of each label along the boundary; throws unless cycle is a
// permutation of 0..n-1.
inline std::vector<std::size_t> boundary_positions(const std::vector<Vertex>& cycle) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos(cycle.size(), unset);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex v = cycle[i];
    if (v >= cycle.size() || pos[v] != unset) {
      throw PreconditionError("boundary order must be a permutation of 0..n-1");
    }
    pos[v] = i;
  }
  return pos;
}

// Two chords with distinct endpoints cross iff their endpoints interleave
// along the boundary.
inline bool chords_cross(const std::vector<std::size_t>& pos, Edge x, Edge y) {
  if (x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v) return false;
  auto [i, j] = std::minmax(pos[x.u], pos[x.v]);
  auto [k, l] = std::minmax(pos[y.u], pos[y.v]);
  return (i < k && k < j && j < l) || (k < i && i < l && l < j);
}

inline bool crosses_any(const std::vector<std::size_t>& pos, const std::set<Edge>& chords,
                        Edge e) {
  return std::any_of(chords.begin(), chords.end(),
                     [&](const Edge& c) { return chords_cross(pos, c, e); });
}

// Ear clipping over the sub-polygon `poly` (a subsequence of the boundary
// whose consecutive pairs are edges). Walks the polygon from its first vertex
// and clips the first ear whose closing chord already exists or crosses no
// chord, then restarts. Adds the new chords to `chords`.
inline void close_polygon(std::vector<Vertex> poly, const std::vector<std::size_t>& pos,
                          std::set<Edge>& chords) {
  while (poly.size() > 3) {
    const std::size_t sz = poly.size();
    bool clipped = false;
    for (std::size_t i = 0; i < sz; ++i) {
      const Vertex a = poly[i];
      const Vertex c = poly[(i + 2) % sz];
      const Edge closing = normalized(a, c);
      if (chords.count(closing) == 0) {
        if (crosses_any(pos, chords, closing)) continue;
        chords.insert(closing);
      }
      poly.erase(poly.begin() + static_cast<std::ptrdiff_t>((i + 1) % sz));
      clipped = true;
      break;
    }
    if (!clipped) throw std::logic_error("ear clipping found no ear");
  }
}

}  // namespace detail

// Throws PreconditionError unless e is a valid outerplanar embedding: n >= 3,
// boundary a permutation, chords in range, not boundary edges, distinct and
// pairwise non-crossing. With require_maximal, also demands n - 3 chords.
inline void validate_embedding(const OuterplanarEmbedding& e, bool require_maximal = false) {
  const std::size_t n = e.order();
  if (n < 3) throw PreconditionError("outerplanar embedding needs at least 3 vertices");
  const auto pos = detail::boundary_positions(e.cycle);
  std::set<Edge> seen;
  for (const Edge& c : e.chords) {
    if (c.u >= n || c.v >= n) throw PreconditionError("chord endpoint out of range");
    if (c.u == c.v) throw PreconditionError("chord is a self-loop");
    const Edge key = detail::normalized(c.u, c.v);
    const std::size_t gap = pos[key.u] > pos[key.v] ? pos[key.u] - pos[key.v]
                                                     : pos[key.v] - pos[key.u];
    if (gap == 1 || gap == n - 1) {
      throw PreconditionError("chord (" + std::to_string(key.u) + "," + std::to_string(key.v) +
                              ") duplicates a boundary edge");
    }
    if (!seen.insert(key).second) throw PreconditionError("duplicate chord");
  }
  for (auto it = seen.begin(); it != seen.end(); ++it) {
    for (auto jt = std::next(it); jt != seen.end(); ++jt) {
      if (detail::chords_cross(pos, *it, *jt)) {
        throw PreconditionError("crossing chords (" + std::to_string(it->u) + "," +
                                std::to_string(it->v) + ") and (" + std::to_string(jt->u) +
                                "," + std::to_string(jt->v) + ")");
      }
    }
  }
  if (require_maximal && seen.size() != n - 3) {
    throw PreconditionError("maximal outerplanar embedding needs n - 3 chords");
  }
}

inline Graph to_graph(const OuterplanarEmbedding& e) {
  const std::size_t n = e.order();
  std::vector<Edge> edges(e.chords.begin(), e.chords.end());
  for (std::size_t i = 0; i < n; ++i) edges.push_back({e.cycle[i], e.cycle[(i + 1) % n]});
  return Graph::from_edges(n, edges);
}

// Completes a non-crossing chord set to a full triangulation of the boundary
// polygon. Input chords are kept; the output chords are sorted.
inline MaxOuterplanarRep triangulate(const std::vector<Vertex>& cycle,
                                     const std::vector<Edge>& chords) {
  OuterplanarEmbedding in{cycle, chords};
  validate_embedding(in);
  const auto pos = detail::boundary_positions(cycle);
  std::set<Edge> all;
  for (const Edge& c : chords) all.insert(detail::normalized(c.u, c.v));
  detail::close_polygon(cycle, pos, all);
  MaxOuterplanarRep out{cycle, std::vector<Edge>(all.begin(), all.end())};
  if (out.chords.size() != cycle.size() - 3) {
    throw std::logic_error("triangulation produced the wrong chord count");
  }
  return out;
}

inline MaxOuterplanarRep triangulate(const OuterplanarEmbedding& e) {
  return triangulate(e.cycle, e.chords);
}

// One round of the cover construction, recorded for inspection. `polygon`
// is the maximal outerplanar graph the round worked on (labels are those of
// the input).
struct OuterplanarStep {
  enum class Kind { triangle, all_good, bad_edge };

  Kind kind = Kind::triangle;
  MaxOuterplanarRep polygon;
  // bad_edge rounds: the bad boundary edge (outer, anchor), its triangle apex
  // and sigma. The peeled boundary path runs from anchor to apex.
  Vertex outer = 0;
  Vertex anchor = 0;
  Vertex apex = 0;
  std::size_t sigma = 0;
  std::vector<Vertex> removed;
  std::vector<Vertex> added;
};

struct OuterplanarSolution {
  VertexSet cover;
  std::vector<OuterplanarStep> steps;
};

// 3-path vertex cover of size at most floor(n/2) for a maximal outerplanar
// graph.
//
// Vertices of degree 2 are white, the rest black. If every boundary edge has
// a white end, the black vertices are the cover. Otherwise take the bad
// (black-black) boundary edge whose triangle cuts off the shortest boundary
// path sigma, lowest position first. That path alternates black/white, so
// sigma = 2s; cover its blacks except the one on the bad edge plus the other
// end of the bad edge, drop all 2s + 2 vertices, re-close and re-triangulate
// the remaining boundary, and repeat.
inline OuterplanarSolution outerplanar_cover3_traced(const MaxOuterplanarRep& h) {
  validate_embedding(h, true);
  const std::size_t n = h.order();
  const auto pos = detail::boundary_positions(h.cycle);

  OuterplanarSolution sol;
  std::vector<Vertex> cover;
  std::vector<Vertex> poly = h.cycle;
  std::set<Edge> chords(h.chords.begin(), h.chords.end());
  std::vector<std::size_t> degree(n, 0);
  std::vector<char> in_poly(n, 0);

  while (poly.size() >= 3) {
    const std::size_t sz = poly.size();
    OuterplanarStep step;
    step.polygon = {poly, std::vector<Edge>(chords.begin(), chords.end())};

    if (sz == 3) {
      step.kind = OuterplanarStep::Kind::triangle;
      const Vertex pick = *std::min_element(poly.begin(), poly.end());
      step.added = {pick};
      step.removed = poly;
      cover.push_back(pick);
      sol.steps.push_back(std::move(step));
      break;
    }

    std::fill(degree.begin(), degree.end(), 0);
    std::fill(in_poly.begin(), in_poly.end(), 0);
    for (Vertex v : poly) {
      degree[v] = 2;
      in_poly[v] = 1;
    }
    for (const Edge& c : chords) {
      ++degree[c.u];
      ++degree[c.v];
    }
    auto black = [&](Vertex v) { return degree[v] > 2; };
    std::vector<std::size_t> local(n, 0);
    for (std::size_t i = 0; i < sz; ++i) local[poly[i]] = i;
    auto neighbors_of = [&](Vertex v) {
      std::vector<Vertex> out{poly[(local[v] + sz - 1) % sz], poly[(local[v] + 1) % sz]};
      for (const Edge& c : chords) {
        if (c.u == v) out.push_back(c.v);
        if (c.v == v) out.push_back(c.u);
      }
      std::sort(out.begin(), out.end());
      return out;
    };

    // the bad boundary edge with smallest sigma, lowest position on ties
    std::optional<std::size_t> best;
    std::size_t best_sigma = 0;
    std::size_t best_apex_pos = 0;
    bool best_forward = true;
    for (std::size_t i = 0; i < sz; ++i) {
      const Vertex a = poly[i];
      const Vertex b = poly[(i + 1) % sz];
      if (!black(a) || !black(b)) continue;
      const auto na = neighbors_of(a);
      const auto nb = neighbors_of(b);
      std::vector<Vertex> common;
      std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                            std::back_inserter(common));
      if (common.size() != 1) throw std::logic_error("boundary edge is not on exactly one triangle");
      const std::size_t j = local[common.front()];
      const std::size_t forward = (j + sz - (i + 1)) % sz;  // b .. apex
      const std::size_t backward = (i + sz - j) % sz;       // apex .. a
      const std::size_t sigma = std::min(forward, backward);
      if (!best || sigma < best_sigma) {
        best = i;
        best_sigma = sigma;
        best_apex_pos = j;
        best_forward = forward <= backward;
      }
    }

    if (!best) {
      step.kind = OuterplanarStep::Kind::all_good;
      for (Vertex v : poly) {
        if (black(v)) step.added.push_back(v);
      }
      step.removed = poly;
      cover.insert(cover.end(), step.added.begin(), step.added.end());
      sol.steps.push_back(std::move(step));
      break;
    }

    const std::size_t i = *best;
    step.kind = OuterplanarStep::Kind::bad_edge;
    step.sigma = best_sigma;
    step.apex = poly[best_apex_pos];
    // the peeled path, walked from anchor to apex, and the removed block
    std::vector<Vertex> path;
    std::size_t block_start = 0;
    if (best_forward) {
      step.outer = poly[i];
      step.anchor = poly[(i + 1) % sz];
      for (std::size_t t = 0; t <= best_sigma; ++t) path.push_back(poly[(i + 1 + t) % sz]);
      block_start = i;
    } else {
      step.outer = poly[(i + 1) % sz];
      step.anchor = poly[i];
      for (std::size_t t = 0; t <= best_sigma; ++t) path.push_back(poly[(i + sz - t) % sz]);
      block_start = best_apex_pos;
    }
    if (!black(step.apex) || best_sigma % 2 != 0) {
      throw std::logic_error("peeled triangle violates the black apex / even sigma property");
    }
    for (std::size_t t = 0; t < path.size(); ++t) {
      if (black(path[t]) != (t % 2 == 0)) {
        throw std::logic_error("peeled boundary path does not alternate black/white");
      }
    }
    step.added.push_back(step.outer);
    for (std::size_t t = 2; t < path.size(); t += 2) step.added.push_back(path[t]);

    const std::size_t block = best_sigma + 2;
    std::vector<Vertex> rest;
    rest.reserve(sz - block);
    for (std::size_t t = 0; t < sz; ++t) {
      const std::size_t p = (block_start + t) % sz;
      if (t < block) {
        step.removed.push_back(poly[p]);
      } else {
        rest.push_back(poly[p]);
      }
    }
    cover.insert(cover.end(), step.added.begin(), step.added.end());
    sol.steps.push_back(std::move(step));

    for (Vertex v : sol.steps.back().removed) in_poly[v] = 0;
    for (auto it = chords.begin(); it != chords.end();) {
      if (!in_poly[it->u] || !in_poly[it->v]) {
        it = chords.erase(it);
      } else {
        ++it;
      }
    }
    poly = std::move(rest);
    if (poly.size() < 3) break;
    // the closing pair becomes a boundary edge of the remainder
    chords.erase(detail::normalized(poly.front(), poly.back()));
    detail::close_polygon(poly, pos, chords);
  }

  sol.cover = VertexSet(std::move(cover));
  return sol;
}

inline VertexSet outerplanar_cover3(const MaxOuterplanarRep& h) {
  return outerplanar_cover3_traced(h).cover;
}

// Text format: "n", then the boundary order on one line, then one chord
// "u v" per line. '#' lines are comments.
inline OuterplanarEmbedding parse_embedding(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.size() < 2) throw ParseError("embedding needs an \"n\" line and a boundary line");
  const auto header = detail::parse_naturals(lines[0].second, lines[0].first);
  if (header.size() != 1) throw ParseError(lines[0].first, "first line must be \"n\"");
  const std::uint64_t n = header[0];
  const auto order = detail::parse_naturals(lines[1].second, lines[1].first);
  if (order.size() != n) {
    throw ParseError(lines[1].first, "boundary lists " + std::to_string(order.size()) +
                                         " vertices, expected " + std::to_string(n));
  }
  OuterplanarEmbedding e;
  for (auto v : order) {
    if (v >= n) throw ParseError(lines[1].first, "boundary vertex out of range");
    e.cycle.push_back(static_cast<Vertex>(v));
  }
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto uv = detail::parse_naturals(lines[i].second, lines[i].first);
    if (uv.size() != 2) throw ParseError(lines[i].first, "chord line must be \"u v\"");
    if (uv[0] >= n || uv[1] >= n) throw ParseError(lines[i].first, "chord endpoint out of range");
    if (uv[0] == uv[1]) throw ParseError(lines[i].first, "chord is a self-loop");
    e.chords.push_back(
        detail::normalized(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1])));
  }
  try {
    validate_embedding(e);
  } catch (const PreconditionError& err) {
    throw ParseError(err.what());
  }
  return e;
}

inline std::string serialize_embedding(const OuterplanarEmbedding& e) {
  std::string out = std::to_string(e.order()) + "\n";
  for (std::size_t i = 0; i < e.cycle.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(e.cycle[i]);
  }
  std::vector<Edge> chords = e.chords;
  std::sort(chords.begin(), chords.end());
  for (const Edge& c : chords) out += "\n" + std::to_string(c.u) + " " + std::to_string(c.v);
  return out;
}

}  // namespace kpvc
