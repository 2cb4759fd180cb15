#pragma once

#include <optional>
#include <vector>

#include "kpvc/graph.hpp"

namespace kpvc {

// k distinct vertices, consecutive ones adjacent.
struct PathWitness {
  std::vector<Vertex> vertices;

  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

inline bool is_path_witness(const Graph& g, const PathWitness& w, std::size_t k) {
  if (w.vertices.size() != k) return false;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    const Vertex v = w.vertices[i];
    if (v >= g.order() || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.has_edge(w.vertices[i - 1], v)) return false;
  }
  return true;
}

namespace detail {

// Depth-bounded DFS over simple paths. Start vertices and neighbors are
// visited in ascending order, so the first witness is deterministic.
class PathSearch {
 public:
  PathSearch(const Graph& g, std::size_t k, const std::vector<char>* blocked)
      : g_(g), k_(k), blocked_(blocked), on_path_(g.order(), 0) {
    path_.reserve(k);
  }

  std::optional<PathWitness> run() {
    if (k_ == 0) throw PreconditionError("path order k must be at least 1");
    if (k_ > g_.order()) return std::nullopt;
    for (Vertex s = 0; s < g_.order(); ++s) {
      if (is_blocked(s)) continue;
      if (extend(s)) return PathWitness{path_};
    }
    return std::nullopt;
  }

 private:
  bool is_blocked(Vertex v) const { return blocked_ != nullptr && (*blocked_)[v]; }

  bool extend(Vertex v) {
    path_.push_back(v);
    on_path_[v] = 1;
    if (path_.size() == k_) return true;
    for (Vertex u : g_.neighbors(v)) {
      if (on_path_[u] || is_blocked(u)) continue;
      if (extend(u)) return true;
    }
    on_path_[v] = 0;
    path_.pop_back();
    return false;
  }

  const Graph& g_;
  std::size_t k_;
  const std::vector<char>* blocked_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
};

}  // namespace detail

// First simple path on k vertices in DFS order, if any. Throws
// PreconditionError for k == 0.
inline std::optional<PathWitness> find_path_of_order(const Graph& g, std::size_t k) {
  return detail::PathSearch(g, k, nullptr).run();
}

// A k-vertex path of g that avoids s, reported in g's own indices. Equivalent
// to searching delete_vertices(g, s) since that re-indexing is monotone.
inline std::optional<PathWitness> find_uncovered_path(const Graph& g, const VertexSet& s,
                                                      std::size_t k) {
  if (!s.valid_for(g)) throw PreconditionError("vertex set out of range for graph");
  const auto blocked = s.mask(g.order());
  return detail::PathSearch(g, k, &blocked).run();
}

inline std::optional<PathWitness> find_uncovered_path(const Graph& g,
                                                      const std::vector<char>& blocked,
                                                      std::size_t k) {
  return detail::PathSearch(g, k, &blocked).run();
}

inline bool is_k_path_cover(const Graph& g, const VertexSet& s, std::size_t k) {
  return !find_uncovered_path(g, s, k).has_value();
}

}  // namespace kpvc
