#pragma once

#include <vector>

#include "kpvc/graph.hpp"
#include "kpvc/partition.hpp"
#include "kpvc/random.hpp"
#include "kpvc/tree.hpp"
#include "kpvc/verify.hpp"

namespace kpvc {

namespace detail {

// Deletes, in ascending index order, every vertex whose current degree is
// at least min_degree. Degrees only drop as vertices go, so a single ascending
// pass equals "repeatedly take the lowest-index vertex of degree >= min_degree".
inline VertexSet peel_high_degree(const Graph& g, std::size_t min_degree) {
  std::vector<std::size_t> deg(g.order());
  for (Vertex v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
  std::vector<Vertex> removed;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (deg[v] < min_degree) continue;
    removed.push_back(v);
    for (Vertex u : g.neighbors(v)) --deg[u];
    deg[v] = 0;
  }
  return VertexSet(std::move(removed));
}

}  // namespace detail

struct GreedyApprox {
  VertexSet cover;
  std::size_t batches = 0;
};

// Remove whole P_k's until none is left. Each batch meets every optimal
// cover, so the result is at most k times optimal.
inline GreedyApprox greedy_k_approx_traced(const Graph& g, std::size_t k) {
  if (k < 2) throw PreconditionError("greedy approximation requires k >= 2");
  std::vector<char> removed(g.order(), 0);
  GreedyApprox out;
  std::vector<Vertex> cover;
  while (auto path = find_uncovered_path(g, removed, k)) {
    for (Vertex v : path->vertices) {
      removed[v] = 1;
      cover.push_back(v);
    }
    ++out.batches;
  }
  out.cover = VertexSet(std::move(cover));
  return out;
}

inline VertexSet greedy_k_approx(const Graph& g, std::size_t k) {
  return greedy_k_approx_traced(g, k).cover;
}

// 3-path cover of a graph with maximum degree <= 3 of size at most
// min(n/2, m/2): the smaller of degree->=2 peeling and the partition cover.
inline VertexSet subcubic_cover3(const Graph& g) {
  if (g.max_degree() > 3) {
    throw PreconditionError("subcubic solver requires maximum degree <= 3, got " +
                            std::to_string(g.max_degree()));
  }
  VertexSet by_edges = detail::peel_high_degree(g, 2);
  VertexSet by_partition = cover3_via_partition(g);
  return by_partition.size() < by_edges.size() ? by_partition : by_edges;
}

struct Sparse3Result {
  VertexSet cover;
  std::size_t first_phase = 0;   // degree >= 4 vertices removed
  std::size_t second_phase = 0;  // chosen by the subcubic solver
};

inline Sparse3Result sparse3_traced(const Graph& g) {
  Sparse3Result out;
  const VertexSet heavy = detail::peel_high_degree(g, 4);
  const Subgraph rest = delete_vertices(g, heavy);
  const VertexSet tail = rest.lift(subcubic_cover3(rest.graph));
  out.first_phase = heavy.size();
  out.second_phase = tail.size();
  out.cover = heavy.united(tail);
  return out;
}

// 3-path cover of size at most (2n + m) / 6.
inline VertexSet sparse3(const Graph& g) { return sparse3_traced(g).cover; }

struct CaroWeiResult {
  VertexSet cover;
  VertexSet forest;  // the 1-degenerate set left uncovered before the tree step
};

// Scan vertices in a seeded random order, keeping each one that has at most
// one already-kept neighbor. The kept set is 1-degenerate, hence a forest;
// cover its P_k's optimally and take everything else.
inline CaroWeiResult caro_wei_cover_traced(const Graph& g, std::size_t k, RandomSeed seed) {
  if (k < 2) throw PreconditionError("Caro-Wei cover requires k >= 2");
  Rng rng(seed);
  const auto order = random_permutation(g.order(), rng);
  std::vector<char> kept(g.order(), 0);
  for (Vertex v : order) {
    std::size_t inside = 0;
    for (Vertex u : g.neighbors(v)) inside += kept[u] ? 1 : 0;
    if (inside <= 1) kept[v] = 1;
  }
  const Subgraph forest = induced_subgraph(g, kept);
  const VertexSet forest_cover = forest.lift(pvcp_tree(forest.graph, k));

  CaroWeiResult out;
  out.forest = VertexSet(forest.original);
  std::vector<Vertex> cover(forest_cover.begin(), forest_cover.end());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!kept[v]) cover.push_back(v);
  }
  out.cover = VertexSet(std::move(cover));
  return out;
}

inline VertexSet caro_wei_cover(const Graph& g, std::size_t k, RandomSeed seed) {
  return caro_wei_cover_traced(g, k, seed).cover;
}

}  // namespace kpvc
