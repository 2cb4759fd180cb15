#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kpvc/graph.hpp"
#include "kpvc/outerplanar.hpp"
#include "kpvc/random.hpp"

namespace kpvc {

inline Graph make_path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return Graph::from_edges(n, edges);
}

inline Graph make_cycle(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Graph::from_edges(n, edges);
}

// K_{1,leaves} with center 0.
inline Graph make_star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::from_edges(leaves + 1, edges);
}

inline Graph make_complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

// K_6 without the perfect matching {01, 23, 45}: 4-regular, 12 edges.
inline Graph make_h6() {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v = u + 1; v < 6; ++v) {
      if (u / 2 != v / 2) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(6, edges);
}

// x copies of C_4 followed by y copies of H_6; n = 4x + 6y, m = 4x + 12y and
// psi_3 = (2n + m) / 6.
inline Graph make_tight_sparse3(std::size_t x, std::size_t y) {
  Graph g;
  for (std::size_t i = 0; i < x; ++i) g = disjoint_union(g, make_cycle(4));
  for (std::size_t i = 0; i < y; ++i) g = disjoint_union(g, make_h6());
  return g;
}

// Uniform labeled tree on n vertices from a random Pruefer sequence.
inline Graph make_random_tree(std::size_t n, RandomSeed seed) {
  if (n <= 1) return Graph(n);
  if (n == 2) return Graph::from_edges(2, {{0, 1}});
  Rng rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng.below(n));
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  std::vector<Edge> edges;
  for (Vertex c : code) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({leaf, c});
    if (--degree[c] == 1) leaves.insert(c);
  }
  const Vertex a = *leaves.begin();
  const Vertex b = *std::next(leaves.begin());
  edges.push_back({a, b});
  return Graph::from_edges(n, edges);
}

// Erdos-Renyi G(n, p).
inline Graph make_random_gnp(std::size_t n, double p, RandomSeed seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.chance(p)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

// Random graph with maximum degree <= max_degree: candidate edges are tried
// in random order and kept while both endpoints have room.
inline Graph make_random_bounded_degree(std::size_t n, std::size_t max_degree, double p,
                                        RandomSeed seed) {
  Rng rng(seed);
  std::vector<Edge> all;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
  }
  const auto order = random_permutation(all.size(), rng);
  std::vector<std::size_t> degree(n, 0);
  std::vector<Edge> edges;
  for (Vertex idx : order) {
    const Edge e = all[idx];
    if (degree[e.u] >= max_degree || degree[e.v] >= max_degree) continue;
    if (!rng.chance(p)) continue;
    ++degree[e.u];
    ++degree[e.v];
    edges.push_back(e);
  }
  return Graph::from_edges(n, edges);
}

// Random maximal outerplanar graph: start from the triangle 0-1-2 and insert
// vertex v = 3..n-1 onto a random boundary edge, which becomes a chord.
inline MaxOuterplanarRep make_random_mop(std::size_t n, RandomSeed seed) {
  if (n < 3) throw PreconditionError("maximal outerplanar graph needs n >= 3");
  Rng rng(seed);
  MaxOuterplanarRep h;
  h.cycle = {0, 1, 2};
  for (Vertex v = 3; v < n; ++v) {
    const std::size_t sz = h.cycle.size();
    const auto at = static_cast<std::size_t>(rng.below(sz));
    const Vertex a = h.cycle[at];
    const Vertex b = h.cycle[(at + 1) % sz];
    h.chords.push_back(detail::normalized(a, b));
    h.cycle.insert(h.cycle.begin() + static_cast<std::ptrdiff_t>(at + 1), v);
  }
  std::sort(h.chords.begin(), h.chords.end());
  return h;
}

// Attach a new vertex n + i to both ends of every boundary edge
// (cycle[i], cycle[i+1]). The result has 2n vertices and psi_3 >= n.
inline Graph make_outerplanar_doubled(const OuterplanarEmbedding& h) {
  validate_embedding(h);
  const std::size_t n = h.order();
  Graph base = to_graph(h);
  std::vector<Edge> edges = base.edges();
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = static_cast<Vertex>(n + i);
    edges.push_back({h.cycle[i], u});
    edges.push_back({h.cycle[(i + 1) % n], u});
  }
  return Graph::from_edges(2 * n, edges);
}

// Gadget reducing vertex cover to k-path vertex cover.
struct ReductionMap {
  Graph gadget;
  std::vector<std::optional<Vertex>> original_of;  // none for attached path vertices
};

// Hangs a path of floor((k-1)/2) new vertices off every vertex of g. Original
// vertices keep their indices; the path below v occupies n + v*L .. n + v*L + L-1.
inline ReductionMap reduce_vc_to_kpvc(const Graph& g, std::size_t k) {
  if (k < 3) throw PreconditionError("reduction needs k >= 3 (k = 2 is vertex cover itself)");
  const std::size_t n = g.order();
  const std::size_t len = (k - 1) / 2;
  ReductionMap out;
  out.original_of.assign(n * (1 + len), std::nullopt);
  std::vector<Edge> edges = g.edges();
  for (Vertex v = 0; v < n; ++v) {
    out.original_of[v] = v;
    Vertex prev = v;
    for (std::size_t t = 0; t < len; ++t) {
      const auto w = static_cast<Vertex>(n + v * len + t);
      edges.push_back({prev, w});
      prev = w;
    }
  }
  out.gadget = Graph::from_edges(n * (1 + len), edges);
  return out;
}

// Named families, as exposed on the command line.
inline Graph gen_family(const std::string& name, const std::vector<std::uint64_t>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw PreconditionError("family " + name + " takes " + std::to_string(count) +
                              " parameter(s), got " + std::to_string(params.size()));
    }
  };
  if (name == "path") {
    need(1);
    return make_path(params[0]);
  }
  if (name == "cycle") {
    need(1);
    return make_cycle(params[0]);
  }
  if (name == "star") {
    need(1);
    return make_star(params[0]);
  }
  if (name == "complete") {
    need(1);
    return make_complete(params[0]);
  }
  if (name == "random_tree") {
    need(2);
    return make_random_tree(params[0], RandomSeed{params[1]});
  }
  if (name == "tight_sparse3") {
    need(2);
    return make_tight_sparse3(params[0], params[1]);
  }
  if (name == "h6") {
    need(0);
    return make_h6();
  }
  throw PreconditionError("unknown family \"" + name + "\"");
}

}  // namespace kpvc
