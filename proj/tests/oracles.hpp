#pragma once

// Brute-force reference computations for the test suites. Everything here
// works on adjacency bitmasks and shares no code with the library solvers.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "kpvc/graph.hpp"

namespace oracle {

using Mask = std::uint32_t;

inline std::vector<Mask> adjacency_masks(const kpvc::Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (kpvc::Vertex u = 0; u < g.order(); ++u) {
    for (kpvc::Vertex v = 0; v < g.order(); ++v) {
      if (g.has_edge(u, v)) adj[u] |= Mask{1} << v;
    }
  }
  return adj;
}

// Every ordered sequence of k distinct vertices, checked for adjacency only
// once complete.
inline bool has_path_by_sequences(const kpvc::Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  if (k == 0 || k > n) return false;
  std::vector<kpvc::Vertex> seq;
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self) -> bool {
    if (seq.size() == k) {
      for (std::size_t i = 1; i < k; ++i) {
        if (!g.has_edge(seq[i - 1], seq[i])) return false;
      }
      return true;
    }
    for (kpvc::Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      seq.push_back(v);
      const bool found = self(self);
      seq.pop_back();
      used[v] = 0;
      if (found) return true;
    }
    return false;
  };
  return rec(rec);
}

// Does the subgraph induced by `alive` contain a simple path on k vertices?
inline bool has_path_in(const std::vector<Mask>& adj, Mask alive, std::size_t k) {
  if (static_cast<std::size_t>(std::popcount(alive)) < k) return false;
  auto rec = [&](auto&& self, std::size_t v, Mask visited, std::size_t len) -> bool {
    if (len == k) return true;
    Mask next = adj[v] & alive & ~visited;
    while (next) {
      const int u = std::countr_zero(next);
      next &= next - 1;
      if (self(self, static_cast<std::size_t>(u), visited | (Mask{1} << u), len + 1)) return true;
    }
    return false;
  };
  for (Mask rest = alive; rest; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if (rec(rec, static_cast<std::size_t>(v), Mask{1} << v, 1)) return true;
  }
  return false;
}

// psi_k by sweeping all 2^n subsets.
inline std::size_t psi_bruteforce(const kpvc::Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  const auto adj = adjacency_masks(g);
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::size_t best = n;
  for (Mask s = 0; s <= full; ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size < best && !has_path_in(adj, full & ~s, k)) best = size;
    if (s == full) break;
  }
  return best;
}

inline bool is_independent(const std::vector<Mask>& adj, Mask s) {
  for (Mask rest = s; rest; rest &= rest - 1) {
    if (adj[static_cast<std::size_t>(std::countr_zero(rest))] & s) return false;
  }
  return true;
}

inline std::size_t max_independent_set(const kpvc::Graph& g) {
  const auto adj = adjacency_masks(g);
  std::size_t best = 0;
  for (Mask s = 0; s < (Mask{1} << g.order()); ++s) {
    if (is_independent(adj, s)) best = std::max(best, static_cast<std::size_t>(std::popcount(s)));
  }
  return best;
}

inline std::size_t min_vertex_cover(const kpvc::Graph& g) {
  const auto adj = adjacency_masks(g);
  const Mask full = (Mask{1} << g.order()) - 1;
  std::size_t best = g.order();
  for (Mask s = 0; s <= full; ++s) {
    // s covers every edge iff its complement is independent
    if (is_independent(adj, full & ~s)) best = std::min(best, static_cast<std::size_t>(std::popcount(s)));
    if (s == full) break;
  }
  return best;
}

// Largest vertex set inducing maximum degree <= 1.
inline std::size_t dissociation_number(const kpvc::Graph& g) {
  const auto adj = adjacency_masks(g);
  std::size_t best = 0;
  for (Mask s = 0; s < (Mask{1} << g.order()); ++s) {
    bool ok = true;
    for (Mask rest = s; rest && ok; rest &= rest - 1) {
      ok = std::popcount(adj[static_cast<std::size_t>(std::countr_zero(rest))] & s) <= 1;
    }
    if (ok) best = std::max(best, static_cast<std::size_t>(std::popcount(s)));
  }
  return best;
}

// Brute-force validity check for a cover given as a vertex list.
inline bool covers(const kpvc::Graph& g, const std::vector<kpvc::Vertex>& cover, std::size_t k) {
  const auto adj = adjacency_masks(g);
  Mask alive = (Mask{1} << g.order()) - 1;
  for (auto v : cover) alive &= ~(Mask{1} << v);
  return !has_path_in(adj, alive, k);
}

}  // namespace oracle
