#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kpvc/graph.hpp"
#include "kpvc/verify.hpp"

namespace kpvc {

inline constexpr std::size_t default_oracle_cap = 20;

struct ExactResult {
  std::size_t psi = 0;
  VertexSet cover;
};

namespace detail {

// Smallest cover of a connected graph by subsets of increasing size,
// lexicographic within a size.
inline VertexSet exact_component_cover(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  std::vector<char> blocked(n, 0);
  std::vector<Vertex> pick;
  for (std::size_t r = 0; r <= n; ++r) {
    pick.resize(r);
    for (std::size_t i = 0; i < r; ++i) pick[i] = static_cast<Vertex>(i);
    while (true) {
      std::fill(blocked.begin(), blocked.end(), 0);
      for (Vertex v : pick) blocked[v] = 1;
      if (!find_uncovered_path(g, blocked, k)) return VertexSet(pick);
      // next r-combination of {0..n-1}
      std::size_t i = r;
      while (i > 0 && pick[i - 1] == n - r + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return VertexSet::all(n);  // unreachable: V itself is always a cover
}

}  // namespace detail

// Exact psi_k(g) by exhaustive search. Connected components are solved
// independently; the union of per-component lexicographically least minimum
// covers is the lexicographically least minimum cover of g. Components
// larger than the cap (default 20, overridable by budget) raise
// OracleTooLarge instead of falling back to an approximation.
inline ExactResult psi_exact(const Graph& g, std::size_t k,
                             std::optional<std::size_t> budget = std::nullopt) {
  if (k < 2) throw PreconditionError("exact oracle requires k >= 2");
  const std::size_t cap = budget.value_or(default_oracle_cap);
  const auto comps = connected_components(g);
  const auto groups = comps.members();
  for (const auto& members : groups) {
    if (members.size() >= k && members.size() > cap) {
      throw OracleTooLarge("instance too large for oracle: component of " +
                           std::to_string(members.size()) + " vertices exceeds cap " +
                           std::to_string(cap));
    }
  }
  std::vector<Vertex> cover;
  for (const auto& members : groups) {
    if (members.size() < k) continue;  // no P_k fits
    std::vector<char> keep(g.order(), 0);
    for (Vertex v : members) keep[v] = 1;
    const Subgraph sub = induced_subgraph(g, keep);
    const VertexSet local = detail::exact_component_cover(sub.graph, k);
    for (Vertex v : local) cover.push_back(sub.original[v]);
  }
  ExactResult result;
  result.cover = VertexSet(std::move(cover));
  result.psi = result.cover.size();
  return result;
}

}  // namespace kpvc
