#pragma once

#include <optional>
#include <vector>

#include "kpvc/graph.hpp"

namespace kpvc {

// Forest rooted at the lowest-index vertex of each component.
//
// down[v] is the order of the longest downward path from v inside v's
// surviving subtree, or 0 once v's subtree has been cut off.
struct RootedView {
  std::vector<Vertex> roots;
  std::vector<std::optional<Vertex>> parent;
  std::vector<Vertex> order;  // post-order, children before parents
  std::vector<std::size_t> down;
};

// One properly rooted subtree found by the sweep: the path orders of the two
// longest surviving child branches at selection time.
struct TreeSelection {
  Vertex vertex = 0;
  std::size_t longest = 0;
  std::size_t second = 0;
};

struct TreeSolution {
  VertexSet cover;
  RootedView view;
  std::vector<TreeSelection> selections;  // in selection order
};

inline RootedView root_forest(const Graph& g) {
  if (!is_forest(g)) throw PreconditionError("not a forest");
  const std::size_t n = g.order();
  RootedView view;
  view.parent.assign(n, std::nullopt);
  view.down.assign(n, 0);
  view.order.reserve(n);
  std::vector<char> seen(n, 0);
  // explicit stack of (vertex, next neighbor position)
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    view.roots.push_back(root);
    seen[root] = 1;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto nbrs = g.neighbors(v);
      if (next == nbrs.size()) {
        view.order.push_back(v);
        stack.pop_back();
        continue;
      }
      const Vertex u = nbrs[next++];
      if (seen[u]) continue;
      seen[u] = 1;
      view.parent[u] = v;
      stack.emplace_back(u, 0);
    }
  }
  return view;
}

// Optimal k-path vertex cover of a forest in one post-order sweep. A vertex
// roots a properly rooted subtree exactly when its two longest surviving child
// branches plus itself reach k vertices; it is then selected and its subtree
// removed.
inline TreeSolution pvcp_tree_traced(const Graph& g, std::size_t k) {
  if (k < 2) throw PreconditionError("tree solver requires k >= 2");
  TreeSolution sol;
  sol.view = root_forest(g);
  auto& down = sol.view.down;
  std::vector<Vertex> cover;
  for (Vertex v : sol.view.order) {
    std::size_t m1 = 0;
    std::size_t m2 = 0;
    for (Vertex c : g.neighbors(v)) {
      if (sol.view.parent[v] == c) continue;
      const std::size_t d = down[c];
      if (d > m1) {
        m2 = m1;
        m1 = d;
      } else if (d > m2) {
        m2 = d;
      }
    }
    if (1 + m1 + m2 >= k) {
      cover.push_back(v);
      sol.selections.push_back({v, m1, m2});
      down[v] = 0;
    } else {
      down[v] = 1 + m1;
    }
  }
  sol.cover = VertexSet(std::move(cover));
  return sol;
}

inline VertexSet pvcp_tree(const Graph& g, std::size_t k) {
  return pvcp_tree_traced(g, k).cover;
}

}  // namespace kpvc
