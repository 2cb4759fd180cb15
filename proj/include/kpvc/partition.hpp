#pragma once

#include <set>
#include <vector>

#include "kpvc/graph.hpp"

namespace kpvc {

// Assignment of vertices to p classes. intra[v] counts v's neighbors in its
// own class.
struct Partition {
  std::size_t p = 1;
  std::size_t bound = 0;  // target induced degree floor(Delta / p)
  std::vector<std::size_t> classes;
  std::vector<std::size_t> intra;
  std::size_t moves = 0;

  std::size_t class_size(std::size_t c) const {
    return static_cast<std::size_t>(std::count(classes.begin(), classes.end(), c));
  }
};

// Local search: start from class(v) = v mod p, then repeatedly take the
// lowest-index vertex with more than floor(Delta/p) same-class neighbors and
// move it to the class holding the fewest of its neighbors (lowest index on
// ties). By pigeonhole some class holds at most floor(deg/p) of them, so
// every move strictly lowers the number of intra-class edges and the search
// stops after at most m moves.
inline Partition partition_bounded_degree(const Graph& g, std::size_t p) {
  if (p == 0) throw PreconditionError("partition needs at least one class");
  const std::size_t n = g.order();
  Partition part;
  part.p = p;
  part.bound = g.max_degree() / p;
  part.classes.resize(n);
  part.intra.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) part.classes[v] = v % p;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) {
      if (part.classes[u] == part.classes[v]) ++part.intra[v];
    }
  }

  std::set<Vertex> violating;
  for (Vertex v = 0; v < n; ++v) {
    if (part.intra[v] > part.bound) violating.insert(v);
  }
  auto refresh = [&](Vertex v) {
    if (part.intra[v] > part.bound) {
      violating.insert(v);
    } else {
      violating.erase(v);
    }
  };

  std::vector<std::size_t> counts(p);
  while (!violating.empty()) {
    const Vertex v = *violating.begin();
    std::fill(counts.begin(), counts.end(), 0);
    for (Vertex u : g.neighbors(v)) ++counts[part.classes[u]];
    const auto target = static_cast<std::size_t>(
        std::min_element(counts.begin(), counts.end()) - counts.begin());
    const std::size_t source = part.classes[v];
    for (Vertex u : g.neighbors(v)) {
      if (part.classes[u] == source) {
        --part.intra[u];
        refresh(u);
      } else if (part.classes[u] == target) {
        ++part.intra[u];
        refresh(u);
      }
    }
    part.classes[v] = target;
    part.intra[v] = counts[target];
    refresh(v);
    ++part.moves;
  }
  return part;
}

// V minus the largest class (lowest index on ties) of a partition into
// ceil((Delta+1)/2) classes. The kept class induces maximum degree <= 1, so
// the result is a 3-path vertex cover.
inline VertexSet cover3_via_partition(const Graph& g) {
  const std::size_t delta = g.max_degree();
  if (delta == 0) return {};
  const std::size_t p = (delta + 2) / 2;
  const Partition part = partition_bounded_degree(g, p);
  std::vector<std::size_t> sizes(p, 0);
  for (std::size_t c : part.classes) ++sizes[c];
  const auto keep = static_cast<std::size_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<Vertex> cover;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (part.classes[v] != keep) cover.push_back(v);
  }
  return VertexSet(std::move(cover));
}

}  // namespace kpvc
